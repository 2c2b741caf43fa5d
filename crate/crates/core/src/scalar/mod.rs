//! Exact arithmetic tower: ℚ, ℚ(i), rational functions in a formal real
//! parameter `s`, and sparse multivariate polynomials over ℚ(i).
//!
//! Nothing here touches floating point.

mod gauss;
mod multipoly;
mod ratfunc;
mod rational;
mod upoly;

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub use gauss::GaussRational;
pub use multipoly::{Monomial, MultiPoly};
pub use ratfunc::RatFuncS;
pub use rational::Rational;
pub use upoly::UPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
    #[error("rational function has a pole at s = {0}")]
    Pole(Rational),
}

/// Commutative ring with unit containing ℚ.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: &Rational) -> Self;
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Option<Self>;
}

/// Ring containing ℚ(i) with a complex conjugation fixing the formal
/// parameters (they are real).
pub trait Scalar: Ring {
    fn from_gauss(x: &GaussRational) -> Self;
    fn conj(&self) -> Self;

    /// `x + i·y`-decomposition helpers: real part `(x + x̄)/2`.
    fn re_part(&self) -> Self {
        (self.clone() + self.conj()) * Self::from_rational(&Rational::new(1, 2))
    }

    /// Imaginary part `(x − x̄)/(2i)`.
    fn im_part(&self) -> Self {
        (self.clone() - self.conj()) * Self::from_gauss(&GaussRational::new(Rational::zero(), Rational::new(-1, 2)))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
}

impl Ring for GaussRational {
    fn zero() -> Self {
        GaussRational::zero()
    }
    fn one() -> Self {
        GaussRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussRational::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        GaussRational::real(r.clone())
    }
}

impl Field for GaussRational {
    fn inv(&self) -> Option<Self> {
        GaussRational::inv(self)
    }
}

impl Scalar for GaussRational {
    fn from_gauss(x: &GaussRational) -> Self {
        x.clone()
    }
    fn conj(&self) -> Self {
        GaussRational::conj(self)
    }
}

/// Conjugation applied to a vector.
pub fn conj_vec<S: Scalar>(v: &[S]) -> Vec<S> {
    v.iter().map(Scalar::conj).collect()
}

/// Embeds a Gaussian-rational vector in another scalar mode.
pub fn lift_vec<S: Scalar>(v: &[GaussRational]) -> Vec<S> {
    v.iter().map(S::from_gauss).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn gauss() -> impl Strategy<Value = GaussRational> {
        (rat(), rat()).prop_map(|(a, b)| GaussRational::new(a, b))
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in rat(), b in rat(), c in rat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
            }
        }

        #[test]
        fn gauss_field_axioms(a in gauss(), b in gauss(), c in gauss()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), GaussRational::one());
            }
        }

        #[test]
        fn norm_is_real_nonnegative(a in gauss()) {
            let n = &a * &a.conj();
            prop_assert!(n.im.is_zero());
            prop_assert!(!n.re.is_negative());
            prop_assert_eq!(a.conj().conj(), a);
        }

        #[test]
        fn re_im_parts_recompose(a in gauss()) {
            let re = a.re_part();
            let im = a.im_part();
            prop_assert!(re.is_real() && im.is_real());
            prop_assert_eq!(re + im.mul_i(), a);
        }
    }
}
