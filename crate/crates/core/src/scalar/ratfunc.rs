use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{Field, GaussRational, Rational, Ring, Scalar, ScalarError, UPoly};

/// Rational function `num(s)/den(s)` in a formal real parameter `s`.
///
/// Kept reduced: `gcd(num, den) = 1` and `den` monic. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFuncS {
    num: UPoly,
    den: UPoly,
}

impl RatFuncS {
    pub fn new(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFuncS { num, den: UPoly::one() };
        }
        let g = num.gcd(&den);
        let (mut num, _) = num.div_rem(&g);
        let (mut den, _) = den.div_rem(&g);
        let lc_inv = den.leading().unwrap().inv().unwrap();
        num = num.scale(&lc_inv);
        den = den.scale(&lc_inv);
        RatFuncS { num, den }
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFuncS { num: p, den: UPoly::one() }
    }

    pub fn constant(c: GaussRational) -> Self {
        RatFuncS::from_poly(UPoly::constant(c))
    }

    /// The parameter `s` itself.
    pub fn s() -> Self {
        RatFuncS::from_poly(UPoly::s())
    }

    pub fn numer(&self) -> &UPoly {
        &self.num
    }

    pub fn denom(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact substitution `s = s0`.
    pub fn eval_s(&self, s0: &Rational) -> Result<GaussRational, ScalarError> {
        let x = GaussRational::real(s0.clone());
        let d = self.den.eval(&x);
        if d.is_zero() {
            return Err(ScalarError::Pole(s0.clone()));
        }
        Ok(&self.num.eval(&x) / &d)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFuncS::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn conj(&self) -> Self {
        RatFuncS { num: self.num.conj(), den: self.den.conj() }
    }
}

impl Add for RatFuncS {
    type Output = RatFuncS;
    fn add(self, rhs: RatFuncS) -> RatFuncS {
        if self.den == rhs.den {
            return RatFuncS::new(&self.num + &rhs.num, self.den);
        }
        RatFuncS::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for RatFuncS {
    type Output = RatFuncS;
    fn sub(self, rhs: RatFuncS) -> RatFuncS {
        self + (-rhs)
    }
}

impl Mul for RatFuncS {
    type Output = RatFuncS;
    fn mul(self, rhs: RatFuncS) -> RatFuncS {
        if self.is_zero() || rhs.is_zero() {
            return RatFuncS::constant(GaussRational::zero());
        }
        RatFuncS::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for RatFuncS {
    type Output = RatFuncS;
    fn div(self, rhs: RatFuncS) -> RatFuncS {
        self * rhs.inv().expect("division by zero rational function")
    }
}

impl Neg for RatFuncS {
    type Output = RatFuncS;
    fn neg(self) -> RatFuncS {
        RatFuncS { num: -self.num, den: self.den }
    }
}

impl Ring for RatFuncS {
    fn zero() -> Self {
        RatFuncS::constant(GaussRational::zero())
    }
    fn one() -> Self {
        RatFuncS::constant(GaussRational::one())
    }
    fn is_zero(&self) -> bool {
        RatFuncS::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        RatFuncS::constant(GaussRational::real(r.clone()))
    }
}

impl Field for RatFuncS {
    fn inv(&self) -> Option<Self> {
        RatFuncS::inv(self)
    }
}

impl Scalar for RatFuncS {
    fn from_gauss(x: &GaussRational) -> Self {
        RatFuncS::constant(x.clone())
    }
    fn conj(&self) -> Self {
        RatFuncS::conj(self)
    }
}

impl fmt::Display for RatFuncS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFuncS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: i64, im: i64) -> RatFuncS {
        RatFuncS::from_gauss(&GaussRational::ints(re, im))
    }

    #[test]
    fn eval_examples() {
        let s = RatFuncS::s();
        let s2 = s.clone() * s.clone();
        // (1/4)(1/s² + s²)·i at s = 1
        let f = (s2.inv().unwrap() + s2.clone())
            * RatFuncS::from_gauss(&GaussRational::new(Rational::zero(), Rational::new(1, 4)));
        assert_eq!(
            f.eval_s(&Rational::one()).unwrap(),
            GaussRational::new(Rational::zero(), Rational::new(1, 2))
        );
        assert_eq!(s.eval_s(&Rational::from_integer(2)).unwrap(), GaussRational::from_int(2));
        let pole = s.inv().unwrap().eval_s(&Rational::zero());
        assert_eq!(pole, Err(ScalarError::Pole(Rational::zero())));
    }

    #[test]
    fn reduction_is_canonical() {
        let s = RatFuncS::s();
        let a = (s.clone() * s.clone() - c(1, 0)) / (s.clone() - c(1, 0));
        assert_eq!(a, s + c(1, 0));
    }

    fn small_rf() -> impl Strategy<Value = RatFuncS> {
        (prop::collection::vec(-3i64..=3, 1..4), prop::collection::vec(-3i64..=3, 1..3), -2i64..=2)
            .prop_map(|(n, d, im)| {
                let num = UPoly::new(n.iter().map(|&x| GaussRational::ints(x, im)).collect());
                let mut dc: Vec<GaussRational> = d.iter().map(|&x| GaussRational::from_int(x)).collect();
                dc.push(GaussRational::one());
                RatFuncS::new(num, UPoly::new(dc))
            })
    }

    proptest! {
        #[test]
        fn arithmetic_commutes_with_evaluation(a in small_rf(), b in small_rf(), n in -6i64..=6, d in 1i64..=4) {
            let s0 = Rational::new(n, d);
            if let (Ok(x), Ok(y)) = (a.eval_s(&s0), b.eval_s(&s0)) {
                prop_assert_eq!((a.clone() + b.clone()).eval_s(&s0).unwrap(), &x + &y);
                prop_assert_eq!((a.clone() * b.clone()).eval_s(&s0).unwrap(), &x * &y);
                prop_assert_eq!((a.clone() - b.clone()).eval_s(&s0).unwrap(), &x - &y);
                prop_assert_eq!(a.conj().eval_s(&s0).unwrap(), x.conj());
            }
        }
    }
}
