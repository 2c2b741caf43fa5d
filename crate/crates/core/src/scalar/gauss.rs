use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Rational, ScalarError};

/// Gaussian rational `re + im·i` with `re, im ∈ ℚ`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(Rational::from_integer(n))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::real(Rational::new(numer, denom))
    }

    /// `re + im·i` from small integers.
    pub fn ints(re: i64, im: i64) -> Self {
        GaussRational::new(Rational::from_integer(re), Rational::from_integer(im))
    }

    pub fn i() -> Self {
        GaussRational::new(Rational::zero(), Rational::one())
    }

    pub fn zero() -> Self {
        GaussRational::default()
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -&self.im)
    }

    /// `|x|² = x·conj(x)`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        let n_inv = n.recip()?;
        Some(GaussRational::new(&self.re * &n_inv, -(&self.im * &n_inv)))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussRational::new(&self.re * r, &self.im * r)
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        GaussRational::new(-&self.im, self.re.clone())
    }

    /// `max(|re|, |im|)`, used as a defect magnitude.
    pub fn max_abs(&self) -> Rational {
        let a = self.re.abs();
        let b = self.im.abs();
        if a >= b {
            a
        } else {
            b
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GaussRepr {
    Object {
        re: Rational,
        #[serde(default)]
        im: Rational,
    },
    Text(String),
    Int(i64),
}

/// Deserializes from `{"re": .., "im": ..}`, or leniently from a string such
/// as `"1/2-i"` or a bare integer.
impl<'de> Deserialize<'de> for GaussRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match GaussRepr::deserialize(d)? {
            GaussRepr::Object { re, im } => Ok(GaussRational::new(re, im)),
            GaussRepr::Text(s) => s.parse().map_err(serde::de::Error::custom),
            GaussRepr::Int(n) => Ok(GaussRational::from_int(n)),
        }
    }
}

impl From<Rational> for GaussRational {
    fn from(r: Rational) -> Self {
        GaussRational::real(r)
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        GaussRational::from_int(n)
    }
}

fn fmt_im(f: &mut fmt::Formatter<'_>, im: &Rational) -> fmt::Result {
    if *im == Rational::one() {
        write!(f, "i")
    } else if *im == -Rational::one() {
        write!(f, "-i")
    } else if im.is_integer() {
        write!(f, "{im}i")
    } else {
        write!(f, "({im})i")
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => fmt_im(f, &self.im),
            (false, false) => {
                write!(f, "{}", self.re)?;
                if self.im.is_negative() {
                    write!(f, " - ")?;
                    fmt_im(f, &self.im.abs())
                } else {
                    write!(f, " + ")?;
                    fmt_im(f, &self.im)
                }
            }
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussRational {
    type Err = ScalarError;

    /// Accepts `k`, `li`, `k+li`, `k-li`, `i`, `-i`, with optional `*` before `i`
    /// and optional parentheses around rational parts, e.g. `1/2-(3/4)i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || ScalarError::Parse(s.to_string());
        if compact.is_empty() {
            return Err(bad());
        }
        let Some(body) = compact.strip_suffix('i') else {
            return Ok(GaussRational::real(compact.parse()?));
        };
        let body = body.strip_suffix('*').unwrap_or(body);
        // split off the imaginary part at the last top-level sign
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-') && !body[..k].ends_with('('))
            .map(|(k, _)| k)
            .last();
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let re = if re_part.is_empty() { Rational::zero() } else { re_part.parse()? };
        let im_clean: String = im_part.chars().filter(|&c| c != '(' && c != ')').collect();
        let im = match im_clean.as_str() {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => other.parse().map_err(|_| bad())?,
        };
        Ok(GaussRational::new(re, im))
    }
}

impl Add<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRational::real(&self.re * &rhs.re);
        }
        GaussRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn div(self, rhs: &GaussRational) -> GaussRational {
        let inv = rhs.inv().expect("division by zero Gaussian rational");
        self * &inv
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: GaussRational) -> GaussRational {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: &GaussRational) -> GaussRational {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-&self.re, -&self.im)
    }
}

impl AddAssign<&GaussRational> for GaussRational {
    fn add_assign(&mut self, rhs: &GaussRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussRational> for GaussRational {
    fn sub_assign(&mut self, rhs: &GaussRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussRational {
        s.parse().unwrap()
    }

    #[test]
    fn conj_examples() {
        assert_eq!(g("1+2i").conj(), g("1-2i"));
        assert_eq!(g("3/4").conj(), g("3/4"));
        assert_eq!(GaussRational::zero().conj(), GaussRational::zero());
    }

    #[test]
    fn parsing_forms() {
        assert_eq!(g("i"), GaussRational::i());
        assert_eq!(g("-i"), -GaussRational::i());
        assert_eq!(g("1+i"), GaussRational::ints(1, 1));
        assert_eq!(g("1/2-(3/4)i"), GaussRational::new(Rational::new(1, 2), Rational::new(-3, 4)));
        assert_eq!(g("-2/3i"), GaussRational::new(Rational::zero(), Rational::new(-2, 3)));
        assert_eq!(g("2*i"), GaussRational::ints(0, 2));
        assert_eq!(g("-5"), GaussRational::from_int(-5));
        assert!("1+ji".parse::<GaussRational>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "3/4", "i", "-i", "1 + 2i", "1/2 - (3/4)i", "-7i"] {
            let x = g(s);
            assert_eq!(x.to_string(), s);
            assert_eq!(g(&x.to_string()), x);
        }
    }

    #[test]
    fn serde_object_form() {
        let x = g("1/2-3i");
        let js = serde_json::to_string(&x).unwrap();
        assert_eq!(js, r#"{"re":"1/2","im":"-3"}"#);
        assert_eq!(serde_json::from_str::<GaussRational>(&js).unwrap(), x);
        assert_eq!(serde_json::from_str::<GaussRational>(r#""1/2-3i""#).unwrap(), x);
        assert_eq!(serde_json::from_str::<GaussRational>("-2").unwrap(), GaussRational::from_int(-2));
    }

    #[test]
    fn inverse() {
        let x = g("3-4i");
        assert_eq!(&x * &x.inv().unwrap(), GaussRational::one());
        assert!(GaussRational::zero().inv().is_none());
    }
}
