use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{GaussRational, Rational};

/// Univariate polynomial in the formal symbol `s` with ℚ(i) coefficients.
/// Coefficients are stored lowest degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<GaussRational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<GaussRational>) -> Self {
        while coeffs.last().is_some_and(GaussRational::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: GaussRational) -> Self {
        UPoly::new(vec![c])
    }

    pub fn one() -> Self {
        UPoly::constant(GaussRational::one())
    }

    /// The monomial `c·s^k`.
    pub fn monomial(c: GaussRational, k: usize) -> Self {
        let mut coeffs = vec![GaussRational::zero(); k];
        coeffs.push(c);
        UPoly::new(coeffs)
    }

    /// The identity polynomial `s`.
    pub fn s() -> Self {
        UPoly::monomial(GaussRational::one(), 1)
    }

    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GaussRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn conj(&self) -> Self {
        UPoly::new(self.coeffs.iter().map(GaussRational::conj).collect())
    }

    pub fn eval(&self, x: &GaussRational) -> GaussRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussRational::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => UPoly::zero(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussRational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = &rem[rem.len() - 1] * &lc_inv;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(&factor * c);
            }
            quot[k] = factor;
            rem.pop();
            while rem.last().is_some_and(GaussRational::is_zero) {
                rem.pop();
            }
        }
        (UPoly::new(quot), UPoly::new(rem))
    }

    /// Monic greatest common divisor (zero if both inputs vanish).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Coefficient-wise real part.
    pub fn re_coeffs(&self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| GaussRational::real(c.re.clone())).collect())
    }

    /// Coefficient-wise imaginary part.
    pub fn im_coeffs(&self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| GaussRational::real(c.im.clone())).collect())
    }

    /// Real rational roots with multiplicity, and the cofactor left after
    /// dividing them out. A real `s` is a root iff it is a common root of the
    /// coefficient-wise real and imaginary parts, so those are intersected
    /// first.
    pub fn rational_roots(&self) -> (Vec<(Rational, usize)>, UPoly) {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let real_core = self.re_coeffs().gcd(&self.im_coeffs());
        let mut rest = real_core.clone();
        let mut roots = Vec::new();
        for cand in rational_root_candidates(&real_core) {
            let lin = UPoly::new(vec![GaussRational::real(-&cand), GaussRational::one()]);
            let mut mult = 0;
            loop {
                let (q, r) = rest.div_rem(&lin);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                roots.push((cand, mult));
            }
        }
        (roots, rest)
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}

/// Candidates `±p/q` from the rational root theorem, including 0.
fn rational_root_candidates(p: &UPoly) -> Vec<Rational> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    // clear denominators; coefficients are real here
    let lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.re.denom()));
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| c.re.numer() * (&lcm / c.re.denom()))
        .collect();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        out.push(Rational::zero());
    }
    let a0 = &ints[low];
    let an = ints.last().unwrap();
    if low == ints.len() - 1 {
        return out;
    }
    for num in divisors(a0) {
        for den in divisors(an) {
            let r = Rational::from_big(num.clone(), den.clone());
            if !out.contains(&r) {
                out.push(r.clone());
                out.push(-r);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

impl Add<&UPoly> for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = GaussRational::zero();
        UPoly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub<&UPoly> for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        self + &(-rhs)
    }
}

impl Mul<&UPoly> for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![GaussRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UPoly::new(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        -&self
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.im.is_zero() && c.re.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let coef = if !mag.im.is_zero() && !mag.re.is_zero() {
                format!("({mag})")
            } else {
                mag.to_string()
            };
            match k {
                0 => write!(f, "{coef}")?,
                _ => {
                    if mag != GaussRational::one() {
                        write!(f, "{coef}·")?;
                    }
                    if k == 1 {
                        write!(f, "s")?;
                    } else {
                        write!(f, "s^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UPoly {
        UPoly::new(cs.iter().map(|&c| GaussRational::from_int(c)).collect())
    }

    #[test]
    fn gcd_and_division() {
        // (s-1)(s+2) and (s-1)(s-3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let (q, r) = a.div_rem(&p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, p(&[2, 1]));
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // 4 (s - 1)^2 (s + 1/2) (s^2 + 1)
        let f = &(&(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[1, 2])) * &p(&[1, 0, 1]);
        let (roots, rest) = f.rational_roots();
        assert_eq!(roots, vec![(Rational::new(-1, 2), 1), (Rational::one(), 2)]);
        assert_eq!(rest.monic(), p(&[1, 0, 1]));
    }

    #[test]
    fn complex_coefficients_restrict_real_roots() {
        // (s - 1)(s - i): only s = 1 is real
        let f = &p(&[-1, 1]) * &UPoly::new(vec![-GaussRational::i(), GaussRational::one()]);
        let (roots, _) = f.rational_roots();
        assert_eq!(roots, vec![(Rational::one(), 1)]);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -2]).to_string(), "-2·s^2 + 1");
        assert_eq!(UPoly::s().to_string(), "s");
    }
}
