use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{GaussRational, Rational, Ring, Scalar};

/// Exponent vector with trailing zeros trimmed, so monomials compare equal
/// regardless of how many variables a polynomial happens to mention.
pub type Monomial = Vec<u32>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

/// Sparse multivariate polynomial over ℚ(i) in variables `a0, a1, …`.
/// No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, GaussRational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: GaussRational) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    /// The variable with index `i`.
    pub fn var(i: usize) -> Self {
        let mut m = vec![0; i + 1];
        m[i] = 1;
        let mut p = MultiPoly::zero();
        p.add_term(m, GaussRational::one());
        p
    }

    fn add_term(&mut self, m: Monomial, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        let m = trim(m);
        let entry = self.terms.entry(m.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True iff every coefficient vanishes.
    pub fn is_identically_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.get(var).copied().unwrap_or(0)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[GaussRational]) -> GaussRational {
        let mut acc = GaussRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = &t * &point[i];
                }
            }
            acc += &t;
        }
        acc
    }

    /// Substitutes `value` for variable `var`.
    pub fn substitute(&self, var: usize, value: &GaussRational) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let mut coeff = c.clone();
            if let Some(e) = m2.get_mut(var) {
                for _ in 0..*e {
                    coeff = &coeff * value;
                }
                *e = 0;
            }
            out.add_term(m2, coeff);
        }
        out
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        let mut out = MultiPoly::zero();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    /// Renders with the given variable names (`a{i}` when missing).
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut vars = Vec::new();
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = names.get(i).cloned().unwrap_or_else(|| format!("a{i}"));
                vars.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            let coef = if !c.re.is_zero() && !c.im.is_zero() {
                format!("({c})")
            } else {
                c.to_string()
            };
            let term = match (vars.is_empty(), coef.as_str()) {
                (true, _) => coef,
                (false, "1") => vars.join("·"),
                (false, "-1") => format!("-{}", vars.join("·")),
                (false, _) => format!("{coef}·{}", vars.join("·")),
            };
            parts.push(term);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self + (-rhs)
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let n = ma.len().max(mb.len());
                let m: Monomial = (0..n)
                    .map(|i| ma.get(i).copied().unwrap_or(0) + mb.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::constant(GaussRational::one())
    }
    fn is_zero(&self) -> bool {
        self.is_identically_zero()
    }
    fn from_rational(r: &Rational) -> Self {
        MultiPoly::constant(GaussRational::real(r.clone()))
    }
}

impl Scalar for MultiPoly {
    fn from_gauss(x: &GaussRational) -> Self {
        MultiPoly::constant(x.clone())
    }
    /// Generic coefficients are real, so conjugation acts on coefficients only.
    fn conj(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&[]))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_checks() {
        let a = MultiPoly::var(0);
        let b = MultiPoly::var(1);
        assert!((a.clone() * b.clone() - b.clone() * a.clone()).is_identically_zero());
        let p = a.clone() * a.clone() + MultiPoly::one();
        assert!(!p.is_identically_zero());
        assert_eq!(p.render(&["α".into()]), "α^2 + 1");
    }

    #[test]
    fn substitution_and_eval_agree() {
        let a = MultiPoly::var(0);
        let b = MultiPoly::var(2);
        let p = a.clone() * b.clone() * b.clone() - a.scale(&GaussRational::from_int(3));
        let v = GaussRational::ints(2, 1);
        let w = GaussRational::from_int(-1);
        let q = p.substitute(0, &v);
        assert_eq!(q.degree_in(0), 0);
        assert_eq!(q.eval(&[GaussRational::zero(), GaussRational::zero(), w.clone()]), p.eval(&[v, GaussRational::zero(), w]));
    }
}
