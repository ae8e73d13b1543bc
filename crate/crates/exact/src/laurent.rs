//! Sparse multivariate Laurent polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::rational::Rational;
use crate::scalar::Scalar;

/// Exponent vector stored as sorted `(variable, nonzero exponent)` pairs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(u8, i32)>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: u8, exp: i32) -> Self {
        if exp == 0 {
            Monomial::unit()
        } else {
            Monomial(vec![(v, exp)])
        }
    }

    pub fn exponent(&self, v: u8) -> i32 {
        self.0.iter().find(|(x, _)| *x == v).map_or(0, |(_, e)| *e)
    }

    pub fn factors(&self) -> &[(u8, i32)] {
        &self.0
    }

    fn mul(&self, rhs: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + rhs.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < rhs.0.len() {
            let (a, b) = (self.0[i], rhs.0[j]);
            if a.0 < b.0 {
                out.push(a);
                i += 1;
            } else if a.0 > b.0 {
                out.push(b);
                j += 1;
            } else {
                if a.1 + b.1 != 0 {
                    out.push((a.0, a.1 + b.1));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&rhs.0[j..]);
        Monomial(out)
    }

    fn inverted(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }
}

/// Element of Q[x_0^{±1}, x_1^{±1}, ...]. Variables are addressed by small
/// integer labels, so no ambient ring object is needed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: BTreeMap<Monomial, Rational>,
}

impl Laurent {
    /// The variable `x_v`.
    pub fn var(v: u8) -> Self {
        Self::monomial(Rational::one(), Monomial::var(v, 1))
    }

    /// `x_v^exp`, negative exponents allowed.
    pub fn var_pow(v: u8, exp: i32) -> Self {
        Self::monomial(Rational::one(), Monomial::var(v, exp))
    }

    pub fn monomial(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Laurent { terms }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Monomial::unit())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The ring automorphism `x_v -> x_v^{-1}` for every variable.
    pub fn bar(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(m, c)| (m.inverted(), c.clone())).collect() }
    }

    /// Replaces `x_v` by `x_v^k` (k may be negative).
    pub fn substitute_power(&self, v: u8, k: i32) -> Self {
        let mut out = Laurent::default();
        for (m, c) in &self.terms {
            let mut f: Vec<(u8, i32)> = m.0.clone();
            for (x, e) in f.iter_mut() {
                if *x == v {
                    *e *= k;
                }
            }
            f.retain(|&(_, e)| e != 0);
            out.add_term(Monomial(f), c);
        }
        out
    }

    /// Constant-term and unit checks used when inverting.
    pub fn as_monomial(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Inverse if this is a single nonzero term.
    pub fn monomial_inverse(&self) -> Option<Self> {
        let (m, c) = self.as_monomial()?;
        let ci = crate::scalar::Field::inv(c)?;
        Some(Laurent::monomial(ci, m.inverted()))
    }

    /// Total degree in `v` of the highest and lowest terms.
    pub fn degree_range(&self, v: u8) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.exponent(v));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                x.add_assign(c);
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }
}

impl Scalar for Laurent {
    fn zero() -> Self {
        Laurent::default()
    }
    fn one() -> Self {
        Laurent::constant(Rational::one())
    }
    fn from_int(n: i64) -> Self {
        Laurent::constant(Rational::from_int(n))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
    fn add_assign(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &c.neg());
        }
        out
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Laurent::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &c1.mul(c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }
}

const VAR_NAMES: [&str; 4] = ["u", "v", "w", "l"];

fn var_name(v: u8) -> String {
    VAR_NAMES.get(v as usize).map_or_else(|| format!("x{}", v), |s| s.to_string())
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            let unit = m.0.is_empty();
            if unit || !mag.is_one() {
                write!(f, "{}", mag)?;
                if !unit {
                    write!(f, "*")?;
                }
            }
            for (k, &(v, e)) in m.0.iter().enumerate() {
                if k > 0 {
                    write!(f, "*")?;
                }
                if e == 1 {
                    write!(f, "{}", var_name(v))?;
                } else {
                    write!(f, "{}^{}", var_name(v), e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials_cancel() {
        let v = Laurent::var(0);
        let vi = Laurent::var_pow(0, -1);
        assert_eq!(v.mul(&vi), Laurent::one());
        assert_eq!(v.monomial_inverse().unwrap(), vi);
    }

    #[test]
    fn bar_is_ring_map_on_sample() {
        let a = Laurent::var(0).add(&Laurent::from_int(3)).mul(&Laurent::var_pow(1, -2));
        let b = Laurent::var(1).sub(&Laurent::var_pow(0, 2));
        assert_eq!(a.mul(&b).bar(), a.bar().mul(&b.bar()));
        assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn display() {
        let a = Laurent::var(0).sub(&Laurent::from_int(1));
        assert_eq!(a.to_string(), "u - 1");
        assert_eq!(Laurent::var_pow(0, -2).neg().to_string(), "-u^-2");
    }

    #[test]
    fn substitution() {
        let a = Laurent::var(0).add(&Laurent::var_pow(0, -1));
        assert_eq!(a.substitute_power(0, 2), Laurent::var_pow(0, 2).add(&Laurent::var_pow(0, -2)));
    }
}
