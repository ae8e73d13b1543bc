use std::fmt;

use crate::laurent::Laurent;
use crate::scalar::{Field, Scalar};

/// Fraction over an integral domain `R`, kept unreduced.
///
/// Equality is decided by cross-multiplication, so the representation is not
/// canonical but comparisons are exact. Suitable for identity checks of modest
/// size; use [`crate::RatFunc`] where a canonical form matters.
#[derive(Clone)]
pub struct Frac<R> {
    num: R,
    den: R,
}

/// The field Q(x_0, x_1, ...) of multivariate rational functions.
pub type MultiRational = Frac<Laurent>;

impl<R: Scalar> Frac<R> {
    pub fn new(num: R, den: R) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Frac { num, den })
        }
    }

    pub fn from_ring(r: R) -> Self {
        Frac { num: r, den: R::one() }
    }

    pub fn numer(&self) -> &R {
        &self.num
    }

    pub fn denom(&self) -> &R {
        &self.den
    }
}

impl MultiRational {
    /// Cancels a monomial denominator into the numerator when possible.
    pub fn simplify(&self) -> Self {
        match self.den.monomial_inverse() {
            Some(di) => Frac { num: self.num.mul(&di), den: Laurent::one() },
            None => self.clone(),
        }
    }

    /// Numerator of an equivalent fraction with denominator 1, if one exists
    /// with a monomial denominator.
    pub fn as_laurent(&self) -> Option<Laurent> {
        let s = self.simplify();
        if s.den == Laurent::one() {
            Some(s.num)
        } else {
            None
        }
    }
}

impl<R: Scalar> PartialEq for Frac<R> {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl<R: Scalar> Scalar for Frac<R> {
    fn zero() -> Self {
        Frac::from_ring(R::zero())
    }
    fn one() -> Self {
        Frac::from_ring(R::one())
    }
    fn from_int(n: i64) -> Self {
        Frac::from_ring(R::from_int(n))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Frac { num: self.num.add(&rhs.num), den: self.den.clone() };
        }
        Frac { num: self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)), den: self.den.mul(&rhs.den) }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::zero();
        }
        Frac { num: self.num.mul(&rhs.num), den: self.den.mul(&rhs.den) }
    }
    fn neg(&self) -> Self {
        Frac { num: self.num.neg(), den: self.den.clone() }
    }
}

impl<R: Scalar> Field for Frac<R> {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Frac { num: self.den.clone(), den: self.num.clone() })
        }
    }
}

impl<R: Scalar> fmt::Display for Frac<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<R: Scalar> fmt::Debug for Frac<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_multiplication_equality() {
        let u = Laurent::var(0);
        let l = Laurent::var(1);
        let one = Laurent::one();
        // (l + 1)/(u (l + 1)) == 1/u
        let a = Frac::new(l.add(&one), u.mul(&l.add(&one))).unwrap();
        let b = Frac::new(one.clone(), u.clone()).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.simplify().as_laurent(), Some(Laurent::var_pow(0, -1)));
    }

    #[test]
    fn inverse_of_binomial() {
        let x = MultiRational::from_ring(Laurent::var(1).add(&Laurent::one()));
        assert_eq!(x.mul(&x.inv().unwrap()), MultiRational::one());
    }
}
