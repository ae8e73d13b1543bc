use std::fmt;

use crate::rational::Rational;
use crate::scalar::{Field, Scalar};

/// Default working prime, 2^31 - 1.
pub const P31: u64 = 2_147_483_647;
/// Confirmation prime, 2^61 - 1.
pub const P61: u64 = 2_305_843_009_213_693_951;

/// Element of the prime field Z/PZ. `P` must be an odd prime below 2^63.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

pub type Fp31 = Fp<P31>;
pub type Fp61 = Fp<P61>;

impl<const P: u64> Fp<P> {
    pub const MODULUS: u64 = P;

    #[inline]
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn mul_raw(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    fn pow_raw(mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = Self::mul_raw(acc, base);
            }
            base = Self::mul_raw(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Reduces a rational number, `None` when P divides the denominator.
    pub fn from_rational(q: &Rational) -> Option<Self> {
        let p = num_bigint::BigInt::from(P);
        let reduce = |x: &num_bigint::BigInt| -> u64 {
            let r = ((x % &p) + &p) % &p;
            let (_, digits) = r.to_u64_digits();
            digits.first().copied().unwrap_or(0)
        };
        let n = Fp(reduce(q.numer()));
        let d = Fp::<P>(reduce(q.denom()));
        d.inv().map(|di| n.mul(&di))
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_int(n: i64) -> Self {
        Fp((n as i128).rem_euclid(P as i128) as u64)
    }
    #[inline]
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    #[inline]
    fn add(&self, rhs: &Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
    #[inline]
    fn sub(&self, rhs: &Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
    #[inline]
    fn mul(&self, rhs: &Self) -> Self {
        Fp(Self::mul_raw(self.0, rhs.0))
    }
    #[inline]
    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(Fp(Self::pow_raw(self.0, P - 2)))
        }
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}
