use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element `a + b·φ` of Z[φ], φ = (1 + √5)/2. Every root coordinate of the
/// finite Coxeter systems built here lies in this ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Golden {
    pub a: i64,
    pub b: i64,
}

impl Golden {
    pub const ZERO: Golden = Golden { a: 0, b: 0 };
    pub const ONE: Golden = Golden { a: 1, b: 0 };
    pub const PHI: Golden = Golden { a: 0, b: 1 };

    pub const fn int(a: i64) -> Self {
        Golden { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Rational integer value, if `b = 0`.
    pub fn as_int(self) -> Option<i64> {
        (self.b == 0).then_some(self.a)
    }

    /// Sign of the real number `a + bφ`.
    pub fn signum(self) -> i32 {
        // 2(a + bφ) = (2a + b) + b√5
        let x = 2 * self.a + self.b;
        let y = self.b;
        match (x.signum(), y.signum()) {
            (0, s) | (s, 0) => s as i32,
            (sx, sy) if sx == sy => sx as i32,
            (sx, _) => {
                // compare x² with 5y²
                let lhs = (x as i128) * (x as i128);
                let rhs = 5 * (y as i128) * (y as i128);
                if lhs > rhs {
                    sx as i32
                } else {
                    -sx as i32
                }
            }
        }
    }
}

impl Add for Golden {
    type Output = Golden;
    fn add(self, o: Golden) -> Golden {
        Golden { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for Golden {
    type Output = Golden;
    fn sub(self, o: Golden) -> Golden {
        Golden { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for Golden {
    type Output = Golden;
    fn neg(self) -> Golden {
        Golden { a: -self.a, b: -self.b }
    }
}

impl Mul for Golden {
    type Output = Golden;
    fn mul(self, o: Golden) -> Golden {
        // φ² = φ + 1
        Golden { a: self.a * o.a + self.b * o.b, b: self.a * o.b + self.b * o.a + self.b * o.b }
    }
}

impl fmt::Debug for Golden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{}", a),
            (0, b) => write!(f, "{}φ", b),
            (a, b) => write!(f, "{}{:+}φ", a, b),
        }
    }
}
