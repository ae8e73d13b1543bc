use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Irreducible finite Coxeter type.
///
/// `A(0)` is the trivial group; `D(2)` and `D(3)` are accepted so that the
/// D-series can be tabulated from its first terms (`D2 = A1 × A1`, `D3 = A3`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    I2(u32),
    H3,
    H4,
    F4,
    E6,
    E7,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    D,
    I2,
    H3,
    H4,
    F4,
    E6,
    E7,
}

impl CoxeterType {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            CoxeterType::A(_) => true,
            CoxeterType::B(n) => n >= 2,
            CoxeterType::D(n) => n >= 2,
            CoxeterType::I2(m) => m >= 3,
            _ => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidType(self.to_string()))
        }
    }

    pub fn family(self) -> Family {
        match self {
            CoxeterType::A(_) => Family::A,
            CoxeterType::B(_) => Family::B,
            CoxeterType::D(_) => Family::D,
            CoxeterType::I2(_) => Family::I2,
            CoxeterType::H3 => Family::H3,
            CoxeterType::H4 => Family::H4,
            CoxeterType::F4 => Family::F4,
            CoxeterType::E6 => Family::E6,
            CoxeterType::E7 => Family::E7,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n,
            CoxeterType::I2(_) => 2,
            CoxeterType::H3 => 3,
            CoxeterType::H4 | CoxeterType::F4 => 4,
            CoxeterType::E6 => 6,
            CoxeterType::E7 => 7,
        }
    }

    /// The dihedral parameter `m` for `I2(m)`.
    pub fn dihedral_m(self) -> Option<u32> {
        match self {
            CoxeterType::I2(m) => Some(m),
            _ => None,
        }
    }

    pub fn group_order(self) -> u64 {
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        match self {
            CoxeterType::A(n) => fact(n + 1),
            CoxeterType::B(n) => (1u64 << n) * fact(n),
            CoxeterType::D(n) => (1u64 << (n - 1)) * fact(n),
            CoxeterType::I2(m) => 2 * m as u64,
            CoxeterType::H3 => 120,
            CoxeterType::H4 => 14400,
            CoxeterType::F4 => 1152,
            CoxeterType::E6 => 51840,
            CoxeterType::E7 => 2_903_040,
        }
    }

    pub fn num_reflections(self) -> usize {
        match self {
            CoxeterType::A(n) => n * (n + 1) / 2,
            CoxeterType::B(n) => n * n,
            CoxeterType::D(n) => n * (n - 1),
            CoxeterType::I2(m) => m as usize,
            CoxeterType::H3 => 15,
            CoxeterType::H4 => 60,
            CoxeterType::F4 => 24,
            CoxeterType::E6 => 36,
            CoxeterType::E7 => 63,
        }
    }

    /// Types whose root system is defined over the integers, so that
    /// root sums and closed subsystems make sense.
    pub fn is_crystallographic(self) -> bool {
        match self {
            CoxeterType::I2(m) => m == 6,
            CoxeterType::H3 | CoxeterType::H4 => false,
            _ => true,
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{}", n),
            CoxeterType::B(n) => write!(f, "B{}", n),
            CoxeterType::D(n) => write!(f, "D{}", n),
            CoxeterType::I2(m) => write!(f, "I2:{}", m),
            CoxeterType::H3 => write!(f, "H3"),
            CoxeterType::H4 => write!(f, "H4"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::E6 => write!(f, "E6"),
            CoxeterType::E7 => write!(f, "E7"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    /// Parses `A3`, `B4`, `D5`, `I2:7`, `I2(7)`, `G2`, `H3`, `H4`, `F4`,
    /// `E6`, `E7` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        let bad = || Error::InvalidType(s.to_string());
        if let Some(rest) = t.strip_prefix("I2") {
            let m = rest.trim_start_matches([':', '(']).trim_end_matches(')');
            let m: u32 = m.parse().map_err(|_| bad())?;
            return CoxeterType::I2(m).validate();
        }
        let ty = match t.as_str() {
            "G2" => CoxeterType::I2(6),
            "H3" => CoxeterType::H3,
            "H4" => CoxeterType::H4,
            "F4" => CoxeterType::F4,
            "E6" => CoxeterType::E6,
            "E7" => CoxeterType::E7,
            _ => {
                let (fam, n) = t.split_at_checked(1).ok_or_else(bad)?;
                let n: usize = n.parse().map_err(|_| bad())?;
                match fam {
                    "A" => CoxeterType::A(n),
                    "B" => CoxeterType::B(n),
                    "D" => CoxeterType::D(n),
                    _ => return Err(bad()),
                }
            }
        };
        ty.validate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in ["A3", "B4", "D5", "I2:7", "H3", "H4", "F4", "E6", "E7"] {
            let t: CoxeterType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert_eq!("g2".parse::<CoxeterType>().unwrap(), CoxeterType::I2(6));
        assert_eq!("I2(5)".parse::<CoxeterType>().unwrap(), CoxeterType::I2(5));
    }

    #[test]
    fn rejects_invalid() {
        for s in ["B1", "I2:2", "X3", "E8", "A", ""] {
            assert!(s.parse::<CoxeterType>().is_err(), "{s}");
        }
    }

    #[test]
    fn orders() {
        assert_eq!(CoxeterType::A(3).group_order(), 24);
        assert_eq!(CoxeterType::B(4).group_order(), 384);
        assert_eq!(CoxeterType::D(4).group_order(), 192);
        assert_eq!(CoxeterType::E7.group_order(), 2_903_040);
    }
}
