use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;

/// A residue in Q/Z, stored as its canonical representative in [0, 1).
///
/// Equality is exact, so two invariants agree mod 1 if and only if their
/// `QmodZ` values are equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QmodZ {
    residue: Rational,
}

impl QmodZ {
    /// Reduces a rational mod 1: the result is `q - floor(q)`.
    pub fn reduce(q: Rational) -> Self {
        let floor = Rational::from(q.floor_int());
        QmodZ { residue: q - floor }
    }

    pub fn zero() -> Self {
        QmodZ {
            residue: Rational::zero(),
        }
    }

    pub fn residue(&self) -> &Rational {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    /// Multiplication by an integer, reduced mod 1.
    pub fn scale(&self, n: &BigInt) -> Self {
        QmodZ::reduce(&self.residue * &Rational::from(n.clone()))
    }
}

impl Add for QmodZ {
    type Output = QmodZ;
    fn add(self, rhs: QmodZ) -> QmodZ {
        QmodZ::reduce(self.residue + rhs.residue)
    }
}

impl Add for &QmodZ {
    type Output = QmodZ;
    fn add(self, rhs: &QmodZ) -> QmodZ {
        QmodZ::reduce(&self.residue + &rhs.residue)
    }
}

impl Sub for QmodZ {
    type Output = QmodZ;
    fn sub(self, rhs: QmodZ) -> QmodZ {
        QmodZ::reduce(self.residue - rhs.residue)
    }
}

impl Sub for &QmodZ {
    type Output = QmodZ;
    fn sub(self, rhs: &QmodZ) -> QmodZ {
        QmodZ::reduce(&self.residue - &rhs.residue)
    }
}

impl Neg for QmodZ {
    type Output = QmodZ;
    fn neg(self) -> QmodZ {
        QmodZ::reduce(-self.residue)
    }
}

impl Neg for &QmodZ {
    type Output = QmodZ;
    fn neg(self) -> QmodZ {
        QmodZ::reduce(-&self.residue)
    }
}

impl fmt::Display for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl fmt::Debug for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for QmodZ {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.residue.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QmodZ {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(QmodZ::reduce(Rational::deserialize(deserializer)?))
    }
}
