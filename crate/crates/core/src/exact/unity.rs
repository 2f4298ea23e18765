use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// The root of unity `exp(2 pi i value / modulus)`.
///
/// Multiplying roots adds exponents. Arithmetic is only defined between equal
/// moduli; use [`UnityExponent::lift`] to move to a common multiple first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnityExponent {
    value: i64,
    modulus: i64,
}

impl UnityExponent {
    pub fn new(value: i64, modulus: i64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        UnityExponent {
            value: value.rem_euclid(modulus),
            modulus,
        }
    }

    pub fn one(modulus: i64) -> Self {
        Self::new(0, modulus)
    }

    pub fn value(self) -> i64 {
        self.value
    }

    pub fn modulus(self) -> i64 {
        self.modulus
    }

    pub fn is_one(self) -> bool {
        self.value == 0
    }

    /// The same root written over a multiple of the modulus.
    pub fn lift(self, modulus: i64) -> Self {
        assert!(
            modulus % self.modulus == 0,
            "cannot lift mu_{} into mu_{modulus}",
            self.modulus
        );
        Self::new(self.value * (modulus / self.modulus), modulus)
    }

    pub fn pow(self, k: i64) -> Self {
        Self::new(self.value * k, self.modulus)
    }

    /// Multiplicative order of the root.
    pub fn order(self) -> i64 {
        self.modulus / super::gcd(self.value, self.modulus)
    }

    /// Equality as complex numbers, across different moduli.
    pub fn same_root(self, other: Self) -> bool {
        self.value * other.modulus == other.value * self.modulus
    }
}

impl Add for UnityExponent {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli");
        Self::new(self.value + rhs.value, self.modulus)
    }
}

impl Sub for UnityExponent {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli");
        Self::new(self.value - rhs.value, self.modulus)
    }
}

impl Neg for UnityExponent {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.value, self.modulus)
    }
}

impl fmt::Display for UnityExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({}/{})", self.value, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exponent_addition() {
        let i = UnityExponent::new(1, 4);
        assert_eq!((i + i).value(), 2);
        assert_eq!((i + i + i + i).value(), 0);
        assert_eq!((-i).value(), 3);
        assert_eq!(i.order(), 4);
        assert!(UnityExponent::new(2, 4).same_root(UnityExponent::new(1, 2)));
        assert_eq!(UnityExponent::new(1, 2).lift(6).value(), 3);
    }

    #[test]
    #[should_panic]
    fn mixed_moduli_panic() {
        let _ = UnityExponent::new(1, 2) + UnityExponent::new(1, 3);
    }
}
