use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::rational::{pow, rat, Rational};
use crate::error::{Error, Result};

/// The deformation parameter. A rational other than `0` and `±1` is never a
/// root of unity, so every construction in this crate is generic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QValue(Rational);

impl QValue {
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_zero() || value.abs().is_one() {
            return Err(Error::InvalidQ(value.to_string()));
        }
        Ok(QValue(value))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// Exact `q^k`.
    pub fn pow(&self, k: i64) -> Rational {
        pow(&self.0, k)
    }

    /// The q-integer `[m] = (q^m - q^{-m}) / (q - q^{-1})`.
    pub fn q_int(&self, m: i64) -> Rational {
        if m == 0 {
            return Rational::zero();
        }
        (self.pow(m) - self.pow(-m)) / self.q_minus_qinv()
    }

    /// `q - q^{-1}`, nonzero by construction.
    pub fn q_minus_qinv(&self) -> Rational {
        &self.0 - self.0.recip()
    }
}

impl Default for QValue {
    fn default() -> Self {
        QValue(rat(3, 2))
    }
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for QValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn rejects_degenerate_values() {
        assert!(QValue::new(int(0)).is_err());
        assert!(QValue::new(int(1)).is_err());
        assert!(QValue::new(int(-1)).is_err());
        assert!(QValue::new(rat(-2, 3)).is_ok());
    }

    #[test]
    fn q_int_examples() {
        let q = QValue::new(int(2)).unwrap();
        assert_eq!(q.q_int(0), int(0));
        assert_eq!(q.q_int(1), int(1));
        assert_eq!(q.q_int(3), rat(21, 4));
        assert_eq!(QValue::default().q_int(1), int(1));
    }

    #[test]
    fn q_power_examples() {
        let q = QValue::default();
        assert_eq!(q.pow(0), int(1));
        assert_eq!(q.pow(-1), rat(2, 3));
        assert_eq!(q.pow(2), rat(9, 4));
    }

    #[test]
    fn q_int_recursions_hold_on_a_sweep() {
        for q in [rat(3, 2), int(2), rat(7, 5), rat(-5, 3)] {
            let q = QValue::new(q).unwrap();
            for m in -12..=12 {
                assert_eq!(q.q_int(-m), -q.q_int(m));
                assert_eq!(q.q_int(m + 1), q.value() * q.q_int(m) + q.pow(-m));
            }
        }
    }
}
