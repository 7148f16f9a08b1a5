//! The quadruple of positive form coefficients shared by every count.

use crate::error::{Error, Result};
use std::fmt;

/// Coefficients `(a, b, c, d)` of a quaternary form, all `>= 1`.
///
/// Both the square count `N` and the triangular counts `t`, `t'` are
/// symmetric in the entries; [`FormTuple::canonical`] gives the sorted
/// representative used to unify relations that name the same form in a
/// different order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormTuple(pub [u64; 4]);

impl FormTuple {
    pub fn new(a: u64, b: u64, c: u64, d: u64) -> Result<Self> {
        for v in [a, b, c, d] {
            if v == 0 {
                return Err(Error::NonPositive(0));
            }
        }
        Ok(FormTuple([a, b, c, d]))
    }

    pub fn entries(&self) -> [u64; 4] {
        self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Entries sorted ascending.
    pub fn canonical(&self) -> FormTuple {
        let mut e = self.0;
        e.sort_unstable();
        FormTuple(e)
    }
}

impl fmt::Display for FormTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_entries() {
        assert!(FormTuple::new(1, 0, 1, 1).is_err());
        assert!(FormTuple::new(1, 2, 3, 4).is_ok());
    }

    #[test]
    fn canonical_sorts() {
        let f = FormTuple::new(3, 9, 1, 1).unwrap();
        assert_eq!(f.canonical(), FormTuple::new(1, 1, 3, 9).unwrap());
    }
}
