//! Check verdicts: what was tested, and witnesses for anything that failed.

use crate::series::PowerSeries;
use num_rational::Rational64;

/// Why a single point failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    /// Both sides evaluated to integers but disagree.
    Mismatch,
    /// A side evaluated to a non-integer where the relation promises one.
    NonIntegral,
}

/// One failing point, with both side values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub n: u64,
    pub lhs: Rational64,
    pub rhs: Rational64,
    pub kind: FailureKind,
}

/// Outcome of checking one identity or relation over a range.
///
/// `bound` is the precision for coefficientwise identity checks and the
/// largest `n` examined for relation checks; `tested_count` is how many
/// points actually satisfied the domain predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub id: String,
    pub bound: u64,
    pub tested_count: u64,
    pub failures: Vec<Witness>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Compare two series coefficientwise up to their common precision,
    /// recording the first mismatching index as a witness.
    pub fn from_series_comparison(id: &str, lhs: &PowerSeries, rhs: &PowerSeries) -> CheckReport {
        let p = lhs.precision().min(rhs.precision()) as u64;
        let failures = match lhs.first_mismatch(rhs) {
            None => Vec::new(),
            Some(i) => vec![Witness {
                n: i as u64,
                lhs: Rational64::from_integer(lhs.coeff(i).expect("below precision")),
                rhs: Rational64::from_integer(rhs.coeff(i).expect("below precision")),
                kind: FailureKind::Mismatch,
            }],
        };
        CheckReport {
            id: id.to_string(),
            bound: p,
            tested_count: p,
            failures,
        }
    }

    pub fn summary_line(&self) -> String {
        if self.passed() {
            format!("{}: pass ({} values checked)", self.id, self.tested_count)
        } else {
            let w = &self.failures[0];
            format!(
                "{}: FAIL at n = {} (lhs = {}, rhs = {}{})",
                self.id,
                w.n,
                rational_string(w.lhs),
                rational_string(w.rhs),
                match w.kind {
                    FailureKind::Mismatch => "",
                    FailureKind::NonIntegral => ", non-integral",
                }
            )
        }
    }
}

/// Canonical rendering: plain integer when the denominator is 1, `p/q` otherwise.
pub fn rational_string(r: Rational64) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
