//! Declarative registry of count relations, an instantiation engine for
//! the parametrized families, a range checker with interchangeable count
//! backends, and a small grammar for ad hoc relations.

mod expr;
mod parser;
mod registry;

pub use expr::{Affine, Atom, CountExpr, CountKind, Predicate, RelationSpec, RelationStatus};
pub use parser::parse_relation;
pub use registry::{
    builtin_registry, find_entry, multisets_with_sum, thm_2_1b_variant, Params, RegistryEntry,
    RelationFamily,
};

use crate::error::{Error, Result};
use crate::form::FormTuple;
use crate::oracle;
use crate::report::{CheckReport, FailureKind, Witness};
use crate::series::PowerSeries;
use crate::theta;
use rayon::prelude::*;
use std::collections::HashMap;

/// How atom counts are produced during a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    /// Direct lattice enumeration per evaluated point.
    Enumerate,
    /// One generating-series build per (kind, form), then coefficient reads.
    Series,
}

impl Backend {
    pub fn name(&self) -> &'static str {
        match self {
            Backend::Enumerate => "enumerate",
            Backend::Series => "series",
        }
    }
}

impl std::str::FromStr for Backend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enumerate" | "oracle" => Ok(Backend::Enumerate),
            "series" => Ok(Backend::Series),
            other => Err(Error::Domain(format!(
                "unknown backend `{other}` (expected `series` or `enumerate`)"
            ))),
        }
    }
}

/// Count provider for one relation check. For the series backend every
/// distinct (kind, form) pair gets one series, sized so that no read can
/// fall outside its precision.
pub struct Evaluator {
    backend: Backend,
    series: HashMap<(bool, FormTuple), PowerSeries>,
}

impl Evaluator {
    /// Prepare an evaluator able to serve every atom of `spec` for
    /// `n <= n_max`. `precision_override`, when given, must cover the
    /// largest touched index.
    pub fn prepare(
        spec: &RelationSpec,
        n_max: u64,
        backend: Backend,
        precision_override: Option<usize>,
    ) -> Result<Evaluator> {
        let mut series = HashMap::new();
        if backend == Backend::Series {
            let mut needed: HashMap<(bool, FormTuple), usize> = HashMap::new();
            for (_, atom) in spec.lhs.terms.iter().chain(spec.rhs.terms.iter()) {
                let max = atom.index.max_index(n_max).max(0) as usize + 1;
                let key = (atom.kind == CountKind::N, atom.form.canonical());
                let entry = needed.entry(key).or_insert(0);
                *entry = (*entry).max(max);
            }
            if let Some(p) = precision_override {
                let largest = needed.values().copied().max().unwrap_or(0);
                if p < largest {
                    return Err(Error::PrecisionTooSmall {
                        given: p,
                        needed: largest,
                    });
                }
            }
            for (key, precision) in needed {
                let precision = precision_override.unwrap_or(precision);
                let s = if key.0 {
                    theta::n_series(key.1, precision)?
                } else {
                    theta::t_prime_series(key.1, precision)?
                };
                series.insert(key, s);
            }
        }
        Ok(Evaluator { backend, series })
    }

    /// The count `atom.kind(atom.form; index)`.
    pub fn count(&self, atom: &Atom, index: u64) -> Result<u64> {
        match self.backend {
            Backend::Enumerate => Ok(match atom.kind {
                CountKind::N => oracle::count_n(atom.form, index),
                CountKind::T => oracle::count_t(atom.form, index),
                CountKind::TPrime => oracle::count_t_prime(atom.form, index),
            }),
            Backend::Series => {
                let key = (atom.kind == CountKind::N, atom.form.canonical());
                let s = self.series.get(&key).expect("prepared for this spec");
                let c = s.coeff(index as usize)?;
                let c = u64::try_from(c).map_err(|_| Error::Overflow {
                    op: "coefficient",
                    index: index as usize,
                })?;
                Ok(match atom.kind {
                    CountKind::T => 16 * c,
                    _ => c,
                })
            }
        }
    }
}

/// Evaluate both sides of `spec` at one point.
pub fn evaluate_at(spec: &RelationSpec, n: u64, evaluator: &Evaluator) -> Result<(num_rational::Rational64, num_rational::Rational64)> {
    let lhs = spec.lhs.eval(n, &mut |atom, idx| evaluator.count(atom, idx))?;
    let rhs = spec.rhs.eval(n, &mut |atom, idx| evaluator.count(atom, idx))?;
    Ok((lhs, rhs))
}

/// Check `spec` for every `n in [0, n_max]` satisfying its predicate.
///
/// Rational combinations are evaluated exactly; a side that fails to be an
/// integer on the domain is recorded as a `NonIntegral` failure, distinct
/// from an inequality. All failing points are listed.
pub fn check(spec: &RelationSpec, n_max: u64, backend: Backend) -> Result<CheckReport> {
    check_with_precision(spec, n_max, backend, None)
}

/// [`check`] with an explicit series precision override.
pub fn check_with_precision(
    spec: &RelationSpec,
    n_max: u64,
    backend: Backend,
    precision_override: Option<usize>,
) -> Result<CheckReport> {
    let evaluator = Evaluator::prepare(spec, n_max, backend, precision_override)?;
    let mut tested = 0u64;
    let mut failures = Vec::new();
    for n in (0..=n_max).filter(|&n| spec.predicate.accepts(n)) {
        tested += 1;
        let (lhs, rhs) = evaluate_at(spec, n, &evaluator)?;
        if !lhs.is_integer() || !rhs.is_integer() {
            failures.push(Witness {
                n,
                lhs,
                rhs,
                kind: FailureKind::NonIntegral,
            });
        } else if lhs != rhs {
            failures.push(Witness {
                n,
                lhs,
                rhs,
                kind: FailureKind::Mismatch,
            });
        }
    }
    Ok(CheckReport {
        id: spec.id.clone(),
        bound: n_max,
        tested_count: tested,
        failures,
    })
}

/// Check many relations, sharded across worker threads; reports come back
/// in input order regardless of scheduling.
pub fn check_all(specs: &[RelationSpec], n_max: u64, backend: Backend) -> Result<Vec<CheckReport>> {
    specs
        .par_iter()
        .map(|spec| check(spec, n_max, backend))
        .collect()
}

/// Expand every registry entry to concrete specs: families over their
/// default grids, concrete relations as-is.
pub fn registry_specs() -> Vec<(bool, RelationSpec)> {
    let mut out = Vec::new();
    for entry in builtin_registry() {
        match entry {
            RegistryEntry::Family(f) => {
                out.extend(f.grid_specs().into_iter().map(|s| (true, s)));
            }
            RegistryEntry::Spec(s) => out.push((false, s)),
        }
    }
    out
}

#[cfg(test)]
mod tests;
