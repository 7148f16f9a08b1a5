//! Representation counts of integers by quaternary square and triangular
//! forms, computed by independent routes that are tested against each
//! other: brute-force lattice enumeration, theta-series coefficient
//! extraction, and explicit divisor-sum formulas. On top of the counts
//! sits a declarative registry of identities and relations between
//! `N(a,b,c,d;n)`, `t(a,b,c,d;n)` and `t'(a,b,c,d;n)`, a checker that
//! hunts for counterexamples over configurable ranges, and a scanner for
//! the conjectured relations.

pub mod arith;
pub mod closedform;
pub mod conjectures;
pub mod error;
pub mod form;
pub mod oracle;
pub mod relations;
pub mod report;
pub mod series;
pub mod theta;

pub use error::{Error, Result};
pub use form::FormTuple;
pub use series::PowerSeries;
