//! Expression types for checkable count relations: rational-linear
//! combinations of `N`/`t`/`t'` atoms with affine index maps, guarded by a
//! residue-class predicate on `n`.

use crate::error::{Error, Result};
use crate::form::FormTuple;
use crate::report::rational_string;
use num_rational::Rational64;
use num_traits::Zero;
use std::fmt;

/// Which count an atom refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountKind {
    /// Square representations over `Z^4`.
    N,
    /// Triangular representations over `Z^4`.
    T,
    /// Triangular representations over `N^4`.
    TPrime,
}

impl CountKind {
    pub fn symbol(&self) -> &'static str {
        match self {
            CountKind::N => "N",
            CountKind::T => "t",
            CountKind::TPrime => "t'",
        }
    }
}

/// The index map `mul * n + add`, with `mul >= 0`.
///
/// `add` may be negative only when the enclosing predicate keeps the
/// evaluated index nonnegative; evaluation surfaces a violation as an error
/// rather than clamping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Affine {
    pub mul: u64,
    pub add: i64,
}

impl Affine {
    pub fn new(mul: u64, add: i64) -> Self {
        Affine { mul, add }
    }

    /// Plain `n`.
    pub fn n() -> Self {
        Affine { mul: 1, add: 0 }
    }

    pub fn eval(&self, n: u64) -> Result<u64> {
        let v = (self.mul * n) as i64 + self.add;
        u64::try_from(v).map_err(|_| Error::NegativeIndex {
            expr: self.to_string(),
            n,
        })
    }

    /// Largest index touched for `n <= n_max` (the map is nondecreasing).
    pub fn max_index(&self, n_max: u64) -> i64 {
        (self.mul * n_max) as i64 + self.add
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mul == 0 {
            return write!(f, "{}", self.add);
        }
        if self.mul == 1 {
            write!(f, "n")?;
        } else {
            write!(f, "{}*n", self.mul)?;
        }
        match self.add.cmp(&0) {
            std::cmp::Ordering::Greater => write!(f, "+{}", self.add),
            std::cmp::Ordering::Less => write!(f, "{}", self.add),
            std::cmp::Ordering::Equal => Ok(()),
        }
    }
}

/// One count applied to a concrete form at an affine index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Atom {
    pub kind: CountKind,
    pub form: FormTuple,
    pub index: Affine,
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({};{})", self.kind.symbol(), self.form, self.index)
    }
}

/// A rational-linear combination of atoms plus a rational constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountExpr {
    pub terms: Vec<(Rational64, Atom)>,
    pub constant: Rational64,
}

impl CountExpr {
    pub fn new(terms: Vec<(Rational64, Atom)>) -> Self {
        CountExpr {
            terms,
            constant: Rational64::zero(),
        }
    }

    /// A single atom with coefficient 1.
    pub fn atom(kind: CountKind, form: FormTuple, index: Affine) -> Self {
        CountExpr::new(vec![(Rational64::from_integer(1), Atom { kind, form, index })])
    }

    /// Evaluate at `n`, pulling each atom's count from `counter`.
    pub fn eval<F>(&self, n: u64, counter: &mut F) -> Result<Rational64>
    where
        F: FnMut(&Atom, u64) -> Result<u64>,
    {
        let mut acc = self.constant;
        for (coef, atom) in &self.terms {
            let index = atom.index.eval(n)?;
            let count = counter(atom, index)?;
            let count = i64::try_from(count).map_err(|_| Error::Overflow {
                op: "count",
                index: index as usize,
            })?;
            acc += *coef * Rational64::from_integer(count);
        }
        Ok(acc)
    }

    /// Largest index any atom touches for `n <= n_max`.
    pub fn max_index(&self, n_max: u64) -> i64 {
        self.terms
            .iter()
            .map(|(_, atom)| atom.index.max_index(n_max))
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for CountExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "{}", rational_string(self.constant));
        }
        for (i, (coef, atom)) in self.terms.iter().enumerate() {
            let mag = coef.reduced();
            let (sign_str, mag) = if mag < Rational64::zero() {
                (if i == 0 { "-" } else { " - " }, -mag)
            } else {
                (if i == 0 { "" } else { " + " }, mag)
            };
            write!(f, "{sign_str}")?;
            if mag != Rational64::from_integer(1) {
                write!(f, "{}*", rational_string(mag))?;
            }
            write!(f, "{atom}")?;
        }
        if !self.constant.is_zero() {
            if self.constant > Rational64::zero() {
                write!(f, " + {}", rational_string(self.constant))?;
            } else {
                write!(f, " - {}", rational_string(-self.constant))?;
            }
        }
        Ok(())
    }
}

/// Domain condition on `n`: everything, or a finite union of residue
/// classes modulo a fixed modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Predicate {
    All,
    Residues { modulus: u64, classes: Vec<u64> },
}

impl Predicate {
    /// Residue-class predicate; classes are reduced, sorted, deduplicated.
    pub fn residues(modulus: u64, classes: impl IntoIterator<Item = u64>) -> Self {
        assert!(modulus >= 1);
        let mut classes: Vec<u64> = classes.into_iter().map(|r| r % modulus).collect();
        classes.sort_unstable();
        classes.dedup();
        Predicate::Residues { modulus, classes }
    }

    pub fn accepts(&self, n: u64) -> bool {
        match self {
            Predicate::All => true,
            Predicate::Residues { modulus, classes } => classes.contains(&(n % modulus)),
        }
    }

    /// `n % m in {..}` rendering, or `None` for the trivial predicate.
    pub fn render(&self) -> Option<String> {
        match self {
            Predicate::All => None,
            Predicate::Residues { modulus, classes } => {
                let list = classes
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                Some(format!("n % {modulus} in {{{list}}}"))
            }
        }
    }
}

/// Whether a relation is a proved statement or a conjectured one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationStatus {
    Proved,
    Conjectured,
}

/// One checkable equation between count expressions on a domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSpec {
    pub id: String,
    pub lhs: CountExpr,
    pub rhs: CountExpr,
    pub predicate: Predicate,
    pub status: RelationStatus,
}

impl RelationSpec {
    /// Canonical rendering in the relation grammar; parses back to an
    /// equivalent spec.
    pub fn render(&self) -> String {
        match self.predicate.render() {
            None => format!("{} == {}", self.lhs, self.rhs),
            Some(pred) => format!("{} == {} for {}", self.lhs, self.rhs, pred),
        }
    }

    /// Largest count index touched for `n <= n_max`.
    pub fn max_index(&self, n_max: u64) -> i64 {
        self.lhs.max_index(n_max).max(self.rhs.max_index(n_max))
    }
}
