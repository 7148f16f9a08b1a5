//! The built-in registry of proved relations: parametrized families with
//! their side conditions and default verification grids, plus the concrete
//! single-form relations.

use super::expr::{Affine, Atom, CountExpr, CountKind, Predicate, RelationSpec, RelationStatus};
use crate::closedform::c_coefficient;
use crate::error::{Error, Result};
use crate::form::FormTuple;
use num_rational::Rational64;

/// Parameters a family is instantiated with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Params {
    /// The `(a, k, m)` shape used by the odd-`a` families. Families that
    /// do not use `k` or `m` ignore them.
    Akm { a: u64, k: u64, m: u64 },
    /// A concrete form, for the multiset-indexed families.
    Form(FormTuple),
}

impl Params {
    pub fn akm(a: u64, k: u64, m: u64) -> Self {
        Params::Akm { a, k, m }
    }

    fn label(&self) -> String {
        match self {
            Params::Akm { a, k, m } => format!("a={a},k={k},m={m}"),
            Params::Form(f) => format!("{f}"),
        }
    }
}

/// A relation family: an instantiation rule guarded by side conditions,
/// with a default parameter grid for smoke-testing the statement.
pub struct RelationFamily {
    pub id: &'static str,
    /// Parameter signature and side conditions, human readable.
    pub signature: &'static str,
    instantiate_fn: fn(&Params) -> Result<RelationSpec>,
    grid_fn: fn() -> Vec<Params>,
}

impl RelationFamily {
    /// Produce the concrete relation for `params`; side-condition
    /// violations are errors.
    pub fn instantiate(&self, params: &Params) -> Result<RelationSpec> {
        let mut spec = (self.instantiate_fn)(params)?;
        spec.id = format!("{}[{}]", self.id, params.label());
        Ok(spec)
    }

    /// The default sampling grid (every entry satisfies the side
    /// conditions). The statements are proved for all parameters; the grid
    /// is a smoke test, not a proof surrogate.
    pub fn default_grid(&self) -> Vec<Params> {
        (self.grid_fn)()
    }

    /// Instantiate over the whole default grid.
    pub fn grid_specs(&self) -> Vec<RelationSpec> {
        self.default_grid()
            .iter()
            .map(|p| self.instantiate(p).expect("grid respects side conditions"))
            .collect()
    }
}

/// A registry entry: either a family or a single concrete relation.
pub enum RegistryEntry {
    Family(RelationFamily),
    Spec(RelationSpec),
}

impl RegistryEntry {
    pub fn id(&self) -> &str {
        match self {
            RegistryEntry::Family(f) => f.id,
            RegistryEntry::Spec(s) => &s.id,
        }
    }
}

fn rat(num: i64, den: i64) -> Rational64 {
    Rational64::new(num, den)
}

fn atom(kind: CountKind, entries: [u64; 4], mul: u64, add: i64) -> Atom {
    let [a, b, c, d] = entries;
    Atom {
        kind,
        // canonical order so the same form written differently unifies
        form: FormTuple::new(a, b, c, d).expect("positive entries").canonical(),
        index: Affine::new(mul, add),
    }
}

fn expr(terms: Vec<(Rational64, Atom)>) -> CountExpr {
    CountExpr::new(terms)
}

fn one_atom(kind: CountKind, entries: [u64; 4], mul: u64, add: i64) -> CountExpr {
    expr(vec![(rat(1, 1), atom(kind, entries, mul, add))])
}

fn proved(id: &str, lhs: CountExpr, rhs: CountExpr, predicate: Predicate) -> RelationSpec {
    RelationSpec {
        id: id.to_string(),
        lhs,
        rhs,
        predicate,
        status: RelationStatus::Proved,
    }
}

fn require(cond: bool, family: &str, reason: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::SideCondition {
            family: family.to_string(),
            reason: reason.to_string(),
        })
    }
}

fn expect_akm(params: &Params, family: &str) -> Result<(u64, u64, u64)> {
    match params {
        Params::Akm { a, k, m } => Ok((*a, *k, *m)),
        Params::Form(_) => Err(Error::SideCondition {
            family: family.to_string(),
            reason: "expected (a,k,m) parameters".to_string(),
        }),
    }
}

fn expect_form(params: &Params, family: &str) -> Result<FormTuple> {
    match params {
        Params::Form(f) => Ok(*f),
        Params::Akm { .. } => Err(Error::SideCondition {
            family: family.to_string(),
            reason: "expected a form parameter".to_string(),
        }),
    }
}

fn odd_a_grid(k_min: u64, m_min: u64) -> Vec<Params> {
    let mut grid = Vec::new();
    for a in [1u64, 3, 5] {
        for k in k_min..=4 {
            for m in m_min..=4 {
                grid.push(Params::akm(a, k, m));
            }
        }
    }
    grid
}

/// Grid for families that use only `(a, m)` or only `(a, k)`.
fn odd_a_single_grid(other_min: u64) -> Vec<Params> {
    let mut grid = Vec::new();
    for a in [1u64, 3, 5] {
        for v in other_min..=4 {
            grid.push(Params::akm(a, v, v));
        }
    }
    grid
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

fn lemma_2_1(params: &Params) -> Result<RelationSpec> {
    let (a, k, m) = expect_akm(params, "lemma2.1")?;
    require(a % 2 == 1, "lemma2.1", "a must be odd")?;
    require(k >= 1 && m >= 1, "lemma2.1", "k and m must be >= 1")?;
    Ok(proved(
        "lemma2.1",
        one_atom(CountKind::N, [a, a, 2 * k, 2 * m], 2, 0),
        one_atom(CountKind::N, [a, a, k, m], 1, 0),
        Predicate::All,
    ))
}

fn eq_1_4(params: &Params) -> Result<RelationSpec> {
    let f = expect_form(params, "eq1.4")?;
    let s = f.sum();
    require((5..=7).contains(&s), "eq1.4", "coefficient sum must be 5..7")?;
    let c = c_coefficient(f)? as i64;
    Ok(proved(
        "eq1.4",
        expr(vec![(rat(c, 1), atom(CountKind::TPrime, f.entries(), 1, 0))]),
        one_atom(CountKind::N, f.entries(), 8, s as i64),
        Predicate::All,
    ))
}

fn eq_1_5(params: &Params) -> Result<RelationSpec> {
    let f = expect_form(params, "eq1.5")?;
    require(f.sum() == 8, "eq1.5", "coefficient sum must be 8")?;
    let c = c_coefficient(f)? as i64;
    Ok(proved(
        "eq1.5",
        expr(vec![(rat(c, 1), atom(CountKind::TPrime, f.entries(), 1, 0))]),
        expr(vec![
            (rat(1, 1), atom(CountKind::N, f.entries(), 8, 8)),
            (rat(-1, 1), atom(CountKind::N, f.entries(), 2, 2)),
        ]),
        Predicate::All,
    ))
}

fn thm_2_1a(params: &Params) -> Result<RelationSpec> {
    let (a, _, m) = expect_akm(params, "thm2.1a")?;
    require(a % 2 == 1, "thm2.1a", "a must be odd")?;
    let half = a.div_ceil(2) as i64;
    Ok(proved(
        "thm2.1a",
        one_atom(CountKind::T, [a, a, 2 * a, 8 * m + 4], 1, 0),
        expr(vec![
            (
                rat(2, 3),
                atom(CountKind::N, [a, a, a, 4 * m + 2], 4, (4 * m + 2 * a + 2) as i64),
            ),
            (
                rat(-2, 3),
                atom(CountKind::N, [a, a, a, 4 * m + 2], 1, m as i64 + half),
            ),
        ]),
        Predicate::All,
    ))
}

fn thm_2_1b_with_offset(a: u64, m: u64, low_offset: i64) -> RelationSpec {
    proved(
        "thm2.1b",
        one_atom(CountKind::T, [a, a, 2 * a, 8 * m + 4], 1, 0),
        expr(vec![
            (
                rat(2, 3),
                atom(
                    CountKind::N,
                    [a, a, 2 * a, 8 * m + 4],
                    8,
                    (8 * m + 4 * a + 4) as i64,
                ),
            ),
            (
                rat(-2, 3),
                atom(CountKind::N, [a, a, 2 * a, 8 * m + 4], 2, low_offset),
            ),
        ]),
        Predicate::All,
    )
}

fn thm_2_1b(params: &Params) -> Result<RelationSpec> {
    let (a, _, m) = expect_akm(params, "thm2.1b")?;
    require(a % 2 == 1, "thm2.1b", "a must be odd")?;
    Ok(thm_2_1b_with_offset(a, m, (2 * m + a + 1) as i64))
}

/// Variant of the second `thm2.1` equality with the subtracted index
/// shifted to `2n + 2m + 2a + 2`. This shape appears once in a derivation
/// step but disagrees with the statement; it is kept out of the proved
/// registry and only probed informationally.
pub fn thm_2_1b_variant() -> RelationFamily {
    fn build(params: &Params) -> Result<RelationSpec> {
        let (a, _, m) = expect_akm(params, "thm2.1b-variant")?;
        require(a % 2 == 1, "thm2.1b-variant", "a must be odd")?;
        let mut spec = thm_2_1b_with_offset(a, m, (2 * m + 2 * a + 2) as i64);
        spec.id = "thm2.1b-variant".to_string();
        spec.status = RelationStatus::Conjectured;
        Ok(spec)
    }
    RelationFamily {
        id: "thm2.1b-variant",
        signature: "a odd >= 1; m >= 0 (informational probe, not part of the proved registry)",
        instantiate_fn: build,
        grid_fn: || odd_a_single_grid(0),
    }
}

fn thm_2_2(params: &Params) -> Result<RelationSpec> {
    let (a, k, m) = expect_akm(params, "thm2.2")?;
    require(a % 2 == 1, "thm2.2", "a must be odd")?;
    require(k % 2 == m % 2, "thm2.2", "k and m must have equal parity")?;
    let f = [a, 3 * a, 4 * k + 2, 4 * m + 2];
    Ok(proved(
        "thm2.2",
        one_atom(CountKind::T, f, 1, 0),
        expr(vec![
            (
                rat(2, 3),
                atom(CountKind::N, f, 8, (4 * m + 4 * k + 4 * a + 4) as i64),
            ),
            (
                rat(-2, 3),
                atom(CountKind::N, f, 2, (m + k + a + 1) as i64),
            ),
        ]),
        Predicate::All,
    ))
}

fn thm_2_3(params: &Params) -> Result<RelationSpec> {
    let (a, k, _) = expect_akm(params, "thm2.3")?;
    require(a % 2 == 1 && k % 2 == 1, "thm2.3", "a and k must both be odd")?;
    Ok(proved(
        "thm2.3",
        one_atom(CountKind::T, [a, 3 * a, k, k], 1, 0),
        expr(vec![(
            rat(2, 3),
            atom(CountKind::N, [a, 3 * a, 2 * k, 2 * k], 8, (4 * a + 2 * k) as i64),
        )]),
        Predicate::All,
    ))
}

fn thm_2_4(params: &Params) -> Result<RelationSpec> {
    let (a, k, m) = expect_akm(params, "thm2.4")?;
    require(a % 2 == 1, "thm2.4", "a must be odd")?;
    let f = [a, 3 * a, 8 * k + 4, 4 * m + 2];
    let residue = (k + (a - 1) / 2) % 2;
    Ok(proved(
        "thm2.4",
        one_atom(CountKind::T, f, 1, 0),
        expr(vec![(
            rat(2, 3),
            atom(CountKind::N, f, 8, (4 * m + 8 * k + 4 * a + 6) as i64),
        )]),
        Predicate::residues(2, [residue]),
    ))
}

fn thm_2_5(params: &Params) -> Result<RelationSpec> {
    let (a, k, _) = expect_akm(params, "thm2.5")?;
    require(a % 2 == 1, "thm2.5", "a must be odd")?;
    require(k >= 1, "thm2.5", "k must be >= 1")?;
    Ok(proved(
        "thm2.5",
        one_atom(CountKind::T, [a, a, 6 * a, 4 * k], 4, 3 * a as i64),
        expr(vec![(rat(2, 1), atom(CountKind::T, [a, a, 6 * a, k], 1, 0))]),
        Predicate::All,
    ))
}

fn thm_2_6(params: &Params) -> Result<RelationSpec> {
    let (a, k, _) = expect_akm(params, "thm2.6")?;
    require(a % 2 == 1, "thm2.6", "a must be odd")?;
    require(k >= 1, "thm2.6", "k must be >= 1")?;
    Ok(proved(
        "thm2.6",
        one_atom(CountKind::T, [a, a, 2 * a, 4 * k], 4, 3 * a as i64),
        expr(vec![(rat(4, 1), atom(CountKind::T, [a, 2 * a, 4 * a, k], 1, 0))]),
        Predicate::All,
    ))
}

fn thm_2_7a(params: &Params) -> Result<RelationSpec> {
    let (a, k, _) = expect_akm(params, "thm2.7a")?;
    require(a % 2 == 1, "thm2.7a", "a must be odd")?;
    require(k >= 1, "thm2.7a", "k must be >= 1")?;
    Ok(proved(
        "thm2.7a",
        one_atom(CountKind::T, [a, a, 8 * a, 2 * k], 2, 0),
        one_atom(CountKind::T, [a, 2 * a, 2 * a, k], 1, 0),
        Predicate::All,
    ))
}

fn thm_2_7b(params: &Params) -> Result<RelationSpec> {
    let (a, k, _) = expect_akm(params, "thm2.7b")?;
    require(a % 2 == 1, "thm2.7b", "a must be odd")?;
    require(k >= 1, "thm2.7b", "k must be >= 1")?;
    Ok(proved(
        "thm2.7b",
        one_atom(CountKind::T, [a, a, 8 * a, 2 * k], 2, a as i64),
        expr(vec![(rat(2, 1), atom(CountKind::T, [a, 4 * a, 4 * a, k], 1, 0))]),
        Predicate::All,
    ))
}

/// Multisets of four positive integers with the given coefficient sum.
pub fn multisets_with_sum(s: u64) -> Vec<FormTuple> {
    let mut out = Vec::new();
    for a in 1..=s {
        for b in a..=s {
            for c in b..=s {
                if a + b + c >= s {
                    continue;
                }
                let d = s - a - b - c;
                if d >= c {
                    out.push(FormTuple([a, b, c, d]));
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Concrete relations
// ---------------------------------------------------------------------------

fn concrete_specs() -> Vec<RelationSpec> {
    let mut specs = vec![
        proved(
            "thm2.11",
            one_atom(CountKind::T, [1, 1, 4, 6], 1, 0),
            expr(vec![(rat(2, 1), atom(CountKind::N, [1, 1, 4, 6], 2, 3))]),
            Predicate::residues(4, [1, 2]),
        ),
        proved(
            "thm2.12",
            one_atom(CountKind::T, [2, 2, 3, 9], 1, 0),
            expr(vec![(rat(4, 3), atom(CountKind::N, [2, 2, 3, 9], 2, 4))]),
            Predicate::residues(4, [1]),
        ),
        proved(
            "thm2.13a",
            one_atom(CountKind::T, [1, 2, 2, 6], 1, 0),
            expr(vec![(rat(1, 2), atom(CountKind::N, [1, 1, 4, 6], 8, 11))]),
            Predicate::All,
        ),
        proved(
            "thm2.13b",
            one_atom(CountKind::T, [1, 1, 8, 12], 2, 0),
            expr(vec![(rat(1, 2), atom(CountKind::N, [1, 1, 8, 12], 16, 22))]),
            Predicate::All,
        ),
        proved(
            "thm2.14",
            one_atom(CountKind::T, [1, 1, 6, 24], 4, 1),
            expr(vec![(rat(2, 1), atom(CountKind::T, [2, 2, 3, 3], 1, 0))]),
            Predicate::All,
        ),
        proved(
            "cor2.1",
            one_atom(CountKind::N, [2, 2, 3, 9], 8, 6),
            expr(vec![(rat(3, 5), atom(CountKind::N, [1, 1, 3, 9], 8, 6))]),
            Predicate::All,
        ),
    ];
    // the seven forms whose t is 2/5 of N at index 8n + (a+b+c+d)
    let two_fifths_forms = [
        [1u64, 1, 1, 2],
        [1, 1, 1, 3],
        [1, 1, 2, 3],
        [1, 1, 3, 9],
        [1, 3, 3, 3],
        [1, 3, 3, 6],
        [1, 3, 9, 9],
    ];
    for f in two_fifths_forms {
        let s: u64 = f.iter().sum();
        specs.push(proved(
            &format!("remark2.1-{}{}{}{}", f[0], f[1], f[2], f[3]),
            one_atom(CountKind::T, f, 1, 0),
            expr(vec![(rat(2, 5), atom(CountKind::N, f, 8, s as i64))]),
            Predicate::All,
        ));
    }
    specs
}

/// Every proved relation, exactly once: twelve families and thirteen
/// concrete relations.
pub fn builtin_registry() -> Vec<RegistryEntry> {
    let families = [
        RelationFamily {
            id: "lemma2.1",
            signature: "a odd >= 1; k, m >= 1",
            instantiate_fn: lemma_2_1,
            grid_fn: || odd_a_grid(1, 1),
        },
        RelationFamily {
            id: "eq1.4",
            signature: "form multiset with coefficient sum in {5,6,7}",
            instantiate_fn: eq_1_4,
            grid_fn: || {
                (5..=7)
                    .flat_map(multisets_with_sum)
                    .map(Params::Form)
                    .collect()
            },
        },
        RelationFamily {
            id: "eq1.5",
            signature: "form multiset with coefficient sum 8",
            instantiate_fn: eq_1_5,
            grid_fn: || multisets_with_sum(8).into_iter().map(Params::Form).collect(),
        },
        RelationFamily {
            id: "thm2.1a",
            signature: "a odd >= 1; m >= 0",
            instantiate_fn: thm_2_1a,
            grid_fn: || odd_a_single_grid(0),
        },
        RelationFamily {
            id: "thm2.1b",
            signature: "a odd >= 1; m >= 0",
            instantiate_fn: thm_2_1b,
            grid_fn: || odd_a_single_grid(0),
        },
        RelationFamily {
            id: "thm2.2",
            signature: "a odd >= 1; k, m >= 0 with k = m (mod 2)",
            instantiate_fn: thm_2_2,
            grid_fn: || {
                odd_a_grid(0, 0)
                    .into_iter()
                    .filter(|p| matches!(p, Params::Akm { k, m, .. } if k % 2 == m % 2))
                    .collect()
            },
        },
        RelationFamily {
            id: "thm2.3",
            signature: "a odd >= 1; k odd >= 1",
            instantiate_fn: thm_2_3,
            grid_fn: || {
                let mut grid = Vec::new();
                for a in [1u64, 3, 5] {
                    for k in [1u64, 3] {
                        grid.push(Params::akm(a, k, 0));
                    }
                }
                grid
            },
        },
        RelationFamily {
            id: "thm2.4",
            signature: "a odd >= 1; k, m >= 0; domain n = k + (a-1)/2 (mod 2)",
            instantiate_fn: thm_2_4,
            grid_fn: || odd_a_grid(0, 0),
        },
        RelationFamily {
            id: "thm2.5",
            signature: "a odd >= 1; k >= 1",
            instantiate_fn: thm_2_5,
            grid_fn: || odd_a_single_grid(1),
        },
        RelationFamily {
            id: "thm2.6",
            signature: "a odd >= 1; k >= 1",
            instantiate_fn: thm_2_6,
            grid_fn: || odd_a_single_grid(1),
        },
        RelationFamily {
            id: "thm2.7a",
            signature: "a odd >= 1; k >= 1",
            instantiate_fn: thm_2_7a,
            grid_fn: || odd_a_single_grid(1),
        },
        RelationFamily {
            id: "thm2.7b",
            signature: "a odd >= 1; k >= 1",
            instantiate_fn: thm_2_7b,
            grid_fn: || odd_a_single_grid(1),
        },
    ];
    let mut entries: Vec<RegistryEntry> = families.into_iter().map(RegistryEntry::Family).collect();
    entries.extend(concrete_specs().into_iter().map(RegistryEntry::Spec));
    entries
}

/// Look up a registry entry by id.
pub fn find_entry(id: &str) -> Result<RegistryEntry> {
    builtin_registry()
        .into_iter()
        .find(|e| e.id() == id)
        .ok_or_else(|| Error::UnknownRelation(id.to_string()))
}
