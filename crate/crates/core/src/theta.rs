//! Theta-series truncations and the coefficientwise identities between them.
//!
//! `phi(q) = 1 + 2 sum q^(n^2)` generates square counts and
//! `psi(q) = sum q^(n(n+1)/2)` generates triangular counts; products of four
//! of either are the generating series of `N(a,b,c,d;n)` and
//! `t'(a,b,c,d;n)`. The identity registry holds the dissection identities
//! the relation proofs rest on, each as a pair of side builders compared
//! coefficientwise at a chosen precision.

use crate::error::{Error, Result};
use crate::form::FormTuple;
use crate::report::CheckReport;
use crate::series::PowerSeries;

/// Default precision for identity checks; far beyond any low-order
/// coincidence while staying sub-second.
pub const DEFAULT_IDENTITY_PRECISION: usize = 1024;

/// `phi(q^k)` truncated at `q^precision`: coefficient 1 at 0, 2 at `k*n^2`.
pub fn phi_series(k: usize, precision: usize) -> PowerSeries {
    assert!(k >= 1);
    let mut coeffs = vec![0i64; precision];
    if precision > 0 {
        coeffs[0] = 1;
    }
    let mut n = 1usize;
    while let Some(idx) = n.checked_mul(n).and_then(|s| s.checked_mul(k)) {
        if idx >= precision {
            break;
        }
        coeffs[idx] = 2;
        n += 1;
    }
    PowerSeries::from_coeffs(coeffs)
}

/// `psi(q^k)` truncated at `q^precision`: coefficient 1 at `k*n(n+1)/2`.
pub fn psi_series(k: usize, precision: usize) -> PowerSeries {
    assert!(k >= 1);
    let mut coeffs = vec![0i64; precision];
    let mut n = 0usize;
    loop {
        let t = n * (n + 1) / 2;
        let Some(idx) = t.checked_mul(k) else { break };
        if idx >= precision {
            break;
        }
        coeffs[idx] = 1;
        n += 1;
    }
    PowerSeries::from_coeffs(coeffs)
}

/// Generating series of `N(form; n)`: the product of four `phi` factors.
pub fn n_series(form: FormTuple, precision: usize) -> Result<PowerSeries> {
    let [a, b, c, d] = form.entries();
    let mut acc = phi_series(a as usize, precision);
    for k in [b, c, d] {
        acc = acc.mul(&phi_series(k as usize, precision))?;
    }
    Ok(acc)
}

/// Generating series of `t'(form; n)`: the product of four `psi` factors.
pub fn t_prime_series(form: FormTuple, precision: usize) -> Result<PowerSeries> {
    let [a, b, c, d] = form.entries();
    let mut acc = psi_series(a as usize, precision);
    for k in [b, c, d] {
        acc = acc.mul(&psi_series(k as usize, precision))?;
    }
    Ok(acc)
}

/// Generating series of `t(form; n)`, i.e. 16 times [`t_prime_series`].
pub fn t_series(form: FormTuple, precision: usize) -> Result<PowerSeries> {
    t_prime_series(form, precision)?.scale(16)
}

/// `scalar * q^shift * (product of factors)`, truncated back to the common
/// precision of the factors.
fn term(scalar: i64, shift: usize, factors: &[PowerSeries]) -> Result<PowerSeries> {
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = acc.mul(f)?;
    }
    let precision = acc.precision();
    acc.scale(scalar).map(|s| s.shift(shift).truncate(precision))
}

fn sum(terms: Vec<PowerSeries>) -> Result<PowerSeries> {
    let mut acc = terms[0].clone();
    for t in &terms[1..] {
        acc = acc.add(t)?;
    }
    Ok(acc)
}

/// A coefficientwise identity between two theta expressions, keyed by the
/// registry id and carrying a printable form of the equation.
pub struct ThetaIdentity {
    pub id: &'static str,
    pub display: &'static str,
    build: fn(usize) -> Result<(PowerSeries, PowerSeries)>,
}

impl ThetaIdentity {
    /// Build both sides at `precision` and compare coefficientwise.
    pub fn check(&self, precision: usize) -> Result<CheckReport> {
        let (lhs, rhs) = (self.build)(precision)?;
        Ok(CheckReport::from_series_comparison(self.id, &lhs, &rhs))
    }
}

fn build_1_8(p: usize) -> Result<(PowerSeries, PowerSeries)> {
    let lhs = psi_series(1, p).pow(2)?;
    let rhs = phi_series(1, p).mul(&psi_series(2, p))?;
    Ok((lhs, rhs))
}

fn build_1_9(p: usize) -> Result<(PowerSeries, PowerSeries)> {
    let lhs = phi_series(1, p);
    let rhs = sum(vec![
        phi_series(4, p),
        term(2, 1, &[psi_series(8, p)])?,
    ])?;
    Ok((lhs, rhs))
}

fn build_1_10(p: usize) -> Result<(PowerSeries, PowerSeries)> {
    let lhs = phi_series(1, p).pow(2)?;
    let rhs = sum(vec![
        phi_series(2, p).pow(2)?,
        term(4, 1, &[psi_series(4, p).pow(2)?])?,
    ])?;
    Ok((lhs, rhs))
}

fn build_1_11(p: usize) -> Result<(PowerSeries, PowerSeries)> {
    let lhs = psi_series(1, p).mul(&psi_series(3, p))?;
    let rhs = sum(vec![
        phi_series(6, p).mul(&psi_series(4, p))?,
        term(1, 1, &[phi_series(2, p), psi_series(12, p)])?,
    ])?;
    Ok((lhs, rhs))
}

/// The two-step split of `phi(q^k)` into pieces supported on exponent
/// classes mod 16k: `phi(q^k) = phi(q^16k) + 2q^4k psi(q^32k) + 2q^k psi(q^8k)`.
pub fn build_1_12_instance(k: usize, p: usize) -> Result<(PowerSeries, PowerSeries)> {
    let lhs = phi_series(k, p);
    let rhs = sum(vec![
        phi_series(16 * k, p),
        term(2, 4 * k, &[psi_series(32 * k, p)])?,
        term(2, k, &[psi_series(8 * k, p)])?,
    ])?;
    Ok((lhs, rhs))
}

fn build_1_12(p: usize) -> Result<(PowerSeries, PowerSeries)> {
    build_1_12_instance(1, p)
}

fn build_l2_2(p: usize) -> Result<(PowerSeries, PowerSeries)> {
    let phi4 = phi_series(4, p);
    let psi4sq = psi_series(4, p).pow(2)?;
    let psi8 = psi_series(8, p);
    let lhs = phi_series(1, p).pow(3)?;
    let rhs = sum(vec![
        phi4.pow(3)?,
        term(6, 1, &[phi4.clone(), psi4sq.clone()])?,
        term(12, 2, &[psi4sq, psi8.clone()])?,
        term(8, 3, &[psi8.pow(3)?])?,
    ])?;
    Ok((lhs, rhs))
}

fn build_l2_3(p: usize) -> Result<(PowerSeries, PowerSeries)> {
    let lhs = phi_series(1, p).mul(&phi_series(3, p))?;
    let rhs = sum(vec![
        phi_series(16, p).mul(&phi_series(48, p))?,
        term(4, 16, &[psi_series(32, p), psi_series(96, p)])?,
        term(2, 1, &[phi_series(48, p), psi_series(8, p)])?,
        term(2, 3, &[phi_series(16, p), psi_series(24, p)])?,
        term(6, 4, &[psi_series(8, p), psi_series(24, p)])?,
        term(4, 13, &[psi_series(8, p), psi_series(96, p)])?,
        term(4, 7, &[psi_series(24, p), psi_series(32, p)])?,
    ])?;
    Ok((lhs, rhs))
}

fn build_l2_4(p: usize) -> Result<(PowerSeries, PowerSeries)> {
    let lhs = phi_series(1, p).pow(2)?;
    let rhs = sum(vec![
        phi_series(8, p).pow(2)?,
        term(4, 4, &[psi_series(16, p).pow(2)?])?,
        term(4, 2, &[psi_series(8, p).pow(2)?])?,
        term(4, 1, &[phi_series(16, p), psi_series(8, p)])?,
        term(8, 5, &[psi_series(8, p), psi_series(32, p)])?,
    ])?;
    Ok((lhs, rhs))
}

/// The built-in identity registry.
pub fn identity_registry() -> &'static [ThetaIdentity] {
    &[
        ThetaIdentity {
            id: "1.8",
            display: "psi(q)^2 = phi(q)*psi(q^2)",
            build: build_1_8,
        },
        ThetaIdentity {
            id: "1.9",
            display: "phi(q) = phi(q^4) + 2*q*psi(q^8)",
            build: build_1_9,
        },
        ThetaIdentity {
            id: "1.10",
            display: "phi(q)^2 = phi(q^2)^2 + 4*q*psi(q^4)^2",
            build: build_1_10,
        },
        ThetaIdentity {
            id: "1.11",
            display: "psi(q)*psi(q^3) = phi(q^6)*psi(q^4) + q*phi(q^2)*psi(q^12)",
            build: build_1_11,
        },
        ThetaIdentity {
            id: "1.12",
            display: "phi(q) = phi(q^16) + 2*q^4*psi(q^32) + 2*q*psi(q^8)",
            build: build_1_12,
        },
        ThetaIdentity {
            id: "L2.2",
            display: "phi(q)^3 = phi(q^4)^3 + 6*q*phi(q^4)*psi(q^4)^2 \
                      + 12*q^2*psi(q^4)^2*psi(q^8) + 8*q^3*psi(q^8)^3",
            build: build_l2_2,
        },
        ThetaIdentity {
            id: "L2.3",
            display: "phi(q)*phi(q^3) = phi(q^16)*phi(q^48) + 4*q^16*psi(q^32)*psi(q^96) \
                      + 2*q*phi(q^48)*psi(q^8) + 2*q^3*phi(q^16)*psi(q^24) \
                      + 6*q^4*psi(q^8)*psi(q^24) + 4*q^13*psi(q^8)*psi(q^96) \
                      + 4*q^7*psi(q^24)*psi(q^32)",
            build: build_l2_3,
        },
        ThetaIdentity {
            id: "L2.4",
            display: "phi(q)^2 = phi(q^8)^2 + 4*q^4*psi(q^16)^2 + 4*q^2*psi(q^8)^2 \
                      + 4*q*phi(q^16)*psi(q^8) + 8*q^5*psi(q^8)*psi(q^32)",
            build: build_l2_4,
        },
    ]
}

/// Look up a registry identity and check it at `precision`.
pub fn verify_theta_identity(id: &str, precision: usize) -> Result<CheckReport> {
    identity_registry()
        .iter()
        .find(|ident| ident.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))?
        .check(precision)
}
