//! Dense truncated formal power series over 64-bit integers.
//!
//! A [`PowerSeries`] is known modulo `q^P` where `P` is its precision; the
//! coefficient vector always has exactly `P` entries. Coefficient arithmetic
//! is overflow-checked: a product that would wrap returns
//! [`Error::Overflow`] instead of a silently wrong series. The operation set
//! is what coefficient-dissection arguments need: Cauchy products, the
//! power substitution `q -> q^k`, and extraction of coefficients along an
//! arithmetic progression of exponents.

use crate::error::{Error, Result};

/// A formal power series truncated at `q^P`, with `i64` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<i64>,
}

impl PowerSeries {
    /// Series with the given coefficients; precision is the vector length.
    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        PowerSeries { coeffs }
    }

    /// The zero series at precision `precision`.
    pub fn zero(precision: usize) -> Self {
        PowerSeries {
            coeffs: vec![0; precision],
        }
    }

    /// The constant series 1 at precision `precision`.
    pub fn one(precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if precision > 0 {
            s.coeffs[0] = 1;
        }
        s
    }

    /// `c * q^exp` at precision `precision` (zero series if `exp` is out of range).
    pub fn monomial(c: i64, exp: usize, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if exp < precision {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Truncation precision `P`: the series is known modulo `q^P`.
    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `q^n`. Reading at or past the precision is an error,
    /// never a silent zero.
    pub fn coeff(&self, n: usize) -> Result<i64> {
        self.coeffs
            .get(n)
            .copied()
            .ok_or(Error::CoeffOutOfRange {
                index: n,
                precision: self.precision(),
            })
    }

    /// Coefficientwise sum; result precision is the smaller of the two.
    pub fn add(&self, other: &PowerSeries) -> Result<PowerSeries> {
        let p = self.precision().min(other.precision());
        let mut coeffs = Vec::with_capacity(p);
        for i in 0..p {
            let c = self.coeffs[i]
                .checked_add(other.coeffs[i])
                .ok_or(Error::Overflow { op: "add", index: i })?;
            coeffs.push(c);
        }
        Ok(PowerSeries { coeffs })
    }

    /// Coefficientwise difference; result precision is the smaller of the two.
    pub fn sub(&self, other: &PowerSeries) -> Result<PowerSeries> {
        let p = self.precision().min(other.precision());
        let mut coeffs = Vec::with_capacity(p);
        for i in 0..p {
            let c = self.coeffs[i]
                .checked_sub(other.coeffs[i])
                .ok_or(Error::Overflow { op: "sub", index: i })?;
            coeffs.push(c);
        }
        Ok(PowerSeries { coeffs })
    }

    /// Cauchy product truncated at the smaller precision.
    ///
    /// Schoolbook multiplication, but the outer loop runs over the operand
    /// with fewer nonzero coefficients; theta factors are very sparse, so
    /// products against them cost `nnz * P` rather than `P^2`.
    pub fn mul(&self, other: &PowerSeries) -> Result<PowerSeries> {
        let p = self.precision().min(other.precision());
        let (outer, inner) = if count_nonzero(&self.coeffs[..p]) <= count_nonzero(&other.coeffs[..p])
        {
            (&self.coeffs, &other.coeffs)
        } else {
            (&other.coeffs, &self.coeffs)
        };
        let mut coeffs = vec![0i64; p];
        for (i, &a) in outer.iter().enumerate().take(p) {
            if a == 0 {
                continue;
            }
            for (j, &b) in inner.iter().enumerate().take(p - i) {
                if b == 0 {
                    continue;
                }
                let prod = a
                    .checked_mul(b)
                    .ok_or(Error::Overflow { op: "mul", index: i + j })?;
                coeffs[i + j] = coeffs[i + j]
                    .checked_add(prod)
                    .ok_or(Error::Overflow { op: "mul", index: i + j })?;
            }
        }
        Ok(PowerSeries { coeffs })
    }

    /// `self^e` by repeated multiplication (exponents here are tiny).
    pub fn pow(&self, e: u32) -> Result<PowerSeries> {
        let mut acc = PowerSeries::one(self.precision());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: i64) -> Result<PowerSeries> {
        let mut coeffs = Vec::with_capacity(self.precision());
        for (i, &a) in self.coeffs.iter().enumerate() {
            coeffs.push(a.checked_mul(c).ok_or(Error::Overflow {
                op: "scale",
                index: i,
            })?);
        }
        Ok(PowerSeries { coeffs })
    }

    /// Substitute `q -> q^k`: the coefficient of `q^(k*j)` in the result is
    /// the coefficient of `q^j` here. Result precision is `k * P`.
    pub fn substitute_power(&self, k: usize) -> PowerSeries {
        assert!(k >= 1, "substitution power must be >= 1");
        let mut coeffs = vec![0i64; self.precision() * k];
        for (j, &a) in self.coeffs.iter().enumerate() {
            coeffs[j * k] = a;
        }
        PowerSeries { coeffs }
    }

    /// Coefficients along the progression `m*j + r`: result coefficient `j`
    /// is this series' coefficient at `m*j + r`. Result precision is
    /// `ceil((P - r) / m)` (zero if `r >= P`).
    pub fn extract_progression(&self, r: usize, m: usize) -> PowerSeries {
        assert!(m >= 1 && r < m, "require 0 <= r < m");
        let p = self.precision();
        let out_len = if r >= p { 0 } else { (p - r).div_ceil(m) };
        let coeffs = (0..out_len).map(|j| self.coeffs[m * j + r]).collect();
        PowerSeries { coeffs }
    }

    /// Multiply by `q^s`; the result is known modulo `q^(P+s)`.
    pub fn shift(&self, s: usize) -> PowerSeries {
        let mut coeffs = vec![0i64; self.precision() + s];
        coeffs[s..].copy_from_slice(&self.coeffs);
        PowerSeries { coeffs }
    }

    /// Drop knowledge beyond `q^precision`. No-op if already shorter.
    pub fn truncate(mut self, precision: usize) -> PowerSeries {
        if precision < self.coeffs.len() {
            self.coeffs.truncate(precision);
        }
        self
    }

    /// Compare coefficientwise up to the smaller precision.
    pub fn eq_to_precision(&self, other: &PowerSeries) -> bool {
        let p = self.precision().min(other.precision());
        self.coeffs[..p] == other.coeffs[..p]
    }

    /// First index below the smaller precision where the two differ.
    pub fn first_mismatch(&self, other: &PowerSeries) -> Option<usize> {
        let p = self.precision().min(other.precision());
        (0..p).find(|&i| self.coeffs[i] != other.coeffs[i])
    }
}

fn count_nonzero(coeffs: &[i64]) -> usize {
    coeffs.iter().filter(|&&c| c != 0).count()
}
