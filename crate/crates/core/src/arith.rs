//! Exact integer arithmetic: factorization, divisor sums, Jacobi symbols,
//! p-adic valuations, and prime-power splitting.
//!
//! Everything here works by trial division. Inputs stay well below 10^8 at
//! the scales the rest of the crate drives, so no probabilistic primality
//! machinery is needed.

use crate::error::{Error, Result};

/// Prime factorization of a positive integer.
///
/// Invariants: `factors` lists `(p, e)` with strictly increasing primes and
/// `e >= 1`, and the product of `p^e` equals `n`. `Factorization::of(1)` has
/// an empty factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Factor `n >= 1` by trial division.
    pub fn of(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::NonPositive(0));
        }
        let mut factors = Vec::new();
        let mut rem = n;
        let mut p = 2u64;
        while p * p <= rem {
            if rem % p == 0 {
                let mut e = 0u32;
                while rem % p == 0 {
                    rem /= p;
                    e += 1;
                }
                factors.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if rem > 1 {
            factors.push((rem, 1));
        }
        Ok(Factorization { n, factors })
    }

    /// Multiply the factorization back out.
    pub fn product(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product::<u64>()
    }

    /// Iterator over all positive divisors of `n`, in no particular order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs
    }
}

/// Shorthand for [`Factorization::of`].
pub fn factorize(n: u64) -> Result<Factorization> {
    Factorization::of(n)
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut p = 3u64;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 2;
    }
    true
}

/// Sum of positive divisors of `n`, with `sigma(n) = 0` for `n <= 0`.
///
/// The zero convention for nonpositive arguments lets formula code index
/// sigma freely without guards.
pub fn sigma(n: i64) -> u64 {
    if n <= 0 {
        return 0;
    }
    let f = Factorization::of(n as u64).expect("positive");
    f.factors
        .iter()
        .map(|&(p, e)| {
            // (p^(e+1) - 1) / (p - 1), kept in u64; p^(e+1) <= n * p.
            (p.pow(e + 1) - 1) / (p - 1)
        })
        .product()
}

/// Jacobi symbol `(a/m)` for odd positive `m`.
///
/// Zero exactly when `gcd(a, m) > 1`; completely multiplicative in both
/// arguments. For prime `m` this is the Legendre symbol.
pub fn jacobi(a: i64, m: u64) -> Result<i32> {
    if m == 0 || m % 2 == 0 {
        return Err(Error::BadModulus(m as i64));
    }
    let mut num = a.rem_euclid(m as i64) as u64;
    let mut den = m;
    let mut sign = 1i32;
    while num != 0 {
        while num % 2 == 0 {
            num /= 2;
            // (2/den) = -1 iff den = 3, 5 mod 8
            if den % 8 == 3 || den % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut num, &mut den);
        // quadratic reciprocity flips the sign when both are 3 mod 4
        if num % 4 == 3 && den % 4 == 3 {
            sign = -sign;
        }
        num %= den;
    }
    Ok(if den == 1 { sign } else { 0 })
}

/// Largest `r` with `p^r | n`, for prime `p` and `n >= 1`.
pub fn ord_p(p: u64, n: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    let mut r = 0u32;
    let mut rem = n;
    while rem % p == 0 {
        rem /= p;
        r += 1;
    }
    Ok(r)
}

/// Split `n = (prod p_i^{e_i}) * cofactor` over the listed primes, with the
/// cofactor coprime to every listed prime.
pub fn split_small_primes(n: u64, primes: &[u64]) -> (Vec<u32>, u64) {
    let mut rem = n;
    let mut exps = Vec::with_capacity(primes.len());
    for &p in primes {
        let mut e = 0u32;
        while rem % p == 0 {
            rem /= p;
            e += 1;
        }
        exps.push(e);
    }
    (exps, rem)
}

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
