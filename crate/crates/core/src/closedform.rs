//! Direct evaluations of the explicit count formulas: divisor sums,
//! character-twisted divisor sums, and weighted representation sums over
//! binary forms. Each function computes one count without enumerating the
//! quaternary lattice, so the enumeration oracle can cross-examine it.

use crate::arith::{factorize, jacobi, sigma, split_small_primes};
use crate::error::{Error, Result};
use crate::form::FormTuple;
use num_rational::Rational64;

/// Sum of `x` over all integer pairs `(x, y)` with `d = x^2 + c*y^2` and
/// `x = 1 (mod 4)`. Pairs are counted individually: opposite signs of `y`
/// contribute separately.
pub fn rep_sum_x(d: u64, c: u64) -> i64 {
    debug_assert!(c == 2 || c == 4);
    let mut total = 0i64;
    let ymax = (d / c).isqrt() as i64;
    for y in -ymax..=ymax {
        let r = d - c * (y * y) as u64;
        let s = r.isqrt();
        if s * s != r {
            continue;
        }
        for x in [s as i64, -(s as i64)] {
            if x.rem_euclid(4) == 1 {
                total += x;
            }
            if s == 0 {
                break;
            }
        }
    }
    total
}

/// The multiplicity constant `C(a,b,c,d) = 16 + 4*i1*(i1-1)*i2 + 8*i1*i3`
/// where `i_j` counts entries equal to `j`; defined for coefficient sums
/// between 5 and 8.
pub fn c_coefficient(form: FormTuple) -> Result<u64> {
    let s = form.sum();
    if !(5..=8).contains(&s) {
        return Err(Error::Domain(format!(
            "C(a,b,c,d) needs 5 <= a+b+c+d <= 8, got sum {s}"
        )));
    }
    let count = |v: u64| form.entries().iter().filter(|&&e| e == v).count() as u64;
    let (i1, i2, i3) = (count(1), count(2), count(3));
    Ok(16 + 4 * i1 * (i1.saturating_sub(1)) * i2 + 8 * i1 * i3)
}

/// `t'(1,1,1,1;n) = sigma(2n+1)`.
pub fn t_prime_1111(n: u64) -> u64 {
    sigma(2 * n as i64 + 1)
}

/// `t'(1,1,2,2;n) = (1/4) * sum over d | 4n+3 of (d - (-1)^((d-1)/2))`.
pub fn t_prime_1122(n: u64) -> u64 {
    let m = 4 * n + 3;
    let sum: i64 = factorize(m)
        .expect("positive")
        .divisors()
        .into_iter()
        .map(|d| {
            let sign = if (d - 1) / 2 % 2 == 0 { 1 } else { -1 };
            d as i64 - sign
        })
        .sum();
    assert!(sum >= 0 && sum % 4 == 0, "quarter sum must be integral");
    (sum / 4) as u64
}

/// `t(1,1,8,8;n) = sigma(4n+9) - (2 - (-1)^n) * rep_sum_x(4n+9, 4)`.
pub fn t_1188(n: u64) -> u64 {
    let d = 4 * n + 9;
    let parity = if n % 2 == 0 { 1 } else { -1 };
    let value = sigma(d as i64) as i64 - (2 - parity) * rep_sum_x(d, 4);
    assert!(value >= 0, "count must be nonnegative");
    value as u64
}

/// `t(1,1,4,8;n) = 2*(-1)^n * sum over d | 4n+7 of d*(2/d)
///                 - (1 - (-1)^n) * rep_sum_x(4n+7, 2)`.
pub fn t_1148(n: u64) -> u64 {
    let m = 4 * n + 7;
    let twisted: i64 = factorize(m)
        .expect("positive")
        .divisors()
        .into_iter()
        .map(|d| d as i64 * jacobi(2, d).expect("odd divisor") as i64)
        .sum();
    let parity = if n % 2 == 0 { 1i64 } else { -1 };
    let value = 2 * parity * twisted - (1 - parity) * rep_sum_x(m, 2);
    assert!(value >= 0, "count must be nonnegative");
    value as u64
}

/// `t(1,3,3,6;n)` from the prime decomposition of `8n+13 = 3^beta * n1`:
///
/// `(2/3) * (3^beta + (n1/3)) * prod over p | n1 of
///     (p^(r+1) - (6/p)^(r+1)) / (p - (6/p))`,  `r = ord_p(n1)`.
///
/// The product is evaluated over exact rationals and asserted integral; a
/// non-integral value would falsify either the implementation or the
/// formula, so it is a hard error rather than a rounded answer.
pub fn t_1336(n: u64) -> Result<u64> {
    let m = 8 * n + 13;
    let (exps, n1) = split_small_primes(m, &[3]);
    let beta = exps[0];
    let mut value = Rational64::new(2, 3)
        * Rational64::from_integer(3i64.pow(beta) + jacobi(n1 as i64, 3)? as i64);
    for (p, r) in factorize(n1)?.factors {
        let chi = jacobi(6, p)? as i64;
        let pe = (p as i64).checked_pow(r + 1).ok_or(Error::Overflow {
            op: "t_1336",
            index: n as usize,
        })?;
        let chie = if (r + 1) % 2 == 0 { 1 } else { chi };
        value *= Rational64::new(pe - chie, p as i64 - chi);
    }
    if !value.is_integer() {
        return Err(Error::NonIntegral(format!(
            "t(1,3,3,6;{n}) evaluated to {value}"
        )));
    }
    Ok(*value.numer() as u64)
}

/// `t(1,1,6,24;n)` for `n = 4m`: split `m+1 = 2^alpha * 3^beta * m1` with
/// `gcd(m1, 6) = 1`; the count is `2^(alpha+4) * sigma(m1)`.
pub fn t_11624(n: u64) -> Result<u64> {
    if n % 4 != 0 {
        return Err(Error::Domain(format!(
            "t(1,1,6,24) closed form needs n = 0 (mod 4), got {n}"
        )));
    }
    let m = n / 4;
    let (exps, m1) = split_small_primes(m + 1, &[2, 3]);
    let alpha = exps[0];
    Ok(2u64.pow(alpha + 4) * sigma(m1 as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{count_n, count_t, count_t_prime};

    fn form(a: u64, b: u64, c: u64, d: u64) -> FormTuple {
        FormTuple::new(a, b, c, d).unwrap()
    }

    #[test]
    fn rep_sum_x_examples() {
        assert_eq!(rep_sum_x(9, 4), -3);
        assert_eq!(rep_sum_x(13, 4), -6);
        assert_eq!(rep_sum_x(11, 2), -6);
    }

    #[test]
    fn c_coefficient_examples() {
        assert_eq!(c_coefficient(form(1, 1, 1, 2)).unwrap(), 40);
        assert_eq!(c_coefficient(form(1, 1, 2, 2)).unwrap(), 32);
        assert_eq!(c_coefficient(form(2, 2, 2, 2)).unwrap(), 16);
        assert!(c_coefficient(form(1, 1, 1, 1)).is_err());
        assert!(c_coefficient(form(3, 3, 3, 3)).is_err());
    }

    #[test]
    fn t_prime_1111_matches() {
        assert_eq!(t_prime_1111(0), 1);
        assert_eq!(t_prime_1111(1), 4);
        assert_eq!(t_prime_1111(4), 13);
        for n in 0..=50 {
            assert_eq!(t_prime_1111(n), count_t_prime(form(1, 1, 1, 1), n), "n={n}");
        }
    }

    #[test]
    fn t_prime_1122_matches() {
        assert_eq!(t_prime_1122(0), 1);
        assert_eq!(t_prime_1122(1), 2);
        for n in 0..=50 {
            assert_eq!(16 * t_prime_1122(n), count_t(form(1, 1, 2, 2), n), "n={n}");
        }
    }

    #[test]
    fn t_1188_spot_values_and_zero() {
        assert_eq!(t_1188(0), 16);
        assert_eq!(t_1188(1), 32);
        // n = 0 checked on its own before the range sweep
        assert_eq!(t_1188(0), count_t(form(1, 1, 8, 8), 0));
    }

    #[test]
    fn t_1188_matches_enumeration() {
        for n in 1..=120 {
            assert_eq!(t_1188(n), count_t(form(1, 1, 8, 8), n), "n={n}");
        }
    }

    #[test]
    fn t_1148_spot_values_and_zero() {
        assert_eq!(t_1148(0), 16);
        assert_eq!(t_1148(1), 32);
        assert_eq!(t_1148(0), count_t(form(1, 1, 4, 8), 0));
    }

    #[test]
    fn t_1148_matches_enumeration() {
        for n in 1..=120 {
            assert_eq!(t_1148(n), count_t(form(1, 1, 4, 8), n), "n={n}");
        }
    }

    #[test]
    fn t_1336_spot_values_and_zero() {
        assert_eq!(t_1336(0).unwrap(), 16);
        assert_eq!(t_1336(1).unwrap(), 16);
        assert_eq!(t_1336(0).unwrap(), count_t(form(1, 3, 3, 6), 0));
    }

    #[test]
    fn t_1336_matches_enumeration_and_n_count() {
        for n in 1..=100 {
            let v = t_1336(n).unwrap();
            assert_eq!(v, count_t(form(1, 3, 3, 6), n), "n={n}");
            // the same count is 2/5 of N(1,3,3,6;8n+13)
            let nn = count_n(form(1, 3, 3, 6), 8 * n + 13);
            assert_eq!(5 * v, 2 * nn, "n={n}");
        }
    }

    #[test]
    fn t_11624_spot_values_and_domain() {
        assert_eq!(t_11624(0).unwrap(), 16);
        assert_eq!(t_11624(4).unwrap(), 32);
        assert!(matches!(t_11624(2), Err(Error::Domain(_))));
        assert_eq!(t_11624(4).unwrap(), count_t(form(1, 1, 3, 3), 1));
    }

    #[test]
    fn t_11624_matches_enumeration() {
        for m in 0..=200u64 {
            let v = t_11624(4 * m).unwrap();
            assert_eq!(v, count_t(form(1, 1, 3, 3), m), "m={m}");
        }
        // the 4m index really is about the (1,1,6,24) form
        for m in 0..=60u64 {
            assert_eq!(
                t_11624(4 * m).unwrap(),
                count_t(form(1, 1, 6, 24), 4 * m),
                "m={m}"
            );
        }
    }

    #[test]
    fn ach_relation_small_sums() {
        // C(f) * t'(f;n) = N(f;8n+s) for multisets with s in {5,6,7}
        let forms = [
            form(1, 1, 1, 2),
            form(1, 1, 1, 3),
            form(1, 1, 2, 2),
            form(1, 1, 1, 4),
            form(1, 1, 2, 3),
            form(1, 2, 2, 2),
        ];
        for f in forms {
            let c = c_coefficient(f).unwrap();
            let s = f.sum();
            for n in 0..=60 {
                assert_eq!(
                    c * count_t_prime(f, n),
                    count_n(f, 8 * n + s),
                    "form ({f}), n = {n}"
                );
            }
        }
    }

    #[test]
    fn bch_relation_sum_eight() {
        // C(f) * t'(f;n) = N(f;8n+8) - N(f;2n+2) for multisets with s = 8
        let forms = [
            form(1, 1, 1, 5),
            form(1, 1, 2, 4),
            form(1, 1, 3, 3),
            form(1, 2, 2, 3),
            form(2, 2, 2, 2),
        ];
        for f in forms {
            let c = c_coefficient(f).unwrap();
            for n in 0..=60 {
                assert_eq!(
                    c * count_t_prime(f, n),
                    count_n(f, 8 * n + 8) - count_n(f, 2 * n + 2),
                    "form ({f}), n = {n}"
                );
            }
        }
    }
}
