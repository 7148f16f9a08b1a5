//! Brute-force representation counts by direct enumeration.
//!
//! These are the ground truth the series and closed-form paths are tested
//! against: three nested coordinate loops with the last coordinate resolved
//! by an exact perfect-square (or inverse-triangular) test, `O(n^{3/2})`
//! per call. No caching and no shared algebra with the series path; the
//! two routes must stay independent for the cross-checks to mean anything.

use crate::form::FormTuple;

fn is_square(m: u64) -> bool {
    let s = m.isqrt();
    s * s == m
}

/// Number of `w` in Z with `d * w^2 = r`.
fn square_solutions(d: u64, r: u64) -> u64 {
    if r % d != 0 {
        return 0;
    }
    let m = r / d;
    if !is_square(m) {
        return 0;
    }
    if m == 0 {
        1
    } else {
        2
    }
}

/// Number of `w` in Z with `d * w(w-1)/2 = r`. Triangular values repeat
/// exactly twice over Z (at `w` and `1-w`), so this is 0 or 2.
fn tri_solutions_z(d: u64, r: u64) -> u64 {
    if r % d != 0 {
        return 0;
    }
    // w(w-1)/2 = m  <=>  (2w-1)^2 = 1+8m
    if is_square(1 + 8 * (r / d)) {
        2
    } else {
        0
    }
}

/// Number of `w >= 1` with `d * w(w-1)/2 = r`: the positive branch alone.
fn tri_solutions_positive(d: u64, r: u64) -> u64 {
    tri_solutions_z(d, r) / 2
}

fn tri(x: i64) -> u64 {
    (x * (x - 1) / 2) as u64
}

/// Largest `x >= 1` with `x(x-1)/2 <= cap`.
fn tri_bound(cap: u64) -> i64 {
    (1 + 8 * cap).isqrt().div_ceil(2) as i64
}

/// `N(a,b,c,d;n)`: representations of `n` as `ax^2 + by^2 + cz^2 + dw^2`
/// over `(x,y,z,w)` in `Z^4`.
///
/// Iterates `|x| <= floor(sqrt(n/a))` and so on, folding the sign symmetry
/// into a weight per coordinate.
pub fn count_n(form: FormTuple, n: u64) -> u64 {
    let [a, b, c, d] = form.entries();
    let mut total = 0u64;
    let mut x = 0u64;
    while a * x * x <= n {
        let rx = n - a * x * x;
        let wx = if x == 0 { 1 } else { 2 };
        let mut y = 0u64;
        while b * y * y <= rx {
            let ry = rx - b * y * y;
            let wy = if y == 0 { 1 } else { 2 };
            let mut z = 0u64;
            while c * z * z <= ry {
                let rz = ry - c * z * z;
                let wz = if z == 0 { 1 } else { 2 };
                total += wx * wy * wz * square_solutions(d, rz);
                z += 1;
            }
            y += 1;
        }
        x += 1;
    }
    total
}

/// `t'(a,b,c,d;n)`: representations with all four coordinates in `N`
/// (so each coordinate contributes a triangular number starting from
/// `x = 1`, which contributes 0).
pub fn count_t_prime(form: FormTuple, n: u64) -> u64 {
    let [a, b, c, d] = form.entries();
    let mut total = 0u64;
    let mut x = 1i64;
    while a * tri(x) <= n {
        let rx = n - a * tri(x);
        let mut y = 1i64;
        while b * tri(y) <= rx {
            let ry = rx - b * tri(y);
            let mut z = 1i64;
            while c * tri(z) <= ry {
                total += tri_solutions_positive(d, ry - c * tri(z));
                z += 1;
            }
            y += 1;
        }
        x += 1;
    }
    total
}

/// `t(a,b,c,d;n)`: representations with coordinates in `Z^4`.
///
/// Enumerates `x` over the full signed range `[1-X, X]` rather than scaling
/// `t'` by 16, so the `t = 16 t'` identity stays testable instead of assumed.
pub fn count_t(form: FormTuple, n: u64) -> u64 {
    let [a, b, c, d] = form.entries();
    let mut total = 0u64;
    let bx = tri_bound(n / a);
    for x in (1 - bx)..=bx {
        if a * tri(x) > n {
            continue;
        }
        let rx = n - a * tri(x);
        let by = tri_bound(rx / b);
        for y in (1 - by)..=by {
            if b * tri(y) > rx {
                continue;
            }
            let ry = rx - b * tri(y);
            let bz = tri_bound(ry / c);
            for z in (1 - bz)..=bz {
                if c * tri(z) > ry {
                    continue;
                }
                total += tri_solutions_z(d, ry - c * tri(z));
            }
        }
    }
    total
}
