//! Reference evaluations written straight from the closed forms, kept free of
//! the library's own arithmetic paths.
#![allow(dead_code)]

use curvelattice_core::{Int, Rational};

pub fn z(n: i64) -> Int {
    Int::from(n)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

/// `G(d, s)` term by term.
pub fn max_genus(d: i64, s: i64) -> Rational {
    let r = (s - d.rem_euclid(s)) % s;
    Rational::from(1) + q(d, 2) * (q(d, s) + z(s - 4)) - q(r * (s - r) * (s - 1), 2 * s)
}

/// `D²` on the line-containing quartic: `−2a² + 6ab`.
pub fn q1_square(a: i64, b: i64) -> i64 {
    -2 * a * a + 6 * a * b
}

/// `D²` on the conic-containing quartic: `−2a² + 8ab − 2b²`.
pub fn q2_square(a: i64, b: i64) -> i64 {
    -2 * a * a + 8 * a * b - 2 * b * b
}

/// Nef on the conic-containing quartic: pairs non-negatively with both conics.
pub fn q2_nef(a: i64, b: i64) -> bool {
    a >= 0 && b >= 0 && -2 * a + 4 * b >= 0 && 4 * a - 2 * b >= 0
}

/// The three line-quartic families with `b ≤ b_max`, sorted.
pub fn q1_family_set(b_max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for (a0, b0) in [(8, 6), (10, 7), (15, 10)] {
        let mut k = 0;
        while b0 + 2 * k <= b_max {
            out.push((a0 + 3 * k, b0 + 2 * k));
            k += 1;
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The four conic-quartic families `(5+j+2k, 4+k)`, `k ≥ 1`, with `b ≤ b_max`.
pub fn q2_family_set(b_max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for j in 0..4 {
        let mut k = 1;
        while 4 + k <= b_max {
            out.push((5 + j + 2 * k, 4 + k));
            k += 1;
        }
    }
    out.sort();
    out
}
