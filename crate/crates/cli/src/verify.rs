//! Batch invariant scans behind `verify`.

use curvelattice_core::cubic::cubic_quadratic_bound;
use curvelattice_core::k3::{cohomology, K3Model};
use curvelattice_core::lattice::self_int;
use curvelattice_core::quartic::{
    enumerate_families_q1, enumerate_q2_nonvanishing, family_union, max_genus, q1_families,
    q2_nonvanishing_families, quartic_genus_threshold, quartic_large_genus, FamilyCheck,
};
use curvelattice_core::{DivClass2, Int, Rational};
use rayon::prelude::*;

use crate::report::{CheckReport, SuiteReport};

const MAX_COUNTEREXAMPLES: usize = 20;

fn check(name: &str, checked: u64, mut bad: Vec<String>, notes: Vec<String>) -> CheckReport {
    let failed = bad.len() as u64;
    bad.truncate(MAX_COUNTEREXAMPLES);
    CheckReport {
        name: name.to_string(),
        checked,
        failed,
        counterexamples: bad,
        notes,
    }
}

fn z(n: i64) -> Int {
    Int::from(n)
}

/// Scans `f` over a grid in parallel; results come back in grid order.
fn scan<F>(
    rows: std::ops::RangeInclusive<i64>,
    cols: std::ops::RangeInclusive<i64>,
    f: F,
) -> (u64, Vec<String>)
where
    F: Fn(i64, i64) -> Option<String> + Sync,
{
    let cols: Vec<i64> = cols.collect();
    let bad: Vec<String> = rows
        .clone()
        .into_par_iter()
        .flat_map_iter(|a| cols.iter().filter_map(|&b| f(a, b)).collect::<Vec<_>>())
        .collect();
    let n = (rows.end() - rows.start() + 1).max(0) as u64 * cols.len() as u64;
    (n, bad)
}

pub fn riemann_roch() -> SuiteReport {
    let checks = [K3Model::q1(), K3Model::q2()]
        .iter()
        .map(|m| {
            let (n, bad) = scan(-40..=40, -40..=40, |a, b| {
                let d = DivClass2::new(a, b);
                let want = self_int(&d, m.gram()) / 2 + 2;
                match cohomology(m, &d) {
                    Ok(dims) if dims.euler_char() == want => None,
                    Ok(dims) => Some(format!("{d}: chi {} != {want}", dims.euler_char())),
                    Err(e) => Some(format!("{d}: {e}")),
                }
            });
            check(
                &format!("{}: h0-h1+h2 = D^2/2+2, |a|,|b| <= 40", m.name()),
                n,
                bad,
                vec![],
            )
        })
        .collect();
    SuiteReport {
        name: "rr".into(),
        checks,
    }
}

pub fn oracles() -> SuiteReport {
    let q1 = K3Model::q1();
    let (n1, bad1) = scan(1..=60, 0..=60, |a, b| {
        if (a, b) == (1, 0) {
            return None;
        }
        let d = DivClass2::new(a, b);
        let h1 = cohomology(&q1, &d).ok()?.h1;
        ((h1 > z(0)) != (2 * a > 3 * b + 1)).then(|| format!("{d}: h1 = {h1}"))
    });
    let line = cohomology(&q1, &DivClass2::new(1, 0)).map(|c| c.h1);
    let mut bad1 = bad1;
    if line != Ok(z(0)) {
        bad1.push(format!("(1,0): expected h1 = 0, got {line:?}"));
    }
    let q2 = K3Model::q2();
    let (n2, bad2) = scan(1..=60, 1..=60, |a, b| {
        let d = DivClass2::new(a, b);
        let h1 = cohomology(&q2, &d).ok()?.h1;
        ((h1 == z(0)) != q2.is_nef(&d)).then(|| format!("{d}: h1 = {h1}"))
    });
    SuiteReport {
        name: "oracles".into(),
        checks: vec![
            check(
                "q1: h1 > 0 iff 2a > 3b+1, 1 <= a <= 60, 0 <= b <= 60",
                n1 + 1,
                bad1,
                vec!["(1,0) excluded from the equivalence: the line itself has h1 = 0".into()],
            ),
            check("q2: h1 = 0 iff nef, 1 <= a,b <= 60", n2, bad2, vec![]),
        ],
    }
}

pub fn families() -> SuiteReport {
    let found = enumerate_families_q1(&z(200));
    let fc = FamilyCheck::compare(&found, &family_union(&q1_families(), &z(200)));
    let q1_bad = diffs(&fc);

    let q2 = K3Model::q2();
    let mut q2_bad = Vec::new();
    let mut q2_n = 0;
    match enumerate_q2_nonvanishing(&z(100)) {
        Ok(found) => {
            q2_n = found.len() as u64;
            let fc =
                FamilyCheck::compare(&found, &family_union(&q2_nonvanishing_families(), &z(100)));
            q2_bad = diffs(&fc);
            for c in &found {
                if quartic_large_genus(&q2.degree(c), &q2.genus(c)) {
                    q2_bad.push(format!("{c}: above the large-genus threshold"));
                }
            }
        }
        Err(e) => q2_bad.push(e.to_string()),
    }
    SuiteReport {
        name: "families".into(),
        checks: vec![
            check(
                "q1: strip scan equals three families, b <= 200",
                found.len() as u64,
                q1_bad,
                vec![],
            ),
            check(
                "q2: non-vanishing scan equals four families k >= 1, b <= 100",
                q2_n,
                q2_bad,
                vec![],
            ),
        ],
    }
}

fn diffs(fc: &FamilyCheck) -> Vec<String> {
    fc.unexpected
        .iter()
        .map(|c| format!("{c}: found but not in the families"))
        .chain(
            fc.missing
                .iter()
                .map(|c| format!("{c}: in the families but not found")),
        )
        .collect()
}

pub fn crossover() -> SuiteReport {
    let quartic: Vec<String> = (21..=2000i64)
        .into_par_iter()
        .filter_map(|d| {
            let t = quartic_genus_threshold(&z(d))?;
            let g5 = Rational::from(max_genus(&z(d), &z(5)).ok()? - 1);
            let g5_arm = t == g5 && t < Rational::new(d * d, 10).ok()? + z(21);
            (g5_arm != (d <= 44)).then(|| format!("d = {d}"))
        })
        .collect();
    let sextic: Vec<String> = (31..=2000i64)
        .into_par_iter()
        .filter_map(|d| {
            let g6 = max_genus(&z(d), &z(6)).ok()?;
            let quad = cubic_quadratic_bound(&z(d));
            let holds = quad <= g6;
            (holds != (d <= 74)).then(|| format!("d = {d}: G(d,6) = {g6}, bound = {quad}"))
        })
        .collect();
    let octic: Vec<String> = (58..=2000i64)
        .into_par_iter()
        .filter_map(|d| {
            let g8 = max_genus(&z(d), &z(8)).ok()?;
            let quad = cubic_quadratic_bound(&z(d));
            (quad < g8).then(|| format!("d = {d}: G(d,8) = {g8}, bound = {quad}"))
        })
        .collect();
    SuiteReport {
        name: "crossover".into(),
        checks: vec![
            check(
                "min{G(d,5)-1, d^2/10+21} takes the G arm iff d <= 44, 21..2000",
                1980,
                quartic,
                vec![],
            ),
            check(
                "G(d,6) >= d^2/10-d/2+18 iff d <= 74, 31..2000",
                1970,
                sextic,
                vec![],
            ),
            check("G(d,8) <= d^2/10-d/2+18, 58..2000", 1943, octic, vec![]),
        ],
    }
}
