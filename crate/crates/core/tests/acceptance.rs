//! Acceptance gate: ten criteria, each run against its time limit, one status line per criterion.

use std::time::{Duration, Instant};

use cylhecke::cylindric::verify_char_to_schur;
use cylhecke::qcoh::verify_theorem_main;
use cylhecke::six_vertex::rtt::spec_points;
use cylhecke::six_vertex::{commutation_check, rtt_check, verify_abcd_vs_bruteforce};
use cylhecke::verify::{
    bethe_numeric_suite, cyl_three_way, dual_frobenius_check, fock_operator_check, fock_projection_check, gw_cross_oracle, hecke_table_check, POINT_SEED,
};
use cylhecke::{part, Partition, Report, Result};

struct Criterion {
    id: usize,
    title: &'static str,
    limit: Duration,
    run: fn() -> Result<Report>,
}

fn character_tables() -> Result<Report> {
    Ok(hecke_table_check(6))
}

fn dual_frobenius() -> Result<Report> {
    dual_frobenius_check(6)
}

fn abcd() -> Result<Report> {
    let mut report = Report::new("abcd");
    for n in 1..=6 {
        report.extend(verify_abcd_vs_bruteforce(n, None));
    }
    Ok(report)
}

fn rtt() -> Result<Report> {
    let points = spec_points(10, POINT_SEED);
    let mut report = Report::new("rtt");
    for n in 1..=3 {
        report.extend(rtt_check(n, &points));
    }
    for n in 1..=5 {
        report.extend(commutation_check(n, &points));
    }
    Ok(report)
}

fn fock() -> Result<Report> {
    let mut report = fock_operator_check(8);
    for (k, n) in [(1, 2), (2, 4)] {
        report.extend(fock_projection_check(k, n, 8)?);
    }
    Ok(report)
}

fn bethe() -> Result<Report> {
    let mut report = Report::new("bethe");
    for n in 1..=6 {
        for k in 0..=n {
            report.extend(bethe_numeric_suite(k, n, 1.0, 1e-8)?);
        }
    }
    Ok(report)
}

fn gw() -> Result<Report> {
    let mut report = gw_cross_oracle(2, 4, 3)?;
    report.extend(gw_cross_oracle(2, 5, 3)?);
    Ok(report)
}

fn three_way() -> Result<Report> {
    let mut report = Report::new("cyl3way");
    for (k, n) in [(1, 2), (1, 3), (2, 4), (2, 5)] {
        report.extend(cyl_three_way(k, n, &Partition::empty(), 8, None)?);
    }
    Ok(report)
}

fn theorem_main() -> Result<Report> {
    let mut report = Report::new("theorem-main");
    for (k, n, lambda, d) in [(1, 2, vec![1], 1), (1, 3, vec![2], 1), (2, 4, vec![2, 1], 1)] {
        report.extend(verify_theorem_main(&part(&lambda), d, k, n)?);
    }
    Ok(report)
}

fn char_to_schur() -> Result<Report> {
    let mut report = Report::new("char-schur");
    for lambda in [vec![1], vec![2, 1], vec![2, 2]] {
        report.extend(verify_char_to_schur(&part(&lambda), 2, 4, 4, 6)?);
    }
    Ok(report)
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, title: "Hecke character tables m ≤ 6", limit: Duration::from_secs(30), run: character_tables },
    Criterion { id: 2, title: "dual Frobenius identity m ≤ 6", limit: Duration::from_secs(120), run: dual_frobenius },
    Criterion { id: 3, title: "A/B/C/D actions vs row enumeration", limit: Duration::from_secs(180), run: abcd },
    Criterion { id: 4, title: "RTT relation and commuting transfer matrices", limit: Duration::from_secs(120), run: rtt },
    Criterion { id: 5, title: "half-vertex operators and projection", limit: Duration::from_secs(120), run: fock },
    Criterion { id: 6, title: "Bethe ansatz numerics n ≤ 6", limit: Duration::from_secs(60), run: bethe },
    Criterion { id: 7, title: "Gromov–Witten rim hooks vs BVI", limit: Duration::from_secs(180), run: gw },
    Criterion { id: 8, title: "cylindric characters three ways", limit: Duration::from_secs(600), run: three_way },
    Criterion { id: 9, title: "restriction rule with GW invariants", limit: Duration::from_secs(600), run: theorem_main },
    Criterion { id: 10, title: "characters to cylindric Schur functions", limit: Duration::from_secs(300), run: char_to_schur },
];

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match &outcome {
            Ok(report) if !report.passed() => {
                let first = report.failures().next().expect("a failing check");
                (false, format!("{}: {}", first.name, first.detail))
            }
            Ok(report) if elapsed > c.limit => (false, format!("{} checks, over the {:?} limit", report.checks.len(), c.limit)),
            Ok(report) => (true, format!("{} checks", report.checks.len())),
            Err(e) => (false, format!("error: {e}")),
        };
        println!("criterion {:>2} {} [{}] {:.2}s / {}s: {}", c.id, if ok { "PASS" } else { "FAIL" }, c.title, elapsed.as_secs_f64(), c.limit.as_secs(), detail);
        if !ok {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
