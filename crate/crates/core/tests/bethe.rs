use std::f64::consts::PI;

use cylhecke::bethe::*;
use cylhecke::coeff::schur_numeric;
use cylhecke::combinatorics::{partitions_in_box, partitions_of};
use cylhecke::cylindric::cyl_char_mn;
use cylhecke::hecke::hecke_character;
use cylhecke::qcoh::gw_invariant;
use cylhecke::{part, Partition, TPoly};
use num_complex::Complex64 as C;

fn close(a: C, b: C, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

#[test]
fn roots_for_two_sites() {
    let empty = bethe_roots(&Partition::empty(), 1, 2, 1.0).unwrap();
    assert!(close(empty.roots[0], C::new(1.0, 0.0), 1e-12));
    let one = bethe_roots(&part(&[1]), 1, 2, 1.0).unwrap();
    assert!(close(one.roots[0], C::new(-1.0, 0.0), 1e-12));
    assert!(bethe_roots(&part(&[2]), 1, 2, 1.0).is_err());
    assert!(bethe_roots(&part(&[1]), 1, 2, 0.0).is_err());
}

#[test]
fn roots_solve_the_bethe_equations() {
    for n in 1..=6 {
        for k in 0..=n {
            for q in [1.0, 2.5] {
                for lambda in partitions_in_box(k, n) {
                    let roots = bethe_roots(&lambda, k, n, q).unwrap();
                    assert!(roots.bae_residual() < 1e-10, "{lambda} k = {k}, n = {n}");
                    if k >= 2 {
                        assert!(roots.min_separation() > 1e-3);
                    }
                    let modulus = q.powf(1.0 / n as f64);
                    assert!(roots.roots.iter().all(|z| (z.norm() - modulus).abs() < 1e-12));
                }
            }
        }
    }
}

#[test]
fn eigenvalue_is_one_at_zero_spectral_parameter() {
    let roots = bethe_roots(&part(&[2, 1]), 2, 5, 1.5).unwrap();
    let v = eigenvalue(&roots, C::new(-1.0, 0.0), C::new(2.0, 0.0), C::new(0.0, 0.0));
    assert!(close(v, C::new(1.0, 0.0), 1e-14));
}

#[test]
fn bethe_vectors_are_eigenvectors() {
    let (k, n, q) = (2, 4, 1.7);
    let (a, b, x) = (C::new(-1.0, 0.0), C::new(2.0, 0.0), C::new(0.3, 0.1));
    let tau = tau_numeric(k, n, a, b, x, C::new(q, 0.0));
    let basis = partitions_in_box(k, n);
    for label in &basis {
        let roots = bethe_roots(label, k, n, q).unwrap();
        let inv = roots.inverse();
        let v = basis.iter().map(|mu| (mu.clone(), schur_numeric(mu, &inv).unwrap())).collect();
        let lam = eigenvalue(&roots, a, b, x);
        let tv = tau.apply(&v);
        for mu in &basis {
            let lhs = tv.get(mu).copied().unwrap_or_default();
            assert!(close(lhs, lam * v[mu], 1e-10), "{label}: component {mu}");
        }
    }
}

#[test]
fn h_series_matches_the_generating_product() {
    let y = [C::new(0.4, 0.2), C::new(-0.3, 0.5), C::new(0.1, -0.7)];
    let (a, b) = (C::new(1.5, 0.0), C::new(-0.5, 0.0));
    let h = h_series(&y, a, b, 40);
    assert_eq!(h[0], C::new(1.0, 0.0));
    let x = C::from_polar(0.2, 0.7);
    let series: C = h.iter().enumerate().map(|(r, c)| c * x.powi(r as i32)).sum();
    let product: C = y.iter().map(|&yi| (1.0 + a * x * yi) / (1.0 - b * x * yi)).product();
    assert!(close(series, product, 1e-12));
}

#[test]
fn weights_sum_to_one() {
    for (k, n) in [(1, 3), (2, 4), (2, 5), (3, 6)] {
        let total = bvi_sum(&Partition::empty(), &Partition::empty(), &Partition::empty(), k, n, 1.0).unwrap();
        assert!(close(total, C::new(1.0, 0.0), 1e-10), "k = {k}, n = {n}");
    }
}

#[test]
fn numeric_batteries_pass() {
    for (k, n) in [(1, 3), (2, 4), (2, 5), (3, 6)] {
        assert!(completeness_check(k, n, 2.0, 1e-8).unwrap().passed());
        assert!(idempotent_check(k, n, 1.0, 1e-8).unwrap().passed());
        assert!(ideal_relations_check(k, n, -1.0, 2.0, 1.3, 1e-8).unwrap().passed());
        assert!(eigenvalue_polynomiality_check(k, n, -1.0, 2.0, 1.0, 1e-8).unwrap().passed());
        assert!(roots_check(k, n, 1.0, 1e-10).unwrap().passed());
        assert!(verify_eigen(k, n, -1.0, 2.0, 0.3, 1.0, 1e-8).unwrap().passed());
    }
}

#[test]
fn bvi_extracts_gr24_invariants() {
    let q = [1.0, 2.0, 3.0];
    let got = bvi_gw_numeric(&Partition::empty(), &part(&[2, 1]), &part(&[1]), 2, 4, &q, 1e-8).unwrap();
    assert_eq!(got, vec![(0, 0), (1, 1)]);
    let got = bvi_gw_numeric(&Partition::empty(), &part(&[2, 2]), &part(&[2, 2]), 2, 4, &q, 1e-8).unwrap();
    assert_eq!(got, vec![(0, 0), (1, 0), (2, 1)]);
    let got = bvi_gw_numeric(&part(&[2]), &part(&[2, 1]), &part(&[2, 1]), 2, 4, &q, 1e-8).unwrap();
    assert_eq!(got, vec![(0, 0), (1, 1)]);
    assert!(bvi_gw_numeric(&part(&[2]), &part(&[2, 1]), &part(&[2, 1]), 2, 4, &q[..1], 1e-8).is_err());
}

#[test]
fn bvi_agrees_with_rim_hooks_on_gr25() {
    let (k, n) = (2, 5);
    let basis = partitions_in_box(k, n);
    let q = [1.0, 2.0, 3.0];
    for lambda in &basis {
        for mu in &basis {
            for nu in &basis {
                for (d, v) in bvi_gw_numeric(lambda, mu, nu, k, n, &q, 1e-7).unwrap() {
                    assert_eq!(v, gw_invariant(lambda, d, mu, nu, k, n).unwrap(), "C^{{{lambda},{d}}}_{{{mu},{nu}}}");
                }
            }
        }
    }
}

#[test]
fn bethe_character_example() {
    let q = [1.0, 2.0, 3.0, 4.0];
    let v = bethe_cyl_char_numeric(&part(&[2, 1]), 1, &Partition::empty(), &[4, 3], 2, 4, &q, 1e-7).unwrap();
    assert_eq!(v, "-t^2-t".parse::<TPoly>().unwrap());
    assert_eq!(v, cyl_char_mn(&part(&[2, 1]), 1, &Partition::empty(), &[4, 3], 2, 4).unwrap());
}

#[test]
fn bethe_character_at_degree_zero_is_the_hecke_character() {
    let (k, n) = (2, 5);
    let q = [1.0, 2.0, 3.0];
    for lambda in partitions_in_box(k, n).into_iter().filter(|l| l.weight() >= 1 && l.weight() <= 5) {
        for alpha in partitions_of(lambda.weight()) {
            let v = bethe_cyl_char_numeric(&lambda, 0, &Partition::empty(), alpha.parts(), k, n, &q, 1e-7).unwrap();
            assert_eq!(v, hecke_character(&lambda, alpha.parts()).unwrap(), "χ^{lambda}({alpha})");
        }
    }
}

#[test]
fn root_phases_are_spaced_by_the_partition() {
    let roots = bethe_roots(&part(&[3, 1]), 2, 6, 1.0).unwrap();
    let phase = |z: C| (z.arg() / (2.0 * PI / 6.0)).rem_euclid(6.0);
    // (k+1)/2 + λⱼ − j = 3.5 and 0.5.
    assert!((phase(roots.roots[0]) - 3.5).abs() < 1e-12);
    assert!((phase(roots.roots[1]) - 0.5).abs() < 1e-12);
}
