use std::collections::BTreeMap;

use cylhecke::coeff::MPoly;
use cylhecke::combinatorics::{maya_from_partition, partition_from_maya, partitions_in_box, partitions_of, BrokenRimHookStats, MayaString};
use cylhecke::six_vertex::abcd::{omega_bar_exponents, omega_exponents};
use cylhecke::six_vertex::*;
use cylhecke::{part, Partition, QSeries, Ring, TPoly};
use proptest::prelude::*;

fn w(exps: [u8; 6]) -> MPoly {
    MPoly::monomial(1, exps)
}

fn hecke_pair() -> (TPoly, TPoly) {
    (TPoly::constant(-1), TPoly::t())
}

fn q_scalar(p: TPoly, qdeg: usize) -> QSeries {
    QSeries::from_tpoly(p, qdeg, usize::MAX)
}

#[test]
fn vertex_types_cover_the_conserving_assignments() {
    let mut seen = 0;
    for bits in 0..16u8 {
        let [wst, nth, est, sth] = [bits >> 3 & 1, bits >> 2 & 1, bits >> 1 & 1, bits & 1];
        let allowed = vertex_type(wst, nth, est, sth);
        assert_eq!(allowed.is_some(), wst + nth == est + sth, "{wst}{nth}{est}{sth}");
        seen += usize::from(allowed.is_some());
    }
    assert_eq!(seen, 6);
    assert_eq!(vertex_type(0, 1, 1, 0), Some(6));
}

#[test]
fn single_column_row_operators() {
    let ws = WeightSystem::<MPoly>::symbolic();
    let a = brute_force_row_operator(1, &ws, false, false).unwrap();
    assert_eq!(a.get(0, 0), w([1, 0, 0, 0, 0, 0]));
    assert_eq!(a.get(1, 1), w([0, 0, 1, 0, 0, 0]));
    assert!(a.get(1, 0).is_zero() && a.get(0, 1).is_zero());
    let d = brute_force_row_operator(1, &ws, true, true).unwrap();
    assert_eq!(d.get(0, 0), w([0, 0, 0, 1, 0, 0]));
    assert_eq!(d.get(1, 1), w([0, 1, 0, 0, 0, 0]));
    let b = brute_force_row_operator(1, &ws, true, false).unwrap();
    assert_eq!(b.get(1, 0), w([0, 0, 0, 0, 1, 0]));
    let c = brute_force_row_operator(1, &ws, false, true).unwrap();
    assert_eq!(c.get(0, 1), w([0, 0, 0, 0, 0, 1]));
    assert_eq!(c.entries.len(), 1);
    assert!(brute_force_row_operator(13, &ws, false, false).is_err());
}

#[test]
fn row_configuration_renders_as_ascii() {
    let cfgs = row_configurations(&[true, false], false);
    let cfg = cfgs.iter().find(|c| c.bottom == vec![false, true]).unwrap();
    assert_eq!(cfg.vertices, vec![6, 5]);
    assert_eq!(cfg.degree(), 1);
    assert_eq!(cfg.to_string(), "  10\n0 65 0\n  01");
}

#[test]
fn omega_monomials_of_a_two_component_hook() {
    let st = BrokenRimHookStats { components: vec![(1, 1), (2, 2)], untouched_rows: 2, untouched_cols: 1 };
    assert_eq!(omega_exponents(&st), [1, 1, 2, 1, 2, 2]);
    let st = BrokenRimHookStats { components: vec![(1, 1), (2, 2)], untouched_rows: 1, untouched_cols: 2 };
    assert_eq!(omega_bar_exponents(&st), [1, 1, 1, 2, 2, 2]);
}

#[test]
fn abcd_actions_match_row_enumeration_for_small_rows() {
    for n in 1..=4 {
        let report = verify_abcd_vs_bruteforce(n, None);
        assert!(report.passed(), "n = {n}: {:?}", report.failures().next().map(|c| &c.detail));
    }
}

#[test]
fn abcd_a0_is_identity() {
    let ws = WeightSystem::<MPoly>::symbolic();
    for mu in partitions_in_box(2, 5) {
        let out = abcd_combinatorial(RowOp::A, 0, &mu, 2, 5, &ws);
        let expected = w([3, 0, 2, 0, 0, 0]);
        assert_eq!(out, BTreeMap::from([(mu.clone(), expected)]), "{mu}");
    }
}

#[test]
fn transfer_extremes() {
    let (a, b) = hecke_pair();
    for (k, n) in [(0, 3), (1, 3), (2, 4), (3, 5)] {
        let fam = TransferFamily::new(k, n, &a, &b);
        let id = SparseMatrix::identity(fam.basis());
        assert_eq!(fam.tau(0), id.map(|x: &QSeries| x.clone()), "τ₀ on V_{k}, n = {n}");
        let top = a.pow(k as u32).mul(&b.pow((n - k) as u32));
        assert_eq!(fam.tau(n), SparseMatrix::scalar(fam.basis(), q_scalar(top, 1)));
        assert_eq!(fam.tau(n + 1), SparseMatrix::default());
    }
}

#[test]
fn normalized_h_matches_tau_below_n() {
    let (a, b) = hecke_pair();
    let fam = TransferFamily::new(2, 5, &a, &b);
    for r in 0..5 {
        assert_eq!(fam.h(r), fam.tau(r));
    }
}

#[test]
fn normalized_h_at_n_on_the_conjugate_side() {
    let (a, b) = (TPoly::t(), TPoly::constant(-1));
    for (k, n) in [(1, 3), (2, 4), (1, 4), (3, 5)] {
        let fam = TransferFamily::new(n - k, n, &a, &b);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let expected = TPoly::monomial(sign, (n - k) as i32).sub(&TPoly::constant(sign));
        assert_eq!(fam.h(n), SparseMatrix::scalar(fam.basis(), q_scalar(expected, 1)), "k = {k}, n = {n}");
    }
}

#[test]
fn normalized_h_is_inverted_by_swapping_weights() {
    // H(x; a, b) H(−x; b, a) = 1, degree by degree.
    let (a, b) = hecke_pair();
    for (k, n) in [(1, 2), (1, 3), (2, 4), (2, 5)] {
        let fwd = TransferFamily::new(k, n, &a, &b);
        let bwd = TransferFamily::new(k, n, &b, &a);
        let basis = fwd.basis().to_vec();
        for m in 1..=2 * n {
            let mut sum = SparseMatrix::<QSeries>::default();
            for s in 0..=m {
                let sign = QSeries::from_i64(if s % 2 == 0 { 1 } else { -1 });
                sum = sum.add(&fwd.h(m - s).compose(&bwd.h(s)).scale(&sign));
            }
            for row in &basis {
                for col in &basis {
                    assert!(sum.get(row, col).is_zero(), "k = {k}, n = {n}, degree {m}, entry ({row}, {col})");
                }
            }
        }
    }
}

#[test]
fn transfer_coefficients_commute() {
    let (a, b) = hecke_pair();
    for (k, n) in [(1, 3), (2, 4), (2, 5)] {
        let fam = TransferFamily::new(k, n, &a, &b);
        for r in 1..n {
            for s in r + 1..n {
                let lhs = fam.tau(r).compose(&fam.tau(s));
                let rhs = fam.tau(s).compose(&fam.tau(r));
                for row in fam.basis() {
                    for col in fam.basis() {
                        assert_eq!(lhs.get(row, col), rhs.get(row, col), "[τ{r}, τ{s}] k = {k}, n = {n}");
                    }
                }
            }
        }
    }
}

#[test]
fn rtt_and_commutation_at_seeded_points() {
    let points = rtt::spec_points(4, 7);
    for n in 1..=2 {
        assert!(rtt_check(n, &points).passed());
    }
    for n in 1..=4 {
        assert!(commutation_check(n, &points).passed());
    }
}

#[test]
fn projection_examples() {
    let v = FockVector::basis(&part(&[3, 2]), 2, 10);
    let p = fermionic_projection(&v, 2, 4).unwrap();
    assert_eq!(p.coeffs, BTreeMap::from([(part(&[1]), q_scalar(TPoly::one(), 1))]));
    let long = FockVector::basis(&part(&[1, 1, 1]), 2, 10);
    assert!(fermionic_projection(&long, 2, 4).unwrap().coeffs.is_empty());
    assert!(fermionic_projection(&v, 1, 4).is_err());
}

#[test]
fn projection_intertwines_half_vertex_operators() {
    for (k, n) in [(1, 3), (2, 3)] {
        assert!(cylhecke::verify::fock_projection_check(k, n, 6).unwrap().passed(), "k = {k}, n = {n}");
    }
}

#[test]
fn a0_is_identity_on_fock_space() {
    for l in partitions_of(4) {
        let v = FockVector::basis(&l, 1, 8);
        assert_eq!(fermionic_a_coeff(0, AVariant::Normal, &v), v);
        assert_eq!(fermionic_a_coeff(0, AVariant::Inverse, &v), v);
    }
}

/// `A_r σ(μ, 0)` from single lattice rows on a finite Maya window.
fn lattice_row_action(mu: &Partition, r: usize, ws: &WeightSystem<TPoly>) -> BTreeMap<Partition, TPoly> {
    let maya = maya_from_partition(mu, 0);
    let lo = maya.n_minus() - r as i64 - 1;
    let hi = maya.n_plus() + r as i64 + 1;
    let mut out: BTreeMap<Partition, TPoly> = BTreeMap::new();
    for cfg in row_configurations(&maya.window(lo, hi), false) {
        if cfg.right != 0 || cfg.degree() != r {
            continue;
        }
        let ones = (0..cfg.bottom.len()).filter(|&i| cfg.bottom[i]).map(|i| i as i64 + lo);
        let (lambda, charge) = partition_from_maya(&MayaString::new(lo - 1, ones).unwrap()).unwrap();
        assert_eq!(charge, 0);
        let slot = out.entry(lambda).or_default();
        *slot = slot.add(&cfg.weight(ws));
    }
    out.retain(|_, v| !v.is_zero());
    out
}

#[test]
fn lattice_rows_reproduce_half_vertex_operators() {
    let normal = WeightSystem::free_fermion_graded(&TPoly::constant(-1), &TPoly::t());
    let inverse = WeightSystem::free_fermion_graded(&TPoly::t().neg(), &TPoly::one());
    for m in 0..=4 {
        for mu in partitions_of(m) {
            for r in 0..=4 {
                let v = FockVector::basis(&mu, 0, m + r);
                for (variant, ws) in [(AVariant::Normal, &normal), (AVariant::Inverse, &inverse)] {
                    let lattice = lattice_row_action(&mu, r, ws);
                    assert_eq!(lattice, fermionic_a_coeff(r, variant, &v).coeffs, "{variant:?}_{r} on {mu}");
                }
            }
        }
    }
}

fn small_partition() -> impl Strategy<Value = Partition> {
    (0usize..=5).prop_flat_map(|m| {
        let all = partitions_of(m);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn fields_agree_with_broken_rim_hooks(mu in small_partition(), r in 0usize..=3, charge in -2i64..=2, inverse in any::<bool>()) {
        let variant = if inverse { AVariant::Inverse } else { AVariant::Normal };
        let v = FockVector::basis(&mu, charge, mu.weight() + r);
        prop_assert_eq!(fermionic_a_via_fields(r, variant, &v), fermionic_a_coeff(r, variant, &v));
    }

    #[test]
    fn a_and_its_inverse_cancel(mu in small_partition(), m in 1usize..=4) {
        let v = FockVector::basis(&mu, 0, mu.weight() + m);
        let mut sum = FockVector::new(0, v.cap);
        for s in 0..=m {
            let inner = fermionic_a_coeff(m - s, AVariant::Inverse, &v);
            sum = sum.plus(&fermionic_a_coeff(s, AVariant::Normal, &inner));
        }
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn half_vertex_operators_commute(mu in small_partition(), r in 1usize..=3, s in 1usize..=3) {
        let v = FockVector::basis(&mu, 0, mu.weight() + r + s);
        let rs = fermionic_a_coeff(r, AVariant::Normal, &fermionic_a_coeff(s, AVariant::Normal, &v));
        let sr = fermionic_a_coeff(s, AVariant::Normal, &fermionic_a_coeff(r, AVariant::Normal, &v));
        prop_assert_eq!(rs, sr);
    }

    #[test]
    fn string_bits_roundtrip(bits in 0u32..1024) {
        prop_assert_eq!(string_to_bits(&bits_to_string(bits, 10)), bits);
    }
}
