use std::collections::{BTreeMap, BTreeSet};

use cylhecke::combinatorics::*;
use cylhecke::part;
use proptest::prelude::*;

/// Cells of `λ/μ`.
fn skew_cells(lambda: &Partition, mu: &Partition) -> BTreeSet<(usize, usize)> {
    lambda.cells().filter(|&(i, j)| j > mu.get(i - 1)).collect()
}

/// Edge-connected components of a cell set, each as `(rows, cols)` counts, or `None` when a
/// 2×2 block appears.
fn ribbon_components(cells: &BTreeSet<(usize, usize)>) -> Option<Vec<(usize, usize)>> {
    for &(i, j) in cells {
        if cells.contains(&(i + 1, j)) && cells.contains(&(i, j + 1)) && cells.contains(&(i + 1, j + 1)) {
            return None;
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in cells {
        if !seen.insert(start) {
            continue;
        }
        let mut stack = vec![start];
        let (mut rows, mut cols) = (BTreeSet::new(), BTreeSet::new());
        while let Some((i, j)) = stack.pop() {
            rows.insert(i);
            cols.insert(j);
            let nbrs = [(i + 1, j), (i, j + 1), (i.wrapping_sub(1), j), (i, j.wrapping_sub(1))];
            for nb in nbrs {
                if cells.contains(&nb) && seen.insert(nb) {
                    stack.push(nb);
                }
            }
        }
        out.push((rows.len(), cols.len()));
    }
    out.sort();
    Some(out)
}

/// Every `λ ⊇ μ` of weight `|μ| + r` whose skew shape has no 2×2 block.
fn brh_oracle(mu: &Partition, r: usize) -> BTreeMap<Partition, Vec<(usize, usize)>> {
    partitions_of(mu.weight() + r)
        .into_iter()
        .filter(|l| l.contains(mu))
        .filter_map(|l| {
            let comps = ribbon_components(&skew_cells(&l, mu))?;
            Some((l, comps))
        })
        .collect()
}

/// A BRH result keyed by shape, sorted component stats, untouched rows and columns.
type BrhKey = (Partition, Vec<(usize, usize)>, usize, usize);

fn sorted(mut v: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    v.sort();
    v
}

/// Strips `n`-rim hooks one at a time by brute force, returning the core and `Σ (r(h) − 1)`.
fn core_oracle(lambda: &Partition, n: usize) -> (Partition, usize) {
    let mut cur = lambda.clone();
    let mut height = 0;
    'strip: loop {
        if cur.weight() < n {
            return (cur, height);
        }
        for nu in partitions_of(cur.weight() - n) {
            if !cur.contains(&nu) {
                continue;
            }
            if let Some(c) = ribbon_components(&skew_cells(&cur, &nu)) {
                if c.len() == 1 {
                    height += c[0].0 - 1;
                    cur = nu;
                    continue 'strip;
                }
            }
        }
        return (cur, height);
    }
}

#[test]
fn maya_of_empty_partition_is_filled_up_to_charge() {
    for c in -3..=3 {
        let m = maya_from_partition(&Partition::empty(), c);
        for i in c - 5..=c + 5 {
            assert_eq!(m.is_one(i), i <= c, "charge {c}, position {i}");
        }
    }
}

#[test]
fn maya_of_21_at_charge_zero() {
    let m = maya_from_partition(&part(&[2, 1]), 0);
    let ones: Vec<i64> = (-6..=4).filter(|&i| m.is_one(i)).collect();
    assert_eq!(ones, vec![-6, -5, -4, -3, -2, 0, 2]);
    let decoded = partition_from_maya(&MayaString::new(-3, [2, 0, -2]).unwrap()).unwrap();
    assert_eq!(decoded, (part(&[2, 1]), 0));
}

#[test]
fn maya_filled_string_decodes_to_empty() {
    for c in -2..=2 {
        assert_eq!(partition_from_maya(&MayaString::new(c, []).unwrap()).unwrap(), (Partition::empty(), c));
    }
}

#[test]
fn maya_decodes_large_diagram() {
    // λⱼ − j + 1 for λ = (6,6,5,3,2,2,2,2,1), then every position ≤ −9.
    let s = MayaString::new(-9, [6, 5, 3, 0, -2, -3, -4, -5, -7]).unwrap();
    assert_eq!(partition_from_maya(&s).unwrap(), (part(&[6, 6, 5, 3, 2, 2, 2, 2, 1]), 0));
}

#[test]
fn maya_string_rejects_letters_below_floor() {
    assert!(MayaString::new(0, [-1]).is_err());
}

#[test]
fn maya_window_bounds() {
    let m = maya_from_partition(&part(&[3, 1]), 2);
    assert_eq!(m.n_minus(), 0);
    assert_eq!(m.n_plus(), 6);
    assert_eq!(m.charge_from_left(), 2);
    assert_eq!(m.charge_from_right(), 2);
}

#[test]
fn partitions_are_parsed_and_displayed_canonically() {
    assert_eq!("[3,2,1]".parse::<Partition>().unwrap(), part(&[3, 2, 1]));
    assert_eq!("(2,2)".parse::<Partition>().unwrap().to_string(), "[2,2]");
    assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    assert!("1,2".parse::<Partition>().is_err());
    assert!("a".parse::<Partition>().is_err());
    assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|m| partitions_of(m).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    assert_eq!(partitions_in_box(2, 4).len(), 6);
    assert_eq!(partitions_in_box(3, 7).len(), 35);
}

#[test]
fn box_strings_roundtrip() {
    for (k, n) in [(1, 3), (2, 4), (3, 6)] {
        for l in partitions_in_box(k, n) {
            let s = box_string(&l, k, n);
            assert_eq!(s.iter().filter(|&&b| b).count(), k);
            assert_eq!(partition_from_box_string(&s), l);
        }
    }
}

#[test]
fn core_of_a_core_is_itself() {
    let cd = core_decompose(&part(&[2, 1]), 4);
    assert_eq!((cd.core, cd.n_weight, cd.removal_row_counts, cd.perm_sign), (part(&[2, 1]), 0, vec![], 1));
}

#[test]
fn core_of_32_mod_4() {
    let cd = core_decompose(&part(&[3, 2]), 4);
    assert_eq!(cd.core, part(&[1]));
    assert_eq!(cd.n_weight, 1);
    assert_eq!(cd.removal_row_counts, vec![2]);
    assert_eq!(cd.perm_sign, -1);
}

#[test]
fn core_of_44_mod_4() {
    let cd = core_decompose(&part(&[4, 4]), 4);
    assert_eq!(cd.core, Partition::empty());
    assert_eq!(cd.n_weight, 2);
    assert_eq!(cd.removal_row_counts, vec![1, 1]);
    assert_eq!(cd.perm_sign, 1);
}

#[test]
fn core_decomposition_matches_brute_force_stripping() {
    for m in 0..=9 {
        for l in partitions_of(m) {
            for n in 2..=5 {
                let cd = core_decompose(&l, n);
                let (core, height) = core_oracle(&l, n);
                assert_eq!(cd.core, core, "{l} mod {n}");
                assert_eq!(cd.n_weight * n + core.weight(), m);
                assert_eq!(i64::from(cd.hook_sign()), if height % 2 == 0 { 1 } else { -1 }, "{l} mod {n}");
            }
        }
    }
}

#[test]
fn rim_hook_reduction_examples() {
    let r = rim_hook_reduce(&part(&[3, 2]), 2, 4).unwrap();
    assert_eq!((r.core, r.degree, r.sign), (part(&[1]), 1, 1));
    assert!(rim_hook_reduce(&part(&[2, 2, 1]), 2, 4).is_none());
    let r = rim_hook_reduce(&part(&[4, 4]), 2, 4).unwrap();
    assert_eq!((r.core, r.degree, r.sign), (Partition::empty(), 2, 1));
    for l in partitions_in_box(2, 5) {
        let r = rim_hook_reduce(&l, 2, 5).unwrap();
        assert_eq!((r.core, r.degree, r.sign), (l, 0, 1));
    }
}

#[test]
fn brh_additions_of_two_boxes() {
    let got: BTreeMap<Partition, Vec<(usize, usize)>> =
        enumerate_brh_additions(&Partition::empty(), 2, None).into_iter().map(|(l, st)| (l, st.components)).collect();
    let expected = BTreeMap::from([(part(&[2]), vec![(1, 2)]), (part(&[1, 1]), vec![(2, 1)])]);
    assert_eq!(got, expected);
}

#[test]
fn brh_addition_of_length_zero_is_identity() {
    let got = enumerate_brh_additions(&part(&[3, 1]), 0, None);
    assert_eq!(got.len(), 1);
    assert_eq!(got[0].0, part(&[3, 1]));
    assert!(got[0].1.components.is_empty());
}

#[test]
fn brh_two_component_example() {
    let mu = part(&[6, 4, 3, 3, 2, 1, 1]);
    let lambda = part(&[6, 6, 5, 3, 2, 2, 2, 2, 1]);
    let hits: Vec<_> = enumerate_brh_additions(&mu, 9, None).into_iter().filter(|(l, _)| *l == lambda).collect();
    assert_eq!(hits.len(), 1);
    let st = &hits[0].1;
    assert_eq!(st.num_components(), 2);
    // A 4-cell hook over rows 2–3 and a 5-cell hook over rows 6–9.
    assert_eq!(sorted(st.components.clone()), vec![(2, 3), (4, 2)]);
}

#[test]
fn brh_additions_match_geometric_oracle() {
    for m in 0..=6 {
        for mu in partitions_of(m) {
            for r in 1..=5 {
                let got: BTreeMap<Partition, Vec<(usize, usize)>> =
                    enumerate_brh_additions(&mu, r, None).into_iter().map(|(l, st)| (l, sorted(st.components))).collect();
                assert_eq!(got, brh_oracle(&mu, r), "μ = {mu}, r = {r}");
            }
        }
    }
}

#[test]
fn brh_removals_invert_additions_in_a_box() {
    let (rows, cols) = (3, 3);
    for mu in partitions_of_in_box(4, rows, cols) {
        for r in 1..=4 {
            for (lambda, st) in enumerate_brh_removals(&mu, r, rows, cols) {
                let back = enumerate_brh_additions(&lambda, r, Some((rows, cols)));
                let found = back.iter().find(|(l, _)| *l == mu).expect("removal reverses an addition");
                assert_eq!(sorted(found.1.components.clone()), sorted(st.components.clone()).into_iter().collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn cylindric_brh_example() {
    let got = enumerate_cylindric_brh(&part(&[5, 5, 2, 2]), 5, 1, 4, 9).unwrap();
    let hit = got.iter().find(|(l, _)| *l == part(&[4, 3, 2, 1])).expect("listed");
    assert_eq!(sorted(hit.1.components.clone()), vec![(1, 2), (2, 2)]);
    assert_eq!((hit.1.untouched_rows, hit.1.untouched_cols), (1, 1));
}

#[test]
fn cylindric_brh_impossible_weight_is_empty() {
    assert!(enumerate_cylindric_brh(&Partition::empty(), 1, 1, 1, 2).unwrap().is_empty());
}

#[test]
fn cylindric_brh_rejects_bad_arguments() {
    assert!(enumerate_cylindric_brh(&Partition::empty(), 4, 0, 2, 4).is_err());
    assert!(enumerate_cylindric_brh(&Partition::empty(), 1, 2, 2, 4).is_err());
    assert!(enumerate_cylindric_brh(&part(&[3]), 1, 0, 2, 4).is_err());
}

#[test]
fn cylindric_brh_without_wrap_is_boxed_enumeration() {
    for (k, n) in [(1, 3), (2, 4), (2, 5), (3, 6)] {
        for mu in partitions_in_box(k, n) {
            for r in 0..n {
                let cyl: BTreeSet<BrhKey> = enumerate_cylindric_brh(&mu, r, 0, k, n)
                    .unwrap()
                    .into_iter()
                    .map(|(l, st)| (l, sorted(st.components), st.untouched_rows, st.untouched_cols))
                    .collect();
                let flat: BTreeSet<_> = enumerate_brh_additions(&mu, r, Some((k, n - k)))
                    .into_iter()
                    .map(|(l, st)| (l, sorted(st.components), st.untouched_rows, st.untouched_cols))
                    .collect();
                assert_eq!(cyl, flat, "μ = {mu}, r = {r}, k = {k}, n = {n}");
            }
        }
    }
}

#[test]
fn cylindric_brh_weight_bookkeeping() {
    for (k, n) in [(1, 3), (2, 4), (2, 5)] {
        for mu in partitions_in_box(k, n) {
            for r in 1..n {
                for (l, st) in enumerate_cylindric_brh(&mu, r, 1, k, n).unwrap() {
                    assert_eq!(mu.weight() + r, l.weight() + n, "μ = {mu}, λ = {l}");
                    assert_eq!(st.total_length(), r);
                }
            }
        }
    }
}

#[test]
fn cylindric_loop_examples() {
    let lp = CylindricLoop::new(part(&[2, 1]), 0, 2, 4).unwrap();
    let got: Vec<i64> = (1..=6).map(|i| lp.at(i)).collect();
    assert_eq!(got, vec![2, 1, 0, -1, -2, -3]);
    let shifted = CylindricLoop::new(part(&[2, 1]), 1, 2, 4).unwrap();
    let got: Vec<i64> = (1..=3).map(|i| shifted.at(i)).collect();
    assert_eq!(got, vec![4, 3, 2]);
    assert!(CylindricLoop::new(part(&[3]), 0, 2, 4).is_err());
}

fn partition_strategy(max_weight: usize) -> impl Strategy<Value = Partition> {
    (0..=max_weight).prop_flat_map(|m| {
        let all = partitions_of(m);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn boxed(k: usize, n: usize) -> impl Strategy<Value = Partition> {
    let all = partitions_in_box(k, n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #[test]
    fn maya_roundtrip(l in partition_strategy(12), c in -3i64..=3) {
        let m = maya_from_partition(&l, c);
        prop_assert_eq!(partition_from_maya(&m.to_string_form()).unwrap(), (l, c));
        prop_assert_eq!(m.charge_from_left(), c);
        prop_assert_eq!(m.charge_from_right(), c);
    }

    #[test]
    fn core_is_independent_of_runner_order(l in partition_strategy(12), n in 2usize..=5, seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = core_decompose(&l, n);
        let b = core_decompose_runner_order(&l, n, &order);
        prop_assert_eq!(&a.core, &b.core);
        prop_assert_eq!(a.n_weight, b.n_weight);
        prop_assert_eq!(a.perm_sign, b.perm_sign);
        prop_assert_eq!(b.hook_sign(), b.perm_sign);
    }

    #[test]
    fn perm_sign_equals_hook_sign(l in partition_strategy(14), n in 2usize..=6) {
        let cd = core_decompose(&l, n);
        prop_assert_eq!(cd.perm_sign, cd.hook_sign());
        prop_assert_eq!(cd.removal_row_counts.len(), cd.n_weight);
    }

    #[test]
    fn brh_conjugation(mu in partition_strategy(7), r in 1usize..=5) {
        let direct: BTreeSet<(Partition, Vec<(usize, usize)>)> = enumerate_brh_additions(&mu.conjugate(), r, None)
            .into_iter()
            .map(|(l, st)| (l, sorted(st.components)))
            .collect();
        let via: BTreeSet<(Partition, Vec<(usize, usize)>)> = enumerate_brh_additions(&mu, r, None)
            .into_iter()
            .map(|(l, st)| (l.conjugate(), sorted(st.transposed().components)))
            .collect();
        prop_assert_eq!(direct, via);
    }

    #[test]
    fn brh_stats_pass_geometric_validation(mu in partition_strategy(8), r in 1usize..=6) {
        for (l, st) in enumerate_brh_additions(&mu, r, None) {
            let comps = ribbon_components(&skew_cells(&l, &mu));
            prop_assert_eq!(comps, Some(sorted(st.components.clone())));
            prop_assert_eq!(st.total_length(), r);
        }
    }

    #[test]
    fn cylindric_loop_is_periodic((k, n) in (1usize..=4).prop_flat_map(|k| (Just(k), k..=k + 4)), shift in -3i64..=3, i in -10i64..=10, seed in any::<usize>()) {
        let all = partitions_in_box(k, n);
        let base = all[seed % all.len()].clone();
        let lp = CylindricLoop::new(base, shift, k, n).unwrap();
        prop_assert_eq!(lp.at(i + k as i64), lp.at(i) - (n - k) as i64);
        prop_assert!(lp.at(i) >= lp.at(i + 1));
    }

    #[test]
    fn rim_hook_reduction_is_weight_preserving(l in partition_strategy(12), (k, n) in (1usize..=4).prop_flat_map(|k| (Just(k), k + 1..=k + 4))) {
        if let Some(r) = rim_hook_reduce(&l, k, n) {
            prop_assert!(r.core.fits_box(k, n - k));
            prop_assert_eq!(r.core.weight() + r.degree * n, l.weight());
            prop_assert!(r.sign == 1 || r.sign == -1);
        } else {
            prop_assert!(l.len() > k || core_decompose(&l, n).core.first() > n - k);
        }
    }

    #[test]
    fn box_partitions_stay_in_box(l in boxed(3, 7)) {
        prop_assert!(l.fits_box(3, 4));
        prop_assert_eq!(partition_from_box_string(&box_string(&l, 3, 7)), l);
    }
}
