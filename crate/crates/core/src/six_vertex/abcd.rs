//! Combinatorial action of the monodromy entries `A, B, C, D` through broken rim hooks.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{row_matrix_graded, SparseVec, WeightSystem};
use crate::coeff::{MPoly, Ring};
use crate::combinatorics::{enumerate_brh_additions, enumerate_brh_removals, partitions_in_box, BrokenRimHookStats, Partition};
use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RowOp {
    A,
    B,
    C,
    D,
}

impl RowOp {
    pub const ALL: [RowOp; 4] = [RowOp::A, RowOp::B, RowOp::C, RowOp::D];

    /// `(left, right)` boundary edges.
    pub fn boundary(self) -> (bool, bool) {
        match self {
            RowOp::A => (false, false),
            RowOp::B => (true, false),
            RowOp::C => (false, true),
            RowOp::D => (true, true),
        }
    }
}

/// Exponents of `Ω(b) = ω₁^{c̄} ω₃^{r̄} (ω₅ω₆)^{#b} ∏ ω₂^{r(h)−1} ω₄^{c(h)−1}`.
pub fn omega_exponents(st: &BrokenRimHookStats) -> [u32; 6] {
    let nb = st.num_components() as u32;
    let r1: u32 = st.components.iter().map(|&(r, _)| r as u32 - 1).sum();
    let c1: u32 = st.components.iter().map(|&(_, c)| c as u32 - 1).sum();
    [st.untouched_cols as u32, r1, st.untouched_rows as u32, c1, nb, nb]
}

/// Exponents of `Ω̄(b)`: `Ω(b)` under `(ω₁,…,ω₆) ↦ (ω₄,ω₃,ω₂,ω₁,ω₆,ω₅)`.
pub fn omega_bar_exponents(st: &BrokenRimHookStats) -> [u32; 6] {
    let e = omega_exponents(st);
    [e[3], e[2], e[1], e[0], e[5], e[4]]
}

/// `op_r v_μ` for `μ ∈ P⁺_{k,n}` from the broken rim hook description.
pub fn abcd_combinatorial<R: Ring>(op: RowOp, r: usize, mu: &Partition, k: usize, n: usize, ws: &WeightSystem<R>) -> SparseVec<R> {
    let mut out = SparseVec::new();
    let mut push = |lambda: Partition, exps: [u32; 6]| {
        let w = ws.eval_monomial(&exps);
        let slot = out.entry(lambda).or_insert_with(R::zero);
        *slot = slot.add(&w);
    };
    match op {
        RowOp::A => {
            for (lambda, st) in enumerate_brh_additions(mu, r, Some((k, n - k))) {
                push(lambda, omega_exponents(&st));
            }
        }
        RowOp::D => {
            if r <= n {
                for (lambda, st) in enumerate_brh_removals(mu, n - r, k, n - k) {
                    push(lambda, omega_bar_exponents(&st));
                }
            }
        }
        RowOp::B => {
            if k < n {
                for (plus, st) in enumerate_brh_additions(mu, r + 1, Some((k + 1, n - k))) {
                    if plus.len() != k + 1 {
                        continue;
                    }
                    let lambda = Partition::from_unsorted(plus.parts().iter().map(|p| p - 1).collect());
                    let mut e = omega_exponents(&st);
                    e[5] -= 1;
                    push(lambda, e);
                }
            }
        }
        RowOp::C => {
            if k >= 1 && r <= n + 1 {
                let plus = mu.add_column(k);
                for (lambda, st) in enumerate_brh_removals(&plus, n + 1 - r, k, n + 1 - k) {
                    if lambda.len() >= k {
                        continue;
                    }
                    let mut e = omega_bar_exponents(&st);
                    e[4] -= 1;
                    push(lambda, e);
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Compares the combinatorial actions with brute-force row enumeration in `ℤ[ω₁..ω₆]`.
///
/// With `sample = Some(m)` only `m` seeded random input states per `k` are checked.
pub fn verify_abcd_vs_bruteforce(n: usize, sample: Option<usize>) -> Report {
    let ws = WeightSystem::<MPoly>::symbolic();
    let mut report = Report::new("abcd");
    let mut rng = ChaCha8Rng::seed_from_u64(0x6c6c_7621 + n as u64);
    for k in 0..=n {
        let start = Instant::now();
        let mut inputs = partitions_in_box(k, n);
        if let Some(m) = sample {
            inputs.shuffle(&mut rng);
            inputs.truncate(m);
        }
        let mut failure: Option<String> = None;
        let mut compared = 0usize;
        'ops: for op in RowOp::ALL {
            let (left, right) = op.boundary();
            let k_out = (k + usize::from(left)).checked_sub(usize::from(right));
            if k_out.is_none_or(|ko| ko > n) {
                continue;
            }
            let brute = row_matrix_graded(k, n, &ws, left, right);
            for mu in &inputs {
                for r in 0..=n + 1 {
                    let expected = brute.get(&r).map(|m| m.column(mu)).unwrap_or_default();
                    let got = abcd_combinatorial(op, r, mu, k, n, &ws);
                    compared += 1;
                    if got != expected {
                        failure = Some(format!("{op:?}_{r} on {mu} (k={k}, n={n}): combinatorial {got:?} vs lattice {expected:?}"));
                        break 'ops;
                    }
                }
            }
        }
        let detail = failure.clone().unwrap_or_else(|| format!("{compared} operator columns agree"));
        report.push(Check::new(format!("abcd n={n} k={k}"), failure.is_none(), detail, start.elapsed()));
    }
    report
}
