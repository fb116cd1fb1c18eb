//! Exact checks of the free-fermion RTT relation and of commuting transfer matrices.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{brute_force_row_operator, row_matrix_graded, SparseMatrix, WeightSystem};
use crate::report::{Check, Report};

type Q = BigRational;

/// A specialization point `(a, b, a′, b′, x, y, q)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecPoint {
    pub a: i64,
    pub b: i64,
    pub a2: i64,
    pub b2: i64,
    pub x: i64,
    pub y: i64,
    pub q: i64,
}

/// Deterministic nonzero integer points in `[−9, 9]`.
pub fn spec_points(count: usize, seed: u64) -> Vec<SpecPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || loop {
        let v: i64 = rng.gen_range(-9..=9);
        if v != 0 {
            return v;
        }
    };
    (0..count).map(|_| SpecPoint { a: draw(), b: draw(), a2: draw(), b2: draw(), x: draw(), y: draw(), q: draw() }).collect()
}

fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// R-matrix weights intertwining `T(x; a, b)` and `T(y; a′, b′)`.
pub fn free_fermion_r_weights(p: &SpecPoint) -> [Q; 6] {
    let (a, b, a2, b2, x, y) = (q(p.a), q(p.b), q(p.a2), q(p.b2), q(p.x), q(p.y));
    [&b * &x + &a2 * &y, &a * &x + &b2 * &y, -(&a * &x) + &a2 * &y, &b * &x - &b2 * &y, (&a2 + &b2) * &y, (&a + &b) * &x]
}

type Dense = Vec<Vec<Q>>;

fn zeros(d: usize) -> Dense {
    vec![vec![Q::zero(); d]; d]
}

fn matmul(x: &Dense, y: &Dense) -> Dense {
    let d = x.len();
    let mut out = zeros(d);
    for i in 0..d {
        for (l, xil) in x[i].iter().enumerate() {
            if xil.is_zero() {
                continue;
            }
            for j in 0..d {
                if !y[l][j].is_zero() {
                    out[i][j] = &out[i][j] + xil * &y[l][j];
                }
            }
        }
    }
    out
}

/// Monodromy matrix acting on `aux ⊗ aux ⊗ (ℂ²)^{⊗n}`, in the first or second auxiliary slot.
fn monodromy(n: usize, ws: &WeightSystem<Q>, slot: usize) -> Dense {
    let dim_q = 1usize << n;
    let mut m = zeros(4 * dim_q);
    for left in [false, true] {
        for right in [false, true] {
            let op = brute_force_row_operator(n, ws, left, right).expect("n is small");
            for (&(out, inp), w) in &op.entries {
                for other in 0..2usize {
                    let (ai, ao) = (usize::from(left), usize::from(right));
                    let (src, dst) = if slot == 0 { (ai * 2 + other, ao * 2 + other) } else { (other * 2 + ai, other * 2 + ao) };
                    m[dst * dim_q + out as usize][src * dim_q + inp as usize] = w.clone();
                }
            }
        }
    }
    m
}

fn r_matrix(n: usize, w: &[Q; 6]) -> Dense {
    let dim_q = 1usize << n;
    // (output aux pair, input aux pair, weight index)
    let entries = [((0, 0), (0, 0), 0), ((0, 1), (0, 1), 2), ((0, 1), (1, 0), 4), ((1, 0), (0, 1), 5), ((1, 0), (1, 0), 3), ((1, 1), (1, 1), 1)];
    let mut m = zeros(4 * dim_q);
    for ((b1, b2), (a1, a2), wi) in entries {
        for s in 0..dim_q {
            m[(b1 * 2 + b2) * dim_q + s][(a1 * 2 + a2) * dim_q + s] = w[wi].clone();
        }
    }
    m
}

/// Verifies `R₁₂ T₁(x; a, b) T₂(y; a′, b′) = T₂ T₁ R₁₂` exactly at each point.
pub fn rtt_check(n: usize, points: &[SpecPoint]) -> Report {
    let mut report = Report::new("rtt");
    for (idx, p) in points.iter().enumerate() {
        let start = Instant::now();
        let t1 = monodromy(n, &WeightSystem::free_fermion(&q(p.a), &q(p.b), &q(p.x)), 0);
        let t2 = monodromy(n, &WeightSystem::free_fermion(&q(p.a2), &q(p.b2), &q(p.y)), 1);
        let r = r_matrix(n, &free_fermion_r_weights(p));
        let lhs = matmul(&matmul(&r, &t1), &t2);
        let rhs = matmul(&matmul(&t2, &t1), &r);
        let mismatch = (0..lhs.len()).flat_map(|i| (0..lhs.len()).map(move |j| (i, j))).find(|&(i, j)| lhs[i][j] != rhs[i][j]);
        let detail = match mismatch {
            None => format!("point {p:?}"),
            Some((i, j)) => format!("entry ({i},{j}) differs at {p:?}: {} vs {}", lhs[i][j], rhs[i][j]),
        };
        report.push(Check::new(format!("rtt n={n} point {idx}"), mismatch.is_none(), detail, start.elapsed()));
    }
    report
}

/// `τ(x; a, b) = A + qD` on `V_k` at a rational point.
pub fn tau_at(k: usize, n: usize, a: &Q, b: &Q, x: &Q, qv: &Q) -> SparseMatrix<Q> {
    let ws = WeightSystem::free_fermion(a, b, x);
    let mut tau = SparseMatrix::default();
    for (_, m) in row_matrix_graded(k, n, &ws, false, false) {
        tau = tau.add(&m);
    }
    for (_, m) in row_matrix_graded(k, n, &ws, true, true) {
        tau = tau.add(&m.scale(qv));
    }
    tau
}

/// Checks `[τ(x; a, b), τ(y; a′, b′)] = 0` on every `V_k`.
pub fn commutation_check(n: usize, points: &[SpecPoint]) -> Report {
    let mut report = Report::new("commutation");
    for k in 0..=n {
        let start = Instant::now();
        let mut failure = None;
        for p in points {
            let t1 = tau_at(k, n, &q(p.a), &q(p.b), &q(p.x), &q(p.q));
            let t2 = tau_at(k, n, &q(p.a2), &q(p.b2), &q(p.y), &q(p.q));
            if t1.compose(&t2) != t2.compose(&t1) {
                failure = Some(format!("τ matrices do not commute at {p:?}"));
                break;
            }
        }
        let ok = failure.is_none();
        let detail = failure.unwrap_or_else(|| format!("{} points", points.len()));
        report.push(Check::new(format!("commute n={n} k={k}"), ok, detail, start.elapsed()));
    }
    report
}
