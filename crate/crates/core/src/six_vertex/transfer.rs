//! Quasi-periodic transfer matrices `τ = A + qD` and their normalized form `H`.

use super::{row_matrix_graded, SparseMatrix, WeightSystem};
use crate::coeff::{QSeries, Ring, TPoly};
use crate::combinatorics::{partitions_in_box, Partition};

/// The coefficients `τ₀ … τₙ` of `τ(x)` on `V_k` at free-fermion weights `(a, b)`.
#[derive(Clone, Debug)]
pub struct TransferFamily {
    pub k: usize,
    pub n: usize,
    pub a: TPoly,
    pub b: TPoly,
    basis: Vec<Partition>,
    tau: Vec<SparseMatrix<QSeries>>,
}

impl TransferFamily {
    /// Assembles every `τ_r` by row enumeration with periodic boundary edges.
    pub fn new(k: usize, n: usize, a: &TPoly, b: &TPoly) -> Self {
        let ws = WeightSystem::free_fermion_graded(a, b);
        let lift = |m: &SparseMatrix<TPoly>, qdeg: usize| m.map(|p| QSeries::from_tpoly(p.clone(), qdeg, usize::MAX));
        let a_part = row_matrix_graded(k, n, &ws, false, false);
        let d_part = row_matrix_graded(k, n, &ws, true, true);
        let tau = (0..=n)
            .map(|r| {
                let mut m = SparseMatrix::default();
                if let Some(x) = a_part.get(&r) {
                    m = m.add(&lift(x, 0));
                }
                if let Some(x) = d_part.get(&r) {
                    m = m.add(&lift(x, 1));
                }
                m
            })
            .collect();
        TransferFamily { k, n, a: a.clone(), b: b.clone(), basis: partitions_in_box(k, n), tau }
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn tau(&self, r: usize) -> SparseMatrix<QSeries> {
        self.tau.get(r).cloned().unwrap_or_default()
    }

    /// `H_r` for `r = r′ + sn`: `(−1)^{(k−1)s} q^s b^{sn} τ_{r′}` when `0 < r′ < n` or `r = 0`,
    /// and the scalar `(−1)^{(k−1)s} q^s b^{sn−k} (b^k − (−a)^k)` when `r = sn`, `s ≥ 1`.
    pub fn h(&self, r: usize) -> SparseMatrix<QSeries> {
        let (k, n) = (self.k, self.n);
        let (s, rp) = (r / n, r % n);
        let sign = TPoly::constant(if (k + 1) * s % 2 == 0 { 1 } else { -1 });
        if r == 0 || rp != 0 {
            let c = sign.mul(&self.b.pow((s * n) as u32));
            return self.tau(rp).scale(&QSeries::from_tpoly(c, s, usize::MAX));
        }
        let minus_a = self.a.neg();
        let c = sign.mul(&self.b.pow((s * n - k) as u32)).mul(&self.b.pow(k as u32).sub(&minus_a.pow(k as u32)));
        SparseMatrix::scalar(&self.basis, QSeries::from_tpoly(c, s, usize::MAX))
    }
}

pub fn transfer_tau_coeff(r: usize, k: usize, n: usize, a: &TPoly, b: &TPoly) -> SparseMatrix<QSeries> {
    TransferFamily::new(k, n, a, b).tau(r)
}

pub fn normalized_h_coeff(r: usize, k: usize, n: usize, a: &TPoly, b: &TPoly) -> SparseMatrix<QSeries> {
    TransferFamily::new(k, n, a, b).h(r)
}
