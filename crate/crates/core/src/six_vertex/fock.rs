//! Half-vertex operators on a weight-truncated fermionic Fock space and the projection onto `V_k`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::SparseVec;
use crate::coeff::{QSeries, Ring, TPoly};
use crate::combinatorics::{enumerate_brh_additions, maya_from_partition, partition_from_maya, rim_hook_reduce, MayaString, Partition};
use crate::error::{Error, Result};

/// A finite combination of Maya diagrams of fixed charge, truncated at partition weight `cap`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FockVector {
    pub charge: i64,
    pub cap: usize,
    pub coeffs: BTreeMap<Partition, TPoly>,
}

impl FockVector {
    pub fn new(charge: i64, cap: usize) -> Self {
        FockVector { charge, cap, coeffs: BTreeMap::new() }
    }

    /// The basis vector `σ(λ, c)`.
    pub fn basis(lambda: &Partition, charge: i64, cap: usize) -> Self {
        let mut v = FockVector::new(charge, cap);
        v.add(lambda.clone(), &TPoly::one());
        v
    }

    pub fn add(&mut self, lambda: Partition, c: &TPoly) {
        if lambda.weight() > self.cap || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(lambda.clone()).or_default();
        *slot = slot.add(c);
        if slot.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> TPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add(l.clone(), c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// `A(x; t)` or its inverse `A⁻¹(x; t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AVariant {
    Normal,
    Inverse,
}

/// `A_r(t)` or `A⁻¹_r(t)` acting on `v` by adding broken rim hooks of length `r`.
///
/// Each hook carries `(t−1)(−1)^{r(h)−1} t^{c(h)−1}` in the normal case and
/// `(1−t)(−t)^{r(h)−1}` in the inverse case.
pub fn fermionic_a_coeff(r: usize, variant: AVariant, v: &FockVector) -> FockVector {
    let mut out = FockVector::new(v.charge, v.cap);
    for (mu, c) in &v.coeffs {
        if mu.weight() + r > v.cap {
            continue;
        }
        for (lambda, st) in enumerate_brh_additions(mu, r, None) {
            let mut w = c.clone();
            for &(rows, cols) in &st.components {
                let sign = if (rows - 1) % 2 == 0 { 1 } else { -1 };
                let hook = match variant {
                    AVariant::Normal => TPoly::t_minus_one().mul(&TPoly::monomial(sign, cols as i32 - 1)),
                    AVariant::Inverse => TPoly::t_minus_one().neg().mul(&TPoly::monomial(sign, rows as i32 - 1)),
                };
                w = w.mul(&hook);
            }
            out.add(lambda, &w);
        }
    }
    out
}

/// `(−t)^m` as a Laurent monomial.
fn minus_t_pow(m: i32) -> TPoly {
    TPoly::monomial(if m % 2 == 0 { 1 } else { -1 }, m)
}

/// `t ↦ t⁻¹`.
fn invert_t(p: &TPoly) -> TPoly {
    let mut out = TPoly::default();
    for (e, c) in p.terms() {
        out.add_term(-e, c);
    }
    out
}

/// `A_r` from its definition as `t^r Σ E_{i₁j₁} ⋯ E_{iₛjₛ}` with `E_{ij} = (1−t) ψ⁻ᵢ(t) ψ⁺ⱼ(t)`,
/// evaluating the deformed fermion fields directly on Maya strings.
///
/// The inverse uses `A⁻¹(x; t) = A(xt; t⁻¹)`.
pub fn fermionic_a_via_fields(r: usize, variant: AVariant, v: &FockVector) -> FockVector {
    let mut out = FockVector::new(v.charge, v.cap);
    for (mu, c) in &v.coeffs {
        let maya = maya_from_partition(mu, v.charge);
        let lo = maya.n_minus() - r as i64 - 1;
        let hi = maya.n_plus() + r as i64 + 1;
        let s = maya.window(lo, hi);
        let mut seqs = Vec::new();
        interleaved(0, s.len(), r, &mut Vec::new(), &mut seqs);
        for seq in seqs {
            let mut st = s.clone();
            let mut w = TPoly::monomial(1, r as i32);
            let mut alive = true;
            for &(i, j) in seq.iter().rev() {
                if st[j] {
                    alive = false;
                    break;
                }
                w = w.mul(&minus_t_pow(st[j + 1..].iter().filter(|&&b| b).count() as i32));
                st[j] = true;
                if !st[i] {
                    alive = false;
                    break;
                }
                w = w.mul(&minus_t_pow(-(st[i + 1..].iter().filter(|&&b| b).count() as i32)));
                st[i] = false;
                w = w.mul(&TPoly::one().sub(&TPoly::t()));
            }
            if !alive {
                continue;
            }
            let ones = (0..st.len()).filter(|&p| st[p]).map(|p| p as i64 + lo);
            let (lambda, _) = partition_from_maya(&MayaString::new(lo - 1, ones).expect("window above floor")).expect("fields preserve well-formed strings");
            let w = match variant {
                AVariant::Normal => w,
                AVariant::Inverse => invert_t(&w).mul(&TPoly::monomial(1, r as i32)),
            };
            out.add(lambda, &w.mul(c));
        }
    }
    out
}

fn interleaved(from: usize, len: usize, rem: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
    if rem == 0 {
        out.push(cur.clone());
        return;
    }
    for i in from..len {
        for j in i + 1..len.min(i + rem + 1) {
            cur.push((i, j));
            interleaved(j + 1, len, rem - (j - i), cur, out);
            cur.pop();
        }
    }
}

/// Element of `V_k` with `q`-series coefficients.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StateVector {
    pub k: usize,
    pub n: usize,
    pub coeffs: SparseVec<QSeries>,
}

/// The rim hook projection `σ(λ, k) ↦ q^d (−1)^{(k−1)d} sgn(w_λ) v_core`.
pub fn fermionic_projection(v: &FockVector, k: usize, n: usize) -> Result<StateVector> {
    if v.charge != k as i64 {
        return Err(Error::OutOfRange(format!("projection onto V_{k} needs charge {k}, got {}", v.charge)));
    }
    let mut coeffs: SparseVec<QSeries> = BTreeMap::new();
    for (lambda, c) in &v.coeffs {
        let Some(red) = rim_hook_reduce(lambda, k, n) else { continue };
        let term = QSeries::from_tpoly(c.scale(red.sign), red.degree, usize::MAX);
        let slot = coeffs.entry(red.core).or_insert_with(QSeries::zero);
        *slot = slot.add(&term);
    }
    coeffs.retain(|_, x| !x.is_zero());
    Ok(StateVector { k, n, coeffs })
}
