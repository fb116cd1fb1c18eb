//! The asymmetric six-vertex model on a single lattice row.
//!
//! Vertex `(W, N, E, S)` edge values: ω₁ = (0,0,0,0), ω₂ = (1,1,1,1),
//! ω₃ = (0,1,0,1), ω₄ = (1,0,1,0), ω₅ = (1,0,0,1), ω₆ = (0,1,1,0).
//! The horizontal line runs west to east, the vertical lines enter at the top
//! (input state) and leave at the bottom (output state). The monodromy matrix
//! is `e₀₀⊗A + e₀₁⊗B + e₁₀⊗C + e₁₁⊗D`, so the left boundary edge is the column
//! index and the right boundary edge the row index of the auxiliary block.

pub mod abcd;
pub mod fock;
pub mod rtt;
pub mod transfer;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::coeff::{MPoly, Ring};
use crate::combinatorics::{box_string, partition_from_box_string, Partition};
use crate::error::{Error, Result};

pub use abcd::{abcd_combinatorial, verify_abcd_vs_bruteforce, RowOp};
pub use fock::{fermionic_a_coeff, fermionic_a_via_fields, fermionic_projection, AVariant, FockVector};
pub use rtt::{commutation_check, rtt_check};
pub use transfer::{normalized_h_coeff, transfer_tau_coeff, TransferFamily};

/// Edge values `(W, N, E, S)` of the six vertex types.
pub const VERTEX_EDGES: [[u8; 4]; 6] = [[0, 0, 0, 0], [1, 1, 1, 1], [0, 1, 0, 1], [1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0]];

/// Vertex type `1..=6` of an edge assignment, if allowed.
pub fn vertex_type(w: u8, n: u8, e: u8, s: u8) -> Option<u8> {
    VERTEX_EDGES.iter().position(|v| *v == [w, n, e, s]).map(|i| i as u8 + 1)
}

/// Boltzmann weights `ω₁ … ω₆` in a coefficient ring.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSystem<R> {
    pub w: [R; 6],
}

impl<R: Ring> WeightSystem<R> {
    pub fn new(w: [R; 6]) -> Self {
        WeightSystem { w }
    }

    /// `∏ ωᵢ^{eᵢ}`.
    pub fn eval_monomial(&self, exps: &[u32; 6]) -> R {
        let mut acc = R::one();
        for (wi, &e) in self.w.iter().zip(exps) {
            acc = acc.mul(&wi.pow(e));
        }
        acc
    }

    /// Free-fermion weights `(1, a·x, 1, b·x, 1, (a+b)·x)`.
    pub fn free_fermion(a: &R, b: &R, x: &R) -> Self {
        let one = R::one();
        WeightSystem::new([one.clone(), a.mul(x), one.clone(), b.mul(x), one, a.add(b).mul(x)])
    }

    /// Free-fermion weights with the spectral parameter stripped, for degree-graded assembly.
    pub fn free_fermion_graded(a: &R, b: &R) -> Self {
        Self::free_fermion(a, b, &R::one())
    }
}

impl WeightSystem<MPoly> {
    /// Generic weights `ω₁, …, ω₆` as independent symbols.
    pub fn symbolic() -> Self {
        WeightSystem::new(std::array::from_fn(|i| MPoly::var(i + 1)))
    }
}

/// A legal edge assignment on one lattice row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowConfiguration {
    pub vertices: Vec<u8>,
    pub left: u8,
    pub right: u8,
    pub top: Vec<bool>,
    pub bottom: Vec<bool>,
}

impl RowConfiguration {
    /// Number of vertices of types 2, 4 and 6: the power of the spectral parameter.
    pub fn degree(&self) -> usize {
        self.vertices.iter().filter(|&&v| v == 2 || v == 4 || v == 6).count()
    }

    pub fn weight<R: Ring>(&self, ws: &WeightSystem<R>) -> R {
        let mut exps = [0u32; 6];
        for &v in &self.vertices {
            exps[v as usize - 1] += 1;
        }
        ws.eval_monomial(&exps)
    }
}

impl fmt::Display for RowConfiguration {
    /// ASCII rendering: boundary edges around the vertex-type digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits = |s: &[bool]| s.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
        writeln!(f, "  {}", bits(&self.top))?;
        let digits: String = self.vertices.iter().map(|v| char::from(b'0' + v)).collect();
        writeln!(f, "{} {} {}", self.left, digits, self.right)?;
        write!(f, "  {}", bits(&self.bottom))
    }
}

/// Every legal row configuration with the given top edges and left boundary edge.
pub fn row_configurations(top: &[bool], left: bool) -> Vec<RowConfiguration> {
    fn rec(top: &[bool], col: usize, h: u8, verts: &mut Vec<u8>, bottom: &mut Vec<bool>, left: u8, out: &mut Vec<RowConfiguration>) {
        if col == top.len() {
            out.push(RowConfiguration { vertices: verts.clone(), left, right: h, top: top.to_vec(), bottom: bottom.clone() });
            return;
        }
        let n = u8::from(top[col]);
        for s in 0..=1u8 {
            let Some(e) = (h + n).checked_sub(s).filter(|&e| e <= 1) else { continue };
            let v = vertex_type(h, n, e, s).expect("conserving vertices are allowed");
            verts.push(v);
            bottom.push(s == 1);
            rec(top, col + 1, e, verts, bottom, left, out);
            verts.pop();
            bottom.pop();
        }
    }
    let mut out = Vec::new();
    rec(top, 0, u8::from(left), &mut Vec::new(), &mut Vec::new(), u8::from(left), &mut out);
    out
}

/// Dense-indexed row operator on `(ℂ²)^{⊗n}`, stored sparsely as `(output, input) → weight`.
#[derive(Clone, Debug, PartialEq)]
pub struct RowOperator<R> {
    pub n: usize,
    pub entries: BTreeMap<(u32, u32), R>,
}

impl<R: Ring> RowOperator<R> {
    pub fn get(&self, out: u32, inp: u32) -> R {
        self.entries.get(&(out, inp)).cloned().unwrap_or_else(R::zero)
    }
}

/// Bit `i` of a basis index is the edge at column `i + 1`.
pub fn bits_to_string(bits: u32, n: usize) -> Vec<bool> {
    (0..n).map(|i| bits >> i & 1 == 1).collect()
}

pub fn string_to_bits(s: &[bool]) -> u32 {
    s.iter().enumerate().map(|(i, &b)| u32::from(b) << i).sum()
}

/// The `e_{right,left}` block of the monodromy matrix by exhaustive row enumeration.
pub fn brute_force_row_operator<R: Ring>(n: usize, ws: &WeightSystem<R>, left: bool, right: bool) -> Result<RowOperator<R>> {
    if n > 12 {
        return Err(Error::OutOfRange(format!("row length {n} exceeds 12")));
    }
    let mut entries: BTreeMap<(u32, u32), R> = BTreeMap::new();
    for inp in 0..(1u32 << n) {
        for cfg in row_configurations(&bits_to_string(inp, n), left) {
            if (cfg.right == 1) != right {
                continue;
            }
            let key = (string_to_bits(&cfg.bottom), inp);
            let w = cfg.weight(ws);
            let slot = entries.entry(key).or_insert_with(R::zero);
            *slot = slot.add(&w);
        }
    }
    entries.retain(|_, v| !v.is_zero());
    Ok(RowOperator { n, entries })
}

/// Sparse vector indexed by partitions.
pub type SparseVec<R> = BTreeMap<Partition, R>;

/// Sparse matrix with partition-labelled rows and columns, stored column by column.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<R> {
    cols: BTreeMap<Partition, SparseVec<R>>,
}

impl<R: Ring> Default for SparseMatrix<R> {
    fn default() -> Self {
        SparseMatrix { cols: BTreeMap::new() }
    }
}

impl<R: Ring> SparseMatrix<R> {
    pub fn identity(basis: &[Partition]) -> Self {
        Self::scalar(basis, R::one())
    }

    pub fn scalar(basis: &[Partition], c: R) -> Self {
        let mut m = Self::default();
        for p in basis {
            m.add_entry(p.clone(), p.clone(), &c);
        }
        m
    }

    pub fn add_entry(&mut self, row: Partition, col: Partition, v: &R) {
        if v.is_zero() {
            return;
        }
        let column = self.cols.entry(col.clone()).or_default();
        let slot = column.entry(row.clone()).or_insert_with(R::zero);
        *slot = slot.add(v);
        if slot.is_zero() {
            column.remove(&row);
            if column.is_empty() {
                self.cols.remove(&col);
            }
        }
    }

    pub fn get(&self, row: &Partition, col: &Partition) -> R {
        self.cols.get(col).and_then(|c| c.get(row)).cloned().unwrap_or_else(R::zero)
    }

    pub fn column(&self, col: &Partition) -> SparseVec<R> {
        self.cols.get(col).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &Partition, &R)> {
        self.cols.iter().flat_map(|(c, col)| col.iter().map(move |(r, v)| (r, c, v)))
    }

    pub fn apply(&self, v: &SparseVec<R>) -> SparseVec<R> {
        let mut out: SparseVec<R> = BTreeMap::new();
        for (col, x) in v {
            if let Some(column) = self.cols.get(col) {
                for (row, a) in column {
                    let slot = out.entry(row.clone()).or_insert_with(R::zero);
                    *slot = slot.add(&a.mul(x));
                }
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (col, column) in &other.cols {
            for (row, v) in self.apply(column) {
                out.add_entry(row, col.clone(), &v);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_entry(r.clone(), c.clone(), v);
        }
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::default();
        for (r, col, v) in self.entries() {
            out.add_entry(r.clone(), col.clone(), &v.mul(c));
        }
        out
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SparseMatrix<S> {
        let mut out = SparseMatrix::default();
        for (r, c, v) in self.entries() {
            out.add_entry(r.clone(), c.clone(), &f(v));
        }
        out
    }
}

/// Row-lattice matrices on `V_k` grouped by spectral degree, for a given pair of boundary edges.
///
/// Inputs run over `P⁺_{k,n}`; outputs live in `V_{k+left−right}`.
pub fn row_matrix_graded<R: Ring>(k: usize, n: usize, ws: &WeightSystem<R>, left: bool, right: bool) -> BTreeMap<usize, SparseMatrix<R>> {
    let mut out: BTreeMap<usize, SparseMatrix<R>> = BTreeMap::new();
    for mu in crate::combinatorics::partitions_in_box(k, n) {
        for cfg in row_configurations(&box_string(&mu, k, n), left) {
            if (cfg.right == 1) != right {
                continue;
            }
            let lambda = partition_from_box_string(&cfg.bottom);
            out.entry(cfg.degree()).or_default().add_entry(lambda, mu.clone(), &cfg.weight(ws));
        }
    }
    out
}
