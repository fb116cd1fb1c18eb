//! Small quantum cohomology of `Gr_k(ℂⁿ)` through the rim hook algorithm.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{lr_coefficient, QSeries, Ring, TPoly};
use crate::combinatorics::{partitions_in_box, partitions_of, rim_hook_reduce, Partition};
use crate::cylindric::CylindricTransfer;
use crate::error::{Error, Result};
use crate::report::{Check, Report};

/// An element of `qH*(Gr_k(ℂⁿ))` in the Schubert basis.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QClass {
    pub k: usize,
    pub n: usize,
    pub coeffs: BTreeMap<Partition, QSeries>,
}

impl QClass {
    pub fn zero(k: usize, n: usize) -> Self {
        QClass { k, n, coeffs: BTreeMap::new() }
    }

    /// The Schubert class `σ_λ`.
    pub fn schubert(lambda: &Partition, k: usize, n: usize) -> Self {
        let mut c = QClass::zero(k, n);
        c.add_term(lambda.clone(), &QSeries::one());
        c
    }

    pub fn add_term(&mut self, lambda: Partition, c: &QSeries) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(lambda.clone()).or_insert_with(QSeries::zero);
        *slot = slot.add(c);
        if slot.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c);
        }
        out
    }

    /// Integer coefficient of `q^d σ_λ`.
    pub fn coeff(&self, lambda: &Partition, d: usize) -> i64 {
        self.coeffs.get(lambda).map_or(0, |s| s.coeff(d).coeff(0))
    }

    /// Nonzero `(λ, d, coefficient)` triples in a fixed order.
    pub fn terms(&self) -> Vec<(Partition, usize, i64)> {
        let mut out = Vec::new();
        for (l, s) in &self.coeffs {
            for d in 0..s.degree_bound() {
                let c = s.coeff(d).coeff(0);
                if c != 0 {
                    out.push((l.clone(), d, c));
                }
            }
        }
        out
    }
}

/// `s_λ ↦ (−1)^{(k−1)d} sgn(λ) q^d σ_core`, or zero.
pub fn rim_hook_project(lambda: &Partition, k: usize, n: usize) -> QClass {
    let mut out = QClass::zero(k, n);
    if let Some(red) = rim_hook_reduce(lambda, k, n) {
        out.add_term(red.core, &QSeries::from_tpoly(TPoly::constant(red.sign), red.degree, usize::MAX));
    }
    out
}

/// Partitions of `m` with at most `rows` parts containing `floor`.
fn partitions_above(m: usize, rows: usize, floor: &[usize]) -> Vec<Partition> {
    fn rec(rem: usize, i: usize, max: usize, rows: usize, floor: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let lo = floor.get(i).copied().unwrap_or(0);
        if rem == 0 {
            if lo == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        if i == rows {
            return;
        }
        for p in (lo.max(1)..=max.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, i + 1, p, rows, floor, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, 0, m, rows, floor, &mut Vec::new(), &mut out);
    out
}

/// `s_μ s_ν = Σ_ρ c^ρ_{μν} s_ρ`, keeping only `ℓ(ρ) ≤ rows`.
pub fn classical_product(mu: &Partition, nu: &Partition, rows: usize) -> BTreeMap<Partition, u64> {
    let len = mu.len().max(nu.len());
    let floor: Vec<usize> = (0..len).map(|i| mu.get(i).max(nu.get(i))).collect();
    partitions_above(mu.weight() + nu.weight(), rows, &floor)
        .into_iter()
        .filter_map(|rho| {
            let c = lr_coefficient(&rho, mu, nu);
            (c > 0).then_some((rho, c))
        })
        .collect()
}

/// `σ_μ ⋆ σ_ν` by multiplying classically and projecting with the rim hook algorithm.
pub fn quantum_product_schubert(mu: &Partition, nu: &Partition, k: usize, n: usize) -> QClass {
    let mut out = QClass::zero(k, n);
    for (rho, c) in classical_product(mu, nu, k) {
        let proj = rim_hook_project(&rho, k, n);
        for (l, s) in proj.coeffs {
            out.add_term(l, &s.scale(&TPoly::constant(c as i64)));
        }
    }
    out
}

/// Bilinear extension of [`quantum_product_schubert`].
pub fn quantum_product(a: &QClass, b: &QClass) -> QClass {
    let mut out = QClass::zero(a.k, a.n);
    for (mu, ca) in &a.coeffs {
        for (nu, cb) in &b.coeffs {
            let c = ca.mul(cb);
            for (l, s) in quantum_product_schubert(mu, nu, a.k, a.n).coeffs {
                out.add_term(l, &s.mul(&c));
            }
        }
    }
    out
}

fn check_in_box(lambda: &Partition, k: usize, n: usize) -> Result<()> {
    if k > n || !lambda.fits_box(k, n - k) {
        return Err(Error::OutOfRange(format!("{lambda} is not in P({k},{n})")));
    }
    Ok(())
}

/// The Gromov–Witten invariant `C^{λ,d}_{μν}`.
pub fn gw_invariant(lambda: &Partition, d: usize, mu: &Partition, nu: &Partition, k: usize, n: usize) -> Result<i64> {
    for p in [lambda, mu, nu] {
        check_in_box(p, k, n)?;
    }
    if mu.weight() + nu.weight() != lambda.weight() + d * n {
        return Ok(0);
    }
    Ok(quantum_product_schubert(mu, nu, k, n).coeff(lambda, d))
}

/// One nonzero entry `C^{λ,d}_{μν}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GwEntry {
    pub lambda: Partition,
    pub d: usize,
    pub mu: Partition,
    pub nu: Partition,
    pub value: i64,
}

/// All nonzero `C^{λ,d}_{μν}` with `d ≤ dmax` over `P⁺_{k,n}`, ordered by `(μ, ν, d, λ)`.
pub fn gw_table(k: usize, n: usize, dmax: usize) -> Result<Vec<GwEntry>> {
    if k > n {
        return Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")));
    }
    let basis = partitions_in_box(k, n);
    let pairs: Vec<(Partition, Partition)> = basis.iter().flat_map(|m| basis.iter().map(move |v| (m.clone(), v.clone()))).collect();
    let rows: Vec<Vec<GwEntry>> = pairs
        .par_iter()
        .map(|(mu, nu)| {
            let mut entries: Vec<GwEntry> = quantum_product_schubert(mu, nu, k, n)
                .terms()
                .into_iter()
                .filter(|(_, d, _)| *d <= dmax)
                .map(|(lambda, d, value)| GwEntry { lambda, d, mu: mu.clone(), nu: nu.clone(), value })
                .collect();
            entries.sort_by(|a, b| (a.d, &a.lambda).cmp(&(b.d, &b.lambda)));
            entries
        })
        .collect();
    Ok(rows.into_iter().flatten().collect())
}

/// Associativity `(σ_a ⋆ σ_b) ⋆ σ_c = σ_a ⋆ (σ_b ⋆ σ_c)` on all basis triples.
pub fn check_associativity(k: usize, n: usize) -> Report {
    let start = Instant::now();
    let basis = partitions_in_box(k, n);
    let schubert = |l: &Partition| QClass::schubert(l, k, n);
    let mut failure = None;
    'outer: for a in &basis {
        for b in &basis {
            let ab = quantum_product(&schubert(a), &schubert(b));
            for c in &basis {
                let bc = quantum_product(&schubert(b), &schubert(c));
                if quantum_product(&ab, &schubert(c)) != quantum_product(&schubert(a), &bc) {
                    failure = Some(format!("({a} ⋆ {b}) ⋆ {c} ≠ {a} ⋆ ({b} ⋆ {c})"));
                    break 'outer;
                }
            }
        }
    }
    let mut report = Report::new("associativity");
    let ok = failure.is_none();
    let detail = failure.unwrap_or_else(|| format!("{} triples", basis.len().pow(3)));
    report.push(Check::new(format!("associativity k={k} n={n}"), ok, detail, start.elapsed()));
    report
}

/// Checks the restriction rule
/// `χ_t^{λ[d]}(α·β) = Σ C^{λ,d−d′−d″}_{μν} χ_t^{μ[d′]}(α) χ_t^{ν[d″]}(β)`
/// for every split `m = m′ + m″` of `m = |λ| + dn` and all `α ⊢ m′`, `β ⊢ m″`.
pub fn verify_theorem_main(lambda: &Partition, d: usize, k: usize, n: usize) -> Result<Report> {
    check_in_box(lambda, k, n)?;
    let m = lambda.weight() + d * n;
    let basis = partitions_in_box(k, n);
    let mut products: BTreeMap<(Partition, Partition), QClass> = BTreeMap::new();
    for mu in &basis {
        for nu in &basis {
            products.insert((mu.clone(), nu.clone()), quantum_product_schubert(mu, nu, k, n));
        }
    }
    let mut report = Report::new("theorem-main");
    let mut ct = CylindricTransfer::new(k, n)?;
    let empty = Partition::empty();
    let mut chars: BTreeMap<Partition, BTreeMap<(Partition, usize), TPoly>> = BTreeMap::new();
    for part in 0..=m {
        for alpha in partitions_of(part) {
            chars.insert(alpha.clone(), ct.all(&empty, alpha.parts())?);
        }
    }
    for m1 in 0..=m {
        let start = Instant::now();
        let mut failure = None;
        let mut pairs = 0usize;
        'split: for alpha in partitions_of(m1) {
            for beta in partitions_of(m - m1) {
                pairs += 1;
                let joined: Vec<usize> = alpha.parts().iter().chain(beta.parts()).copied().collect();
                let lhs = ct.all(&empty, &joined)?.remove(&(lambda.clone(), d)).unwrap_or_default();
                let mut rhs = TPoly::zero();
                for ((mu, d1), ca) in &chars[&alpha] {
                    for ((nu, d2), cb) in &chars[&beta] {
                        if d1 + d2 > d {
                            continue;
                        }
                        let c = products[&(mu.clone(), nu.clone())].coeff(lambda, d - d1 - d2);
                        if c != 0 {
                            rhs = rhs.add(&ca.mul(cb).scale(c));
                        }
                    }
                }
                if lhs != rhs {
                    failure = Some(format!("α = {alpha}, β = {beta}: left {lhs}, right {rhs}"));
                    break 'split;
                }
            }
        }
        let ok = failure.is_none();
        let detail = failure.unwrap_or_else(|| format!("{pairs} (α, β) pairs agree"));
        report.push(Check::new(format!("{lambda}[{d}] k={k} n={n} m′={m1} m″={}", m - m1), ok, detail, start.elapsed()));
    }
    Ok(report)
}
