//! Floating-point Bethe ansatz oracle for the free-fermion transfer matrix.
//!
//! Products `∏_{i<j} |ξᵢ − ξⱼ|²` are evaluated as `∏_{i<j} (ξᵢ − ξⱼ)(ξᵢ⁻¹ − ξⱼ⁻¹)`, which
//! coincides with the modulus when `q = 1` and keeps every identity homogeneous in `q^{1/n}`.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64;
use serde::Serialize;

use crate::coeff::{round_to_integer, schur_numeric, solve_complex, TPoly};
use crate::combinatorics::{partitions_in_box, Partition};
use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::six_vertex::{row_matrix_graded, SparseMatrix, WeightSystem};

type C = Complex64;

/// The Bethe roots labelled by `λ ∈ P⁺_{k,n}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BetheRootSet {
    pub label: Partition,
    pub roots: Vec<C>,
    pub q_value: f64,
    pub k: usize,
    pub n: usize,
}

impl BetheRootSet {
    pub fn inverse(&self) -> Vec<C> {
        self.roots.iter().map(|z| z.inv()).collect()
    }

    /// `∏_{i<j} (ξᵢ − ξⱼ)(ξᵢ⁻¹ − ξⱼ⁻¹)`.
    pub fn vandermonde_norm(&self) -> C {
        let mut acc = C::new(1.0, 0.0);
        for i in 0..self.roots.len() {
            for j in i + 1..self.roots.len() {
                let (a, b) = (self.roots[i], self.roots[j]);
                acc *= (a - b) * (a.inv() - b.inv());
            }
        }
        acc
    }

    /// `max_i |ξᵢⁿ + (−1)^k q|`.
    pub fn bae_residual(&self) -> f64 {
        let sign = if self.k.is_multiple_of(2) { 1.0 } else { -1.0 };
        self.roots.iter().map(|z| (z.powi(self.n as i32) + sign * self.q_value).norm()).fold(0.0, f64::max)
    }

    /// Smallest pairwise distance between roots, `∞` for fewer than two roots.
    pub fn min_separation(&self) -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..self.roots.len() {
            for j in i + 1..self.roots.len() {
                best = best.min((self.roots[i] - self.roots[j]).norm());
            }
        }
        best
    }

    /// The Bethe weight `∏_{i<j} |ξᵢ − ξⱼ|² / n^k`.
    pub fn weight(&self) -> C {
        self.vandermonde_norm() / (self.n as f64).powi(self.k as i32)
    }
}

/// `ξⱼ = q^{1/n} exp(2πi/n · ((k+1)/2 + λⱼ − j))`.
pub fn bethe_roots(lambda: &Partition, k: usize, n: usize, q: f64) -> Result<BetheRootSet> {
    if k > n || !lambda.fits_box(k, n - k) {
        return Err(Error::OutOfRange(format!("{lambda} is not in P({k},{n})")));
    }
    if q <= 0.0 {
        return Err(Error::OutOfRange(format!("q = {q} must be positive")));
    }
    let scale = q.powf(1.0 / n as f64);
    let roots = (1..=k)
        .map(|j| {
            let phase = (k as f64 + 1.0) / 2.0 + lambda.get(j - 1) as f64 - j as f64;
            C::from_polar(scale, 2.0 * PI * phase / n as f64)
        })
        .collect();
    Ok(BetheRootSet { label: lambda.clone(), roots, q_value: q, k, n })
}

fn all_roots(k: usize, n: usize, q: f64) -> Result<Vec<BetheRootSet>> {
    partitions_in_box(k, n).iter().map(|l| bethe_roots(l, k, n, q)).collect()
}

fn rel(err: f64, scale: f64) -> f64 {
    err / scale.max(1.0)
}

/// `τ(x; a, b) = A + qD` on `V_k` at a complex point.
pub fn tau_numeric(k: usize, n: usize, a: C, b: C, x: C, q: C) -> SparseMatrix<C> {
    let ws = WeightSystem::free_fermion(&a, &b, &x);
    let mut tau = SparseMatrix::default();
    for (_, m) in row_matrix_graded(k, n, &ws, false, false) {
        tau = tau.add(&m);
    }
    for (_, m) in row_matrix_graded(k, n, &ws, true, true) {
        tau = tau.add(&m.scale(&q));
    }
    tau
}

/// `Λ(x) = (1 + (−1)^k q xⁿ bⁿ) ∏ (1 + a x ξᵢ)/(1 − b x ξᵢ)`.
pub fn eigenvalue(roots: &BetheRootSet, a: C, b: C, x: C) -> C {
    let sign = if roots.k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let pre = 1.0 + sign * roots.q_value * (x * b).powi(roots.n as i32);
    roots.roots.iter().fold(pre, |acc, xi| acc * (1.0 + a * x * xi) / (1.0 - b * x * xi))
}

/// Coefficients `h_0 … h_max` of `∏ (1 + a x yᵢ)/(1 − b x yᵢ)`.
pub fn h_series(y: &[C], a: C, b: C, max: usize) -> Vec<C> {
    let mut series = vec![C::new(0.0, 0.0); max + 1];
    series[0] = C::new(1.0, 0.0);
    for &yi in y {
        // multiply by 1/(1 − b x yᵢ), then by (1 + a x yᵢ)
        for r in 1..=max {
            let prev = series[r - 1];
            series[r] += b * yi * prev;
        }
        for r in (1..=max).rev() {
            let prev = series[r - 1];
            series[r] += a * yi * prev;
        }
    }
    series
}

/// `‖τ(x) v_ξ − Λ(x) v_ξ‖ / (max(1, |Λ|) ‖v_ξ‖)` for every Bethe vector `v_ξ = Σ_μ s_μ(ξ⁻¹) v_μ`.
pub fn verify_eigen(k: usize, n: usize, a: f64, b: f64, x: f64, q: f64, tol: f64) -> Result<Report> {
    let (ac, bc, xc) = (C::new(a, 0.0), C::new(b, 0.0), C::new(x, 0.0));
    let tau = tau_numeric(k, n, ac, bc, xc, C::new(q, 0.0));
    let basis = partitions_in_box(k, n);
    let mut report = Report::new("bethe-eigen");
    for roots in all_roots(k, n, q)? {
        let start = Instant::now();
        let inv = roots.inverse();
        let v: BTreeMap<Partition, C> = basis.iter().map(|mu| Ok((mu.clone(), schur_numeric(mu, &inv)?))).collect::<Result<_>>()?;
        let tv = tau.apply(&v);
        let lam = eigenvalue(&roots, ac, bc, xc);
        let norm = v.values().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let resid = basis.iter().map(|mu| (tv.get(mu).copied().unwrap_or_default() - lam * v[mu]).norm_sqr()).sum::<f64>().sqrt();
        let r = rel(resid, lam.norm()) / norm;
        report.push(Check::new(format!("eigen k={k} n={n} ξ_{}", roots.label), r < tol, format!("relative residual {r:.3e}"), start.elapsed()));
    }
    Ok(report)
}

/// `Σ_ν s_ν(ξ_λ) s_ν(ξ_μ⁻¹) = δ_{λμ} n^k / ∏_{i<j}|ξᵢ − ξⱼ|²` for all pairs.
pub fn completeness_check(k: usize, n: usize, q: f64, tol: f64) -> Result<Report> {
    let start = Instant::now();
    let basis = partitions_in_box(k, n);
    let sets = all_roots(k, n, q)?;
    let mut worst = 0.0f64;
    let mut witness = String::new();
    for sl in &sets {
        for sm in &sets {
            let inv = sm.inverse();
            let mut sum = C::new(0.0, 0.0);
            for nu in &basis {
                sum += schur_numeric(nu, &sl.roots)? * schur_numeric(nu, &inv)?;
            }
            let expected = if sl.label == sm.label { 1.0 / sl.weight() } else { C::new(0.0, 0.0) };
            let r = rel((sum - expected).norm(), expected.norm());
            if r > worst {
                worst = r;
                witness = format!("(ξ_{}, ξ_{})", sl.label, sm.label);
            }
        }
    }
    let mut report = Report::new("bethe-complete");
    report.push(Check::new(format!("completeness k={k} n={n} q={q}"), worst < tol, format!("max relative deviation {worst:.3e} {witness}"), start.elapsed()));
    Ok(report)
}

/// Ideal relations `h_n − q(−1)^k b^{n−k}((−a)^k − b^k) = 0` and `h_{r+n} + q(−1)^k bⁿ h_r = 0`, `0 < r ≤ n`,
/// at every Bethe root set.
pub fn ideal_relations_check(k: usize, n: usize, a: f64, b: f64, q: f64, tol: f64) -> Result<Report> {
    let start = Instant::now();
    let (ac, bc) = (C::new(a, 0.0), C::new(b, 0.0));
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut worst = 0.0f64;
    let mut witness = String::new();
    for roots in all_roots(k, n, q)? {
        let h = h_series(&roots.roots, ac, bc, 2 * n);
        let c0 = q * sign * b.powi((n - k) as i32) * ((-a).powi(k as i32) - b.powi(k as i32));
        let mut devs = vec![(0usize, rel((h[n] - c0).norm(), h[n].norm()))];
        for r in 1..=n {
            let other = q * sign * bc.powi(n as i32) * h[r];
            devs.push((r, rel((h[r + n] + other).norm(), h[r + n].norm().max(other.norm()))));
        }
        for (r, dv) in devs {
            if dv > worst {
                worst = dv;
                witness = format!("ξ_{} r={r}", roots.label);
            }
        }
    }
    let mut report = Report::new("bethe-ideal");
    report.push(Check::new(
        format!("ideal k={k} n={n} a={a} b={b} q={q}"),
        worst < tol,
        format!("max relative deviation {worst:.3e} {witness}"),
        start.elapsed(),
    ));
    Ok(report)
}

/// The Bethe equations `ξᵢⁿ + (−1)^k q = 0` hold to `tol · q` and the roots are pairwise distinct.
pub fn roots_check(k: usize, n: usize, q: f64, tol: f64) -> Result<Report> {
    let start = Instant::now();
    let sets = all_roots(k, n, q)?;
    let residual = sets.iter().map(BetheRootSet::bae_residual).fold(0.0, f64::max);
    let separation = sets.iter().map(BetheRootSet::min_separation).fold(f64::INFINITY, f64::min);
    let mut report = Report::new("bethe-roots");
    report.push(Check::new(
        format!("roots k={k} n={n} q={q}"),
        residual < tol * q && separation > 1e-6,
        format!("{} root sets, residual {residual:.3e}, separation {separation:.3e}", sets.len()),
        start.elapsed(),
    ));
    Ok(report)
}

/// The power series `Λ(x)` has vanishing coefficients in degrees `n+1 … 3n`.
pub fn eigenvalue_polynomiality_check(k: usize, n: usize, a: f64, b: f64, q: f64, tol: f64) -> Result<Report> {
    let start = Instant::now();
    let (ac, bc) = (C::new(a, 0.0), C::new(b, 0.0));
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let lead = sign * q * bc.powi(n as i32);
    let mut worst = 0.0f64;
    for roots in all_roots(k, n, q)? {
        let h = h_series(&roots.roots, ac, bc, 3 * n);
        let scale = h.iter().map(|z| z.norm()).fold(1.0, f64::max);
        for m in n + 1..=3 * n {
            worst = worst.max((h[m] + lead * h[m - n]).norm() / scale);
        }
    }
    let mut report = Report::new("bethe-polynomial");
    report.push(Check::new(
        format!("eigenvalue degree k={k} n={n} a={a} b={b} q={q}"),
        worst < tol,
        format!("max relative coefficient beyond degree n {worst:.3e}"),
        start.elapsed(),
    ));
    Ok(report)
}

/// `F_λ(ξ_μ) = δ_{λμ}` for the interpolating idempotents `F_λ(y) = Σ_ν s_ν(ξ_λ⁻¹) s_ν(y) · weight(ξ_λ)`.
pub fn idempotent_check(k: usize, n: usize, q: f64, tol: f64) -> Result<Report> {
    let start = Instant::now();
    let basis = partitions_in_box(k, n);
    let sets = all_roots(k, n, q)?;
    let mut worst = 0.0f64;
    for sl in &sets {
        let inv = sl.inverse();
        let w = sl.weight();
        for sm in &sets {
            let mut f = C::new(0.0, 0.0);
            for nu in &basis {
                f += schur_numeric(nu, &inv)? * schur_numeric(nu, &sm.roots)?;
            }
            f *= w;
            let expected = if sl.label == sm.label { 1.0 } else { 0.0 };
            worst = worst.max((f - expected).norm());
        }
    }
    let mut report = Report::new("bethe-idempotent");
    report.push(Check::new(format!("idempotents k={k} n={n} q={q}"), worst < tol, format!("max deviation {worst:.3e}"), start.elapsed()));
    Ok(report)
}

/// Solves `Σ_d c_d q_j^d = values_j` for `d = 0 … samples − 1`.
fn separate_q_degrees(q_samples: &[f64], values: &[C]) -> Result<Vec<C>> {
    let m: Vec<Vec<C>> = q_samples.iter().map(|&q| (0..q_samples.len()).map(|d| C::new(q.powi(d as i32), 0.0)).collect()).collect();
    solve_complex(m, values.to_vec())
}

/// `Σ_ξ s_λ(ξ⁻¹) s_μ(ξ) s_ν(ξ) · weight(ξ)`, the BVI sum at one value of `q`.
pub fn bvi_sum(lambda: &Partition, mu: &Partition, nu: &Partition, k: usize, n: usize, q: f64) -> Result<C> {
    let mut acc = C::new(0.0, 0.0);
    for roots in all_roots(k, n, q)? {
        let inv = roots.inverse();
        acc += schur_numeric(lambda, &inv)? * schur_numeric(mu, &roots.roots)? * schur_numeric(nu, &roots.roots)? * roots.weight();
    }
    Ok(acc)
}

/// Integer `C^{λ,d}_{μν}` for `d = 0 … ⌊(|μ|+|ν|)/n⌋`, extracted from BVI sums at the given `q`.
pub fn bvi_gw_numeric(lambda: &Partition, mu: &Partition, nu: &Partition, k: usize, n: usize, q_samples: &[f64], tol: f64) -> Result<Vec<(usize, i64)>> {
    let degrees = (mu.weight() + nu.weight()) / n + 1;
    if q_samples.len() < degrees {
        return Err(Error::OutOfRange(format!("need {degrees} q-samples, got {}", q_samples.len())));
    }
    let qs = &q_samples[..degrees];
    let values: Vec<C> = qs.iter().map(|&q| bvi_sum(lambda, mu, nu, k, n, q)).collect::<Result<_>>()?;
    let coeffs = separate_q_degrees(qs, &values)?;
    coeffs
        .iter()
        .enumerate()
        .map(|(d, c)| {
            if c.im.abs() > tol {
                return Err(Error::Numeric(format!("C^{{{lambda},{d}}}_{{{mu},{nu}}} has imaginary part {:.3e}", c.im)));
            }
            round_to_integer(c.re, tol).map(|v| (d, v)).ok_or_else(|| Error::Numeric(format!("C^{{{lambda},{d}}}_{{{mu},{nu}}} = {} is not integral", c.re)))
        })
        .collect()
}

/// `χ_t^{λ/d/μ}(α)` reconstructed from the Bethe sum over `Ξ_{n−k,n}` at `(a, b) = (t, −1)`.
///
/// `t` runs over `D + 1` points of the circle `|t| = 2`, where `D = |α| − ℓ(α)` bounds the
/// `t`-degree, so the coefficients come out of a discrete Fourier transform.
#[allow(clippy::too_many_arguments)]
pub fn bethe_cyl_char_numeric(lambda: &Partition, d: usize, mu: &Partition, alpha: &[usize], k: usize, n: usize, q_samples: &[f64], tol: f64) -> Result<TPoly> {
    let parts: Vec<usize> = alpha.iter().copied().filter(|&a| a > 0).collect();
    let total: usize = parts.iter().sum();
    let tdeg = total - parts.len();
    let degrees = (mu.weight() + total) / n + 1;
    if q_samples.len() < degrees || d >= degrees {
        return Err(Error::OutOfRange(format!("need {} q-samples, got {}", degrees.max(d + 1), q_samples.len())));
    }
    let (lc, mc) = (lambda.conjugate(), mu.conjugate());
    let kk = n - k;
    let samples = tdeg + 1;
    let radius = 2.0;
    let ts: Vec<C> = (0..samples).map(|j| C::from_polar(radius, 2.0 * PI * (j as f64 + 0.5) / samples as f64)).collect();
    let mut at_t = Vec::with_capacity(samples);
    for &t in &ts {
        let mut values = Vec::with_capacity(degrees);
        for &q in &q_samples[..degrees] {
            let mut acc = C::new(0.0, 0.0);
            for roots in all_roots(kk, n, q)? {
                let h = h_series(&roots.roots, t, C::new(-1.0, 0.0), parts.iter().copied().max().unwrap_or(0));
                let h_alpha = parts.iter().fold(C::new(1.0, 0.0), |acc, &p| acc * h[p]);
                let pre = h_alpha / (t - 1.0).powi(parts.len() as i32);
                acc += pre * schur_numeric(&lc, &roots.inverse())? * schur_numeric(&mc, &roots.roots)? * roots.weight();
            }
            values.push(acc);
        }
        let by_degree = separate_q_degrees(&q_samples[..degrees], &values)?;
        for (dd, v) in by_degree.iter().enumerate() {
            if dd != d && v.norm() > tol * values.iter().map(|z| z.norm()).fold(1.0, f64::max) {
                return Err(Error::Numeric(format!("spurious q^{dd} component {:.3e} at t = {t}", v.norm())));
            }
        }
        at_t.push(by_degree[d]);
    }
    let mut out = TPoly::default();
    for e in 0..samples {
        let c: C = ts.iter().zip(&at_t).map(|(t, v)| v * t.powi(-(e as i32))).sum::<C>() / samples as f64;
        if c.im.abs() > tol {
            return Err(Error::Numeric(format!("t^{e} coefficient has imaginary part {:.3e}", c.im)));
        }
        let v = round_to_integer(c.re, tol).ok_or_else(|| Error::Numeric(format!("t^{e} coefficient {} is not integral", c.re)))?;
        out.add_term(e as i32, v);
    }
    Ok(out)
}
