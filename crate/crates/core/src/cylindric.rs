//! Cylindric Hecke characters and cylindric Schur functions.
//!
//! `χ_t^{λ/d/μ}(α)` is computed three ways: by the cylindric Murnaghan–Nakayama
//! recursion, by expansion into ordinary skew characters along rim hook
//! reductions, and as a matrix element of the normalized transfer matrices
//! `H_r(t, −1)` on `V_{n−k}` between conjugate labels.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::coeff::{schur_in_tminus1_alphabet, MonomialExpansion, QSeries, Ring, TPoly};
use crate::combinatorics::{box_string, enumerate_brh_additions, enumerate_cylindric_brh, partitions_of, rim_hook_reduce, CylindricLoop, Partition};
use crate::error::{Error, Result};
use crate::hecke::{brh_weight, skew_hecke_character};
use crate::report::{Check, Report};
use crate::six_vertex::{SparseMatrix, SparseVec, TransferFamily};

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

fn check_in_box(lambda: &Partition, k: usize, n: usize) -> Result<()> {
    if k > n || !lambda.fits_box(k, n - k) {
        return Err(Error::OutOfRange(format!("{lambda} is not in P({k},{n})")));
    }
    Ok(())
}

/// `d` with `|λ| + dn = |μ| + |α|`, if it is a nonnegative integer.
pub fn cylindric_degree(lambda: &Partition, mu: &Partition, alpha: &[usize], n: usize) -> Option<usize> {
    let total = mu.weight() + alpha.iter().sum::<usize>();
    let excess = total.checked_sub(lambda.weight())?;
    (excess % n == 0).then_some(excess / n)
}

/// Cylindric characters keyed by `(λ, d)`.
pub type CylState = BTreeMap<(Partition, usize), TPoly>;

fn add_state(map: &mut CylState, key: (Partition, usize), v: &TPoly) {
    if v.is_zero() {
        return;
    }
    let slot = map.entry(key.clone()).or_default();
    *slot = slot.add(v);
    if slot.is_zero() {
        map.remove(&key);
    }
}

/// `Σ_{λ,d} χ_t^{λ/d/μ}(α)` for all `λ ∈ P⁺_{k,n}` at once, by the cylindric Murnaghan–Nakayama rule.
///
/// Content parts are consumed right to left. A part `m = sn + r′` with `0 < r′ < n`
/// contributes `(−1)^{(k−1)s}` and raises `d` by `s` before a broken rim hook of length
/// `r′` is added, either inside the box or wrapping once around the cylinder.
/// A part `m = sn` contributes `(−1)^{(k−1)(s−1)} (−1)^k [n−k]_t` and raises `d` by `s`.
pub fn cyl_char_mn_all(mu: &Partition, alpha: &[usize], k: usize, n: usize) -> Result<CylState> {
    check_in_box(mu, k, n)?;
    let mut state: CylState = BTreeMap::from([((mu.clone(), 0), TPoly::one())]);
    let k_even = k.is_multiple_of(2);
    for &m in alpha.iter().rev() {
        if m == 0 {
            continue;
        }
        let mut next = CylState::new();
        let (s, rp) = (m / n, m % n);
        if rp == 0 {
            let c = TPoly::t_integer(n - k).scale(sign(k % 2 == 1) * sign(k_even && (s - 1) % 2 == 1));
            for ((rho, d), v) in &state {
                add_state(&mut next, (rho.clone(), d + s), &v.mul(&c));
            }
        } else {
            let pre = sign(k_even && s % 2 == 1);
            for ((rho, d), v) in &state {
                let v = v.scale(pre);
                for (lam, st) in enumerate_brh_additions(rho, rp, Some((k, n - k))) {
                    add_state(&mut next, (lam, d + s), &v.mul(&brh_weight(&st)));
                }
                for (lam, st) in enumerate_cylindric_brh(rho, rp, 1, k, n)? {
                    add_state(&mut next, (lam, d + s + 1), &v.mul(&brh_weight(&st)));
                }
            }
        }
        state = next;
    }
    Ok(state)
}

/// `χ_t^{λ/d/μ}(α)` by the cylindric Murnaghan–Nakayama rule.
pub fn cyl_char_mn(lambda: &Partition, d: usize, mu: &Partition, alpha: &[usize], k: usize, n: usize) -> Result<TPoly> {
    check_in_box(lambda, k, n)?;
    if cylindric_degree(lambda, mu, alpha, n) != Some(d) {
        check_in_box(mu, k, n)?;
        return Ok(TPoly::zero());
    }
    Ok(cyl_char_mn_all(mu, alpha, k, n)?.remove(&(lambda.clone(), d)).unwrap_or_default())
}

/// Partitions `ν` of `n`-weight `d` reducing to `λ` in the rim hook expansion of `χ_t^{λ/d/μ}`,
/// with their signs `ε(ν′/λ′)`.
///
/// `ν′` is reduced into `P⁺_{n−k,n}` on the conjugate side, which forces `ν₁ ≤ n − k`.
pub fn virtual_support(lambda: &Partition, d: usize, k: usize, n: usize) -> Result<Vec<(Partition, i64)>> {
    check_in_box(lambda, k, n)?;
    let target = lambda.conjugate();
    let mut out = Vec::new();
    for nu in partitions_of(lambda.weight() + d * n) {
        if nu.first() > n - k {
            continue;
        }
        if let Some(red) = rim_hook_reduce(&nu.conjugate(), n - k, n) {
            if red.core == target && red.degree == d {
                out.push((nu, red.sign));
            }
        }
    }
    Ok(out)
}

/// `χ_t^{λ/d/μ}(α) = Σ_ν ε(ν′/λ′) χ_t^{ν/μ}(α)`.
pub fn cyl_char_virtual(lambda: &Partition, d: usize, mu: &Partition, alpha: &[usize], k: usize, n: usize) -> Result<TPoly> {
    let mut acc = TPoly::zero();
    for (nu, eps) in virtual_support(lambda, d, k, n)? {
        acc = acc.add(&skew_hecke_character(&nu, mu, alpha).scale(eps));
    }
    Ok(acc)
}

/// The operators `H_r(t, −1)` on `V_{n−k}`, cached by `r`.
#[derive(Clone, Debug)]
pub struct CylindricTransfer {
    pub k: usize,
    pub n: usize,
    family: TransferFamily,
    cache: BTreeMap<usize, SparseMatrix<QSeries>>,
}

impl CylindricTransfer {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")));
        }
        let family = TransferFamily::new(n - k, n, &TPoly::t(), &TPoly::constant(-1));
        Ok(CylindricTransfer { k, n, family, cache: BTreeMap::new() })
    }

    fn h(&mut self, r: usize) -> &SparseMatrix<QSeries> {
        let family = &self.family;
        self.cache.entry(r).or_insert_with(|| family.h(r))
    }

    /// `H_{α₁} ⋯ H_{α_ℓ} v_{μ′}`, still labelled by conjugates.
    pub fn apply(&mut self, mu: &Partition, alpha: &[usize]) -> Result<SparseVec<QSeries>> {
        check_in_box(mu, self.k, self.n)?;
        let mut v: SparseVec<QSeries> = BTreeMap::from([(mu.conjugate(), QSeries::one())]);
        for &a in alpha.iter().rev() {
            v = self.h(a).apply(&v);
        }
        Ok(v)
    }

    /// `Σ_{λ,d} χ_t^{λ/d/μ}(α)` for all `λ ∈ P⁺_{k,n}`.
    pub fn all(&mut self, mu: &Partition, alpha: &[usize]) -> Result<CylState> {
        let ell = alpha.iter().filter(|&&a| a > 0).count();
        let mut out = CylState::new();
        for (lam_conj, series) in self.apply(mu, alpha)? {
            for d in 0..series.degree_bound() {
                let mut c = series.coeff(d);
                for _ in 0..ell {
                    c = c
                        .div_t_minus_one()
                        .ok_or_else(|| Error::Arithmetic(format!("⟨{lam_conj}|H_{alpha:?}|{}⟩ at q^{d} is not divisible by (t−1)^{ell}", mu.conjugate())))?;
                }
                add_state(&mut out, (lam_conj.conjugate(), d), &c);
            }
        }
        Ok(out)
    }
}

/// `χ_t^{λ/d/μ}(α)` as the `q^d` coefficient of `⟨λ′|H_α|μ′⟩ / (t−1)^{ℓ(α)}`.
pub fn cyl_char_transfer(lambda: &Partition, d: usize, mu: &Partition, alpha: &[usize], k: usize, n: usize) -> Result<TPoly> {
    check_in_box(lambda, k, n)?;
    let mut ct = CylindricTransfer::new(k, n)?;
    Ok(ct.all(mu, alpha)?.remove(&(lambda.clone(), d)).unwrap_or_default())
}

/// `χ^{λ/d/μ}(α)` at `t = 1` by the unbroken-hook recursion, working directly on box strings.
///
/// A hook of length `m < n` moves a one at position `i` to the empty position `i + m`,
/// wrapping past `n` at the cost of one unit of `d`; its sign is `(−1)` to the number
/// of ones jumped over. A part `m = n` contributes `(−1)^k (n−k)`.
pub fn cyl_char_classical(lambda: &Partition, d: usize, mu: &Partition, alpha: &[usize], k: usize, n: usize) -> Result<i64> {
    check_in_box(lambda, k, n)?;
    check_in_box(mu, k, n)?;
    let mut state: BTreeMap<(Vec<bool>, usize), i64> = BTreeMap::from([((box_string(mu, k, n), 0), 1)]);
    for &m in alpha.iter().rev() {
        if m == 0 {
            continue;
        }
        let mut next: BTreeMap<(Vec<bool>, usize), i64> = BTreeMap::new();
        let (s, rp) = (m / n, m % n);
        let k_even = k.is_multiple_of(2);
        for ((string, dd), v) in &state {
            if rp == 0 {
                let c = (n - k) as i64 * sign(k % 2 == 1) * sign(k_even && (s - 1) % 2 == 1);
                *next.entry((string.clone(), dd + s)).or_default() += v * c;
                continue;
            }
            let pre = sign(k_even && s % 2 == 1);
            for i in 0..n {
                let j = (i + rp) % n;
                if !string[i] || string[j] {
                    continue;
                }
                let jumped = (1..rp).filter(|o| string[(i + o) % n]).count();
                let mut moved = string.clone();
                moved[i] = false;
                moved[j] = true;
                let wrap = usize::from(i + rp >= n);
                *next.entry((moved, dd + s + wrap)).or_default() += v * pre * sign(jumped % 2 == 1);
            }
        }
        next.retain(|_, v| *v != 0);
        state = next;
    }
    Ok(state.get(&(box_string(lambda, k, n), d)).copied().unwrap_or(0))
}

/// Cells `(i, j)` of the fundamental domain `1 ≤ i ≤ k` of the cylindric skew shape `λ/d/μ`.
pub fn cylindric_cells(lambda: &Partition, d: usize, mu: &Partition, k: usize, n: usize) -> Result<Vec<(usize, i64)>> {
    check_in_box(lambda, k, n)?;
    check_in_box(mu, k, n)?;
    if k == 0 {
        return Ok(Vec::new());
    }
    let outer = CylindricLoop::new(lambda.clone(), d as i64, k, n)?;
    let mut cells = Vec::new();
    for i in 1..=k {
        let (lo, hi) = (mu.get(i - 1) as i64, outer.at(i as i64));
        if hi < lo {
            return Err(Error::InvalidShape(format!("{mu}[0] is not inside {lambda}[{d}] in row {i}")));
        }
        cells.extend((lo + 1..=hi).map(|j| (i, j)));
    }
    Ok(cells)
}

/// `s_{λ/d/μ}(y₁, …, y_N)` by enumerating cylindric tableaux, dropped entirely above degree `max_degree`.
///
/// Entries weakly increase along rows and strictly down columns, where the cell below
/// `(k, j)` is `(1, j + n − k)`.
pub fn cyl_schur_tableaux(lambda: &Partition, d: usize, mu: &Partition, k: usize, n: usize, nvars: usize, max_degree: usize) -> Result<MonomialExpansion> {
    let cells = cylindric_cells(lambda, d, mu, k, n)?;
    if cells.len() > max_degree {
        return Ok(MonomialExpansion::new(nvars));
    }
    if k == n && !cells.is_empty() {
        return Ok(MonomialExpansion::new(nvars));
    }
    let index: BTreeMap<(usize, i64), usize> = cells.iter().enumerate().map(|(p, &c)| (c, p)).collect();
    // For each cell, the earlier cells that must be weakly (left) or strictly (above) smaller,
    // and the earlier cells that must be strictly larger (below, through the wrap).
    let mut left = vec![None; cells.len()];
    let mut above = vec![None; cells.len()];
    let mut below = vec![None; cells.len()];
    for (p, &(i, j)) in cells.iter().enumerate() {
        left[p] = index.get(&(i, j - 1)).copied();
        if i > 1 {
            above[p] = index.get(&(i - 1, j)).copied();
        }
        if i == k {
            let wrap = index.get(&(1, j + (n - k) as i64)).copied();
            below[p] = wrap;
            if k == 1 {
                above[p] = index.get(&(1, j - (n - k) as i64)).copied().filter(|&a| a < p);
            }
        }
    }
    let mut filling = vec![0usize; cells.len()];
    let mut full: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    fn rec(
        p: usize,
        nvars: usize,
        filling: &mut Vec<usize>,
        left: &[Option<usize>],
        above: &[Option<usize>],
        below: &[Option<usize>],
        full: &mut BTreeMap<Vec<usize>, i64>,
    ) {
        if p == filling.len() {
            let mut exps = vec![0usize; nvars];
            for &v in filling.iter() {
                exps[v - 1] += 1;
            }
            *full.entry(exps).or_default() += 1;
            return;
        }
        let mut lo = 1;
        if let Some(l) = left[p] {
            lo = lo.max(filling[l]);
        }
        if let Some(a) = above[p] {
            if a < p {
                lo = lo.max(filling[a] + 1);
            }
        }
        let mut hi = nvars;
        if let Some(b) = below[p] {
            if b < p {
                hi = hi.min(filling[b].saturating_sub(1));
            }
        }
        for v in lo..=hi {
            filling[p] = v;
            rec(p + 1, nvars, filling, left, above, below, full);
        }
    }
    rec(0, nvars, &mut filling, &left, &above, &below, &mut full);
    MonomialExpansion::from_exponent_vectors(nvars, &full)
}

/// `s_{ν/μ}(y₁, …, y_N)` by enumerating semistandard tableaux of the ordinary skew shape.
pub fn skew_schur_polynomial(nu: &Partition, mu: &Partition, nvars: usize) -> MonomialExpansion {
    if !nu.contains(mu) {
        return MonomialExpansion::new(nvars);
    }
    let rows: Vec<(usize, usize)> = (0..nu.len()).map(|i| (mu.get(i), nu.get(i))).collect();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&(_, hi)| vec![0; hi]).collect();
    let mut full: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    fn rec(i: usize, j: usize, rows: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, nvars: usize, full: &mut BTreeMap<Vec<usize>, i64>) {
        if i == rows.len() {
            let mut exps = vec![0usize; nvars];
            for (r, &(lo, hi)) in rows.iter().enumerate() {
                for c in lo..hi {
                    exps[grid[r][c] - 1] += 1;
                }
            }
            *full.entry(exps).or_default() += 1;
            return;
        }
        let (lo, hi) = rows[i];
        if j == hi {
            let nj = rows.get(i + 1).map_or(0, |r| r.0);
            return rec(i + 1, nj, rows, grid, nvars, full);
        }
        let mut min = 1;
        if j > lo {
            min = min.max(grid[i][j - 1]);
        }
        if i > 0 && j >= rows[i - 1].0 && j < rows[i - 1].1 {
            min = min.max(grid[i - 1][j] + 1);
        }
        for v in min..=nvars {
            grid[i][j] = v;
            rec(i, j + 1, rows, grid, nvars, full);
        }
    }
    let start = rows.first().map_or(0, |r| r.0);
    rec(0, start, &rows, &mut grid, nvars, &mut full);
    MonomialExpansion::from_exponent_vectors(nvars, &full).expect("skew Schur polynomials are symmetric")
}

/// `Σ_ν ε s_{ν/μ}(y₁, …, y_N)` over the rim hook expansion of `λ/d/μ`, dropped above `max_degree`.
pub fn mcnamara_expansion(lambda: &Partition, d: usize, mu: &Partition, k: usize, n: usize, nvars: usize, max_degree: usize) -> Result<MonomialExpansion> {
    let mut out = MonomialExpansion::new(nvars);
    if (lambda.weight() + d * n).saturating_sub(mu.weight()) > max_degree {
        return Ok(out);
    }
    for (nu, eps) in virtual_support(lambda, d, k, n)? {
        out = out.add(&skew_schur_polynomial(&nu, mu, nvars).scale(&TPoly::constant(eps)));
    }
    Ok(out)
}

/// Checks `Σ_μ χ_t^{λ/d/∅}(μ) (t−1)^{ℓ(μ)} m_μ[X] = s_{λ/d/∅}[(t−1)X]` in `N` variables for every `d`
/// with `|λ| + dn ≤ max_degree`, and that the cylindric tableaux reproduce the rim hook expansion.
pub fn verify_char_to_schur(lambda: &Partition, k: usize, n: usize, nvars: usize, max_degree: usize) -> Result<Report> {
    check_in_box(lambda, k, n)?;
    let mut report = Report::new("char-schur");
    let mut ct = CylindricTransfer::new(k, n)?;
    let mut d = 0;
    while lambda.weight() + d * n <= max_degree {
        let start = Instant::now();
        let m = lambda.weight() + d * n;
        let mut lhs = MonomialExpansion::new(nvars);
        for mu in partitions_of(m) {
            if mu.len() > nvars {
                continue;
            }
            let chi = ct.all(&Partition::empty(), mu.parts())?.remove(&(lambda.clone(), d)).unwrap_or_default();
            lhs.add_term(mu.clone(), &chi.mul(&TPoly::t_minus_one().pow(mu.len() as u32)));
        }
        let mut rhs = MonomialExpansion::new(nvars);
        for (nu, eps) in virtual_support(lambda, d, k, n)? {
            rhs = rhs.add(&schur_in_tminus1_alphabet(&nu, nvars)?.scale(&TPoly::constant(eps)));
        }
        let detail = match lhs.first_difference(&rhs) {
            None => format!("{} monomials agree", lhs.terms().count()),
            Some((mono, a, b)) => format!("m_{mono}: characters give {a}, Schur side gives {b}"),
        };
        let ok = lhs == rhs;
        report.push(Check::new(format!("ch_t {lambda}[{d}] k={k} n={n} N={nvars}"), ok, detail, start.elapsed()));

        let start = Instant::now();
        let tab = cyl_schur_tableaux(lambda, d, &Partition::empty(), k, n, nvars, max_degree)?;
        let mc = mcnamara_expansion(lambda, d, &Partition::empty(), k, n, nvars, max_degree)?;
        let detail = match tab.first_difference(&mc) {
            None => format!("{} monomials agree", tab.terms().count()),
            Some((mono, a, b)) => format!("m_{mono}: tableaux give {a}, rim hook expansion gives {b}"),
        };
        report.push(Check::new(format!("tableaux {lambda}[{d}] k={k} n={n} N={nvars}"), tab == mc, detail, start.elapsed()));
        d += 1;
    }
    Ok(report)
}
