//! Partitions, Maya diagrams, abacus cores and broken rim hook enumeration.
//!
//! Skew shapes are never materialized as cell sets. A broken rim hook added to
//! `μ` corresponds to a family of disjoint intervals `i₁ < j₁ < i₂ < j₂ < …` on
//! the Maya diagram of `μ`, each moving a 1-letter from `iₛ` to the 0-letter at
//! `jₛ`. The 1-letters strictly inside an interval count the extra rows of that
//! component, the 0-letters the extra columns.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part (0-indexed), zero past the end.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> usize {
        self.get(0)
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first()).map(|j| self.parts.iter().take_while(|&&p| p >= j).count()).collect();
        Partition { parts }
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Whether the diagram fits in `rows × cols`.
    pub fn fits_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.first() <= cols
    }

    /// Complement inside the `rows × cols` box, rotated by 180°.
    pub fn box_complement(&self, rows: usize, cols: usize) -> Option<Partition> {
        if !self.fits_box(rows, cols) {
            return None;
        }
        let parts = (0..rows).map(|i| cols - self.get(rows - 1 - i)).collect();
        Some(Partition::from_unsorted(parts))
    }

    /// Cells `(row, col)`, both 1-indexed.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// `λ + (1^height)`: one extra box in each of the first `height` rows.
    pub fn add_column(&self, height: usize) -> Partition {
        let parts = (0..height.max(self.len())).map(|i| self.get(i) + usize::from(i < height)).collect();
        Partition::from_unsorted(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Parses `"3,2,1"`, `"[3,2,1]"` or `"(3,2,1)"` into a list of integers.
pub fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let body = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(format!("cannot parse {s:?}")))).collect()
}

/// Shorthand used heavily in tests and tables.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}

/// All partitions of `m`, largest first in reverse lexicographic order.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `m` with at most `rows` parts, each at most `cols`.
pub fn partitions_of_in_box(m: usize, rows: usize, cols: usize) -> Vec<Partition> {
    partitions_of(m).into_iter().filter(|p| p.fits_box(rows, cols)).collect()
}

/// The set `P⁺_{k,n}`: partitions in the `k × (n−k)` box, by weight then reverse lex.
pub fn partitions_in_box(k: usize, n: usize) -> Vec<Partition> {
    assert!(k <= n, "k must not exceed n");
    (0..=k * (n - k)).flat_map(|m| partitions_of_in_box(m, k, n - k)).collect()
}

/// All distinct orderings of a multiset of parts.
pub fn distinct_permutations(parts: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // Lexicographic successor enumeration.
    while let Some(i) = (0..sorted.len().saturating_sub(1)).rev().find(|&i| sorted[i] < sorted[i + 1]) {
        let j = (i + 1..sorted.len()).rev().find(|&j| sorted[j] > sorted[i]).unwrap();
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
    out
}

/// Canonical finite encoding of an infinite binary string: a charge and a partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MayaDiagram {
    charge: i64,
    partition: Partition,
}

/// A raw binary string: every position `≤ floor` holds a 1, plus the listed 1-letters above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MayaString {
    floor: i64,
    ones: BTreeSet<i64>,
}

impl MayaString {
    pub fn new(floor: i64, ones: impl IntoIterator<Item = i64>) -> Result<Self> {
        let ones: BTreeSet<i64> = ones.into_iter().collect();
        if let Some(&low) = ones.iter().next() {
            if low <= floor {
                return Err(Error::MalformedMaya(format!("1-letter at {low} lies below the floor {floor}")));
            }
        }
        Ok(MayaString { floor, ones })
    }

    pub fn is_one(&self, i: i64) -> bool {
        i <= self.floor || self.ones.contains(&i)
    }
}

pub fn maya_from_partition(lambda: &Partition, charge: i64) -> MayaDiagram {
    MayaDiagram { charge, partition: lambda.clone() }
}

/// Decodes a raw string into `(λ, c)`.
pub fn partition_from_maya(sigma: &MayaString) -> Result<(Partition, i64)> {
    let mut floor = sigma.floor;
    let mut ones = sigma.ones.clone();
    while ones.remove(&(floor + 1)) {
        floor += 1;
    }
    let charge = floor + ones.len() as i64;
    let parts = ones.iter().rev().enumerate().map(|(idx, &p)| (p - charge - 1 + idx as i64 + 1) as usize).collect();
    Ok((Partition::new(parts)?, charge))
}

impl MayaDiagram {
    pub fn new(partition: Partition, charge: i64) -> Self {
        MayaDiagram { charge, partition }
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Position of the `j`-th 1-letter from the right, `j ≥ 1`.
    pub fn position(&self, j: usize) -> i64 {
        self.charge + 1 + self.partition.get(j - 1) as i64 - j as i64
    }

    pub fn n_minus(&self) -> i64 {
        self.charge - self.partition.len() as i64
    }

    pub fn n_plus(&self) -> i64 {
        self.charge + 1 + self.partition.first() as i64
    }

    pub fn is_one(&self, i: i64) -> bool {
        if i <= self.n_minus() {
            return true;
        }
        (1..=self.partition.len()).any(|j| self.position(j) == i)
    }

    /// The letters at positions `lo..=hi`.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<bool> {
        (lo..=hi).map(|i| self.is_one(i)).collect()
    }

    pub fn to_string_form(&self) -> MayaString {
        let ones = (1..=self.partition.len()).map(|j| self.position(j));
        MayaString::new(self.n_minus(), ones).expect("positions lie above n₋")
    }

    /// `c = n₋ + Σ_{i>n₋} σᵢ`.
    pub fn charge_from_left(&self) -> i64 {
        let nm = self.n_minus();
        nm + (nm + 1..self.n_plus()).filter(|&i| self.is_one(i)).count() as i64
    }

    /// `c = n₊ − Σ_{i≤n₊} (1 − σᵢ)`.
    pub fn charge_from_right(&self) -> i64 {
        let np = self.n_plus();
        np - (self.n_minus() + 1..=np).filter(|&i| !self.is_one(i)).count() as i64
    }
}

/// Positions of the 1-letters of `λ ∈ P⁺_{k,n}` on the finite string `1..=n` (charge `k`).
pub fn box_string(lambda: &Partition, k: usize, n: usize) -> Vec<bool> {
    let mut s = vec![false; n];
    for j in 1..=k {
        let p = k + lambda.get(j - 1) + 1 - j;
        s[p - 1] = true;
    }
    s
}

/// Inverse of [`box_string`].
pub fn partition_from_box_string(s: &[bool]) -> Partition {
    let k = s.iter().filter(|&&b| b).count();
    let ones: Vec<usize> = (1..=s.len()).rev().filter(|&p| s[p - 1]).collect();
    Partition::from_unsorted(ones.iter().enumerate().map(|(idx, &p)| p + idx + 1 - k - 1).collect())
}

/// Result of stripping all `n`-rim hooks on the abacus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreDecomposition {
    pub core: Partition,
    pub n_weight: usize,
    /// `r(h)` of each removed hook, in removal order.
    pub removal_row_counts: Vec<usize>,
    /// Sign of the bead-numbering permutation.
    pub perm_sign: i8,
}

impl CoreDecomposition {
    /// `(−1)^{Σ(r(hᵢ)−1)}`.
    pub fn hook_sign(&self) -> i8 {
        let s: usize = self.removal_row_counts.iter().map(|r| r - 1).sum();
        if s.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

pub fn core_decompose(lambda: &Partition, n: usize) -> CoreDecomposition {
    let order: Vec<usize> = (0..n).collect();
    core_decompose_runner_order(lambda, n, &order)
}

/// As [`core_decompose`], sliding beads runner by runner in the given order.
pub fn core_decompose_runner_order(lambda: &Partition, n: usize, order: &[usize]) -> CoreDecomposition {
    assert!(n >= 2, "abacus needs at least two runners");
    let len = lambda.len();
    // Charge ℓ(λ) puts every bead that can move at a positive position.
    let initial: Vec<i64> = (1..=len).map(|j| (len + 1 + lambda.get(j - 1) - j) as i64).collect();
    let mut beads: BTreeSet<i64> = initial.iter().copied().collect();
    let ni = n as i64;
    let mut rows = Vec::new();
    for &runner in order {
        loop {
            let movable = beads.iter().copied().filter(|&p| p.rem_euclid(ni) == runner as i64 % ni).find(|&p| p - ni >= 1 && !beads.contains(&(p - ni)));
            let Some(p) = movable else { break };
            let between = beads.range(p - ni + 1..p).count();
            rows.push(between + 1);
            beads.remove(&p);
            beads.insert(p - ni);
        }
    }
    let core_parts: Vec<usize> = beads.iter().rev().enumerate().map(|(idx, &p)| (p - len as i64 - 1 + idx as i64 + 1) as usize).collect();

    // Bead-numbering permutation: the i-th lowest bead of a runner lands in its i-th lowest slot.
    let mut finals = vec![0i64; len];
    for runner in 0..ni {
        let mut on_runner: Vec<(i64, usize)> = initial.iter().enumerate().filter(|(_, &p)| p.rem_euclid(ni) == runner).map(|(idx, &p)| (p, idx)).collect();
        on_runner.sort_unstable();
        let first_slot = if runner == 0 { ni } else { runner };
        for (h, &(_, idx)) in on_runner.iter().enumerate() {
            finals[idx] = first_slot + h as i64 * ni;
        }
    }
    let inversions = (0..len).flat_map(|a| (a + 1..len).map(move |b| (a, b))).filter(|&(a, b)| finals[a] < finals[b]).count();

    CoreDecomposition {
        core: Partition::from_unsorted(core_parts),
        n_weight: rows.len(),
        removal_row_counts: rows,
        perm_sign: if inversions % 2 == 0 { 1 } else { -1 },
    }
}

/// Result of reducing a partition into `P⁺_{k,n}` by the rim hook algorithm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RimHookReduction {
    pub core: Partition,
    pub degree: usize,
    /// `(−1)^{(k−1)d} sgn(w_λ)`.
    pub sign: i64,
}

/// `σ(λ, k) ↦ (−1)^{(k−1)d} sgn(w_λ) q^d v_core`, or `None` when `ℓ(λ) > k` or the core leaves the box.
pub fn rim_hook_reduce(lambda: &Partition, k: usize, n: usize) -> Option<RimHookReduction> {
    if lambda.len() > k {
        return None;
    }
    let cd = core_decompose(lambda, n);
    if cd.core.first() > n - k {
        return None;
    }
    let d = cd.n_weight;
    let sign = i64::from(cd.perm_sign) * if ((k + 1) * d).is_multiple_of(2) { 1 } else { -1 };
    Some(RimHookReduction { core: cd.core, degree: d, sign })
}

/// Statistics of a (possibly cylindric) broken rim hook.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BrokenRimHookStats {
    /// `(r(h), c(h))` per component, left to right along the boundary.
    pub components: Vec<(usize, usize)>,
    /// `r̄(b)`: box rows the hook does not meet; zero when no box was given.
    pub untouched_rows: usize,
    /// `c̄(b)`: box columns the hook does not meet; zero when no box was given.
    pub untouched_cols: usize,
}

impl BrokenRimHookStats {
    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn total_length(&self) -> usize {
        self.components.iter().map(|&(r, c)| r + c - 1).sum()
    }

    /// Swaps rows and columns, as for the conjugate shape.
    pub fn transposed(&self) -> Self {
        BrokenRimHookStats {
            components: self.components.iter().map(|&(r, c)| (c, r)).collect(),
            untouched_rows: self.untouched_cols,
            untouched_cols: self.untouched_rows,
        }
    }
}

/// A chosen interval move on a binary string.
#[derive(Clone, Copy, Debug)]
struct Arc {
    start: usize,
    end: usize,
    ones_inside: usize,
    zeros_inside: usize,
}

/// Disjoint, strictly separated interval moves on `s[lo..hi]` of total length `len`.
fn interval_families(s: &[bool], lo: usize, hi: usize, len: usize) -> Vec<Vec<Arc>> {
    fn rec(s: &[bool], from: usize, hi: usize, rem: usize, cur: &mut Vec<Arc>, out: &mut Vec<Vec<Arc>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for i in from..hi {
            if !s[i] {
                continue;
            }
            let (mut ones, mut zeros) = (0, 0);
            for j in i + 1..hi.min(i + rem + 1) {
                if s[j] {
                    ones += 1;
                    continue;
                }
                cur.push(Arc { start: i, end: j, ones_inside: ones, zeros_inside: zeros });
                rec(s, j + 1, hi, rem - (j - i), cur, out);
                cur.pop();
                zeros += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(s, lo, hi, len, &mut Vec::new(), &mut out);
    out
}

fn stats_from_arcs(arcs: &[Arc]) -> Vec<(usize, usize)> {
    arcs.iter().map(|a| (a.ones_inside + 1, a.zeros_inside + 1)).collect()
}

/// All `λ ⊇ μ` with `λ/μ` a broken rim hook of length `r`, optionally confined to a
/// `rows × cols` box (in which case `r̄`, `c̄` are filled in).
pub fn enumerate_brh_additions(mu: &Partition, r: usize, bounds: Option<(usize, usize)>) -> Vec<(Partition, BrokenRimHookStats)> {
    if r == 0 {
        let mut st = BrokenRimHookStats::default();
        if let Some((rows, cols)) = bounds {
            if !mu.fits_box(rows, cols) {
                return Vec::new();
            }
            st.untouched_rows = rows;
            st.untouched_cols = cols;
        }
        return vec![(mu.clone(), st)];
    }
    // Charge-0 Maya window wide enough for every move of total length r.
    let lo = -(mu.len() as i64) - r as i64;
    let hi = mu.first() as i64 + r as i64 + 1;
    let maya = maya_from_partition(mu, 0);
    let s = maya.window(lo, hi);
    let mut out = Vec::new();
    for arcs in interval_families(&s, 0, s.len(), r) {
        let mut t = s.clone();
        for a in &arcs {
            t[a.start] = false;
            t[a.end] = true;
        }
        let ones = (0..t.len()).filter(|&i| t[i]).map(|i| i as i64 + lo);
        let (lambda, _) = partition_from_maya(&MayaString::new(lo - 1, ones).expect("window above floor")).expect("moves keep the string well formed");
        let components = stats_from_arcs(&arcs);
        let mut st = BrokenRimHookStats { components, untouched_rows: 0, untouched_cols: 0 };
        if let Some((rows, cols)) = bounds {
            if !lambda.fits_box(rows, cols) {
                continue;
            }
            st.untouched_rows = rows - st.components.iter().map(|c| c.0).sum::<usize>();
            st.untouched_cols = cols - st.components.iter().map(|c| c.1).sum::<usize>();
        }
        out.push((lambda, st));
    }
    out
}

/// All `λ ⊆ μ` inside the `rows × cols` box with `μ/λ` a broken rim hook of length `r`.
pub fn enumerate_brh_removals(mu: &Partition, r: usize, rows: usize, cols: usize) -> Vec<(Partition, BrokenRimHookStats)> {
    let Some(mu_c) = mu.box_complement(rows, cols) else {
        return Vec::new();
    };
    enumerate_brh_additions(&mu_c, r, Some((rows, cols))).into_iter().map(|(lc, st)| (lc.box_complement(rows, cols).expect("stays in box"), st)).collect()
}

/// Cylindric broken rim hooks `λ/d/μ` of length `r < n` with `λ, μ ∈ P⁺_{k,n}` and `d ∈ {0, 1}`.
///
/// On the periodic string of `μ` a cylindric hook is an arc that may wrap from
/// position `n` to `1`; `d` counts wrapping arcs.
pub fn enumerate_cylindric_brh(mu: &Partition, r: usize, d: usize, k: usize, n: usize) -> Result<Vec<(Partition, BrokenRimHookStats)>> {
    if r >= n {
        return Err(Error::OutOfRange(format!("cylindric hook length {r} must be below n = {n}")));
    }
    if d > 1 {
        return Err(Error::OutOfRange(format!("shift d = {d} must be 0 or 1")));
    }
    if k > n || !mu.fits_box(k, n - k) {
        return Err(Error::OutOfRange(format!("{mu} is not in P({k},{n})")));
    }
    let s = box_string(mu, k, n);
    let mut families: Vec<Vec<Arc>> = Vec::new();
    if d == 0 {
        families = interval_families(&s, 0, n, r);
    } else {
        for i in 0..n {
            if !s[i] {
                continue;
            }
            for j in 0..i {
                let len = n - i + j;
                if s[j] || len > r {
                    continue;
                }
                let inside = (i + 1..n).chain(0..j);
                let ones = inside.clone().filter(|&p| s[p]).count();
                let zeros = inside.count() - ones;
                let wrap = Arc { start: i, end: j, ones_inside: ones, zeros_inside: zeros };
                for mut rest in interval_families(&s, j + 1, i, r - len) {
                    rest.insert(0, wrap);
                    families.push(rest);
                }
            }
        }
    }
    let mut out = Vec::with_capacity(families.len());
    for arcs in families {
        let mut t = s.clone();
        let mut covered = vec![false; n];
        for a in &arcs {
            t[a.start] = false;
            t[a.end] = true;
            let mut p = a.start;
            loop {
                covered[p] = true;
                if p == a.end {
                    break;
                }
                p = (p + 1) % n;
            }
        }
        let untouched_rows = (0..n).filter(|&p| !covered[p] && s[p]).count();
        let untouched_cols = (0..n).filter(|&p| !covered[p] && !s[p]).count();
        let st = BrokenRimHookStats { components: stats_from_arcs(&arcs), untouched_rows, untouched_cols };
        out.push((partition_from_box_string(&t), st));
    }
    Ok(out)
}

/// The periodic boundary sequence `λ[r]` on the cylinder `ℤ×ℤ/(−k, n−k)ℤ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CylindricLoop {
    pub base: Partition,
    pub shift: i64,
    pub k: usize,
    pub n: usize,
}

impl CylindricLoop {
    pub fn new(base: Partition, shift: i64, k: usize, n: usize) -> Result<Self> {
        if k == 0 || k > n || !base.fits_box(k, n - k) {
            return Err(Error::OutOfRange(format!("{base} is not in P({k},{n}) with k ≥ 1")));
        }
        Ok(CylindricLoop { base, shift, k, n })
    }

    /// `λ[r]ᵢ` for any `i ∈ ℤ`.
    pub fn at(&self, i: i64) -> i64 {
        let k = self.k as i64;
        let idx = i - self.shift - 1;
        let (q, rem) = (idx.div_euclid(k), idx.rem_euclid(k));
        self.base.get(rem as usize) as i64 + self.shift - q * (self.n - self.k) as i64
    }
}
