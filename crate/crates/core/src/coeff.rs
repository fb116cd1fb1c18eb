//! Exact coefficient rings and the classical symmetric-function oracles.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{partitions_of, Partition};
use crate::error::{Error, Result};

/// Complex numbers for the numeric oracle.
pub type ComplexVal = Complex64;

/// Minimal commutative ring interface shared by every weight and coefficient type.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_i64(v: i64) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

macro_rules! num_ring {
    ($t:ty, $conv:expr) => {
        impl Ring for $t {
            fn zero() -> Self {
                <$t as Zero>::zero()
            }
            fn one() -> Self {
                <$t as One>::one()
            }
            fn is_zero(&self) -> bool {
                Zero::is_zero(self)
            }
            fn add(&self, other: &Self) -> Self {
                self + other
            }
            fn mul(&self, other: &Self) -> Self {
                self * other
            }
            fn neg(&self) -> Self {
                -self
            }
            fn from_i64(v: i64) -> Self {
                $conv(v)
            }
        }
    };
}

num_ring!(i128, |v: i64| v as i128);
num_ring!(BigInt, BigInt::from);
num_ring!(BigRational, |v: i64| BigRational::from_integer(BigInt::from(v)));
num_ring!(Complex64, |v: i64| Complex64::new(v as f64, 0.0));

/// Integer Laurent polynomial in `t`.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct TPoly {
    terms: BTreeMap<i32, i64>,
}

impl TPoly {
    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: i64, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(e, c);
        }
        TPoly { terms }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// `t − 1`.
    pub fn t_minus_one() -> Self {
        Self::t().sub(&Self::one())
    }

    /// `1 + t + … + t^{m−1}`.
    pub fn t_integer(m: usize) -> Self {
        let mut p = TPoly::default();
        for e in 0..m {
            p.add_term(e as i32, 1);
        }
        p
    }

    pub fn add_term(&mut self, e: i32, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn coeff(&self, e: i32) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn eval_complex(&self, t: Complex64) -> Complex64 {
        self.terms.iter().map(|(&e, &c)| t.powi(e) * c as f64).sum()
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = TPoly::default();
        for (&e, &v) in &self.terms {
            out.add_term(e, v * c);
        }
        out
    }

    /// Exact quotient by `t − 1`, if the remainder vanishes.
    pub fn div_t_minus_one(&self) -> Option<TPoly> {
        let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) else {
            return Some(TPoly::default());
        };
        let mut q = TPoly::default();
        let mut carry = 0i64;
        for e in (lo..=hi).rev() {
            carry += self.coeff(e);
            if e > lo {
                q.add_term(e - 1, carry);
            }
        }
        (carry == 0).then_some(q)
    }
}

impl Ring for TPoly {
    fn zero() -> Self {
        TPoly::default()
    }
    fn one() -> Self {
        TPoly::constant(1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = TPoly::default();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        self.scale(-1)
    }
    fn from_i64(v: i64) -> Self {
        TPoly::constant(v)
    }
}

impl fmt::Display for TPoly {
    /// Descending exponents, explicit signs, no spaces: `t^2-t+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, &c)) in self.terms.iter().rev().enumerate() {
            if c < 0 {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let a = c.unsigned_abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    write!(f, "t")?;
                    if e != 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for TPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Arithmetic(format!("cannot parse polynomial {s:?}"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        let mut out = TPoly::default();
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                sign = if bytes[i] == b'-' { -1 } else { 1 };
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: i64 = if i > start { s[start..i].parse().map_err(|_| bad())? } else { 1 };
            let mut exp = 0i32;
            if i < bytes.len() && bytes[i] == b't' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let es = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = s[es..i].parse().map_err(|_| bad())?;
                }
            } else if i == start {
                return Err(bad());
            }
            out.add_term(exp, sign * coeff);
        }
        Ok(out)
    }
}

impl Serialize for TPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Polynomial in `q` over [`TPoly`], truncated above a fixed degree.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QSeries {
    /// Largest retained `q`-degree; `usize::MAX` means untruncated.
    trunc: usize,
    coeffs: Vec<TPoly>,
}

impl QSeries {
    pub fn new(trunc: usize) -> Self {
        QSeries { trunc, coeffs: Vec::new() }
    }

    pub fn from_tpoly(p: TPoly, qdeg: usize, trunc: usize) -> Self {
        let mut s = QSeries::new(trunc);
        s.add_at(qdeg, &p);
        s
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn with_trunc(mut self, trunc: usize) -> Self {
        self.trunc = self.trunc.min(trunc);
        self.normalize();
        self
    }

    pub fn coeff(&self, d: usize) -> TPoly {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_at(&mut self, d: usize, p: &TPoly) {
        if d > self.trunc || p.is_zero() {
            return;
        }
        if self.coeffs.len() <= d {
            self.coeffs.resize(d + 1, TPoly::default());
        }
        self.coeffs[d] = self.coeffs[d].add(p);
        self.normalize();
    }

    /// Multiplies by a `t`-polynomial.
    pub fn scale(&self, p: &TPoly) -> Self {
        let mut out = QSeries::new(self.trunc);
        for (d, c) in self.coeffs.iter().enumerate() {
            out.add_at(d, &c.mul(p));
        }
        out
    }

    fn normalize(&mut self) {
        if self.trunc != usize::MAX {
            self.coeffs.truncate(self.trunc + 1);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl Ring for QSeries {
    fn zero() -> Self {
        QSeries::new(usize::MAX)
    }
    fn one() -> Self {
        QSeries::from_tpoly(TPoly::one(), 0, usize::MAX)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = QSeries::new(self.trunc.min(other.trunc));
        for (d, c) in self.coeffs.iter().enumerate().chain(other.coeffs.iter().enumerate()) {
            out.add_at(d, c);
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = QSeries::new(self.trunc.min(other.trunc));
        for (d1, c1) in self.coeffs.iter().enumerate() {
            for (d2, c2) in other.coeffs.iter().enumerate() {
                out.add_at(d1 + d2, &c1.mul(c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        self.scale(&TPoly::constant(-1))
    }
    fn from_i64(v: i64) -> Self {
        QSeries::from_tpoly(TPoly::constant(v), 0, usize::MAX)
    }
}

/// Polynomial with integer coefficients in the six Boltzmann weights `ω₁ … ω₆`.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct MPoly {
    terms: BTreeMap<[u8; 6], i64>,
}

impl MPoly {
    /// The weight `ωᵢ`, `i ∈ 1..=6`.
    pub fn var(i: usize) -> Self {
        let mut e = [0u8; 6];
        e[i - 1] = 1;
        MPoly { terms: BTreeMap::from([(e, 1)]) }
    }

    /// `c · ∏ ωᵢ^{eᵢ}`.
    pub fn monomial(c: i64, exps: [u8; 6]) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(exps, c);
        }
        MPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8; 6], i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    /// Divides a monomial by `ωᵢ`, if it occurs.
    pub fn div_var(&self, i: usize) -> Option<MPoly> {
        let mut out = MPoly::default();
        for (e, &c) in &self.terms {
            let mut e = *e;
            if e[i - 1] == 0 {
                return None;
            }
            e[i - 1] -= 1;
            out.terms.insert(e, c);
        }
        Some(out)
    }

    /// Total degree in `ω₂, ω₄, ω₆` of each monomial, when homogeneous.
    pub fn spectral_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|e| (e[1] + e[3] + e[5]) as usize);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }
    fn one() -> Self {
        MPoly::monomial(1, [0; 6])
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            let slot = out.terms.entry(*e).or_insert(0);
            *slot += c;
            if *slot == 0 {
                out.terms.remove(e);
            }
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = MPoly::default();
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let mut e = *e1;
                for i in 0..6 {
                    e[i] += e2[i];
                }
                out = out.add(&MPoly::monomial(c1 * c2, e));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(e, &c)| (*e, -c)).collect() }
    }
    fn from_i64(v: i64) -> Self {
        MPoly::monomial(v, [0; 6])
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, &c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "{}", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if c.abs() != 1 || e.iter().all(|&x| x == 0) {
                factors.push(c.abs().to_string());
            }
            for (v, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(format!("w{}", v + 1)),
                    _ => factors.push(format!("w{}^{x}", v + 1)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A symmetric polynomial in `N` variables stored by its monomial-symmetric coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct MonomialExpansion {
    pub nvars: usize,
    terms: BTreeMap<Partition, TPoly>,
}

impl MonomialExpansion {
    pub fn new(nvars: usize) -> Self {
        MonomialExpansion { nvars, terms: BTreeMap::new() }
    }

    /// Adds `c · m_μ`; shapes with more than `N` parts vanish.
    pub fn add_term(&mut self, mu: Partition, c: &TPoly) {
        if mu.len() > self.nvars || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mu.clone()).or_default();
        *slot = slot.add(c);
        if slot.is_zero() {
            self.terms.remove(&mu);
        }
    }

    /// Folds a full exponent-vector expansion, checking it is symmetric.
    pub fn from_exponent_vectors(nvars: usize, full: &BTreeMap<Vec<usize>, i64>) -> Result<Self> {
        let mut out = MonomialExpansion::new(nvars);
        for (exps, &c) in full {
            let mu = Partition::from_unsorted(exps.clone());
            let mut dominant = mu.parts().to_vec();
            dominant.resize(nvars, 0);
            let rep = full.get(&dominant).copied().unwrap_or(0);
            if rep != c {
                return Err(Error::Arithmetic(format!("expansion is not symmetric: x^{exps:?} has {c}, x^{dominant:?} has {rep}")));
            }
            if exps == &dominant {
                out.add_term(mu, &TPoly::constant(c));
            }
        }
        Ok(out)
    }

    pub fn coeff(&self, mu: &Partition) -> TPoly {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &TPoly)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &TPoly) -> Self {
        let mut out = MonomialExpansion::new(self.nvars);
        for (mu, v) in &self.terms {
            out.add_term(mu.clone(), &v.mul(c));
        }
        out
    }

    /// Drops monomials of total degree above `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        let mut out = self.clone();
        out.terms.retain(|mu, _| mu.weight() <= max_degree);
        out
    }

    /// First monomial on which the two expansions differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Partition, TPoly, TPoly)> {
        let keys: std::collections::BTreeSet<&Partition> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().map(|mu| (mu.clone(), self.coeff(mu), other.coeff(mu))).find(|(_, a, b)| a != b)
    }
}

/// Beta-numbers `λᵢ + ℓ − i` for the classical Murnaghan–Nakayama recursion.
fn beta_numbers(lambda: &Partition) -> Vec<usize> {
    let l = lambda.len();
    (0..l).map(|i| lambda.get(i) + l - 1 - i).collect()
}

fn from_beta(beta: &[usize]) -> Partition {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let l = b.len();
    Partition::from_unsorted((0..l).map(|i| b[i] + i + 1 - l).collect())
}

/// Symmetric-group character `χ^λ(α)` by the classical Murnaghan–Nakayama rule.
pub fn classical_character(lambda: &Partition, alpha: &[usize]) -> Result<i64> {
    if lambda.weight() != alpha.iter().sum::<usize>() {
        return Err(Error::WeightMismatch(format!("|{lambda}| ≠ |{alpha:?}|")));
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(lambda, alpha, &mut memo))
}

fn mn_rec(lambda: &Partition, alpha: &[usize], memo: &mut HashMap<(Partition, usize), i64>) -> i64 {
    let Some((&r, rest)) = alpha.split_first() else {
        return 1;
    };
    if let Some(&v) = memo.get(&(lambda.clone(), alpha.len())) {
        return v;
    }
    let beta = beta_numbers(lambda);
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let passed = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut nb = beta.clone();
        nb[i] = b - r;
        let sign = if passed % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&from_beta(&nb), rest, memo);
    }
    memo.insert((lambda.clone(), alpha.len()), total);
    total
}

/// Number of standard Young tableaux, `m!/∏ hooks`.
pub fn hook_length_dimension(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let factorial: u128 = (1..=lambda.weight() as u128).product();
    let hooks: u128 = lambda.cells().map(|(i, j)| (lambda.get(i - 1) - j + conj.get(j - 1) - i + 1) as u128).product();
    factorial / hooks
}

/// Littlewood–Richardson coefficient `c^λ_{μν}` by counting LR skew tableaux.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.weight() != mu.weight() + nu.weight() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    // Cells of λ/μ in reading order: rows top to bottom, each right to left.
    let cells: Vec<(usize, usize)> = (0..lambda.len()).flat_map(|i| (mu.get(i)..lambda.get(i)).rev().map(move |j| (i, j))).collect();
    let mut filling: HashMap<(usize, usize), usize> = HashMap::new();
    let mut counts = vec![0usize; nu.len() + 1];
    fn rec(idx: usize, cells: &[(usize, usize)], mu: &Partition, nu: &Partition, filling: &mut HashMap<(usize, usize), usize>, counts: &mut Vec<usize>) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (i, j) = cells[idx];
        // Right neighbour was filled just before (reading right to left) and bounds us above.
        let upper = filling.get(&(i, j + 1)).copied().unwrap_or(nu.len());
        // The cell above must be strictly smaller.
        let lower = if i > 0 && j >= mu.get(i - 1) { filling[&(i - 1, j)] + 1 } else { 1 };
        let mut total = 0;
        for v in lower..=upper.min(nu.len()) {
            if counts[v] >= nu.get(v - 1) || (v > 1 && counts[v] + 1 > counts[v - 1]) {
                continue;
            }
            counts[v] += 1;
            filling.insert((i, j), v);
            total += rec(idx + 1, cells, mu, nu, filling, counts);
            filling.remove(&(i, j));
            counts[v] -= 1;
        }
        total
    }
    rec(0, &cells, mu, nu, &mut filling, &mut counts)
}

/// `z_ρ = ∏ i^{mᵢ} mᵢ!`.
pub fn z_factor(rho: &Partition) -> u128 {
    let mut mult: BTreeMap<usize, u32> = BTreeMap::new();
    for &p in rho.parts() {
        *mult.entry(p).or_default() += 1;
    }
    mult.iter().map(|(&i, &m)| (i as u128).pow(m) * (1..=m as u128).product::<u128>()).product()
}

/// Coefficient of `x^μ` in the power-sum product `p_ρ`.
pub fn power_sum_coefficient(rho: &Partition, mu: &Partition) -> u128 {
    fn rec(parts: &[usize], rem: &mut Vec<usize>) -> u128 {
        let Some((&p, rest)) = parts.split_first() else {
            return u128::from(rem.iter().all(|&x| x == 0));
        };
        let mut total = 0;
        for i in 0..rem.len() {
            if rem[i] >= p {
                rem[i] -= p;
                total += rec(rest, rem);
                rem[i] += p;
            }
        }
        total
    }
    if rho.weight() != mu.weight() {
        return 0;
    }
    rec(rho.parts(), &mut mu.parts().to_vec())
}

/// `s_λ[(t−1)X]` in `N` variables via `s_λ = Σ_ρ χ^λ(ρ) p_ρ / z_ρ` and `p_r ↦ (t^r − 1) p_r`.
pub fn schur_in_tminus1_alphabet(lambda: &Partition, nvars: usize) -> Result<MonomialExpansion> {
    if nvars == 0 {
        return Err(Error::OutOfRange("need at least one variable".into()));
    }
    let m = lambda.weight();
    let mut out = MonomialExpansion::new(nvars);
    let mus: Vec<Partition> = partitions_of(m).into_iter().filter(|p| p.len() <= nvars).collect();
    let mut acc: BTreeMap<Partition, BTreeMap<i32, BigRational>> = BTreeMap::new();
    for rho in partitions_of(m) {
        let chi = classical_character(lambda, rho.parts())?;
        if chi == 0 {
            continue;
        }
        let mut plethysm = TPoly::one();
        for &r in rho.parts() {
            plethysm = plethysm.mul(&TPoly::monomial(1, r as i32).sub(&TPoly::one()));
        }
        let z = BigInt::from(z_factor(&rho));
        for mu in &mus {
            let count = power_sum_coefficient(&rho, mu);
            if count == 0 {
                continue;
            }
            let scale = BigRational::new(BigInt::from(chi) * BigInt::from(count), z.clone());
            let slot = acc.entry(mu.clone()).or_default();
            for (e, c) in plethysm.terms() {
                let v = slot.entry(e).or_insert_with(<BigRational as Zero>::zero);
                *v += &scale * BigRational::from_integer(BigInt::from(c));
            }
        }
    }
    for (mu, coeffs) in acc {
        let mut p = TPoly::default();
        for (e, c) in coeffs {
            if !c.is_integer() {
                return Err(Error::Arithmetic(format!("non-integral coefficient {c} at t^{e} of m_{mu}")));
            }
            let v = c.to_integer().to_i64().ok_or_else(|| Error::Arithmetic("coefficient overflow".into()))?;
            p.add_term(e, v);
        }
        out.add_term(mu, &p);
    }
    Ok(out)
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn det_complex(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let piv = (col..n).max_by(|&a, &b| m[a][col].norm().total_cmp(&m[b][col].norm())).expect("nonempty range");
        if m[piv][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        det *= m[col][col];
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            let (top, rest) = m.split_at_mut(row);
            for (x, p) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= f * p;
            }
        }
    }
    det
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
pub fn solve_complex(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Result<Vec<Complex64>> {
    let n = a.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm())).expect("nonempty range");
        if a[piv][col].norm() < 1e-300 {
            return Err(Error::Numeric("singular linear system".into()));
        }
        a.swap(piv, col);
        b.swap(piv, col);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            let (top, rest) = a.split_at_mut(row);
            for (x, p) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= f * p;
            }
            let v = b[col];
            b[row] -= f * v;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for row in (0..n).rev() {
        let s: Complex64 = (row + 1..n).map(|c| a[row][c] * x[c]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    Ok(x)
}

/// Schur polynomial `s_λ(v₁, …, v_k)` as a ratio of alternants.
pub fn schur_numeric(lambda: &Partition, values: &[Complex64]) -> Result<Complex64> {
    let k = values.len();
    if lambda.len() > k {
        return Ok(Complex64::new(0.0, 0.0));
    }
    for i in 0..k {
        for j in i + 1..k {
            if (values[i] - values[j]).norm() < 1e-9 {
                return Err(Error::Numeric(format!("values {i} and {j} nearly coincide")));
            }
        }
    }
    let alt = |shift: &dyn Fn(usize) -> usize| {
        let m = values.iter().map(|v| (0..k).map(|j| v.powi((shift(j) + k - 1 - j) as i32)).collect()).collect();
        det_complex(m)
    };
    Ok(alt(&|j| lambda.get(j)) / alt(&|_| 0))
}

/// Rounds to the nearest integer when within `tol`.
pub fn round_to_integer(x: f64, tol: f64) -> Option<i64> {
    let r = x.round();
    ((x - r).abs() <= tol).then_some(r as i64)
}
