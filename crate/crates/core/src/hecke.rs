//! Irreducible and skew Hecke-algebra characters via broken rim hook tableaux.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{Ring, TPoly};
use crate::combinatorics::{enumerate_brh_additions, partitions_of, BrokenRimHookStats, Partition};
use crate::error::{Error, Result};

/// `(t−1)^{#b−1} ∏_h (−1)^{r(h)−1} t^{c(h)−1}`, with the empty hook weighted 1.
pub fn brh_weight(stats: &BrokenRimHookStats) -> TPoly {
    if stats.components.is_empty() {
        return TPoly::one();
    }
    let mut w = TPoly::t_minus_one().pow(stats.num_components() as u32 - 1);
    for &(r, c) in &stats.components {
        let sign = if (r - 1) % 2 == 0 { 1 } else { -1 };
        w = w.mul(&TPoly::monomial(sign, c as i32 - 1));
    }
    w
}

/// Sum over broken rim hook tableaux of shape `λ/μ` and content `α`.
///
/// The dynamic programme runs over the intermediate shapes, adding one broken
/// rim hook per content part and discarding shapes that leave `λ`.
pub fn skew_hecke_character(lambda: &Partition, mu: &Partition, alpha: &[usize]) -> TPoly {
    if !lambda.contains(mu) || lambda.weight() != mu.weight() + alpha.iter().sum::<usize>() {
        return TPoly::zero();
    }
    let mut frontier: BTreeMap<Partition, TPoly> = BTreeMap::from([(mu.clone(), TPoly::one())]);
    for &a in alpha {
        let mut next: BTreeMap<Partition, TPoly> = BTreeMap::new();
        for (shape, coeff) in &frontier {
            for (nu, st) in enumerate_brh_additions(shape, a, None) {
                if !lambda.contains(&nu) {
                    continue;
                }
                let slot = next.entry(nu).or_default();
                *slot = slot.add(&coeff.mul(&brh_weight(&st)));
            }
        }
        next.retain(|_, v| !v.is_zero());
        frontier = next;
    }
    frontier.remove(lambda).unwrap_or_default()
}

/// `χ_t^λ(α)`.
pub fn hecke_character(lambda: &Partition, alpha: &[usize]) -> Result<TPoly> {
    if lambda.weight() != alpha.iter().sum::<usize>() {
        return Err(Error::WeightMismatch(format!("|{lambda}| ≠ |{alpha:?}|")));
    }
    Ok(skew_hecke_character(lambda, &Partition::empty(), alpha))
}

/// Character table of `H_m(t)`: rows are irreducibles, columns are contents.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharacterTable {
    pub m: usize,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub values: Vec<Vec<TPoly>>,
}

impl CharacterTable {
    pub fn get(&self, lambda: &Partition, alpha: &Partition) -> Option<&TPoly> {
        let i = self.rows.iter().position(|r| r == lambda)?;
        let j = self.cols.iter().position(|c| c == alpha)?;
        Some(&self.values[i][j])
    }
}

pub fn character_table(m: usize) -> CharacterTable {
    let shapes = partitions_of(m);
    let values =
        shapes.par_iter().map(|lambda| shapes.iter().map(|alpha| skew_hecke_character(lambda, &Partition::empty(), alpha.parts())).collect()).collect();
    CharacterTable { m, rows: shapes.clone(), cols: shapes, values }
}
