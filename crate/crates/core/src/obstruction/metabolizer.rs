//! Self-annihilating subgroups of half order.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::arith::is_prime;
use crate::algebra::rational::is_perfect_square;
use crate::error::{Error, Result};
use crate::knot::homology::EXHAUSTIVE_LIMIT;
use crate::knot::LinkedAbelianGroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Metabolizer {
    /// Generators in the invariant-factor coordinates of the ambient group.
    pub generators: Vec<Vec<i64>>,
    pub order: u64,
}

impl Metabolizer {
    /// All elements of the subgroup, sorted.
    pub fn elements(&self, g: &LinkedAbelianGroup) -> Vec<Vec<i64>> {
        span(g, &self.generators).into_iter().collect()
    }

    /// Recomputes |M|² = |G| and λ(M, M) = 0.
    pub fn verify(&self, g: &LinkedAbelianGroup) -> bool {
        let els = self.elements(g);
        els.len() as u64 == self.order
            && self.order * self.order == g.order()
            && self
                .generators
                .iter()
                .all(|x| self.generators.iter().all(|y| g.lambda(x, y).is_zero()))
    }
}

/// Enumeration outcome; `reason` explains an empty list caused by the input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetabolizerSearch {
    pub metabolizers: Vec<Metabolizer>,
    pub method: &'static str,
    pub reason: Option<String>,
}

pub fn enumerate_metabolizers(g: &LinkedAbelianGroup) -> Result<MetabolizerSearch> {
    let order = g.order();
    if is_perfect_square(&order.into()).is_none() {
        return Ok(MetabolizerSearch {
            metabolizers: vec![],
            method: "none",
            reason: Some(format!("|G| = {order} is not a perfect square")),
        });
    }
    if let Some(ms) = prime_square_fast_path(g) {
        return Ok(MetabolizerSearch {
            metabolizers: ms,
            method: "prime-square",
            reason: None,
        });
    }
    Ok(MetabolizerSearch {
        metabolizers: brute_force_metabolizers(g)?,
        method: "exhaustive",
        reason: None,
    })
}

/// `(Z/p)²` with a diagonal form: ⟨(1, a)⟩ with λ₁₁ + a²λ₂₂ = 0.
fn prime_square_fast_path(g: &LinkedAbelianGroup) -> Option<Vec<Metabolizer>> {
    let &[p, q] = g.orders() else { return None };
    if p != q || !is_prime(p) || !g.linking_matrix()[0][1].is_integer() {
        return None;
    }
    let p = p as i64;
    // ⟨(1,0)⟩ and ⟨(0,1)⟩ are isotropic only for a singular form
    let axes = g.lambda(&[1, 0], &[1, 0]).is_zero() || g.lambda(&[0, 1], &[0, 1]).is_zero();
    if axes {
        return None;
    }
    let out = (1..p)
        .filter(|&a| g.lambda(&[1, a], &[1, a]).is_zero())
        .map(|a| Metabolizer {
            generators: vec![vec![1, a]],
            order: p as u64,
        })
        .collect();
    Some(out)
}

fn span(g: &LinkedAbelianGroup, gens: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let mut set = BTreeSet::new();
    set.insert(vec![0; g.rank()]);
    for x in gens {
        let mut frontier: Vec<Vec<i64>> = set.iter().cloned().collect();
        while let Some(y) = frontier.pop() {
            let z = g.add(&y, x);
            if set.insert(z.clone()) {
                frontier.push(z);
            }
        }
    }
    set
}

/// All self-annihilating subgroups of order √|G|, each given by greedy
/// lexicographically smallest generators.
pub fn brute_force_metabolizers(g: &LinkedAbelianGroup) -> Result<Vec<Metabolizer>> {
    let order = g.order();
    if order > EXHAUSTIVE_LIMIT {
        return Err(Error::Precondition(format!(
            "|G| = {order} exceeds the exhaustive search limit {EXHAUSTIVE_LIMIT}"
        )));
    }
    let target = (order as f64).sqrt().round() as u64;
    if target * target != order {
        return Ok(vec![]);
    }
    let isotropic: Vec<Vec<i64>> = g
        .elements()
        .into_iter()
        .filter(|x| !g.is_zero(x) && g.lambda(x, x).is_zero())
        .collect();
    let zero: BTreeSet<Vec<i64>> = span(g, &[]);
    let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    let mut layer: Vec<BTreeSet<Vec<i64>>> = vec![zero];
    let mut found: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    if target == 1 {
        found.insert(vec![vec![0; g.rank()]]);
    }
    while !layer.is_empty() {
        let mut next = Vec::new();
        for sub in &layer {
            for x in &isotropic {
                if sub.contains(x) || !sub.iter().all(|y| g.lambda(x, y).is_zero()) {
                    continue;
                }
                let mut gens: Vec<Vec<i64>> = sub.iter().cloned().collect();
                gens.push(x.clone());
                let bigger = span(g, &gens);
                let size = bigger.len() as u64;
                if size > target || !target.is_multiple_of(size) {
                    continue;
                }
                let key: Vec<Vec<i64>> = bigger.iter().cloned().collect();
                if !seen.insert(key.clone()) {
                    continue;
                }
                if size == target {
                    found.insert(key);
                } else {
                    next.push(bigger);
                }
            }
        }
        layer = next;
    }
    Ok(found
        .into_iter()
        .map(|els| Metabolizer {
            generators: greedy_generators(g, &els),
            order: target,
        })
        .collect())
}

fn greedy_generators(g: &LinkedAbelianGroup, els: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut gens: Vec<Vec<i64>> = Vec::new();
    let mut cur = span(g, &gens);
    for x in els {
        if !cur.contains(x) {
            gens.push(x.clone());
            cur = span(g, &gens);
        }
    }
    gens
}
