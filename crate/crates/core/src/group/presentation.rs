//! Finite presentations and their abelianizations.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::word::Word;
use crate::algebra::matrix::{IntegerMatrix, SmithForm};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: usize,
    relators: Vec<Word>,
    eta0: Option<Vec<i64>>,
}

impl Presentation {
    pub fn new(generators: usize, relators: Vec<Word>, eta0: Option<Vec<i64>>) -> Result<Self> {
        if generators == 0 {
            return Err(Error::InvalidArgument("a presentation needs a generator".into()));
        }
        for r in &relators {
            if let Some(g) = r.max_generator() {
                if g >= generators {
                    return Err(Error::GeneratorOutOfRange {
                        index: g,
                        count: generators,
                    });
                }
            }
        }
        if let Some(eta) = &eta0 {
            if eta.len() != generators {
                return Err(Error::Dimension(format!(
                    "eta0 has {} entries for {generators} generators",
                    eta.len()
                )));
            }
            if let Some(r) = relators.iter().find(|r| r.weighted_sum(eta) != 0) {
                return Err(Error::Inconsistent(format!("eta0 does not kill relator {r}")));
            }
        }
        Ok(Presentation {
            generators,
            relators,
            eta0,
        })
    }

    /// Knot-group style presentation: eta0 taken from the abelianization.
    pub fn knot_group(generators: usize, relators: Vec<Word>) -> Result<Self> {
        let p = Self::new(generators, relators, None)?;
        let eta = p
            .abelianization()
            .knot_eta()
            .ok_or_else(|| Error::Precondition("abelianization is not Z".into()))?;
        Self::new(generators, p.relators, Some(eta))
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn eta0(&self) -> Option<&[i64]> {
        self.eta0.as_deref()
    }

    pub fn deficiency(&self) -> i64 {
        self.generators as i64 - self.relators.len() as i64
    }

    /// Copy with extra relators appended (eta0 dropped if it no longer applies).
    pub fn with_relators(&self, extra: &[Word]) -> Result<Self> {
        let mut rel = self.relators.clone();
        rel.extend_from_slice(extra);
        let eta = self
            .eta0
            .clone()
            .filter(|e| extra.iter().all(|w| w.weighted_sum(e) == 0));
        Self::new(self.generators, rel, eta)
    }

    /// Relator exponent-sum matrix, one row per relator.
    pub fn exponent_matrix(&self) -> IntegerMatrix {
        let rows = self
            .relators
            .iter()
            .map(|r| {
                (0..self.generators)
                    .map(|g| BigInt::from(r.exponent_sum(g)))
                    .collect()
            })
            .collect();
        IntegerMatrix::from_rows_with_cols(rows, self.generators).expect("consistent widths")
    }

    pub fn abelianization(&self) -> Abelianization {
        Abelianization::of_relations(&self.exponent_matrix())
    }
}

/// The group `Z^m / rowspace(R)` in invariant-factor coordinates.
#[derive(Clone, Debug)]
pub struct Abelianization {
    /// Nontrivial invariant factors; 0 marks a free summand.
    pub invariants: Vec<BigInt>,
    /// Coordinates of each original generator on the invariant-factor basis,
    /// reduced modulo the finite invariants.
    pub generator_images: Vec<Vec<BigInt>>,
    pub smith: SmithForm,
}

impl Abelianization {
    pub fn of_relations(rel: &IntegerMatrix) -> Self {
        let smith = rel.smith_normal_form();
        let m = rel.cols();
        let mut diag = smith.diagonal();
        diag.resize(m, BigInt::zero());
        let keep: Vec<usize> = (0..m).filter(|&k| !diag[k].is_one()).collect();
        let invariants: Vec<BigInt> = keep.iter().map(|&k| diag[k].clone()).collect();
        // x ↦ x·V sends the relation lattice onto the diagonal one
        let generator_images = (0..m)
            .map(|g| {
                keep.iter()
                    .zip(&invariants)
                    .map(|(&k, d)| {
                        let c = smith.v.get(g, k).clone();
                        if d.is_zero() {
                            c
                        } else {
                            num_integer::Integer::mod_floor(&c, d)
                        }
                    })
                    .collect()
            })
            .collect();
        Abelianization {
            invariants,
            generator_images,
            smith,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.invariants.iter().filter(|d| d.is_zero()).count()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.rank() > 0 {
            return None;
        }
        Some(self.invariants.iter().product())
    }

    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariants.iter().filter(|d| !d.is_zero()).cloned().collect()
    }

    /// For a group isomorphic to Z, the generator images normalized so the
    /// first nonzero one is positive.
    pub fn knot_eta(&self) -> Option<Vec<i64>> {
        if self.invariants.len() != 1 || !self.invariants[0].is_zero() {
            return None;
        }
        let mut eta: Vec<i64> = self
            .generator_images
            .iter()
            .map(|v| v[0].to_i64())
            .collect::<Option<_>>()?;
        if eta.iter().find(|x| **x != 0).is_some_and(|x| *x < 0) {
            eta.iter_mut().for_each(|x| *x = -*x);
        }
        Some(eta)
    }

    /// Human-readable group, e.g. `Z + Z/3`.
    pub fn describe(&self) -> String {
        if self.invariants.is_empty() {
            return "0".into();
        }
        self.invariants
            .iter()
            .map(|d| {
                if d.is_zero() {
                    "Z".to_string()
                } else {
                    format!("Z/{}", d.abs())
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
