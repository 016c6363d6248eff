//! Reidemeister–Schreier presentations of finite cyclic covers.

use super::presentation::{Abelianization, Presentation};
use super::word::{Letter, Word};
use crate::error::{Error, Result};

/// Presentation of the index-n subgroup `ker(π → Z → Z/n)`.
#[derive(Clone, Debug)]
pub struct CoverPresentation {
    pub base: Presentation,
    pub n: usize,
    pub presentation: Presentation,
    /// Z-valuation of the cover generators (onto).
    pub eta: Vec<i64>,
    /// The word for x^n, x the transversal generator.
    pub lifted_meridian: Word,
    /// Index of the base generator whose powers form the transversal.
    pub transversal_generator: usize,
    /// `(base generator, coset)` label of each cover generator.
    pub labels: Vec<(usize, usize)>,
}

pub fn cyclic_cover_presentation(p: &Presentation, n: usize) -> Result<CoverPresentation> {
    if n == 0 {
        return Err(Error::InvalidArgument("cover degree must be positive".into()));
    }
    let eta0 = p
        .eta0()
        .ok_or_else(|| Error::Precondition("presentation has no eta0 (not a knot group?)".into()))?;
    let x = eta0
        .iter()
        .position(|&e| e == 1)
        .ok_or_else(|| Error::Precondition("eta0 is not onto Z: no generator maps to 1".into()))?;
    let m = p.generator_count();
    let ni = n as i64;

    // y_{x,c} for c < n-1 equal 1 in the rewritten group and are dropped
    let mut index = vec![vec![None; n]; m];
    let mut labels = Vec::new();
    let mut eta = Vec::new();
    for (i, &e) in eta0.iter().enumerate() {
        for c in 0..n {
            if i == x && c + 1 < n {
                continue;
            }
            let c = c as i64;
            index[i][c as usize] = Some(labels.len());
            labels.push((i, c as usize));
            eta.push((c + e - (c + e).rem_euclid(ni)) / ni);
        }
    }

    let rewrite = |w: &Word, start: usize| -> Word {
        let mut c = start as i64;
        let mut out = Word::identity();
        for l in w.letters() {
            let e = eta0[l.gen];
            if l.inverse {
                c = (c - e).rem_euclid(ni);
                if let Some(g) = index[l.gen][c as usize] {
                    out.push(Letter { gen: g, inverse: true });
                }
            } else {
                if let Some(g) = index[l.gen][c as usize] {
                    out.push(Letter { gen: g, inverse: false });
                }
                c = (c + e).rem_euclid(ni);
            }
        }
        out
    };

    let mut relators = Vec::with_capacity(n * p.relators().len());
    for r in p.relators() {
        for c in 0..n {
            relators.push(rewrite(r, c));
        }
    }
    let lifted_meridian = Word::generator(index[x][n - 1].expect("top lift kept"));
    let presentation = Presentation::new(labels.len(), relators, Some(eta.clone()))?;
    Ok(CoverPresentation {
        base: p.clone(),
        n,
        presentation,
        eta,
        lifted_meridian,
        transversal_generator: x,
        labels,
    })
}

impl CoverPresentation {
    /// H₁ of the n-fold branched cover: kill the lifted meridian.
    pub fn branched_homology(&self) -> Abelianization {
        let with = self
            .presentation
            .with_relators(std::slice::from_ref(&self.lifted_meridian))
            .expect("meridian uses cover generators");
        with.abelianization()
    }
}
