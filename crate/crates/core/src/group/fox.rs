//! Integral group ring of a free group and Fox derivatives.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::presentation::Presentation;
use super::word::Word;
use crate::algebra::{Cyclotomic, CyclotomicField, LaurentPoly};
use crate::error::{Error, Result};

/// Finite formal sum of words with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(w, 1);
        e
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(w).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Word, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), *c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.mul(w2), c1 * c2);
            }
        }
        out
    }

    /// Left multiplication by a word.
    pub fn left_mul(&self, w: &Word) -> Self {
        let mut out = Self::zero();
        for (v, c) in &self.terms {
            out.add_term(w.mul(v), *c);
        }
        out
    }

    /// Augmentation: sum of coefficients.
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| match c {
                1 => format!("[{w}]"),
                -1 => format!("-[{w}]"),
                _ => format!("{c}[{w}]"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// ∂w/∂x_i, with `generators` bounding the admissible index.
pub fn fox_derivative(w: &Word, i: usize, generators: usize) -> Result<GroupRingElement> {
    if i >= generators {
        return Err(Error::GeneratorOutOfRange {
            index: i,
            count: generators,
        });
    }
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for &l in w.letters() {
        if l.gen == i {
            if l.inverse {
                out.add_term(prefix.mul(&Word::from_letters([l])), -1);
            } else {
                out.add_term(prefix.clone(), 1);
            }
        }
        prefix.push(l);
    }
    Ok(out)
}

/// Matrix of ∂r_i/∂x_j, one row per relator.
pub fn fox_jacobian(p: &Presentation) -> Vec<Vec<GroupRingElement>> {
    let m = p.generator_count();
    p.relators()
        .iter()
        .map(|r| {
            (0..m)
                .map(|j| fox_derivative(r, j, m).expect("index within range"))
                .collect()
        })
        .collect()
}

/// The substitution x ↦ ζ^{χ(x)} t^{η(x)} into Q(ζ_d)[t, t⁻¹].
#[derive(Clone, Debug)]
pub struct Substitution {
    field: Arc<CyclotomicField>,
    zeta_exp: Vec<i64>,
    eta: Vec<i64>,
}

impl Substitution {
    pub fn new(field: &Arc<CyclotomicField>, zeta_exp: Vec<i64>, eta: Vec<i64>) -> Result<Self> {
        if zeta_exp.len() != eta.len() {
            return Err(Error::Dimension("character and eta lengths differ".into()));
        }
        Ok(Substitution {
            field: field.clone(),
            zeta_exp,
            eta,
        })
    }

    /// From explicit roots of unity ρ(x) in Q(ζ_d).
    pub fn from_roots(field: &Arc<CyclotomicField>, rho: &[Cyclotomic], eta: Vec<i64>) -> Result<Self> {
        let d = field.order() as i64;
        let exps = rho
            .iter()
            .map(|r| {
                (0..d)
                    .find(|&k| &Cyclotomic::zeta_power(field, k) == r)
                    .ok_or_else(|| Error::InvalidArgument(format!("{r} is not a root of unity of order dividing {d}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, exps, eta)
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn eta(&self) -> &[i64] {
        &self.eta
    }

    pub fn zeta_exponents(&self) -> &[i64] {
        &self.zeta_exp
    }

    /// Image of a single word, as (ζ exponent, t exponent).
    pub fn word_image(&self, w: &Word) -> Result<(i64, i64)> {
        let mut z = 0;
        let mut t = 0;
        for l in w.letters() {
            if l.gen >= self.eta.len() {
                return Err(Error::GeneratorOutOfRange {
                    index: l.gen,
                    count: self.eta.len(),
                });
            }
            z += l.exp() * self.zeta_exp[l.gen];
            t += l.exp() * self.eta[l.gen];
        }
        Ok((z, t))
    }

    pub fn eval(&self, e: &GroupRingElement) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(&self.field);
        for (w, c) in e.terms() {
            let (z, t) = self.word_image(w)?;
            let coeff = Cyclotomic::zeta_power(&self.field, z).scale_int(&(*c).into());
            out.add_term(t, &coeff);
        }
        Ok(out)
    }
}

/// Fox jacobian pushed through a substitution, computed letter by letter
/// without materializing group-ring elements.
pub fn evaluated_jacobian(p: &Presentation, subst: &Substitution) -> Result<Vec<Vec<LaurentPoly>>> {
    let m = p.generator_count();
    if subst.eta.len() != m {
        return Err(Error::Dimension(format!(
            "substitution covers {} generators, presentation has {m}",
            subst.eta.len()
        )));
    }
    let field = &subst.field;
    p.relators()
        .iter()
        .map(|r| {
            let mut row = vec![LaurentPoly::zero(field); m];
            let (mut z, mut t) = (0i64, 0i64);
            for l in r.letters() {
                let (dz, dt) = (subst.zeta_exp[l.gen], subst.eta[l.gen]);
                if l.inverse {
                    z -= dz;
                    t -= dt;
                    row[l.gen].add_term(t, &-Cyclotomic::zeta_power(field, z));
                } else {
                    row[l.gen].add_term(t, &Cyclotomic::zeta_power(field, z));
                    z += dz;
                    t += dt;
                }
            }
            Ok(row)
        })
        .collect()
}

/// evaluate_group_ring with ρ given as ζ-exponents.
pub fn evaluate_group_ring(
    e: &GroupRingElement,
    field: &Arc<CyclotomicField>,
    zeta_exp: &[i64],
    eta: &[i64],
) -> Result<LaurentPoly> {
    Substitution::new(field, zeta_exp.to_vec(), eta.to_vec())?.eval(e)
}
