//! Twisted Alexander polynomials of cyclic covers via Wada's determinant recipe.

use std::sync::Arc;

use num_traits::ToPrimitive;

use crate::algebra::{det_laurent, Cyclotomic, CyclotomicField, LaurentPoly};
use crate::error::{Error, Result};
use crate::group::{cyclic_cover_presentation, evaluated_jacobian, CoverPresentation, Presentation, Substitution};
use crate::knot::Character;

/// A twisted Alexander polynomial in canonical unit form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedPolynomial {
    pub d: u32,
    pub n: usize,
    pub value: LaurentPoly,
    pub character: Character,
    /// Cover generator whose column was deleted; `None` for derived values.
    pub deleted_column: Option<usize>,
    /// Known factors whose product is `value` up to units and powers of (t − 1).
    pub factors: Vec<LaurentPoly>,
}

impl TwistedPolynomial {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        self.value.field()
    }
}

/// The character pulled back to the generators of the cover presentation.
#[derive(Clone, Debug)]
pub struct CoverCharacter {
    pub cover: CoverPresentation,
    /// ζ-exponent of each cover generator.
    pub zeta_exponents: Vec<i64>,
}

/// Composes `π₁(cover) → H₁(branched cover) → Z/d`.
pub fn cover_character(p: &Presentation, n: usize, chi: &Character) -> Result<CoverCharacter> {
    let cover = cyclic_cover_presentation(p, n)?;
    let h = cover.branched_homology();
    if h.rank() > 0 {
        return Err(Error::Precondition(format!(
            "H1 of the {n}-fold branched cover is infinite ({})",
            h.describe()
        )));
    }
    let orders: Vec<u64> = h
        .invariants
        .iter()
        .map(|x| x.to_u64().ok_or_else(|| Error::InvalidArgument("invariant factor too large".into())))
        .collect::<Result<_>>()?;
    chi.validate(&orders)?;
    let d = chi.modulus as i64;
    let zeta_exponents = h
        .generator_images
        .iter()
        .map(|img| {
            img.iter()
                .zip(&chi.values)
                .map(|(a, &v)| (a % d).to_i64().unwrap() * v as i64)
                .sum::<i64>()
                .rem_euclid(d)
        })
        .collect();
    let cc = CoverCharacter {
        cover,
        zeta_exponents,
    };
    let m = cc.cover.lifted_meridian.weighted_sum(&cc.zeta_exponents).rem_euclid(d);
    if m != 0 {
        return Err(Error::Inconsistent("character does not vanish on the lifted meridian".into()));
    }
    Ok(cc)
}

/// Δ_χ with the default column: the lowest cover generator with η ≠ 0.
pub fn twisted_alexander(p: &Presentation, n: usize, chi: &Character) -> Result<TwistedPolynomial> {
    twisted_alexander_with_column(p, n, chi, None)
}

pub fn twisted_alexander_with_column(
    p: &Presentation,
    n: usize,
    chi: &Character,
    column: Option<usize>,
) -> Result<TwistedPolynomial> {
    if !is_prime_power(chi.modulus) {
        log::warn!("character modulus {} is not a prime power", chi.modulus);
    }
    let d = u32::try_from(chi.modulus).map_err(|_| Error::InvalidArgument("modulus too large".into()))?;
    let field = CyclotomicField::new(d)?;
    let cc = cover_character(p, n, chi)?;
    let eta = &cc.cover.eta;
    let j = match column {
        Some(j) if j < eta.len() && eta[j] != 0 => j,
        Some(j) => {
            return Err(Error::InvalidArgument(format!(
                "column {j} is out of range or has eta = 0"
            )))
        }
        None => eta
            .iter()
            .position(|&e| e != 0)
            .ok_or_else(|| Error::Precondition("eta vanishes on every cover generator".into()))?,
    };
    let subst = Substitution::new(&field, cc.zeta_exponents.clone(), eta.clone())?;
    let jac = evaluated_jacobian(&cc.cover.presentation, &subst)?;
    let minor: Vec<Vec<LaurentPoly>> = jac
        .iter()
        .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
        .collect();
    if minor.iter().any(|r| r.len() != minor.len()) {
        return Err(Error::Dimension(format!(
            "cover presentation gives a {}x{} minor",
            minor.len(),
            minor.first().map_or(0, Vec::len)
        )));
    }
    let det = det_laurent(&minor, &field)?;
    if det.is_zero() {
        return Err(Error::ZeroDeterminant(format!(
            "Fox minor with column {j} deleted vanishes; the presentation may be defective"
        )));
    }
    let mut num = det;
    if chi.is_trivial() {
        num = num.mul(&LaurentPoly::t_minus_one(&field));
    }
    let root = Cyclotomic::zeta_power(&field, cc.zeta_exponents[j]);
    let den = LaurentPoly::monomial(root, eta[j]).sub(&LaurentPoly::one(&field));
    let value = num.exact_div(&den)?.canonical()?;
    Ok(TwistedPolynomial {
        d,
        n,
        factors: vec![value.clone()],
        value,
        character: chi.clone(),
        deleted_column: Some(j),
    })
}

/// σ_s applied coefficientwise; matches the character s·χ.
pub fn galois_twist(p: &TwistedPolynomial, s: i64) -> Result<TwistedPolynomial> {
    let value = p.value.galois(s)?.canonical()?;
    let factors = p
        .factors
        .iter()
        .map(|f| f.galois(s).and_then(|g| g.canonical()))
        .collect::<Result<_>>()?;
    Ok(TwistedPolynomial {
        d: p.d,
        n: p.n,
        value,
        character: p.character.scaled(s),
        deleted_column: None,
        factors,
    })
}

/// Δ(K₁ # … # K_m, χ₁ ⊕ … ⊕ χ_m) = (t − 1)^{1−r} ∏ Δ(K_i, χ_i), where r ≥ 1 counts
/// the summands with nontrivial character (no correction when r ≤ 1).
pub fn connected_sum_twisted(parts: &[TwistedPolynomial]) -> Result<TwistedPolynomial> {
    let first = parts
        .first()
        .ok_or_else(|| Error::InvalidArgument("connected sum of no knots".into()))?;
    if parts.len() == 1 {
        return Ok(first.clone());
    }
    for p in &parts[1..] {
        if p.d != first.d {
            return Err(Error::FieldMismatch {
                left: first.d,
                right: p.d,
            });
        }
        if p.n != first.n {
            return Err(Error::InvalidArgument(format!(
                "cover degrees differ: {} and {}",
                first.n, p.n
            )));
        }
    }
    let field = first.field().clone();
    let product = parts.iter().fold(LaurentPoly::one(&field), |acc, p| acc.mul(&p.value));
    let r = parts.iter().filter(|p| !p.character.is_trivial()).count() as u32;
    let t1 = LaurentPoly::t_minus_one(&field).pow(r.saturating_sub(1));
    let value = product
        .exact_div(&t1)
        .map_err(|_| Error::NotDivisible("(t-1) does not divide the connected-sum product".into()))?
        .canonical()?;
    let values = parts.iter().flat_map(|p| p.character.values.iter().map(|&v| v as i64)).collect();
    Ok(TwistedPolynomial {
        d: first.d,
        n: first.n,
        value,
        character: Character::new(first.character.modulus, values)?,
        deleted_column: None,
        factors: parts.iter().flat_map(|p| p.factors.iter().cloned()).collect(),
    })
}

pub(crate) fn is_prime_power(d: u64) -> bool {
    d == 1 || crate::algebra::arith::prime_power_base(d).is_some()
}

/// Δ_K(s)·Δ_K(−s) rewritten in t = s²: the order of H₁ of the 2-fold cyclic
/// cover with trivial coefficients.
pub fn double_cover_norm(alexander: &LaurentPoly) -> Result<LaurentPoly> {
    let field = alexander.field().clone();
    let neg = LaurentPoly::from_terms(
        &field,
        alexander
            .terms()
            .iter()
            .map(|(&e, c)| (e, if e % 2 == 0 { c.clone() } else { -c })),
    );
    let prod = alexander.mul(&neg);
    if prod.terms().keys().any(|e| e % 2 != 0) {
        return Err(Error::Inconsistent("norm is not even in s".into()));
    }
    let halved = LaurentPoly::from_terms(&field, prod.terms().iter().map(|(&e, c)| (e / 2, c.clone())));
    if halved.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    halved.canonical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Word;
    use crate::knot::{alexander_from_presentation, four_plat, two_bridge_presentation};

    fn trefoil() -> Presentation {
        Presentation::knot_group(2, vec![Word::parse("x1 x2 x1 X2 X1 X2").unwrap()]).unwrap()
    }

    fn rational_canonical(p: &LaurentPoly) -> LaurentPoly {
        let q = CyclotomicField::rationals();
        let (low, c) = p.rational_coeffs().expect("rational");
        LaurentPoly::from_rationals(&q, low, &c).canonical().unwrap()
    }

    #[test]
    fn unknot_is_one() {
        let p = Presentation::new(1, vec![], Some(vec![1])).unwrap();
        let chi = Character::trivial(2, 0);
        let r = twisted_alexander(&p, 2, &chi).unwrap();
        assert!(r.value.is_one());
    }

    #[test]
    fn trivial_character_matches_double_cover_norm() {
        for p in [trefoil(), two_bridge_presentation(5, 3).unwrap(), two_bridge_presentation(29, 11).unwrap()] {
            let delta = alexander_from_presentation(&p).unwrap();
            let expected = double_cover_norm(&delta).unwrap();
            let h = cyclic_cover_presentation(&p, 2).unwrap().branched_homology();
            let r = twisted_alexander(&p, 2, &Character::trivial(3, h.invariants.len())).unwrap();
            assert_eq!(rational_canonical(&r.value), expected);
        }
    }

    #[test]
    fn trefoil_order_three_character() {
        let p = trefoil();
        let chi = Character::new(3, vec![1]).unwrap();
        let a = twisted_alexander(&p, 2, &chi).unwrap();
        let w = four_plat(&[3]).unwrap().wirtinger().unwrap();
        // bases of H1 may differ by a unit; compare up to Galois action
        let b = twisted_alexander(&w, 2, &chi).unwrap();
        let b2 = galois_twist(&b, 2).unwrap();
        assert!(a.value == b.value || a.value == b2.value);
    }

    #[test]
    fn column_independence_trefoil() {
        let p = trefoil();
        let chi = Character::new(3, vec![1]).unwrap();
        let cover = cyclic_cover_presentation(&p, 2).unwrap();
        let base = twisted_alexander(&p, 2, &chi).unwrap().value;
        for (j, &e) in cover.eta.iter().enumerate() {
            if e != 0 {
                assert_eq!(twisted_alexander_with_column(&p, 2, &chi, Some(j)).unwrap().value, base);
            }
        }
    }

    #[test]
    fn connected_sum_single_and_mismatch() {
        let p = trefoil();
        let a = twisted_alexander(&p, 2, &Character::new(3, vec![1]).unwrap()).unwrap();
        assert_eq!(connected_sum_twisted(std::slice::from_ref(&a)).unwrap(), a);
        let b = twisted_alexander(&p, 2, &Character::trivial(1, 1)).unwrap();
        assert!(connected_sum_twisted(&[a, b]).is_err());
    }

    #[test]
    fn bad_characters_rejected() {
        let p = trefoil();
        assert!(twisted_alexander(&p, 2, &Character::new(5, vec![1]).unwrap()).is_err());
        assert!(twisted_alexander(&p, 2, &Character::new(3, vec![1, 1]).unwrap()).is_err());
    }
}
