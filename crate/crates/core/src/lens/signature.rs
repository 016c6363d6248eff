//! Tristram–Levine signatures with exact sign determination.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::algebra::real::{real_sign, sign_variations};
use crate::algebra::{det_laurent, Cyclotomic, CyclotomicField, IntegerMatrix, LaurentPoly};
use crate::error::{Error, Result};
use crate::knot::SeifertMatrix;

/// (1 − ω)V + (1 − ω̄)Vᵀ for ω = ζ_d^j.
pub fn hermitian_form(v: &SeifertMatrix, d: u32, j: i64) -> Result<Vec<Vec<Cyclotomic>>> {
    let field = CyclotomicField::new(d)?;
    let one = Cyclotomic::one(&field);
    let w = Cyclotomic::zeta_power(&field, j);
    let a = &one - &w;
    let b = a.conj();
    let m = v.matrix();
    let n = m.rows();
    Ok((0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let x = Cyclotomic::from_bigint(&field, m.get(r, c).clone());
                    let y = Cyclotomic::from_bigint(&field, m.get(c, r).clone());
                    &(&a * &x) + &(&b * &y)
                })
                .collect()
        })
        .collect())
}

/// Signature of the Hermitian form at ω = ζ_d^j.
///
/// The characteristic polynomial has real roots and coefficients in the real
/// subfield; Descartes' rule is exact for it once coefficient signs are known.
pub fn tristram_levine_signature(v: &SeifertMatrix, d: u32, j: i64) -> Result<i64> {
    if d == 0 {
        return Err(Error::InvalidArgument("root of unity order must be positive".into()));
    }
    if j.rem_euclid(d as i64) == 0 {
        return Ok(0);
    }
    let h = hermitian_form(v, d, j)?;
    let n = h.len();
    if n == 0 {
        return Ok(0);
    }
    let field = h[0][0].field().clone();
    let lambda = LaurentPoly::t_power(&field, 1);
    let shifted: Vec<Vec<LaurentPoly>> = h
        .iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, x)| {
                    let e = LaurentPoly::constant(-x);
                    if r == c {
                        lambda.add(&e)
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    let chi = det_laurent(&shifted, &field)?;
    if chi.coeff(0).is_zero() {
        return Err(Error::Singular(format!(
            "omega = zeta_{d}^{j} is a signature jump point: the form is singular"
        )));
    }
    let signs: Vec<Ordering> = (0..=n as i64).map(|i| real_sign(&chi.coeff(i))).collect::<Result<_>>()?;
    let negated: Vec<Ordering> = signs
        .iter()
        .enumerate()
        .map(|(i, s)| if i % 2 == 1 { s.reverse() } else { *s })
        .collect();
    let pos = sign_variations(&signs) as i64;
    let neg = sign_variations(&negated) as i64;
    if pos + neg != n as i64 {
        return Err(Error::Inconsistent(format!(
            "eigenvalue count {pos} + {neg} differs from the size {n}"
        )));
    }
    Ok(pos - neg)
}

/// Checks that `basis` spans a rank-g sublattice with BᵀVB = 0.
pub fn seifert_metabolic_check(v: &SeifertMatrix, basis: &[Vec<i64>]) -> Result<bool> {
    let n = v.matrix().rows();
    if basis.len() * 2 != n || basis.iter().any(|b| b.len() != n) {
        return Err(Error::Dimension(format!(
            "a metabolic basis for a {n}x{n} Seifert matrix needs {} vectors of length {n}",
            n / 2
        )));
    }
    let b = IntegerMatrix::from_i64(basis);
    let rank = b
        .smith_normal_form()
        .diagonal()
        .iter()
        .filter(|x| !x.is_zero())
        .count();
    if rank != basis.len() {
        return Err(Error::Dimension(format!("metabolic basis has rank {rank}, expected {}", basis.len())));
    }
    let prod = b.mul(v.matrix())?.mul(&b.transpose())?;
    Ok(prod.is_zero())
}

/// Sampled signature function: value at each ζ_d^j, j = 1..d−1, or `None` at jumps.
pub fn signature_samples(v: &SeifertMatrix, d: u32) -> Result<Vec<Option<i64>>> {
    (1..d as i64)
        .map(|j| match tristram_levine_signature(v, d, j) {
            Ok(s) => Ok(Some(s)),
            Err(Error::Singular(_)) => Ok(None),
            Err(e) => Err(e),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::from_i64(&[vec![-1, 1], vec![0, -1]]).unwrap()
    }

    #[test]
    fn trefoil_at_minus_one() {
        assert_eq!(tristram_levine_signature(&trefoil(), 2, 1).unwrap(), -2);
        assert_eq!(tristram_levine_signature(&trefoil(), 7, 0).unwrap(), 0);
        // the jump is at ω = e^{±iπ/3}, roots of t² − t + 1
        assert!(matches!(tristram_levine_signature(&trefoil(), 6, 1), Err(Error::Singular(_))));
        assert_eq!(tristram_levine_signature(&trefoil(), 12, 1).unwrap(), 0);
        assert_eq!(tristram_levine_signature(&trefoil(), 12, 5).unwrap(), -2);
    }

    #[test]
    fn figure_eight_vanishes() {
        let v = SeifertMatrix::twist_knot(1);
        for s in signature_samples(&v, 12).unwrap().into_iter().flatten() {
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn metabolic_forms() {
        let v = SeifertMatrix::from_i64(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert!(seifert_metabolic_check(&v, &[vec![1, 0]]).unwrap());
        let stevedore = SeifertMatrix::twist_knot(2);
        assert!(seifert_metabolic_check(&stevedore, &[vec![1, -1]]).unwrap());
        assert!(!seifert_metabolic_check(&stevedore, &[vec![1, 1]]).unwrap());
        assert!(seifert_metabolic_check(&stevedore, &[vec![0, 0]]).is_err());
        for d in 2..=30 {
            for s in signature_samples(&stevedore, d).unwrap().into_iter().flatten() {
                assert_eq!(s, 0, "d = {d}");
            }
        }
    }
}
