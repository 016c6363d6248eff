//! Classical Alexander polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{det_laurent, Cyclotomic, CyclotomicField, IntegerMatrix, LaurentPoly, Rational};
use crate::error::{Error, Result};
use crate::group::{evaluated_jacobian, Presentation, Substitution};

/// Scales a polynomial with rational coefficients to lowest exponent 0,
/// coprime integer coefficients and a positive constant term.
pub fn integral_normal_form(p: &LaurentPoly) -> Result<LaurentPoly> {
    let (_, coeffs) = p
        .rational_coeffs()
        .ok_or_else(|| Error::InvalidArgument("polynomial has irrational coefficients".into()))?;
    let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &den).to_integer()).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if ints[0].is_negative() {
        g = -g;
    }
    let field = p.field().clone();
    Ok(LaurentPoly::from_rationals(
        &field,
        0,
        &ints.iter().map(|c| Rational::from_integer(c / &g)).collect::<Vec<_>>(),
    ))
}

/// Integer coefficients of an integral-normal-form polynomial, lowest degree first.
pub fn integer_coefficients(p: &LaurentPoly) -> Option<Vec<BigInt>> {
    let (_, c) = p.rational_coeffs()?;
    c.iter()
        .map(|r| r.is_integer().then(|| r.to_integer()))
        .collect()
}

/// Δ(−1) of an integral polynomial, absolute value.
pub fn determinant(p: &LaurentPoly) -> BigInt {
    let v = p.eval(&Cyclotomic::from_integer(p.field(), -1));
    v.as_rational().expect("rational polynomial").to_integer().abs()
}

/// Alexander polynomial from a deficiency-one presentation, deleting `column`
/// (default: the first generator with nonzero eta0).
pub fn alexander_with_column(p: &Presentation, column: Option<usize>) -> Result<LaurentPoly> {
    let eta = p
        .eta0()
        .ok_or_else(|| Error::Precondition("presentation has no eta0".into()))?
        .to_vec();
    if p.deficiency() != 1 {
        return Err(Error::Precondition(format!(
            "expected deficiency 1, got {} generators and {} relators",
            p.generator_count(),
            p.relators().len()
        )));
    }
    let q = CyclotomicField::rationals();
    let j = match column {
        Some(j) if j < eta.len() && eta[j] != 0 => j,
        Some(j) => {
            return Err(Error::InvalidArgument(format!("column {j} has eta0 = 0 or is out of range")))
        }
        None => eta
            .iter()
            .position(|&e| e != 0)
            .ok_or_else(|| Error::Precondition("eta0 is identically zero".into()))?,
    };
    let subst = Substitution::new(&q, vec![0; eta.len()], eta.clone())?;
    let jac = evaluated_jacobian(p, &subst)?;
    let minor: Vec<Vec<LaurentPoly>> = jac
        .iter()
        .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
        .collect();
    let det = det_laurent(&minor, &q)?;
    if det.is_zero() {
        return Err(Error::ZeroDeterminant("Alexander minor vanishes".into()));
    }
    // det(M_j)·(t − 1) = Δ·(t^{η_j} − 1)
    let tj = LaurentPoly::t_power(&q, eta[j]).sub(&LaurentPoly::one(&q));
    let delta = det.mul(&LaurentPoly::t_minus_one(&q)).exact_div(&tj)?;
    integral_normal_form(&delta)
}

pub fn alexander_from_presentation(p: &Presentation) -> Result<LaurentPoly> {
    alexander_with_column(p, None)
}

/// det(V − t·Vᵀ).
pub fn alexander_from_seifert(v: &IntegerMatrix) -> Result<LaurentPoly> {
    let q = CyclotomicField::rationals();
    if !v.is_square() {
        return Err(Error::Dimension("Seifert matrix must be square".into()));
    }
    let n = v.rows();
    let m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = Cyclotomic::from_bigint(&q, v.get(i, j).clone());
                    let b = Cyclotomic::from_bigint(&q, -v.get(j, i).clone());
                    LaurentPoly::from_terms(&q, [(0, a), (1, b)])
                })
                .collect()
        })
        .collect();
    let det = det_laurent(&m, &q)?;
    if det.is_zero() {
        return Err(Error::ZeroDeterminant("det(V - tV^T) vanishes".into()));
    }
    integral_normal_form(&det)
}

/// `k t² − (2k+1) t + k` as an integral polynomial.
pub fn twist_knot_alexander(k: i64) -> LaurentPoly {
    LaurentPoly::from_integers(&CyclotomicField::rationals(), 0, &[k, -(2 * k + 1), k])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Word;
    use crate::knot::diagram::{four_plat, two_bridge_presentation};

    fn ints(c: &[i64]) -> LaurentPoly {
        integral_normal_form(&LaurentPoly::from_integers(&CyclotomicField::rationals(), 0, c)).unwrap()
    }

    #[test]
    fn unknot() {
        let p = Presentation::new(1, vec![], Some(vec![1])).unwrap();
        assert!(alexander_from_presentation(&p).unwrap().is_one());
        assert!(alexander_from_seifert(&IntegerMatrix::zeros(0, 0)).unwrap().is_one());
    }

    #[test]
    fn trefoil_all_routes() {
        let expected = ints(&[1, -1, 1]);
        let p = Presentation::knot_group(2, vec![Word::parse("x1 x2 x1 X2 X1 X2").unwrap()]).unwrap();
        assert_eq!(alexander_from_presentation(&p).unwrap(), expected);
        let w = four_plat(&[3]).unwrap().wirtinger().unwrap();
        for j in 0..3 {
            assert_eq!(alexander_with_column(&w, Some(j)).unwrap(), expected);
        }
        let v = IntegerMatrix::from_i64(&[vec![-1, 1], vec![0, -1]]);
        assert_eq!(alexander_from_seifert(&v).unwrap(), expected);
    }

    #[test]
    fn figure_eight_and_twist_knots() {
        let expected = ints(&[1, -3, 1]);
        assert_eq!(alexander_from_presentation(&two_bridge_presentation(5, 3).unwrap()).unwrap(), expected);
        assert_eq!(alexander_from_presentation(&four_plat(&[2, 1, 1]).unwrap().wirtinger().unwrap()).unwrap(), expected);
        for k in 1..6 {
            let v = IntegerMatrix::from_i64(&[vec![-1, 1], vec![0, k]]);
            let a = alexander_from_seifert(&v).unwrap();
            assert_eq!(a, integral_normal_form(&twist_knot_alexander(k)).unwrap());
            assert_eq!(determinant(&a), BigInt::from(4 * k + 1));
        }
    }

    #[test]
    fn eight_thirteen() {
        let expected = ints(&[2, -7, 11, -7, 2]);
        let pres = two_bridge_presentation(29, 11).unwrap();
        assert_eq!(alexander_from_presentation(&pres).unwrap(), expected);
        let dia = four_plat(&[3, 1, 1, 1, 2]).unwrap();
        assert_eq!(dia.arc_count, 8);
        assert_eq!(alexander_from_presentation(&dia.wirtinger().unwrap()).unwrap(), expected);
    }
}
