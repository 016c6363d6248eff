//! Determinants over Q(ζ_d) and over Q(ζ_d)[t, t⁻¹].

use std::sync::Arc;

use rayon::prelude::*;

use super::cyclotomic::{Cyclotomic, CyclotomicField};
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Gaussian elimination over the field, choosing the sparsest pivot.
pub fn field_det(field: &Arc<CyclotomicField>, mut a: Vec<Vec<Cyclotomic>>) -> Result<Cyclotomic> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("field determinant of a non-square matrix".into()));
    }
    let mut det = Cyclotomic::one(field);
    for c in 0..n {
        let pivot = (c..n)
            .filter(|&r| !a[r][c].is_zero())
            .min_by_key(|&r| (a[r][c].weight(), a[r][c].bit_size()));
        let Some(p) = pivot else {
            return Ok(Cyclotomic::zero(field));
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = &det * &a[c][c];
        let inv = a[c][c].inverse().expect("pivot is nonzero");
        let pivot_row: Vec<Cyclotomic> = a[c][c + 1..].iter().map(|x| x * &inv).collect();
        a[c + 1..].par_iter_mut().for_each(|row| {
            if row[c].is_zero() {
                return;
            }
            let f = row[c].clone();
            for (j, pv) in pivot_row.iter().enumerate() {
                if pv.is_zero() {
                    continue;
                }
                let x = &row[c + 1 + j] - &(&f * pv);
                row[c + 1 + j] = x;
            }
        });
    }
    Ok(det)
}

/// Cofactor expansion along the first row; exponential, meant as a test oracle.
pub fn cofactor_det(m: &[Vec<LaurentPoly>], field: &Arc<CyclotomicField>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one(field);
    }
    let mut acc = LaurentPoly::zero(field);
    for j in 0..n {
        let minor: Vec<Vec<LaurentPoly>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&cofactor_det(&minor, field));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Exact determinant of a square matrix of Laurent polynomials by evaluation
/// at t = 1, 2, … and Newton interpolation.
pub fn det_laurent(m: &[Vec<LaurentPoly>], field: &Arc<CyclotomicField>) -> Result<LaurentPoly> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("Laurent determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Ok(LaurentPoly::one(field));
    }
    if let Some(bad) = m.iter().flatten().find(|x| x.field().order() != field.order()) {
        return Err(Error::FieldMismatch {
            left: field.order(),
            right: bad.field().order(),
        });
    }

    // shift each row into nonnegative exponents
    let mut total_shift = 0i64;
    let mut degree_bound = 0i64;
    let mut rows = Vec::with_capacity(n);
    for r in m {
        let low = r.iter().filter_map(LaurentPoly::low_exponent).min();
        let Some(low) = low else {
            return Ok(LaurentPoly::zero(field));
        };
        let high = r.iter().filter_map(LaurentPoly::high_exponent).max().unwrap();
        total_shift += low;
        degree_bound += high - low;
        rows.push(r.iter().map(|x| x.shift(-low)).collect::<Vec<_>>());
    }

    let points: Vec<i64> = (1..=degree_bound + 1).collect();
    let values: Vec<Cyclotomic> = points
        .par_iter()
        .map(|&x| {
            let t = Cyclotomic::from_integer(field, x);
            let a = rows
                .iter()
                .map(|r| r.iter().map(|p| p.eval(&t)).collect())
                .collect();
            field_det(field, a)
        })
        .collect::<Result<_>>()?;

    let poly = newton_interpolate(field, &points, values);
    Ok(poly.shift(total_shift))
}

/// Interpolating polynomial through `(x_i, y_i)` with distinct integer nodes.
pub fn newton_interpolate(field: &Arc<CyclotomicField>, xs: &[i64], mut coef: Vec<Cyclotomic>) -> LaurentPoly {
    let n = xs.len();
    for level in 1..n {
        for i in (level..n).rev() {
            let diff = &coef[i] - &coef[i - 1];
            let denom = num_rational::BigRational::from_integer((xs[i] - xs[i - level]).into());
            coef[i] = diff.scale(&denom.recip());
        }
    }
    let mut acc = LaurentPoly::zero(field);
    for i in (0..n).rev() {
        // acc = acc·(t − x_i) + c_i
        let lin = LaurentPoly::from_terms(
            field,
            [(1, Cyclotomic::one(field)), (0, Cyclotomic::from_integer(field, -xs[i]))],
        );
        acc = acc.mul(&lin).add(&LaurentPoly::constant(coef[i].clone()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(f: &Arc<CyclotomicField>, low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_integers(f, low, c)
    }

    #[test]
    fn two_by_two() {
        let f = CyclotomicField::rationals();
        let m = vec![
            vec![lp(&f, 1, &[1]), lp(&f, 0, &[1])],
            vec![lp(&f, 0, &[1]), lp(&f, 1, &[1])],
        ];
        assert_eq!(det_laurent(&m, &f).unwrap(), lp(&f, 0, &[-1, 0, 1]));
    }

    #[test]
    fn identity_has_unit_determinant() {
        let f = CyclotomicField::new(5).unwrap();
        for n in 0..5 {
            let m: Vec<Vec<LaurentPoly>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { LaurentPoly::one(&f) } else { LaurentPoly::zero(&f) })
                        .collect()
                })
                .collect();
            assert!(det_laurent(&m, &f).unwrap().is_one());
        }
    }

    #[test]
    fn negative_exponents_and_zero_rows() {
        let f = CyclotomicField::rationals();
        let m = vec![
            vec![lp(&f, -2, &[1, 1]), lp(&f, 0, &[3])],
            vec![lp(&f, -1, &[2]), lp(&f, 1, &[1, -1])],
        ];
        assert_eq!(det_laurent(&m, &f).unwrap(), cofactor_det(&m, &f));
        let z = vec![vec![LaurentPoly::zero(&f), lp(&f, 0, &[1])], vec![LaurentPoly::zero(&f); 2]];
        assert!(det_laurent(&z, &f).unwrap().is_zero());
    }

    #[test]
    fn non_square_rejected() {
        let f = CyclotomicField::rationals();
        let m = vec![vec![lp(&f, 0, &[1]), lp(&f, 0, &[1])]];
        assert!(matches!(det_laurent(&m, &f), Err(Error::Dimension(_))));
    }

    #[test]
    fn field_det_singular() {
        let f = CyclotomicField::new(7).unwrap();
        let z = Cyclotomic::zeta_power(&f, 1);
        let a = vec![vec![z.clone(), &z * &z], vec![Cyclotomic::one(&f), z.clone()]];
        assert!(field_det(&f, a).unwrap().is_zero());
    }
}
