//! Signatures of the twisted doubles T_k with lens-space covers L(4k + 1, 2).

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::arith::is_prime;
use crate::algebra::rational::{int, rat, serde_rational, Rational};
use crate::error::{Error, Result};

/// Integral points of the triangle (0,0), (x,0), (x,y), excluding the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct TrianglePoints {
    pub interior: u64,
    /// Boundary points that are not vertices.
    pub edge: u64,
    /// Integral vertices other than the origin.
    pub vertex: u64,
}

impl TrianglePoints {
    /// Interior points weigh 1, edge points 1/2, vertices 1/4.
    pub fn weighted(&self) -> Rational {
        int(self.interior as i64) + rat(self.edge as i64, 2) + rat(self.vertex as i64, 4)
    }
}

/// Exhaustive scan of the bounding box with exact membership tests.
pub fn triangle_points(x: i64, y: &Rational) -> TrianglePoints {
    assert!(x > 0 && *y > Rational::zero(), "triangle must be nondegenerate");
    let mut out = TrianglePoints::default();
    let slope = y / int(x);
    let top = y.floor().to_integer();
    let top = i64::try_from(top).expect("height fits in i64");
    for px in 0..=x {
        for py in 0..=top {
            let (qx, qy) = (int(px), int(py));
            let line = &slope * &qx;
            if qy > line {
                continue;
            }
            if px == 0 && py == 0 {
                continue;
            }
            let on_base = py == 0;
            let on_side = px == x;
            let on_hyp = qy == line;
            if on_side && (on_base || on_hyp) {
                out.vertex += 1;
            } else if on_base || on_side || on_hyp {
                out.edge += 1;
            } else {
                out.interior += 1;
            }
        }
    }
    out
}

/// m = 4k + 1 with k ≥ 1 and m prime.
pub fn lens_modulus(k: i64) -> Result<i64> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("k must be at least 1, got {k}")));
    }
    let m = 4 * k + 1;
    if !is_prime(m as u64) {
        return Err(Error::InvalidArgument(format!("4k+1 = {m} is not prime")));
    }
    Ok(m)
}

fn check_r(m: i64, r: i64) -> Result<()> {
    if r <= 0 || 2 * r >= 2 * m || 2 * r == m {
        return Err(Error::InvalidArgument(format!(
            "r = {r} outside 0 < 2r < {}, 2r != {m}",
            2 * m
        )));
    }
    Ok(())
}

/// 4·(area − weighted count) of the triangle with apex (r, 2r/m).
pub fn lattice_sigma(k: i64, r: i64) -> Result<Rational> {
    let m = lens_modulus(k)?;
    check_r(m, r)?;
    let height = rat(2 * r, m);
    let area = int(r) * &height / int(2);
    Ok(int(4) * (area - triangle_points(r, &height).weighted()))
}

/// The piecewise quadratic in r.
pub fn sigma_closed(k: i64, r: i64) -> Result<Rational> {
    let m = lens_modulus(k)?;
    check_r(m, r)?;
    let quad = rat(4 * r * r, m);
    Ok(if 2 * r < m {
        quad - int(2 * r) + int(1)
    } else {
        quad - int(6 * r) + int(2 * m + 1)
    })
}

/// σ(T_k, χ^e) for an exponent e ∈ Z/m, evaluated at the representative
/// r ≡ e with 0 < r < m; the trivial character gives 0.
pub fn sigma_for_exponent(k: i64, e: i64) -> Result<Rational> {
    let m = lens_modulus(k)?;
    let r = e.rem_euclid(m);
    if r == 0 {
        return Ok(Rational::zero());
    }
    sigma_closed(k, r)
}

/// The largest signature over all characters, attained at r = (m ± 1)/2.
pub fn sigma_max(k: i64) -> Result<Rational> {
    let m = lens_modulus(k)?;
    (0..m).try_fold(Rational::zero(), |acc, e| Ok(acc.max(sigma_for_exponent(k, e)?)))
}

/// (−m² + 4m + 1)/(4m), the value at r = k.
pub fn sigma_min_formula(m: i64) -> Rational {
    rat(-m * m + 4 * m + 1, 4 * m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LensSignatureValue {
    pub k: i64,
    pub m: i64,
    pub r: i64,
    #[serde(with = "serde_rational")]
    pub value: Rational,
}

/// Both computations, required to agree.
pub fn lens_signature(k: i64, r: i64) -> Result<LensSignatureValue> {
    let closed = sigma_closed(k, r)?;
    let lattice = lattice_sigma(k, r)?;
    if closed != lattice {
        return Err(Error::Inconsistent(format!(
            "closed form {closed} and lattice count {lattice} differ at k={k}, r={r}"
        )));
    }
    Ok(LensSignatureValue {
        k,
        m: 4 * k + 1,
        r,
        value: closed,
    })
}

/// Admissible k in [lo, hi] with 4k + 1 prime.
pub fn admissible_k(lo: i64, hi: i64) -> Vec<i64> {
    (lo.max(1)..=hi).filter(|k| is_prime((4 * k + 1) as u64)).collect()
}

pub fn one_over(m: i64) -> Rational {
    Rational::one() / int(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirteen() {
        assert_eq!(lattice_sigma(3, 3).unwrap(), rat(-29, 13));
        assert_eq!(lattice_sigma(3, 6).unwrap(), rat(1, 13));
        assert_eq!(lattice_sigma(3, 1).unwrap(), rat(-9, 13));
        assert_eq!(sigma_closed(3, 7).unwrap(), rat(1, 13));
        assert_eq!(sigma_closed(3, 3).unwrap(), sigma_min_formula(13));
    }

    #[test]
    fn domain() {
        assert!(lattice_sigma(2, 1).is_err());
        assert!(sigma_closed(3, 0).is_err());
        assert!(sigma_closed(3, 13).is_err());
        assert!(lattice_sigma(0, 1).is_err());
    }

    #[test]
    fn extremes() {
        for k in admissible_k(3, 25) {
            let m = 4 * k + 1;
            assert_eq!(sigma_max(k).unwrap(), one_over(m));
            assert_eq!(sigma_closed(k, (m - 1) / 2).unwrap(), one_over(m));
            assert_eq!(sigma_closed(k, (m + 1) / 2).unwrap(), one_over(m));
            assert_eq!(sigma_closed(k, k).unwrap(), sigma_min_formula(m));
        }
    }

    #[test]
    fn symmetric_under_inverse_character() {
        for k in admissible_k(1, 15) {
            let m = 4 * k + 1;
            for r in 1..m {
                assert_eq!(sigma_for_exponent(k, r).unwrap(), sigma_for_exponent(k, m - r).unwrap());
            }
        }
    }

    #[test]
    fn pick_on_integer_triangles() {
        for x in 1..12i64 {
            for y in 1..12i64 {
                let c = triangle_points(x, &int(y));
                let boundary = c.edge + c.vertex + 1;
                let area = rat(x * y, 2);
                assert_eq!(area, int(c.interior as i64) + rat(boundary as i64, 2) - int(1));
            }
        }
    }
}
