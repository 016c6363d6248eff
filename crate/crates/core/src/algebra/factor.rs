//! Factorization of polynomials over Q by squarefree decomposition and
//! Kronecker's interpolation search.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::arith::factorize;
use super::laurent::LaurentPoly;
use super::rational::Rational;
use super::CyclotomicField;
use crate::error::{Error, Result};

/// Candidate interpolations tried before giving up on a factor degree.
pub const KRONECKER_BUDGET: u64 = 2_000_000;

/// Integer coefficients, lowest degree first.
pub type IntPoly = Vec<BigInt>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFactorization {
    /// Primitive factors with positive constant term and their multiplicities.
    pub factors: Vec<(IntPoly, u32)>,
    /// Factors whose irreducibility could not be settled within budget.
    pub unresolved: Vec<IntPoly>,
}

impl RationalFactorization {
    pub fn is_complete(&self) -> bool {
        self.unresolved.is_empty()
    }
}

pub fn to_laurent(p: &[BigInt]) -> LaurentPoly {
    let q = CyclotomicField::rationals();
    LaurentPoly::from_rationals(
        &q,
        0,
        &p.iter().cloned().map(Rational::from_integer).collect::<Vec<_>>(),
    )
}

/// Primitive integer form with lowest exponent 0 and positive constant term.
pub fn primitive_part(p: &LaurentPoly) -> Result<IntPoly> {
    let (_, coeffs) = p
        .rational_coeffs()
        .ok_or_else(|| Error::InvalidArgument("polynomial has irrational coefficients".into()))?;
    let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &den).to_integer()).collect();
    Ok(normalize_int(ints))
}

pub fn normalize_int(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let lead_zeros = p.iter().take_while(|c| c.is_zero()).count();
    p.drain(..lead_zeros);
    if p.is_empty() {
        return p;
    }
    let mut g = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if p[0].is_negative() {
        g = -g;
    }
    p.iter().map(|c| c / &g).collect()
}

/// `t^{deg} p(1/t)`, normalized.
pub fn reciprocal(p: &[BigInt]) -> IntPoly {
    normalize_int(p.iter().rev().cloned().collect())
}

pub fn eval_int(p: &[BigInt], x: i64) -> BigInt {
    let x = BigInt::from(x);
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
}

fn divides(g: &[BigInt], f: &[BigInt]) -> Option<IntPoly> {
    let q = to_laurent(f).exact_div(&to_laurent(g)).ok()?;
    let (_, c) = q.rational_coeffs()?;
    c.iter().map(|r| r.is_integer().then(|| r.to_integer())).collect()
}

fn divisors(n: &BigInt) -> Option<Vec<i64>> {
    let n = n.abs().to_u64()?;
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let cur = ds.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            ds.extend(cur.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    Some(ds.into_iter().map(|d| d as i64).collect())
}

/// Lagrange interpolation through `(x_i, y_i)`.
fn interpolate(xs: &[i64], ys: &[i64]) -> Vec<Rational> {
    let k = xs.len();
    let mut out = vec![Rational::zero(); k];
    for i in 0..k {
        // basis polynomial ∏_{j≠i} (x − x_j)/(x_i − x_j)
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for j in 0..k {
            if i == j {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (e, c) in basis.iter().enumerate() {
                next[e + 1] += c;
                next[e] -= c * Rational::from_integer(xs[j].into());
            }
            basis = next;
            denom *= Rational::from_integer((xs[i] - xs[j]).into());
        }
        let scale = Rational::from_integer(ys[i].into()) / denom;
        for (e, c) in basis.iter().enumerate() {
            out[e] += c * &scale;
        }
    }
    out
}

enum Split {
    Found(IntPoly, IntPoly),
    Irreducible,
    Unknown,
}

/// Looks for a factor of degree `k` of a squarefree primitive `f`.
fn kronecker(f: &[BigInt], k: usize) -> Split {
    let mut xs = Vec::new();
    let mut x = 0i64;
    while xs.len() < k + 1 {
        if !eval_int(f, x).is_zero() {
            xs.push(x);
        }
        x = if x > 0 { -x } else { -x + 1 };
    }
    let mut divs = Vec::new();
    for &x in &xs {
        match divisors(&eval_int(f, x)) {
            Some(d) => divs.push(d),
            None => return Split::Unknown,
        }
    }
    let total: u64 = divs
        .iter()
        .enumerate()
        .map(|(i, d)| d.len() as u64 * if i == 0 { 1 } else { 2 })
        .fold(1u64, |a, b| a.saturating_mul(b));
    if total > KRONECKER_BUDGET {
        return Split::Unknown;
    }
    let mut idx = vec![0usize; k + 1];
    let mut signs = vec![1i64; k + 1];
    loop {
        let ys: Vec<i64> = (0..=k).map(|i| signs[i] * divs[i][idx[i]]).collect();
        let g = interpolate(&xs, &ys);
        if g[k].is_zero() || !g.iter().all(|c| c.is_integer()) {
            // fallthrough to next candidate
        } else {
            let g: IntPoly = g.iter().map(|c| c.to_integer()).collect();
            let g = normalize_int(g);
            if g.len() == k + 1 {
                if let Some(h) = divides(&g, f) {
                    return Split::Found(g, normalize_int(h));
                }
            }
        }
        // odometer over divisor choices and signs; the first value stays positive
        let mut i = 0;
        loop {
            if i > k {
                return Split::Irreducible;
            }
            if i > 0 && signs[i] == 1 {
                signs[i] = -1;
                break;
            }
            signs[i] = 1;
            idx[i] += 1;
            if idx[i] < divs[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

fn factor_squarefree(f: IntPoly, out: &mut Vec<IntPoly>, unresolved: &mut Vec<IntPoly>) {
    let n = f.len() - 1;
    if n <= 1 {
        out.push(f);
        return;
    }
    for k in 1..=n / 2 {
        match kronecker(&f, k) {
            Split::Found(g, h) => {
                factor_squarefree(g, out, unresolved);
                factor_squarefree(h, out, unresolved);
                return;
            }
            Split::Irreducible => {}
            Split::Unknown => {
                unresolved.push(f);
                return;
            }
        }
    }
    out.push(f);
}

/// Squarefree decomposition (Yun) over Q.
pub fn squarefree_decomposition(p: &LaurentPoly) -> Result<Vec<(LaurentPoly, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.shift(-p.low_exponent().unwrap());
    let mut out = Vec::new();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0)?;
    let mut c = df.exact_div(&a0)?;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.high_exponent().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.exact_div(&a)?;
        c = d.exact_div(&a)?;
        d = c.sub(&b.derivative());
        if a.high_exponent().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

/// Irreducible factorization over Q up to units `c·t^k`.
pub fn factor_over_q(p: &LaurentPoly) -> Result<RationalFactorization> {
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();
    let mut unresolved = Vec::new();
    for (a, m) in squarefree_decomposition(p)? {
        let mut parts = Vec::new();
        factor_squarefree(primitive_part(&a)?, &mut parts, &mut unresolved);
        for f in parts {
            match factors.iter_mut().find(|(g, _)| *g == f) {
                Some((_, k)) => *k += m,
                None => factors.push((f, m)),
            }
        }
    }
    factors.sort();
    Ok(RationalFactorization { factors, unresolved })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn lp(c: &[i64]) -> LaurentPoly {
        to_laurent(&ip(c))
    }

    fn product(f: &RationalFactorization) -> LaurentPoly {
        f.factors
            .iter()
            .fold(lp(&[1]), |acc, (g, m)| acc.mul(&to_laurent(g).pow(*m)))
    }

    #[test]
    fn stevedore_splits() {
        let f = factor_over_q(&lp(&[2, -5, 2])).unwrap();
        assert_eq!(f.factors, vec![(ip(&[1, -2]), 1), (ip(&[2, -1]), 1)]);
    }

    #[test]
    fn irreducible_quadratic_and_quartic() {
        let f = factor_over_q(&lp(&[3, -7, 3])).unwrap();
        assert_eq!(f.factors, vec![(ip(&[3, -7, 3]), 1)]);
        let g = factor_over_q(&lp(&[2, -7, 11, -7, 2])).unwrap();
        assert_eq!(g.factors.len(), 1);
        assert!(g.is_complete());
    }

    #[test]
    fn product_of_quadratics_with_multiplicity() {
        // (t² − 3t + 1)² (t² + t + 1) (2t − 1)
        let a = lp(&[1, -3, 1]);
        let b = lp(&[1, 1, 1]);
        let c = lp(&[-1, 2]);
        let p = a.mul(&a).mul(&b).mul(&c);
        let f = factor_over_q(&p).unwrap();
        assert!(f.is_complete());
        assert!(product(&f).unit_equivalent(&p));
        assert!(f.factors.contains(&(ip(&[1, -3, 1]), 2)));
        assert!(f.factors.contains(&(ip(&[1, 1, 1]), 1)));
    }

    #[test]
    fn cubic_times_cubic() {
        let p = lp(&[1, 1, 0, 1]).mul(&lp(&[1, 0, 1, 1]));
        let f = factor_over_q(&p).unwrap();
        assert_eq!(f.factors.len(), 2);
    }

    #[test]
    fn reciprocal_normalizes() {
        assert_eq!(reciprocal(&ip(&[1, -2])), ip(&[2, -1]));
        assert_eq!(reciprocal(&ip(&[1, -3, 1])), ip(&[1, -3, 1]));
    }
}
