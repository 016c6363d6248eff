//! Whether a twisted polynomial factors as `a·f(t)·f̄(t⁻¹)·(t − 1)^s`.

use serde::Serialize;

use crate::algebra::factor::{factor_over_q, to_laurent};
use crate::algebra::repr::{serde_poly, PolyRepr};
use crate::algebra::square::{is_square, SquareCertificate, SquareConfig, SquareVerdict};
use crate::algebra::{Cyclotomic, LaurentPoly};
use crate::error::{Error, Result};
use crate::twisted::TwistedPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NormVerdict {
    Factors,
    Obstructed,
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormPiece {
    #[serde(with = "serde_poly")]
    pub poly: LaurentPoly,
    pub multiplicity: u32,
    pub self_paired: bool,
    /// Irreducibility proven (degree one, or a non-square discriminant).
    pub irreducible: bool,
    pub discriminant: Option<SquareCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormCertificate {
    pub verdict: NormVerdict,
    pub s: u32,
    /// Multiplicity of (t − 1) in the polynomial.
    pub t_minus_one_power: u32,
    pub pieces: Vec<NormPiece>,
    /// f with `residual ≐ f·f̄(t⁻¹)`, when it factors.
    pub witness: Option<PolyRepr>,
    pub reason: String,
}

fn canonical_piece(p: &LaurentPoly) -> Result<Option<LaurentPoly>> {
    let (_, r) = p.strip_t_minus_one();
    let c = r.canonical()?;
    Ok((c.high_exponent().unwrap_or(0) > 0).then_some(c))
}

/// Splits known factors into pieces, using rational factorization where the
/// coefficients allow and square roots of quadratic discriminants.
fn refine(pieces: Vec<LaurentPoly>, cfg: &SquareConfig) -> Result<Vec<(LaurentPoly, bool, Option<SquareCertificate>)>> {
    let mut out = Vec::new();
    for p in pieces {
        let field = p.field().clone();
        let mut parts = Vec::new();
        if p.is_rational() && p.high_exponent().unwrap_or(0) > 2 {
            let f = factor_over_q(&p)?;
            for (g, m) in f.factors.iter() {
                for _ in 0..*m {
                    parts.push(to_laurent(g).embed_rational(&field).expect("rational"));
                }
            }
            for g in &f.unresolved {
                parts.push(to_laurent(g).embed_rational(&field).expect("rational"));
            }
        } else {
            parts.push(p);
        }
        for q in parts {
            let q = q.canonical()?;
            match q.high_exponent().unwrap_or(0) {
                0 => {}
                1 => out.push((q, true, None)),
                2 => {
                    let (a, b, c) = (q.coeff(2), q.coeff(1), q.coeff(0));
                    let disc = &(&b * &b) - &(&(&a * &c) * &Cyclotomic::from_integer(&field, 4));
                    let cert = is_square(&disc, cfg);
                    match (cert.verdict, &cert.root) {
                        (SquareVerdict::Yes, Some(r)) => {
                            // roots (−b ± r)/(2a): factors 2a·t + b ∓ r
                            let two_a = &a * &Cyclotomic::from_integer(&field, 2);
                            for sign in [1, -1] {
                                let r = if sign > 0 { r.clone() } else { -r };
                                let lin = LaurentPoly::from_terms(&field, [(0, &b - &r), (1, two_a.clone())]);
                                out.push((lin.canonical()?, true, None));
                            }
                        }
                        (SquareVerdict::No, _) => out.push((q, true, Some(cert))),
                        _ => out.push((q, false, Some(cert))),
                    }
                }
                _ => out.push((q, false, None)),
            }
        }
    }
    Ok(out)
}

/// Tests the factorization for `P` using its recorded factors.
pub fn norm_factorization_test(p: &TwistedPolynomial) -> Result<NormCertificate> {
    norm_factorization_with(p, &SquareConfig::from_env())
}

pub fn norm_factorization_with(p: &TwistedPolynomial, cfg: &SquareConfig) -> Result<NormCertificate> {
    let s = u32::from(!p.character.is_trivial());
    let (e, residual) = p.value.strip_t_minus_one();
    if e < s {
        return Err(Error::NotDivisible(format!(
            "(t-1)^{s} does not divide the twisted polynomial (multiplicity {e})"
        )));
    }
    let residual = residual.canonical()?;
    let mut cert = NormCertificate {
        verdict: NormVerdict::Obstructed,
        s,
        t_minus_one_power: e,
        pieces: vec![],
        witness: None,
        reason: String::new(),
    };
    if (e - s) % 2 == 1 {
        cert.reason = format!("(t-1) occurs {} times beyond (t-1)^{s}, an odd number", e - s);
        return Ok(cert);
    }
    let deg = residual.high_exponent().unwrap_or(0);
    if deg % 2 == 1 {
        cert.reason = format!("the (t-1)-free part has odd degree {deg}");
        return Ok(cert);
    }
    if residual.conjugate_reverse().canonical()? != residual {
        cert.reason = "the (t-1)-free part is not unit-equivalent to its conjugate reverse".into();
        return Ok(cert);
    }

    let mut known = Vec::new();
    for f in &p.factors {
        if let Some(c) = canonical_piece(f)? {
            known.push(c);
        }
    }
    let product = known.iter().fold(LaurentPoly::one(residual.field()), |a, b| a.mul(b));
    if !product.unit_equivalent(&residual) {
        log::warn!("recorded factors do not multiply to the polynomial; using it whole");
        known = vec![residual.clone()];
    }
    if known.is_empty() {
        cert.verdict = NormVerdict::Factors;
        cert.witness = Some(PolyRepr::from(&LaurentPoly::one(residual.field())));
        cert.reason = "nothing beyond (t-1)^s remains".into();
        return Ok(cert);
    }

    // group into classes up to units
    let mut classes: Vec<(LaurentPoly, u32, bool, Option<SquareCertificate>)> = Vec::new();
    for (q, irr, disc) in refine(known, cfg)? {
        match classes.iter_mut().find(|c| c.0 == q) {
            Some(c) => {
                c.1 += 1;
                c.2 &= irr;
            }
            None => classes.push((q, 1, irr, disc)),
        }
    }
    classes.sort_by_key(|c| c.0.to_string());
    let mult = |q: &LaurentPoly| classes.iter().find(|c| &c.0 == q).map_or(0, |c| c.1);

    let mut balanced = true;
    let mut witness = LaurentPoly::one(residual.field());
    for (q, m, irr, disc) in &classes {
        let star = q.conjugate_reverse().canonical()?;
        let self_paired = &star == q;
        if self_paired {
            if m % 2 == 1 {
                balanced = false;
            } else {
                witness = witness.mul(&q.pow(m / 2));
            }
        } else if mult(&star) != *m {
            balanced = false;
        } else if q.to_string() < star.to_string() {
            witness = witness.mul(&q.pow(*m));
        }
        cert.pieces.push(NormPiece {
            poly: q.clone(),
            multiplicity: *m,
            self_paired,
            irreducible: *irr,
            discriminant: disc.clone(),
        });
    }
    let all_irreducible = cert.pieces.iter().all(|p| p.irreducible);
    if balanced {
        cert.verdict = NormVerdict::Factors;
        cert.witness = Some(PolyRepr::from(&witness));
        cert.reason = "pieces pair with their conjugate reverses".into();
    } else if all_irreducible {
        cert.verdict = NormVerdict::Obstructed;
        cert.reason = "irreducible pieces cannot be paired with their conjugate reverses".into();
    } else {
        cert.verdict = NormVerdict::Indeterminate;
        cert.reason = "pieces are unbalanced but not all are proven irreducible".into();
    }
    Ok(cert)
}
