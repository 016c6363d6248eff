//! The Fox–Milnor condition Δ ≐ f(t)·f(t⁻¹) over Q.

use serde::Serialize;

use crate::algebra::factor::{factor_over_q, reciprocal, to_laurent, IntPoly};
use crate::algebra::rational::serde_rational_vec;
use crate::algebra::{LaurentPoly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FoxMilnorVerdict {
    Passes,
    Fails,
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibleFactor {
    /// Integer coefficients from t⁰ upward.
    #[serde(with = "serde_rational_vec")]
    pub coeffs: Vec<Rational>,
    pub multiplicity: u32,
    pub self_reciprocal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoxMilnorReport {
    pub verdict: FoxMilnorVerdict,
    pub factors: Vec<IrreducibleFactor>,
    /// f with Δ ≐ f(t)·f(t⁻¹), when the test passes.
    #[serde(with = "serde_rational_vec")]
    pub witness: Vec<Rational>,
    pub reason: String,
}

fn as_rationals(p: &IntPoly) -> Vec<Rational> {
    p.iter().cloned().map(Rational::from_integer).collect()
}

pub fn fox_milnor_test(delta: &LaurentPoly) -> Result<FoxMilnorReport> {
    if delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !delta.is_rational() {
        return Err(Error::InvalidArgument("Fox-Milnor test needs rational coefficients".into()));
    }
    let fact = factor_over_q(delta)?;
    let factors: Vec<IrreducibleFactor> = fact
        .factors
        .iter()
        .map(|(f, m)| IrreducibleFactor {
            coeffs: as_rationals(f),
            multiplicity: *m,
            self_reciprocal: reciprocal(f) == *f,
        })
        .collect();
    let mult = |f: &IntPoly| fact.factors.iter().find(|(g, _)| g == f).map_or(0, |(_, m)| *m);

    let mut witness = to_laurent(&[1.into()]);
    let mut failure = None;
    for (f, m) in &fact.factors {
        let r = reciprocal(f);
        if r == *f {
            if m % 2 == 1 {
                failure.get_or_insert(format!("self-reciprocal factor {} has odd multiplicity {m}", to_laurent(f)));
            } else {
                witness = witness.mul(&to_laurent(f).pow(m / 2));
            }
        } else if mult(&r) != *m {
            failure.get_or_insert(format!(
                "factor {} occurs {m} times but its reciprocal {} occurs {} times",
                to_laurent(f),
                to_laurent(&r),
                mult(&r)
            ));
        } else if *f < r {
            witness = witness.mul(&to_laurent(f).pow(*m));
        }
    }
    let (verdict, reason) = match (failure, fact.is_complete()) {
        (_, false) => (
            FoxMilnorVerdict::Indeterminate,
            format!("{} factor(s) could not be factored within budget", fact.unresolved.len()),
        ),
        (Some(r), true) => (FoxMilnorVerdict::Fails, r),
        (None, true) => (FoxMilnorVerdict::Passes, "irreducible factors pair under t -> 1/t".into()),
    };
    let witness = if verdict == FoxMilnorVerdict::Passes {
        witness.rational_coeffs().map(|(_, c)| c).unwrap_or_default()
    } else {
        vec![]
    };
    Ok(FoxMilnorReport {
        verdict,
        factors,
        witness,
        reason,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CyclotomicField;

    fn lp(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_integers(&CyclotomicField::rationals(), 0, c)
    }

    #[test]
    fn spec_examples() {
        assert_eq!(fox_milnor_test(&lp(&[1])).unwrap().verdict, FoxMilnorVerdict::Passes);
        let st = fox_milnor_test(&lp(&[2, -5, 2])).unwrap();
        assert_eq!(st.verdict, FoxMilnorVerdict::Passes);
        let f = LaurentPoly::from_rationals(&CyclotomicField::rationals(), 0, &st.witness);
        assert!(f.mul(&f.reverse()).unit_equivalent(&lp(&[2, -5, 2])));
        assert_eq!(fox_milnor_test(&lp(&[3, -7, 3])).unwrap().verdict, FoxMilnorVerdict::Fails);
    }

    #[test]
    fn squares_pass() {
        let a = lp(&[3, -7, 3]);
        assert_eq!(fox_milnor_test(&a.mul(&a)).unwrap().verdict, FoxMilnorVerdict::Passes);
        // 8_13 is not algebraically slice
        assert_eq!(fox_milnor_test(&lp(&[2, -7, 11, -7, 2])).unwrap().verdict, FoxMilnorVerdict::Fails);
    }

    #[test]
    fn units_are_ignored() {
        let p = lp(&[2, -5, 2]).shift(-3).scale(&crate::algebra::Cyclotomic::from_integer(&CyclotomicField::rationals(), -7));
        assert_eq!(fox_milnor_test(&p).unwrap().verdict, FoxMilnorVerdict::Passes);
    }
}
