//! Serializable forms of cyclotomic numbers and Laurent polynomials.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::cyclotomic::{Cyclotomic, CyclotomicField};
use super::laurent::LaurentPoly;
use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// Coefficients over `1, ζ, …, ζ^{φ(d)−1}` as `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicRepr {
    pub modulus: u32,
    pub coeffs: Vec<String>,
}

impl From<&Cyclotomic> for CyclotomicRepr {
    fn from(x: &Cyclotomic) -> Self {
        CyclotomicRepr {
            modulus: x.modulus(),
            coeffs: x.coeffs().iter().map(format_rational).collect(),
        }
    }
}

impl CyclotomicRepr {
    pub fn to_cyclotomic(&self) -> Result<Cyclotomic> {
        let field = CyclotomicField::new(self.modulus)?;
        let c = self.coeffs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        Cyclotomic::from_basis(&field, &c)
    }
}

/// `{modulus, terms: {exponent: [coefficients over the power basis]}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRepr {
    pub modulus: u32,
    pub terms: BTreeMap<i64, Vec<String>>,
}

impl From<&LaurentPoly> for PolyRepr {
    fn from(p: &LaurentPoly) -> Self {
        PolyRepr {
            modulus: p.modulus(),
            terms: p
                .terms()
                .iter()
                .map(|(&e, c)| (e, c.coeffs().iter().map(format_rational).collect()))
                .collect(),
        }
    }
}

impl PolyRepr {
    pub fn to_poly(&self) -> Result<LaurentPoly> {
        let field = CyclotomicField::new(self.modulus)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (&e, cs) in &self.terms {
            if cs.len() > field.degree() {
                return Err(Error::Dimension(format!(
                    "coefficient of t^{e} has {} entries, field degree is {}",
                    cs.len(),
                    field.degree()
                )));
            }
            let mut c = cs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
            c.resize(field.degree(), Rational::zero());
            terms.push((e, Cyclotomic::from_basis(&field, &c)?));
        }
        Ok(LaurentPoly::from_terms(&field, terms))
    }
}

pub mod serde_poly {
    //! `#[serde(with)]` adapter for [`LaurentPoly`].
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &LaurentPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr::from(p).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<LaurentPoly, D::Error> {
        PolyRepr::deserialize(d)?.to_poly().map_err(serde::de::Error::custom)
    }
}

pub mod serde_poly_vec {
    use super::*;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &[LaurentPoly], s: S) -> std::result::Result<S::Ok, S::Error> {
        v.iter().map(PolyRepr::from).collect::<Vec<_>>().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_round_trip() {
        let f = CyclotomicField::new(5).unwrap();
        let z = Cyclotomic::zeta_power(&f, 3);
        let p = LaurentPoly::from_terms(&f, [(-2, z.clone()), (4, Cyclotomic::from_integer(&f, 7))]);
        let json = serde_json::to_string(&PolyRepr::from(&p)).unwrap();
        let back: PolyRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_poly().unwrap(), p);
        let c = CyclotomicRepr::from(&z);
        assert_eq!(c.to_cyclotomic().unwrap(), z);
    }
}
