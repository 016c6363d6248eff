//! Laurent polynomials in t over Q(ζ_d).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use super::cyclotomic::{Cyclotomic, CyclotomicField};
use super::rational::Rational;
use crate::error::{Error, Result};

/// A finitely supported map exponent → nonzero coefficient.
#[derive(Clone)]
pub struct LaurentPoly {
    field: Arc<CyclotomicField>,
    terms: BTreeMap<i64, Cyclotomic>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.field.order() == other.field.order() && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl std::hash::Hash for LaurentPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.order().hash(state);
        self.terms.hash(state);
    }
}

/// The unit `scalar · t^shift` split off by [`LaurentPoly::normalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentUnit {
    pub scalar: Cyclotomic,
    pub shift: i64,
}

impl LaurentPoly {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        LaurentPoly {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::constant(Cyclotomic::one(field))
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Cyclotomic, e: i64) -> Self {
        let field = c.field().clone();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { field, terms }
    }

    /// `t^e`.
    pub fn t_power(field: &Arc<CyclotomicField>, e: i64) -> Self {
        Self::monomial(Cyclotomic::one(field), e)
    }

    /// `t − 1`.
    pub fn t_minus_one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_terms(
            field,
            [(1, Cyclotomic::one(field)), (0, Cyclotomic::from_integer(field, -1))],
        )
    }

    pub fn from_terms(field: &Arc<CyclotomicField>, terms: impl IntoIterator<Item = (i64, Cyclotomic)>) -> Self {
        let mut p = Self::zero(field);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    /// Rational coefficients, `coeffs[i]` multiplying `t^(low + i)`.
    pub fn from_rationals(field: &Arc<CyclotomicField>, low: i64, coeffs: &[Rational]) -> Self {
        Self::from_terms(
            field,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (low + i as i64, Cyclotomic::from_rational(field, c))),
        )
    }

    pub fn from_integers(field: &Arc<CyclotomicField>, low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            field,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (low + i as i64, Cyclotomic::from_integer(field, c))),
        )
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn modulus(&self) -> u32 {
        self.field.order()
    }

    pub fn terms(&self) -> &BTreeMap<i64, Cyclotomic> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(Cyclotomic::is_one)
    }

    pub fn coeff(&self, e: i64) -> Cyclotomic {
        self.terms
            .get(&e)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(&self.field))
    }

    pub fn low_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn high_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Width of the support, `high − low`; zero for monomials.
    pub fn span(&self) -> Option<i64> {
        Some(self.high_exponent()? - self.low_exponent()?)
    }

    pub fn add_term(&mut self, e: i64, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&e) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, &-c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.field);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.field), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return Self::zero(&self.field);
        }
        LaurentPoly {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Evaluates at a nonzero field element.
    pub fn eval(&self, t: &Cyclotomic) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(&self.field);
        let Some(low) = self.low_exponent() else {
            return acc;
        };
        let high = self.high_exponent().unwrap();
        // Horner on the shifted polynomial, then restore t^low.
        for e in (low..=high).rev() {
            acc = &acc * t;
            if let Some(c) = self.terms.get(&e) {
                acc = &acc + c;
            }
        }
        if low >= 0 {
            &acc * &t.pow(low as u64)
        } else {
            let inv = t.inverse().expect("evaluation point must be nonzero");
            &acc * &inv.pow((-low) as u64)
        }
    }

    /// Applies σ_s to every coefficient.
    pub fn galois(&self, s: i64) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(*e, c.galois(s)?);
        }
        Ok(LaurentPoly {
            field: self.field.clone(),
            terms,
        })
    }

    /// `p̄(t⁻¹)`: conjugate coefficients and reverse exponents.
    pub fn conjugate_reverse(&self) -> Self {
        LaurentPoly {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(e, c)| (-e, c.conj())).collect(),
        }
    }

    /// `p(t⁻¹)` without conjugation.
    pub fn reverse(&self) -> Self {
        LaurentPoly {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Splits `p = unit · canonical` where `canonical` has lowest exponent 0
    /// and constant coefficient 1.
    pub fn normalize(&self) -> Result<(LaurentPoly, LaurentUnit)> {
        let (&low, c0) = self.terms.iter().next().ok_or(Error::ZeroPolynomial)?;
        let inv = c0.inverse().expect("stored coefficients are nonzero");
        let canonical = LaurentPoly {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(e, c)| (e - low, c * &inv)).collect(),
        };
        Ok((
            canonical,
            LaurentUnit {
                scalar: c0.clone(),
                shift: low,
            },
        ))
    }

    pub fn canonical(&self) -> Result<LaurentPoly> {
        Ok(self.normalize()?.0)
    }

    /// Equality up to units `a · t^k` of Q(ζ_d)[t, t⁻¹].
    pub fn unit_equivalent(&self, other: &Self) -> bool {
        match (self.canonical(), other.canonical()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }

    /// Polynomial division with remainder for supports in degree ≥ 0.
    fn div_rem_poly(&self, divisor: &Self) -> (Self, Self) {
        let dlow = divisor.low_exponent().unwrap();
        assert!(dlow >= 0 && self.low_exponent().unwrap_or(0) >= 0);
        let dhigh = divisor.high_exponent().unwrap();
        let lead_inv = divisor.terms[&dhigh].inverse().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.field);
        while let Some(h) = rem.high_exponent() {
            if h < dhigh {
                break;
            }
            let c = &rem.terms[&h] * &lead_inv;
            let e = h - dhigh;
            for (de, dc) in &divisor.terms {
                rem.add_term(de + e, &-(dc * &c));
            }
            quot.add_term(e, &c);
        }
        (quot, rem)
    }

    /// Exact division in Q(ζ_d)[t, t⁻¹].
    pub fn exact_div(&self, q: &Self) -> Result<Self> {
        let qlow = q.low_exponent().ok_or_else(|| {
            Error::InvalidArgument("division by the zero Laurent polynomial".into())
        })?;
        let Some(plow) = self.low_exponent() else {
            return Ok(Self::zero(&self.field));
        };
        let (quot, rem) = self.shift(-plow).div_rem_poly(&q.shift(-qlow));
        if !rem.is_zero() {
            return Err(Error::NotDivisible(format!("({self}) / ({q})")));
        }
        Ok(quot.shift(plow - qlow))
    }

    /// Highest power of `(t − 1)` dividing `self`, and the cofactor.
    pub fn strip_t_minus_one(&self) -> (u32, Self) {
        let tm1 = Self::t_minus_one(&self.field);
        let mut k = 0;
        let mut cur = self.clone();
        while !cur.is_zero() {
            match cur.exact_div(&tm1) {
                Ok(next) => {
                    cur = next;
                    k += 1;
                }
                Err(_) => break,
            }
        }
        (k, cur)
    }

    /// Monic gcd in Q(ζ_d)[t] (t-power factors ignored).
    pub fn gcd(&self, other: &Self) -> Self {
        let strip = |p: &Self| match p.low_exponent() {
            Some(l) => p.shift(-l),
            None => p.clone(),
        };
        let mut a = strip(self);
        let mut b = strip(other);
        while !b.is_zero() {
            let (_, r) = a.div_rem_poly(&b);
            a = b;
            b = strip(&r);
        }
        match a.high_exponent() {
            Some(h) => {
                let inv = a.terms[&h].inverse().unwrap();
                a.scale(&inv)
            }
            None => a,
        }
    }

    /// Formal derivative in t.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            &self.field,
            self.terms
                .iter()
                .filter(|(e, _)| **e != 0)
                .map(|(e, c)| (e - 1, c.scale(&Rational::from_integer((*e).into())))),
        )
    }

    /// True when every coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(|c| c.as_rational().is_some())
    }

    /// Rational coefficients from the lowest to the highest exponent.
    pub fn rational_coeffs(&self) -> Option<(i64, Vec<Rational>)> {
        let low = self.low_exponent()?;
        let high = self.high_exponent()?;
        let mut v = Vec::new();
        for e in low..=high {
            v.push(match self.terms.get(&e) {
                Some(c) => c.as_rational()?,
                None => Rational::zero(),
            });
        }
        Some((low, v))
    }

    /// Re-embeds a polynomial with rational coefficients into another field.
    pub fn embed_rational(&self, field: &Arc<CyclotomicField>) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(*e, Cyclotomic::from_rational(field, &c.as_rational()?));
        }
        Some(LaurentPoly {
            field: field.clone(),
            terms,
        })
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let rational = c.as_rational();
            let negative = rational.as_ref().is_some_and(|r| r.is_negative());
            let c = if negative && !first { -c } else { c.clone() };
            if !first {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let mono = match e {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{e}"),
            };
            let coeff = c.to_zeta_string();
            let simple = rational.is_some();
            match (mono.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{coeff}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) if simple => write!(f, "{coeff}*{mono}")?,
                (false, false) => write!(f, "({coeff})*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[Q(z_{})]({})", self.field.order(), self)
    }
}
