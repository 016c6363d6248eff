//! Signature bounds for connected sums of twisted doubles.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::lattice::{lattice_sigma, lens_modulus, one_over, sigma_closed, sigma_max, sigma_min_formula};
use crate::algebra::rational::{int, is_perfect_square, rat, serde_rational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "<=")]
    Le,
}

/// `quantity relation value`, with an exact right-hand side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundStep {
    pub quantity: String,
    pub relation: Relation,
    #[serde(with = "serde_rational")]
    pub value: Rational,
    pub justification: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderVerdict {
    InfiniteOrderEvidence,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCertificate {
    pub k: i64,
    pub n: i64,
    pub m: i64,
    pub rationale: String,
    /// Exponents of the character on the first n/2 summands; the other n/2 are unknown.
    pub known_exponents: Vec<i64>,
    pub unknown_exponents: usize,
    pub chain: Vec<BoundStep>,
    #[serde(with = "serde_rational")]
    pub sigma1_tau_upper_bound: Rational,
    pub verdict: OrderVerdict,
    /// Set when the k ≥ 3 hypothesis was waived.
    pub overridden: bool,
}

/// n(−m² + 12m + 5)/(8m).
pub fn tau_bound(m: i64, n: i64) -> Rational {
    rat(n * (-m * m + 12 * m + 5), 8 * m)
}

pub fn infinite_order_certificate(k: i64, n: i64) -> Result<OrderCertificate> {
    infinite_order_certificate_with(k, n, false)
}

/// `allow_small_k` waives the k ≥ 3 hypothesis.
pub fn infinite_order_certificate_with(k: i64, n: i64, allow_small_k: bool) -> Result<OrderCertificate> {
    let m = lens_modulus(k)?;
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidArgument(format!("n must be even and at least 2, got {n}")));
    }
    if k < 3 && !allow_small_k {
        return Err(Error::Precondition(format!("k = {k} < 3; the bound is only claimed for k >= 3")));
    }
    let half = n / 2;
    let min_term = sigma_closed(k, k)?;
    if min_term != sigma_min_formula(m) || lattice_sigma(k, k)? != min_term {
        return Err(Error::Inconsistent(format!("sigma(T_{k}, chi^{k}) disagrees with its closed value")));
    }
    let max = sigma_max(k)?;
    if max != one_over(m) {
        return Err(Error::Inconsistent(format!("largest signature {max} differs from 1/{m}")));
    }
    let known_sum = int(half) * &min_term;
    let sigma_bound = &known_sum + int(half) * &max;
    let final_bound = &sigma_bound + int(n);
    debug_assert_eq!(final_bound, tau_bound(m, n));
    let chain = vec![
        BoundStep {
            quantity: format!("sigma(T_{k}, chi^{k})"),
            relation: Relation::Eq,
            value: min_term.clone(),
            justification: "closed form at r = k = (m-1)/4, equal to (-m^2+4m+1)/(4m) and to the lattice count".into(),
        },
        BoundStep {
            quantity: format!("sum of {half} known terms sigma(T_{k}, chi^{k})"),
            relation: Relation::Eq,
            value: known_sum.clone(),
            justification: "n/(8m) (-m^2+4m+1)".into(),
        },
        BoundStep {
            quantity: format!("sigma(T_{k}, chi^e) for any e in Z/{m}"),
            relation: Relation::Le,
            value: max.clone(),
            justification: "maximum over all m exponents, attained at r = (m-1)/2 and (m+1)/2; e = 0 gives 0".into(),
        },
        BoundStep {
            quantity: format!("sigma(#{n} T_{k}, chi_bar)"),
            relation: Relation::Le,
            value: sigma_bound.clone(),
            justification: "known terms plus n/2 unknown terms each at most 1/m: n/(8m) (-m^2+4m+5)".into(),
        },
        BoundStep {
            quantity: "|sigma - sigma_1(tau)| summed over summands".into(),
            relation: Relation::Le,
            value: int(n),
            justification: "each summand differs by at most 1".into(),
        },
        BoundStep {
            quantity: format!("sigma_1(tau(#{n} T_{k}, chi_bar))"),
            relation: Relation::Le,
            value: final_bound.clone(),
            justification: "n(-m^2+12m+5)/(8m)".into(),
        },
    ];
    let verdict = if final_bound < Rational::zero() {
        OrderVerdict::InfiniteOrderEvidence
    } else {
        OrderVerdict::Inconclusive
    };
    Ok(OrderCertificate {
        k,
        n,
        m,
        rationale: format!(
            "H1 of the 2-fold branched cover of {n} copies of T_{k} is (Z/{m})^{n}. A metabolizer is a rank-{half} \
             subspace and has an echelon basis whose sum is (1,...,1,b_1,...,b_{half}); {k} times this element is \
             (k,...,k,k_1,...,k_{half}). Linking with it defines a character chi_bar vanishing on the metabolizer, \
             with exponent k on the first {half} summands and unknown exponents k_i on the rest. An unknown k_i = 0 \
             contributes 0, which is below 1/m, so the bound covers it."
        ),
        known_exponents: vec![k; half as usize],
        unknown_exponents: half as usize,
        chain,
        sigma1_tau_upper_bound: final_bound,
        verdict,
        overridden: k < 3,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IndependenceVerdict {
    NotSlice,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityEntry {
    pub k: i64,
    pub n: i64,
    /// k t² − (2k + 1)t + k, constant term first.
    pub alexander: [i64; 3],
    pub discriminant: i64,
    pub irreducible: bool,
    pub exponent_even: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceCertificate {
    /// Sorted by ascending k.
    pub pairs: Vec<(i64, i64)>,
    pub parity: Vec<ParityEntry>,
    /// "fox-milnor" or "signature-bound".
    pub decided_by: String,
    pub m1: Option<i64>,
    pub n1: Option<i64>,
    #[serde(with = "option_rational")]
    pub reduced_bound: Option<Rational>,
    pub verdict: IndependenceVerdict,
    pub reason: String,
}

mod option_rational {
    use super::*;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&crate::algebra::rational::format_rational(r)),
            None => s.serialize_none(),
        }
    }
}

/// Whether #(T_{k_i})^{n_i} can be slice.
pub fn independence_certificate(pairs: &[(i64, i64)]) -> Result<IndependenceCertificate> {
    if pairs.is_empty() {
        return Err(Error::InvalidArgument("no pairs given".into()));
    }
    let mut seen = BTreeSet::new();
    for &(k, n) in pairs {
        if !seen.insert(k) {
            return Err(Error::InvalidArgument(format!("k = {k} is repeated")));
        }
        if k < 3 {
            return Err(Error::InvalidArgument(format!("k = {k} < 3")));
        }
        lens_modulus(k)?;
        if n < 1 {
            return Err(Error::InvalidArgument(format!("multiplicity n = {n} for k = {k} must be positive")));
        }
    }
    let mut sorted = pairs.to_vec();
    sorted.sort_unstable();
    let parity: Vec<ParityEntry> = sorted
        .iter()
        .map(|&(k, n)| {
            let disc = 4 * k + 1;
            ParityEntry {
                k,
                n,
                alexander: [k, -(2 * k + 1), k],
                discriminant: disc,
                irreducible: is_perfect_square(&BigInt::from(disc)).is_none(),
                exponent_even: n % 2 == 0,
            }
        })
        .collect();
    let mut cert = IndependenceCertificate {
        pairs: sorted.clone(),
        parity,
        decided_by: String::new(),
        m1: None,
        n1: None,
        reduced_bound: None,
        verdict: IndependenceVerdict::Inconclusive,
        reason: String::new(),
    };
    // distinct k give distinct symmetric irreducible quadratics
    if let Some(odd) = cert.parity.iter().find(|p| p.irreducible && !p.exponent_even) {
        cert.decided_by = "fox-milnor".into();
        cert.verdict = IndependenceVerdict::NotSlice;
        cert.reason = format!(
            "the irreducible symmetric factor {}t^2 - {}t + {} of the Alexander polynomial occurs to the odd power {}",
            odd.k,
            2 * odd.k + 1,
            odd.k,
            odd.n
        );
        return Ok(cert);
    }
    let (k1, n1) = sorted[0];
    let m1 = 4 * k1 + 1;
    let bound = tau_bound(m1, n1);
    cert.decided_by = "signature-bound".into();
    cert.m1 = Some(m1);
    cert.n1 = Some(n1);
    cert.reduced_bound = Some(bound.clone());
    if bound < Rational::zero() {
        cert.verdict = IndependenceVerdict::NotSlice;
        cert.reason = format!(
            "all exponents are even; a character supported on the Z/{m1} summands (other primes admit no map to Z/{m1}) \
             gives sigma_1(tau) <= {} < 0",
            crate::algebra::rational::format_rational(&bound)
        );
    } else {
        cert.reason = "the reduced bound is not negative".into();
    }
    Ok(cert)
}
