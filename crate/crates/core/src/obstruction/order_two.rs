//! Whether K # K can be algebraically slice, via twisted polynomials of the
//! characters that vanish on each metabolizer.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::metabolizer::{enumerate_metabolizers, Metabolizer};
use super::norm::{norm_factorization_test, NormCertificate, NormVerdict};
use crate::algebra::arith::gcd;
use crate::algebra::repr::serde_poly;
use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::group::Presentation;
use crate::knot::{branched_cover_homology, Character, HomologyRoute, KnotRecord, LinkedAbelianGroup};
use crate::twisted::{connected_sum_twisted, galois_twist, is_prime_power, twisted_alexander, TwistedPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderTwoVerdict {
    Obstructed,
    Inconclusive,
    NotAlgebraicallySlice,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordVerdict {
    Obstructed,
    Compatible,
    Indeterminate,
}

#[derive(Clone, Debug, Default)]
pub struct OrderTwoOptions {
    /// Test every nonzero prime-power-order element of each metabolizer,
    /// not only its generators.
    pub full_orbit: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterRecord {
    /// Element of the metabolizer defining the character.
    pub element: Vec<i64>,
    /// Characters on the two summands.
    pub characters: [Character; 2],
    #[serde(with = "serde_poly")]
    pub polynomial: LaurentPoly,
    pub verdict: NormVerdict,
    pub certificate: Option<NormCertificate>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MetabolizerRecord {
    pub metabolizer: Metabolizer,
    pub characters: Vec<CharacterRecord>,
    pub verdict: RecordVerdict,
    pub skipped: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub knot: String,
    /// H₁ of the 2-fold branched cover of K.
    pub cover_homology: String,
    /// Orders of the invariant factors of H₁(Σ₂(K # K)).
    pub group: Vec<u64>,
    pub metabolizer_method: String,
    pub records: Vec<MetabolizerRecord>,
    pub verdict: OrderTwoVerdict,
    /// Some test could not be decided.
    pub indeterminate: bool,
    pub reason: String,
}

pub fn order_two_report(k: &KnotRecord) -> Result<ObstructionReport> {
    order_two_report_with(k, &OrderTwoOptions::default())
}

/// Base polynomials per modulus, shared by Galois conjugation.
struct Twists<'a> {
    p: &'a Presentation,
    cache: HashMap<(u64, u64), TwistedPolynomial>,
}

impl Twists<'_> {
    fn get(&mut self, d: u64, v: u64) -> Result<TwistedPolynomial> {
        let v = v % d;
        if let Some(t) = self.cache.get(&(d, v)) {
            return Ok(t.clone());
        }
        let t = if v > 1 && gcd(v as i64, d as i64) == 1 {
            galois_twist(&self.get(d, 1)?, v as i64)?
        } else {
            twisted_alexander(self.p, 2, &Character::new(d, vec![v as i64])?)?
        };
        self.cache.insert((d, v), t.clone());
        Ok(t)
    }
}

fn test_element(tw: &mut Twists<'_>, n: u64, g: &LinkedAbelianGroup, h: &[i64]) -> Result<Option<CharacterRecord>> {
    let d = g.element_order(h);
    if !is_prime_power(d) || d == 1 {
        return Ok(None);
    }
    // χ(x) = d·λ(x, h) with λ = xy/N on each summand
    let step = (n / d) as i64;
    let v: Vec<u64> = h.iter().map(|&c| (c.rem_euclid(n as i64) / step) as u64 % d).collect();
    let parts = [tw.get(d, v[0])?, tw.get(d, v[1])?];
    let sum = connected_sum_twisted(&parts)?;
    let characters = [parts[0].character.clone(), parts[1].character.clone()];
    let (verdict, certificate, note) = match norm_factorization_test(&sum) {
        Ok(c) => (c.verdict, Some(c), None),
        Err(Error::NotDivisible(msg)) => (NormVerdict::Indeterminate, None, Some(msg)),
        Err(e) => return Err(e),
    };
    Ok(Some(CharacterRecord {
        element: h.to_vec(),
        characters,
        polynomial: sum.value,
        verdict,
        certificate,
        note,
    }))
}

fn test_metabolizer(
    p: &Presentation,
    n: u64,
    g: &LinkedAbelianGroup,
    m: &Metabolizer,
    opts: &OrderTwoOptions,
) -> Result<MetabolizerRecord> {
    let elements = if opts.full_orbit {
        m.elements(g).into_iter().filter(|x| !g.is_zero(x)).collect()
    } else {
        m.generators.clone()
    };
    let mut tw = Twists {
        p,
        cache: HashMap::new(),
    };
    let mut characters = Vec::new();
    let mut skipped = Vec::new();
    for h in &elements {
        match test_element(&mut tw, n, g, h)? {
            Some(r) => characters.push(r),
            None => skipped.push(format!(
                "{h:?} has order {}, not a prime power",
                g.element_order(h)
            )),
        }
    }
    let verdict = if characters.iter().any(|c| c.verdict == NormVerdict::Obstructed) {
        RecordVerdict::Obstructed
    } else if characters.iter().any(|c| c.verdict == NormVerdict::Indeterminate) {
        RecordVerdict::Indeterminate
    } else {
        RecordVerdict::Compatible
    };
    Ok(MetabolizerRecord {
        metabolizer: m.clone(),
        characters,
        verdict,
        skipped,
    })
}

/// Tests each metabolizer of H₁(Σ₂(K # K)) = H ⊕ H for H = H₁(Σ₂(K)) cyclic.
///
/// The linking form on H is taken as xy/N on the presentation generator. Any
/// other nonsingular form differs by a unit, which leaves the metabolizers of
/// the diagonal sum unchanged and moves the characters within a Galois orbit.
pub fn order_two_report_with(k: &KnotRecord, opts: &OrderTwoOptions) -> Result<ObstructionReport> {
    let p = k.group_presentation()?;
    let h = branched_cover_homology(k, 2, Some(HomologyRoute::Presentation))?;
    let mut report = ObstructionReport {
        knot: k.name.clone(),
        cover_homology: h.describe(),
        group: vec![],
        metabolizer_method: String::new(),
        records: vec![],
        verdict: OrderTwoVerdict::Inconclusive,
        indeterminate: false,
        reason: String::new(),
    };
    if !h.is_cyclic() {
        return Err(Error::Precondition(format!(
            "H1 of the 2-fold branched cover is {}, not cyclic",
            h.describe()
        )));
    }
    let n = h.order();
    let base = LinkedAbelianGroup::cyclic(n, 1)?;
    let g = base.orthogonal_sum(&base);
    report.group = g.orders().to_vec();
    let search = enumerate_metabolizers(&g)?;
    report.metabolizer_method = search.method.to_string();
    if search.metabolizers.is_empty() {
        report.verdict = OrderTwoVerdict::NotAlgebraicallySlice;
        report.reason = search
            .reason
            .unwrap_or_else(|| format!("{} has no metabolizer", g.describe()));
        return Ok(report);
    }
    if n == 1 {
        report.reason = "the 2-fold branched cover is a homology sphere; no characters to test".into();
        return Ok(report);
    }
    report.records = search
        .metabolizers
        .par_iter()
        .map(|m| test_metabolizer(&p, n, &g, m, opts))
        .collect::<Result<Vec<_>>>()?;
    report.indeterminate = report.records.iter().any(|r| r.verdict == RecordVerdict::Indeterminate);
    let obstructed = report.records.iter().filter(|r| r.verdict == RecordVerdict::Obstructed).count();
    if obstructed == report.records.len() {
        report.verdict = OrderTwoVerdict::Obstructed;
        report.reason = format!(
            "every one of the {obstructed} metabolizer(s) carries a character whose twisted polynomial is not a norm"
        );
    } else {
        report.reason = format!(
            "{} of {} metabolizer(s) pass every tested character{}",
            report.records.len() - obstructed,
            report.records.len(),
            if report.indeterminate { " or are undecided" } else { "" }
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::{twist_knot_model, two_bridge_presentation};

    fn two_bridge(name: &str, p: u64, q: u64) -> KnotRecord {
        KnotRecord::new(name, None, Some(two_bridge_presentation(p, q).unwrap()), None).unwrap()
    }

    #[test]
    fn eight_thirteen_is_obstructed() {
        let r = order_two_report(&two_bridge("8_13", 29, 11)).unwrap();
        assert_eq!(r.verdict, OrderTwoVerdict::Obstructed);
        let gens: Vec<_> = r.records.iter().map(|x| x.metabolizer.generators.clone()).collect();
        assert_eq!(gens, vec![vec![vec![1, 12]], vec![vec![1, 17]]]);
        assert!(!r.indeterminate);
    }

    #[test]
    fn stevedore_is_not_obstructed() {
        let (k, _) = twist_knot_model(2).unwrap();
        for full_orbit in [false, true] {
            let r = order_two_report_with(&k, &OrderTwoOptions { full_orbit }).unwrap();
            assert_ne!(r.verdict, OrderTwoVerdict::Obstructed);
            assert!(r.records.iter().all(|m| m.verdict == RecordVerdict::Compatible));
        }
    }

    #[test]
    fn trefoil_has_no_metabolizer() {
        let r = order_two_report(&two_bridge("3_1", 3, 1)).unwrap();
        assert_eq!(r.verdict, OrderTwoVerdict::NotAlgebraicallySlice);
    }

    #[test]
    fn figure_eight_is_not_obstructed() {
        // amphichiral, so K # K is slice
        let r = order_two_report(&two_bridge("4_1", 5, 2)).unwrap();
        assert_eq!(r.records.len(), 2);
        assert_ne!(r.verdict, OrderTwoVerdict::Obstructed);
    }
}
