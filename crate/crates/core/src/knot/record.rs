//! Knot records carrying several representations, and the twist-knot family.

use num_traits::ToPrimitive;
use serde::Serialize;

use super::alexander::{alexander_from_presentation, alexander_from_seifert, twist_knot_alexander};
use super::diagram::{four_plat, two_bridge_presentation, CrossingDiagram};
use super::homology::{linking_form, LinkedAbelianGroup, SeifertLinking, SeifertMatrix};
use crate::algebra::arith::factorize;
use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::group::{cyclic_cover_presentation, Presentation};

#[derive(Clone, Debug)]
pub struct KnotRecord {
    pub name: String,
    pub diagram: Option<CrossingDiagram>,
    pub presentation: Option<Presentation>,
    pub seifert: Option<SeifertMatrix>,
}

impl KnotRecord {
    /// Builds a record, requiring the Alexander polynomials of all supplied
    /// representations to agree up to units.
    pub fn new(
        name: impl Into<String>,
        diagram: Option<CrossingDiagram>,
        presentation: Option<Presentation>,
        seifert: Option<SeifertMatrix>,
    ) -> Result<Self> {
        let rec = KnotRecord {
            name: name.into(),
            diagram,
            presentation,
            seifert,
        };
        let routes = rec.alexander_routes()?;
        let Some((first_route, first)) = routes.first() else {
            return Err(Error::InvalidArgument(format!(
                "knot {} has no crossings, presentation or Seifert matrix",
                rec.name
            )));
        };
        for (route, a) in &routes[1..] {
            if !a.unit_equivalent(first) {
                return Err(Error::Inconsistent(format!(
                    "{}: Alexander polynomial from {route} ({a}) differs from {first_route} ({first})",
                    rec.name
                )));
            }
        }
        Ok(rec)
    }

    /// Alexander polynomial from each available representation.
    pub fn alexander_routes(&self) -> Result<Vec<(&'static str, LaurentPoly)>> {
        let mut out = Vec::new();
        if let Some(p) = &self.presentation {
            out.push(("presentation", alexander_from_presentation(p)?));
        }
        if let Some(d) = &self.diagram {
            out.push(("crossings", alexander_from_presentation(&d.wirtinger()?)?));
        }
        if let Some(v) = &self.seifert {
            out.push(("seifert", alexander_from_seifert(v.matrix())?));
        }
        Ok(out)
    }

    pub fn alexander(&self) -> Result<LaurentPoly> {
        if let Some(v) = &self.seifert {
            return alexander_from_seifert(v.matrix());
        }
        alexander_from_presentation(&self.group_presentation()?)
    }

    /// The explicit presentation if present, else the Wirtinger presentation.
    pub fn group_presentation(&self) -> Result<Presentation> {
        if let Some(p) = &self.presentation {
            return Ok(p.clone());
        }
        if let Some(d) = &self.diagram {
            return d.wirtinger();
        }
        Err(Error::Precondition(format!("{} has no group presentation or diagram", self.name)))
    }

    pub fn has_group(&self) -> bool {
        self.presentation.is_some() || self.diagram.is_some()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HomologyRoute {
    Seifert,
    Presentation,
}

/// H₁ of the n-fold branched cyclic cover.
#[derive(Clone, Debug)]
pub struct CoverHomology {
    pub n: usize,
    pub route: HomologyRoute,
    /// Invariant factors d₁ | d₂ | …, each at least 2.
    pub orders: Vec<u64>,
    /// Linking form, available from Seifert data.
    pub linking: Option<SeifertLinking>,
}

impl CoverHomology {
    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.len() <= 1
    }

    /// The linking form if known; for cyclic groups without Seifert data,
    /// the form with lk(g, g) = 1/N on the presentation generator.
    pub fn linked_group(&self) -> Result<LinkedAbelianGroup> {
        if let Some(l) = &self.linking {
            return Ok(l.group.clone());
        }
        match self.orders.as_slice() {
            [] => Ok(LinkedAbelianGroup::trivial()),
            [n] => LinkedAbelianGroup::cyclic(*n, 1),
            _ => Err(Error::Precondition(
                "linking form of a non-cyclic group needs a Seifert matrix".into(),
            )),
        }
    }

    pub fn describe(&self) -> String {
        if self.orders.is_empty() {
            return "0".into();
        }
        self.orders.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" + ")
    }
}

/// Uses the Seifert matrix when available and n = 2, otherwise the cover presentation.
pub fn branched_cover_homology(k: &KnotRecord, n: usize, route: Option<HomologyRoute>) -> Result<CoverHomology> {
    if n < 2 {
        return Err(Error::InvalidArgument("branched cover degree must be at least 2".into()));
    }
    let route = route.unwrap_or(if n == 2 && k.seifert.is_some() {
        HomologyRoute::Seifert
    } else {
        HomologyRoute::Presentation
    });
    match route {
        HomologyRoute::Seifert => {
            if n != 2 {
                return Err(Error::Precondition("the Seifert route only computes the 2-fold cover".into()));
            }
            let v = k
                .seifert
                .as_ref()
                .ok_or_else(|| Error::Precondition(format!("{} has no Seifert matrix", k.name)))?;
            let l = linking_form(v)?;
            Ok(CoverHomology {
                n,
                route,
                orders: l.group.orders().to_vec(),
                linking: Some(l),
            })
        }
        HomologyRoute::Presentation => {
            let p = k.group_presentation()?;
            let h = cyclic_cover_presentation(&p, n)?.branched_homology();
            if h.rank() > 0 {
                return Err(Error::Inconsistent(format!(
                    "branched cover homology {} is infinite",
                    h.describe()
                )));
            }
            let orders = h
                .invariants
                .iter()
                .map(|d| d.to_u64().ok_or_else(|| Error::InvalidArgument("invariant factor too large".into())))
                .collect::<Result<_>>()?;
            Ok(CoverHomology {
                n,
                route,
                orders,
                linking: None,
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistKnotReport {
    pub k: i64,
    pub determinant: u64,
    pub algebraic_order: u8,
    pub reason: String,
}

/// Algebraic concordance order of T_k.
pub fn twist_knot_order(k: i64) -> Result<TwistKnotReport> {
    if k <= 0 {
        return Err(Error::InvalidArgument(format!("twist parameter must be positive, got {k}")));
    }
    let m = (4 * k + 1) as u64;
    let u = (1..=k + 1).find(|u| u * (u - 1) == k);
    let (order, reason) = if let Some(u) = u {
        (1, format!("k = {u}*{}; the Seifert form is metabolic", u - 1))
    } else if let Some((p, e)) = factorize(m).into_iter().find(|&(p, e)| p % 4 == 3 && e % 2 == 1) {
        (4, format!("{p}^{e} exactly divides 4k+1 = {m}, p = 3 mod 4 with odd exponent"))
    } else {
        (2, format!("4k+1 = {m} has no prime = 3 mod 4 to an odd power and k is not u(u-1)"))
    };
    Ok(TwistKnotReport {
        k,
        determinant: m,
        algebraic_order: order,
        reason,
    })
}

/// T_k with Seifert matrix, 2-bridge presentation b(4k+1, 2) and a 4-plat diagram.
pub fn twist_knot_model(k: i64) -> Result<(KnotRecord, TwistKnotReport)> {
    let report = twist_knot_order(k)?;
    let m = report.determinant;
    let rec = KnotRecord::new(
        format!("T_{k}"),
        Some(four_plat(&[2 * k as u64, 2])?),
        Some(two_bridge_presentation(m, 2)?),
        Some(SeifertMatrix::twist_knot(k)),
    )?;
    debug_assert!(rec.alexander().is_ok_and(|a| a.unit_equivalent(&twist_knot_alexander(k))));
    Ok((rec, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::alexander::determinant;

    #[test]
    fn twist_knot_orders() {
        assert_eq!(twist_knot_order(1).unwrap().algebraic_order, 2);
        assert_eq!(twist_knot_order(2).unwrap().algebraic_order, 1);
        assert_eq!(twist_knot_order(3).unwrap().algebraic_order, 2);
        // 4k+1 = 21 = 3·7
        assert_eq!(twist_knot_order(5).unwrap().algebraic_order, 4);
        assert_eq!(twist_knot_order(6).unwrap().algebraic_order, 1);
        assert!(twist_knot_order(0).is_err());
    }

    #[test]
    fn twist_knot_records_are_consistent() {
        for k in 1..=6 {
            let (rec, _) = twist_knot_model(k).unwrap();
            let a = rec.alexander().unwrap();
            assert!(a.unit_equivalent(&twist_knot_alexander(k)));
            let s = branched_cover_homology(&rec, 2, Some(HomologyRoute::Seifert)).unwrap();
            let p = branched_cover_homology(&rec, 2, Some(HomologyRoute::Presentation)).unwrap();
            assert_eq!(s.orders, vec![(4 * k + 1) as u64]);
            assert_eq!(p.orders, s.orders);
            assert_eq!(determinant(&a), (4 * k + 1).into());
        }
    }

    #[test]
    fn disagreeing_routes_rejected() {
        let v = SeifertMatrix::twist_knot(3);
        let p = two_bridge_presentation(3, 1).unwrap();
        assert!(matches!(KnotRecord::new("bad", None, Some(p), Some(v)), Err(Error::Inconsistent(_))));
        assert!(KnotRecord::new("empty", None, None, None).is_err());
    }

    #[test]
    fn unknot_cover_is_trivial() {
        let p = Presentation::new(1, vec![], Some(vec![1])).unwrap();
        let rec = KnotRecord::new("unknot", None, Some(p), None).unwrap();
        for n in 2..5 {
            let h = branched_cover_homology(&rec, n, None).unwrap();
            assert!(h.orders.is_empty());
        }
    }
}
