use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use knotorder_core::algebra::rational::{format_rational, parse_rational};
use knotorder_core::algebra::repr::PolyRepr;
use knotorder_core::algebra::{CyclotomicField, LaurentPoly};
use knotorder_core::knot::{
    branched_cover_homology, determinant, integer_coefficients, integral_normal_form, twist_knot_order,
    Character, KnotFile, KnotRecord,
};
use knotorder_core::lens::{independence_certificate, infinite_order_certificate_with, lens_signature};
use knotorder_core::obstruction::{
    brute_force_metabolizers, enumerate_metabolizers, fox_milnor_test, order_two_report_with, FoxMilnorVerdict,
    Metabolizer, OrderTwoOptions, OrderTwoVerdict,
};
use knotorder_core::twisted::twisted_alexander_with_column;
use knotorder_core::Error;

use crate::args::{Command, LensCommand};
use crate::envelope::ErrorPayload;
use crate::schema::Schema;

/// A computed result: the JSON payload, its text rendering and whether the
/// verdict was left undecided.
pub struct Outcome {
    pub payload: Value,
    pub text: String,
    pub indeterminate: bool,
}

pub type CmdResult = std::result::Result<Outcome, ErrorPayload>;

fn core<T>(r: knotorder_core::Result<T>) -> std::result::Result<T, ErrorPayload> {
    r.map_err(|e| ErrorPayload::from(&e))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn emit<T: Serialize>(x: &T, schema: Option<Schema>, text: String, indeterminate: bool) -> CmdResult {
    let payload = to_value(x);
    if let Some(s) = schema {
        s.validate(&payload)?;
    }
    Ok(Outcome {
        payload,
        text,
        indeterminate,
    })
}

/// Reads, schema-checks and parses a knot file. Returns the raw bytes for hashing.
pub fn load_knot(path: &Path) -> std::result::Result<(KnotRecord, Vec<u8>), ErrorPayload> {
    let bytes = std::fs::read(path).map_err(|e| {
        let msg = match e.kind() {
            std::io::ErrorKind::NotFound => format!("file not found: {}", path.display()),
            _ => format!("cannot read {}: {e}", path.display()),
        };
        ErrorPayload::from(&Error::Io(msg))
    })?;
    let value: Value = serde_json::from_slice(&bytes)
        .map_err(|e| ErrorPayload::from(&Error::Parse(format!("{}: {e}", path.display()))))?;
    Schema::KnotFile.validate(&value)?;
    let file: KnotFile = serde_json::from_value(value)
        .map_err(|e| ErrorPayload::from(&Error::Parse(format!("{}: {e}", path.display()))))?;
    Ok((core(file.to_record())?, bytes))
}

pub fn knot_path(cmd: &Command) -> Option<&Path> {
    match cmd {
        Command::Alex { knot }
        | Command::Twisted { knot, .. }
        | Command::CoverHomology { knot, .. }
        | Command::Metabolizers { knot, .. }
        | Command::Order2 { knot, .. } => Some(knot),
        _ => None,
    }
}

pub fn execute(cmd: &Command, knot: Option<&KnotRecord>) -> CmdResult {
    let knot = || knot.expect("knot loaded for file commands");
    match cmd {
        Command::Alex { .. } => alex(knot()),
        Command::Twisted {
            cover,
            modulus,
            character,
            column,
            ..
        } => twisted(knot(), *cover, *modulus, character, *column),
        Command::CoverHomology { n, .. } => cover_homology(knot(), *n),
        Command::Metabolizers { single, brute_force, .. } => metabolizers(knot(), *single, *brute_force),
        Command::Order2 { full_orbit, .. } => order2(knot(), *full_orbit),
        Command::Lens { command } => lens(command),
        Command::FoxMilnor { poly } => fox_milnor(poly),
        Command::TwistKnot { k } => {
            let r = core(twist_knot_order(*k))?;
            let text = format!("T_{}: determinant {}, algebraic order {}\n{}\n", r.k, r.determinant, r.algebraic_order, r.reason);
            emit(&r, None, text, false)
        }
    }
}

#[derive(Serialize)]
struct AlexanderPayload {
    knot: String,
    polynomial: PolyRepr,
    coefficients: Vec<String>,
    determinant: String,
    routes: Vec<&'static str>,
}

fn alex(k: &KnotRecord) -> CmdResult {
    let routes = core(k.alexander_routes())?;
    let p = core(integral_normal_form(&core(k.alexander())?))?;
    let coefficients = integer_coefficients(&p)
        .expect("integral normal form")
        .iter()
        .map(ToString::to_string)
        .collect();
    let payload = AlexanderPayload {
        knot: k.name.clone(),
        polynomial: PolyRepr::from(&p),
        coefficients,
        determinant: determinant(&p).to_string(),
        routes: routes.iter().map(|(r, _)| *r).collect(),
    };
    let text = format!(
        "{}: Delta = {p}\n|Delta(-1)| = {}\nagreeing routes: {}\n",
        k.name,
        payload.determinant,
        payload.routes.join(", ")
    );
    emit(&payload, None, text, false)
}

#[derive(Serialize)]
struct TwistedPayload {
    knot: String,
    cover: usize,
    modulus: u64,
    character: Vec<u64>,
    deleted_column: Option<usize>,
    polynomial: PolyRepr,
    t_minus_one_power: u32,
    residual: PolyRepr,
}

fn twisted(k: &KnotRecord, cover: usize, modulus: u64, values: &[i64], column: Option<usize>) -> CmdResult {
    if values.is_empty() {
        return Err(ErrorPayload::new("invalid-argument", "--character needs at least one value"));
    }
    let chi = core(Character::new(modulus, values.to_vec()))?;
    let p = core(k.group_presentation())?;
    let tw = core(twisted_alexander_with_column(&p, cover, &chi, column))?;
    let (e, residual) = tw.value.strip_t_minus_one();
    let residual = core(residual.canonical())?;
    let payload = TwistedPayload {
        knot: k.name.clone(),
        cover,
        modulus,
        character: chi.values.clone(),
        deleted_column: tw.deleted_column,
        polynomial: PolyRepr::from(&tw.value),
        t_minus_one_power: e,
        residual: PolyRepr::from(&residual),
    };
    let mut text = format!(
        "{}: twisted polynomial, {cover}-fold cover, chi = {:?} mod {modulus}, column {}\n",
        k.name,
        chi.values,
        tw.deleted_column.map_or("-".into(), |j| j.to_string())
    );
    let factor = match e {
        0 => String::new(),
        1 => "(t - 1) * ".into(),
        _ => format!("(t - 1)^{e} * "),
    };
    let _ = writeln!(text, "{factor}({residual})");
    for (exp, c) in residual.terms() {
        if c.as_rational().is_none() {
            let _ = writeln!(text, "coefficient of t^{exp}: {c}");
        }
    }
    emit(&payload, None, text, false)
}

#[derive(Serialize)]
struct HomologyPayload {
    knot: String,
    n: usize,
    route: String,
    orders: Vec<u64>,
    order: u64,
    description: String,
    /// Linking matrix on the invariant-factor generators, when known.
    linking: Option<Vec<Vec<String>>>,
}

fn cover_homology(k: &KnotRecord, n: usize) -> CmdResult {
    let h = core(branched_cover_homology(k, n, None))?;
    let linking = h.linking.as_ref().map(|l| {
        l.group
            .linking_matrix()
            .iter()
            .map(|row| row.iter().map(format_rational).collect())
            .collect()
    });
    let payload = HomologyPayload {
        knot: k.name.clone(),
        n,
        route: to_value(&h.route).as_str().unwrap_or_default().to_string(),
        orders: h.orders.clone(),
        order: h.order(),
        description: h.describe(),
        linking,
    };
    let text = format!("H1 of the {n}-fold branched cover of {}: {}\n", k.name, payload.description);
    emit(&payload, None, text, false)
}

#[derive(Serialize)]
struct MetabolizerPayload {
    knot: String,
    summands: usize,
    group: Vec<u64>,
    method: String,
    metabolizers: Vec<Metabolizer>,
    reason: Option<String>,
    brute_force_agrees: Option<bool>,
}

fn metabolizers(k: &KnotRecord, single: bool, brute: bool) -> CmdResult {
    let g1 = core(core(branched_cover_homology(k, 2, None))?.linked_group())?;
    let g = if single { g1 } else { g1.orthogonal_sum(&g1) };
    let search = core(enumerate_metabolizers(&g))?;
    let brute_force_agrees = if brute {
        let mut a: Vec<_> = search.metabolizers.iter().map(|m| m.elements(&g)).collect();
        let mut b: Vec<_> = core(brute_force_metabolizers(&g))?.iter().map(|m| m.elements(&g)).collect();
        a.sort();
        b.sort();
        Some(a == b)
    } else {
        None
    };
    let payload = MetabolizerPayload {
        knot: k.name.clone(),
        summands: if single { 1 } else { 2 },
        group: g.orders().to_vec(),
        method: search.method.to_string(),
        metabolizers: search.metabolizers,
        reason: search.reason,
        brute_force_agrees,
    };
    let mut text = format!(
        "{} metabolizer(s) in {} ({})\n",
        payload.metabolizers.len(),
        g.describe(),
        payload.method
    );
    for m in &payload.metabolizers {
        let gens: Vec<String> = m
            .generators
            .iter()
            .map(|x| format!("({})", x.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        let _ = writeln!(text, "  <{}> of order {}", gens.join(", "), m.order);
    }
    if let Some(r) = &payload.reason {
        let _ = writeln!(text, "{r}");
    }
    if let Some(ok) = brute_force_agrees {
        let _ = writeln!(text, "exhaustive search {}", if ok { "agrees" } else { "DISAGREES" });
    }
    emit(&payload, None, text, false)
}

fn order2(k: &KnotRecord, full_orbit: bool) -> CmdResult {
    let report = core(order_two_report_with(k, &OrderTwoOptions { full_orbit }))?;
    let verdict = to_value(&report.verdict);
    let mut text = format!(
        "{}: verdict {}\nH1 of the 2-fold cover: {}\n",
        report.knot,
        verdict.as_str().unwrap_or_default(),
        report.cover_homology
    );
    for r in &report.records {
        let gens: Vec<String> = r.metabolizer.generators.iter().map(|g| format!("{g:?}")).collect();
        let _ = writeln!(
            text,
            "  metabolizer <{}>: {}",
            gens.join(", "),
            to_value(&r.verdict).as_str().unwrap_or_default()
        );
        for c in &r.characters {
            let _ = writeln!(
                text,
                "    chi {:?} + {:?}: {}",
                c.characters[0].values,
                c.characters[1].values,
                to_value(&c.verdict).as_str().unwrap_or_default()
            );
        }
    }
    let _ = writeln!(text, "{}", report.reason);
    let undecided = report.indeterminate && report.verdict != OrderTwoVerdict::Obstructed;
    emit(&report, Some(Schema::ObstructionReport), text, undecided)
}

fn parse_pair(s: &str) -> std::result::Result<(i64, i64), ErrorPayload> {
    let bad = || ErrorPayload::new("parse", format!("expected k:n, got {s:?}"));
    let (k, n) = s.split_once(':').ok_or_else(bad)?;
    Ok((k.trim().parse().map_err(|_| bad())?, n.trim().parse().map_err(|_| bad())?))
}

fn lens(cmd: &LensCommand) -> CmdResult {
    match cmd {
        LensCommand::Sigma { k, r } => {
            let v = core(lens_signature(*k, *r))?;
            let text = format!("sigma(T_{k}, chi^{r}) = {} (m = {})\n", format_rational(&v.value), v.m);
            emit(&v, None, text, false)
        }
        LensCommand::InfiniteOrder { k, n, allow_small_k } => {
            let c = core(infinite_order_certificate_with(*k, *n, *allow_small_k))?;
            let mut text = format!("{} T_{k} (m = {}): {}\n", c.n, c.m, to_value(&c.verdict).as_str().unwrap_or_default());
            for s in &c.chain {
                let rel = to_value(&s.relation);
                let _ = writeln!(
                    text,
                    "  {} {} {}   [{}]",
                    s.quantity,
                    rel.as_str().unwrap_or_default(),
                    format_rational(&s.value),
                    s.justification
                );
            }
            emit(&c, Some(Schema::OrderCertificate), text, false)
        }
        LensCommand::Independence { pairs } => {
            let pairs = pairs.iter().map(|s| parse_pair(s)).collect::<std::result::Result<Vec<_>, _>>()?;
            let c = core(independence_certificate(&pairs))?;
            let text = format!(
                "{}: decided by {}\n{}\n",
                to_value(&c.verdict).as_str().unwrap_or_default(),
                c.decided_by,
                c.reason
            );
            emit(&c, Some(Schema::IndependenceCertificate), text, false)
        }
    }
}

fn fox_milnor(poly: &str) -> CmdResult {
    let coeffs = poly
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(parse_rational)
        .collect::<knotorder_core::Result<Vec<_>>>();
    let coeffs = core(coeffs)?;
    let p = LaurentPoly::from_rationals(&CyclotomicField::rationals(), 0, &coeffs);
    let r = core(fox_milnor_test(&p))?;
    let mut text = format!("{p}: {}\n", to_value(&r.verdict).as_str().unwrap_or_default());
    if r.verdict == FoxMilnorVerdict::Passes {
        let w = LaurentPoly::from_rationals(&CyclotomicField::rationals(), 0, &r.witness);
        let _ = writeln!(text, "f = {w}");
    }
    let _ = writeln!(text, "{}", r.reason);
    emit(&r, None, text, r.verdict == FoxMilnorVerdict::Indeterminate)
}
