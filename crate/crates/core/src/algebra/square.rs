//! Deciding whether an element of Q(ζ_d) is a square, with checkable evidence.
//!
//! A "no" answer comes with a split prime `q ≡ 1 (mod d)` and a primitive
//! d-th root of unity `g` mod `q` at which the input reduces to a nonzero
//! quadratic non-residue. A "yes" answer carries an exact root, verified by
//! squaring. Roots are found by q-adic Newton lifting at an inert prime, or,
//! when (Z/d)^* is not cyclic and no prime is inert, by lifting in each
//! embedding at a split prime and searching the sign patterns.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::arith::{is_prime, pow_mod_u64};
use super::cyclotomic::{multiplicative_order, Cyclotomic, CyclotomicField};
use super::rational::rational_sqrt;

/// Environment variable overriding [`SquareConfig::prime_budget`].
pub const PRIME_BUDGET_ENV: &str = "KNOTORDER_PRIME_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SquareVerdict {
    Yes,
    No,
    Indeterminate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NonResidueWitness {
    pub prime: u64,
    pub root: u64,
}

fn serialize_root<S: serde::Serializer>(r: &Option<Cyclotomic>, s: S) -> std::result::Result<S::Ok, S::Error> {
    r.as_ref().map(super::repr::CyclotomicRepr::from).serialize(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareCertificate {
    pub verdict: SquareVerdict,
    #[serde(serialize_with = "serialize_root")]
    pub root: Option<Cyclotomic>,
    pub witness: Option<NonResidueWitness>,
}

impl SquareCertificate {
    fn yes(root: Cyclotomic) -> Self {
        SquareCertificate {
            verdict: SquareVerdict::Yes,
            root: Some(root),
            witness: None,
        }
    }

    fn no(w: NonResidueWitness) -> Self {
        SquareCertificate {
            verdict: SquareVerdict::No,
            root: None,
            witness: Some(w),
        }
    }

    fn indeterminate() -> Self {
        SquareCertificate {
            verdict: SquareVerdict::Indeterminate,
            root: None,
            witness: None,
        }
    }

    /// Re-checks the certificate against `x` from scratch.
    pub fn verify(&self, x: &Cyclotomic) -> bool {
        match self.verdict {
            SquareVerdict::Yes => self.root.as_ref().is_some_and(|r| &(r * r) == x),
            SquareVerdict::No => self.witness.is_some_and(|w| check_witness(x, w)),
            SquareVerdict::Indeterminate => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SquareConfig {
    /// Number of primes tried by each of the witness and lifting searches.
    pub prime_budget: usize,
}

impl Default for SquareConfig {
    fn default() -> Self {
        SquareConfig { prime_budget: 25 }
    }
}

impl SquareConfig {
    /// Default configuration, with the budget taken from [`PRIME_BUDGET_ENV`] if set.
    pub fn from_env() -> Self {
        let mut cfg = Self::default();
        if let Some(b) = std::env::var(PRIME_BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            cfg.prime_budget = b.max(1);
        }
        cfg
    }
}

pub fn is_square(x: &Cyclotomic, cfg: &SquareConfig) -> SquareCertificate {
    if x.is_zero() {
        return SquareCertificate::yes(x.clone());
    }
    if let Some(w) = non_residue_witnesses(x, 1, cfg.prime_budget).first() {
        return SquareCertificate::no(*w);
    }
    let field = x.field();
    if let Some(r) = x.as_rational() {
        if let Some(s) = rational_sqrt(&r) {
            return SquareCertificate::yes(Cyclotomic::from_rational(field, &s));
        }
    }
    if field.is_rational_field() {
        return SquareCertificate::indeterminate();
    }
    let root = if field.unit_generator().is_some() {
        lift_root(x, cfg.prime_budget)
    } else {
        lift_root_split(x, cfg.prime_budget)
    };
    match root {
        Some(root) => SquareCertificate::yes(root),
        None => SquareCertificate::indeterminate(),
    }
}

/// Primitive d-th roots of unity modulo a prime `q ≡ 1 (mod d)`.
pub fn primitive_roots_of_unity(d: u64, q: u64) -> Vec<u64> {
    assert!((q - 1).is_multiple_of(d));
    let exp = (q - 1) / d;
    let mut h = None;
    for a in 2..q.max(3) {
        let c = pow_mod_u64(a, exp, q);
        if exact_order(c, d, q) {
            h = Some(c);
            break;
        }
    }
    let h = h.unwrap_or(1 % q);
    let mut out: Vec<u64> = (1..=d)
        .filter(|k| num_integer::gcd(*k, d) == 1)
        .map(|k| pow_mod_u64(h, k, q))
        .collect();
    out.sort_unstable();
    out
}

fn exact_order(c: u64, d: u64, q: u64) -> bool {
    if pow_mod_u64(c, d, q) != 1 % q {
        return false;
    }
    super::arith::factorize(d)
        .iter()
        .all(|(p, _)| pow_mod_u64(c, d / p, q) != 1)
}

fn reduce_mod(n: &BigInt, q: u64) -> u64 {
    n.mod_floor(&BigInt::from(q)).to_u64().unwrap()
}

/// Image of `x` under ζ ↦ g in F_q, or `None` at bad reduction.
pub fn reduce_at(x: &Cyclotomic, q: u64, g: u64) -> Option<u64> {
    let den = reduce_mod(x.denominator(), q);
    if den == 0 {
        return None;
    }
    let mut acc = 0u64;
    for c in x.numerators().iter().rev() {
        acc = (super::arith::mul_mod(acc, g, q) + reduce_mod(c, q)) % q;
    }
    let inv = pow_mod_u64(den, q - 2, q);
    Some(super::arith::mul_mod(acc, inv, q))
}

/// Independent check of a non-residue witness.
pub fn check_witness(x: &Cyclotomic, w: NonResidueWitness) -> bool {
    let d = x.modulus() as u64;
    let q = w.prime;
    if q < 3 || !is_prime(q) || !(q - 1).is_multiple_of(d) || !exact_order(w.root % q, d, q) {
        return false;
    }
    match reduce_at(x, q, w.root) {
        Some(v) if v != 0 => pow_mod_u64(v, (q - 1) / 2, q) == q - 1,
        _ => false,
    }
}

fn split_primes(d: u64) -> impl Iterator<Item = u64> {
    (1u64..)
        .map(move |k| k * d + 1)
        .filter(move |&q| q > 2 && !d.is_multiple_of(q) && is_prime(q))
}

/// Up to `count` witnesses at distinct split primes, trying at most `budget` primes.
pub fn non_residue_witnesses(x: &Cyclotomic, count: usize, budget: usize) -> Vec<NonResidueWitness> {
    let d = x.modulus() as u64;
    let mut found = Vec::new();
    for q in split_primes(d).take(budget) {
        for g in primitive_roots_of_unity(d, q) {
            let w = NonResidueWitness { prime: q, root: g };
            if check_witness(x, w) {
                found.push(w);
                break;
            }
        }
        if found.len() >= count {
            break;
        }
    }
    found
}

/// Arithmetic in (Z/M)[x]/Φ_d on integer coefficient vectors.
struct ResidueRing {
    field: Arc<CyclotomicField>,
    m: BigInt,
}

impl ResidueRing {
    fn reduce(&self, v: Vec<BigInt>) -> Vec<BigInt> {
        v.into_iter().map(|c| c.mod_floor(&self.m)).collect()
    }

    fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let d = self.field.order() as usize;
        let mut raw = vec![BigInt::zero(); d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                raw[(i + j) % d] += x * y;
            }
        }
        self.reduce(self.field.reduce_raw(raw))
    }

    fn sub(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        self.reduce(a.iter().zip(b).map(|(x, y)| x - y).collect())
    }

    fn scale(&self, a: &[BigInt], k: i64) -> Vec<BigInt> {
        self.reduce(a.iter().map(|x| x * k).collect())
    }

    fn one(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.field.degree()];
        v[0] = BigInt::one();
        v
    }

    fn pow(&self, a: &[BigInt], e: &BigInt) -> Vec<BigInt> {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    fn is_zero(a: &[BigInt]) -> bool {
        a.iter().all(Zero::is_zero)
    }

    fn is_one(&self, a: &[BigInt]) -> bool {
        a == self.one().as_slice()
    }
}

/// Tonelli–Shanks in the field F_q[x]/Φ_d (Φ_d irreducible mod q).
fn sqrt_in_finite_field(ring: &ResidueRing, a: &[BigInt], order: &BigInt) -> Option<Vec<BigInt>> {
    let qm1 = order - 1u32;
    let half = &qm1 >> 1;
    if !ring.is_one(&ring.pow(a, &half)) {
        return None;
    }
    let s = qm1.trailing_zeros().unwrap_or(0);
    let t = &qm1 >> s;
    let n = ring.field.degree();
    let q = ring.m.clone();
    // deterministic search for a non-residue
    let mut state = 0x9e37_79b9_u64;
    let z = loop {
        let cand: Vec<BigInt> = (0..n)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                BigInt::from(state >> 33).mod_floor(&q)
            })
            .collect();
        if ResidueRing::is_zero(&cand) {
            continue;
        }
        if !ring.is_one(&ring.pow(&cand, &half)) {
            break cand;
        }
    };
    let mut m = s;
    let mut c = ring.pow(&z, &t);
    let mut tt = ring.pow(a, &t);
    let mut r = ring.pow(a, &((&t + 1u32) >> 1));
    while !ring.is_one(&tt) {
        let mut i = 0;
        let mut probe = tt.clone();
        while !ring.is_one(&probe) {
            probe = ring.mul(&probe, &probe);
            i += 1;
        }
        let mut b = c.clone();
        for _ in 0..(m - i - 1) {
            b = ring.mul(&b, &b);
        }
        m = i;
        c = ring.mul(&b, &b);
        tt = ring.mul(&tt, &c);
        r = ring.mul(&r, &b);
    }
    Some(r)
}

fn symmetric(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m >> 1;
    v.iter()
        .map(|c| {
            let c = c.mod_floor(m);
            if c > half {
                c - m
            } else {
                c
            }
        })
        .collect()
}

/// y² = Y with Y = x·den² integral, and a generous bit bound on the
/// coefficients of y.
struct IntegralTarget {
    den: BigInt,
    target: Vec<BigInt>,
    exact: Cyclotomic,
    cap_bits: u64,
}

impl IntegralTarget {
    fn new(x: &Cyclotomic) -> Self {
        let field = x.field();
        let den = x.denominator().clone();
        let target: Vec<BigInt> = x.numerators().iter().map(|c| c * &den).collect();
        let l1: BigInt = target.iter().map(|c| c.abs()).sum();
        let cap_bits = l1.bits() / 2 + 2 * (64 - (field.order() as u64).leading_zeros() as u64) + 64;
        let exact = Cyclotomic::from_integer_basis(field, target.clone(), BigInt::one());
        IntegralTarget {
            den,
            target,
            exact,
            cap_bits,
        }
    }

    fn root(&self, y: Vec<BigInt>) -> Option<Cyclotomic> {
        let y = Cyclotomic::from_integer_basis(self.exact.field(), y, BigInt::one());
        (&y * &y == self.exact).then(|| y.scale(&num_rational::BigRational::new(BigInt::one(), self.den.clone())))
    }
}

/// Exact square root by Newton lifting at an inert prime; `None` if no root
/// was reconstructed within the budget.
fn lift_root(x: &Cyclotomic, budget: usize) -> Option<Cyclotomic> {
    let field = x.field().clone();
    let d = field.order();
    let phi = field.degree() as u32;
    if field.units().len() as u32 != phi || field.unit_generator().is_none() {
        return None;
    }
    let t = IntegralTarget::new(x);
    let (target, cap_bits) = (&t.target, t.cap_bits);

    let inert = (3u64..)
        .filter(|&q| is_prime(q) && !(d as u64).is_multiple_of(q))
        .filter(|&q| multiplicative_order((q % d as u64) as u32, d) == phi)
        .take(budget);
    for q in inert {
        let qb = BigInt::from(q);
        let base = ResidueRing {
            field: field.clone(),
            m: qb.clone(),
        };
        let y0 = base.reduce(target.clone());
        if ResidueRing::is_zero(&y0) {
            continue;
        }
        let order = qb.pow(phi);
        let s0 = sqrt_in_finite_field(&base, &y0, &order)?;
        let two_s = base.scale(&s0, 2);
        let mut w = base.pow(&two_s, &(&order - 2u32));
        let mut s = s0;
        let mut modulus = qb.clone();
        loop {
            if let Some(root) = IntegralTarget::root(&t, symmetric(&s, &modulus)) {
                return Some(root);
            }
            if modulus.bits() > cap_bits {
                break;
            }
            let next = &modulus * &modulus;
            let ring = ResidueRing {
                field: field.clone(),
                m: next.clone(),
            };
            let err = ring.sub(&ring.mul(&s, &s), target);
            s = ring.sub(&s, &ring.mul(&err, &w));
            let two_sw = ring.scale(&ring.mul(&s, &w), 2);
            let corr = ring.sub(&ring.scale(&ring.one(), 2), &two_sw);
            w = ring.mul(&w, &corr);
            modulus = next;
        }
        // the lifted root did not reconstruct; a second inert prime will not help
        return None;
    }
    None
}

/// Largest φ(d) for which the 2^(φ−1) sign patterns of the split-prime lift
/// are searched.
const SPLIT_SEARCH_MAX_DEGREE: usize = 16;

fn inv_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

fn eval_mod(p: &[BigInt], r: &BigInt, m: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| (acc * r + c).mod_floor(m))
}

/// Tonelli–Shanks in F_q.
fn sqrt_mod(a: u64, q: u64) -> Option<u64> {
    if a == 0 {
        return Some(0);
    }
    if pow_mod_u64(a, (q - 1) / 2, q) != 1 {
        return None;
    }
    let s = (q - 1).trailing_zeros();
    let t = (q - 1) >> s;
    let z = (2..q).find(|&z| pow_mod_u64(z, (q - 1) / 2, q) == q - 1)?;
    let (mut m, mut c) = (s, pow_mod_u64(z, t, q));
    let (mut tt, mut r) = (pow_mod_u64(a, t, q), pow_mod_u64(a, t.div_ceil(2), q));
    while tt != 1 {
        let mut i = 0;
        let mut probe = tt;
        while probe != 1 {
            probe = super::arith::mul_mod(probe, probe, q);
            i += 1;
        }
        let b = pow_mod_u64(c, 1 << (m - i - 1), q);
        m = i;
        c = super::arith::mul_mod(b, b, q);
        tt = super::arith::mul_mod(tt, c, q);
        r = super::arith::mul_mod(r, b, q);
    }
    Some(r)
}

/// Inverse of a square matrix over Z/M, pivoting on entries that are units mod q.
fn invert_mod(mut a: Vec<Vec<BigInt>>, m: &BigInt) -> Option<Vec<Vec<BigInt>>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect();
    for col in 0..n {
        let (piv, p_inv) = (col..n).find_map(|r| inv_mod(&a[r][col], m).map(|v| (r, v)))?;
        a.swap(col, piv);
        inv.swap(col, piv);
        for j in 0..n {
            a[col][j] = (&a[col][j] * &p_inv).mod_floor(m);
            inv[col][j] = (&inv[col][j] * &p_inv).mod_floor(m);
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                a[r][j] = (&a[r][j] - &f * &a[col][j]).mod_floor(m);
                inv[r][j] = (&inv[r][j] - &f * &inv[col][j]).mod_floor(m);
            }
        }
    }
    Some(inv)
}

/// Exact square root at a split prime q ≡ 1 (mod d): the residue ring is
/// F_q^φ through the φ primitive roots of unity, so a root is lifted in each
/// embedding and the sign patterns are searched in Gray-code order.
fn lift_root_split(x: &Cyclotomic, budget: usize) -> Option<Cyclotomic> {
    let field = x.field().clone();
    let d = field.order() as u64;
    let phi = field.degree();
    if phi > SPLIT_SEARCH_MAX_DEGREE {
        return None;
    }
    let t = IntegralTarget::new(x);
    let q = split_primes(d).take(budget).find(|&q| {
        reduce_mod(&t.den, q) != 0 && primitive_roots_of_unity(d, q).iter().all(|&g| reduce_at(&t.exact, q, g) != Some(0))
    })?;
    let roots = primitive_roots_of_unity(d, q);
    let sqrts = roots
        .iter()
        .map(|&g| sqrt_mod(reduce_at(&t.exact, q, g)?, q))
        .collect::<Option<Vec<u64>>>()?;

    let qb = BigInt::from(q);
    let mut m = qb.clone();
    while m.bits() <= t.cap_bits + 64 {
        m *= &qb;
    }
    let cyc = field.cyclotomic_polynomial();
    let dcyc: Vec<BigInt> = cyc.iter().enumerate().skip(1).map(|(i, c)| c * i).collect();
    let newton = |mut r: BigInt, f: &dyn Fn(&BigInt) -> (BigInt, BigInt)| -> Option<BigInt> {
        for _ in 0..=m.bits() {
            let (value, slope) = f(&r);
            if value.is_zero() {
                return Some(r);
            }
            r = (&r - value * inv_mod(&slope, &m)?).mod_floor(&m);
        }
        None
    };
    let mut lifted = Vec::with_capacity(phi);
    let mut vandermonde = Vec::with_capacity(phi);
    for (&g, &s) in roots.iter().zip(&sqrts) {
        let r = newton(BigInt::from(g), &|r| (eval_mod(cyc, r, &m), eval_mod(&dcyc, r, &m)))?;
        let v = eval_mod(&t.target, &r, &m);
        let s = newton(BigInt::from(s), &|s| ((s * s - &v).mod_floor(&m), (s * 2u32).mod_floor(&m)))?;
        let mut row = vec![BigInt::one()];
        for j in 1..phi {
            row.push((&row[j - 1] * &r).mod_floor(&m));
        }
        vandermonde.push(row);
        lifted.push(s);
    }
    let inv = invert_mod(vandermonde, &m)?;
    // column i of V⁻¹ scaled by the root in embedding i
    let cols: Vec<Vec<BigInt>> = (0..phi)
        .map(|i| (0..phi).map(|j| (&inv[j][i] * &lifted[i]).mod_floor(&m)).collect())
        .collect();
    let mut cur: Vec<BigInt> = (0..phi)
        .map(|j| cols.iter().map(|c| &c[j]).sum::<BigInt>().mod_floor(&m))
        .collect();
    let mut signs = vec![true; phi];
    let small = |v: &[BigInt]| {
        let sym = symmetric(v, &m);
        sym.iter().all(|c| c.bits() <= t.cap_bits).then_some(sym)
    };
    for step in 0u64..1 << (phi - 1) {
        if step > 0 {
            let b = step.trailing_zeros() as usize + 1;
            for (c, u) in cur.iter_mut().zip(&cols[b]) {
                let twice = u * 2u32;
                *c = if signs[b] { &*c - twice } else { &*c + twice }.mod_floor(&m);
            }
            signs[b] = !signs[b];
        }
        if let Some(root) = small(&cur).and_then(|y| t.root(y)) {
            return Some(root);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn f(d: u32) -> Arc<CyclotomicField> {
        CyclotomicField::new(d).unwrap()
    }

    #[test]
    fn sqrt_five_in_q_zeta_5() {
        let k = f(5);
        let x = Cyclotomic::from_integer(&k, 5);
        let cert = is_square(&x, &SquareConfig::default());
        assert_eq!(cert.verdict, SquareVerdict::Yes);
        let r = cert.root.clone().unwrap();
        assert_eq!(&r * &r, x);
        // ±(2(ζ+ζ⁴)+1)
        let z = |e| Cyclotomic::zeta_power(&k, e);
        let expected = &(&z(1) + &z(4)).scale(&int(2)) + &Cyclotomic::one(&k);
        assert!(r == expected || r == -&expected);
        assert!(cert.verify(&x));
    }

    #[test]
    fn two_is_not_a_square_in_q_zeta_5() {
        let k = f(5);
        let x = Cyclotomic::from_integer(&k, 2);
        let cert = is_square(&x, &SquareConfig::default());
        assert_eq!(cert.verdict, SquareVerdict::No);
        let w = cert.witness.unwrap();
        assert_eq!(w.prime % 5, 1);
        assert!(cert.verify(&x));
        // three more independent witnesses
        let more = non_residue_witnesses(&x, 4, 100);
        assert_eq!(more.len(), 4);
        assert!(more.iter().all(|w| check_witness(&x, *w)));
    }

    #[test]
    fn even_zeta_power_is_square() {
        let k = f(5);
        let x = Cyclotomic::zeta_power(&k, 2);
        let cert = is_square(&x, &SquareConfig::default());
        assert_eq!(cert.verdict, SquareVerdict::Yes);
        let r = cert.root.unwrap();
        assert_eq!(&r * &r, x);
    }

    #[test]
    fn squares_without_inert_primes() {
        // (Z/d)^* is not cyclic for these d, so roots come from split primes
        for d in [8u32, 12, 15, 16, 20, 24] {
            let k = f(d);
            let z = |e| Cyclotomic::zeta_power(&k, e);
            let y = &(&z(1).scale(&int(3)) - &z(3)) + &Cyclotomic::from_rational(&k, &rat(2, 5));
            let x = &y * &y;
            let cert = is_square(&x, &SquareConfig::default());
            assert_eq!(cert.verdict, SquareVerdict::Yes, "d = {d}");
            let r = cert.root.unwrap();
            assert!(r == y || r == -&y, "d = {d}");
        }
        // i = ζ_8², so 2i = (1 + i)² while i + 2 is not a square
        let k = f(8);
        let two_i = Cyclotomic::zeta_power(&k, 2).scale(&int(2));
        assert_eq!(is_square(&two_i, &SquareConfig::default()).verdict, SquareVerdict::Yes);
        let x = &Cyclotomic::zeta_power(&k, 2) + &Cyclotomic::from_integer(&k, 2);
        assert_ne!(is_square(&x, &SquareConfig::default()).verdict, SquareVerdict::Yes);
    }

    #[test]
    fn tonelli_shanks_mod_q() {
        for q in [17u64, 41, 97, 113, 257] {
            for a in 1..q {
                match sqrt_mod(a, q) {
                    Some(r) => assert_eq!(r * r % q, a),
                    None => assert_eq!(pow_mod_u64(a, (q - 1) / 2, q), q - 1),
                }
            }
        }
    }

    #[test]
    fn zero_is_trivially_square() {
        let k = f(29);
        let cert = is_square(&Cyclotomic::zero(&k), &SquareConfig::default());
        assert_eq!(cert.verdict, SquareVerdict::Yes);
        assert!(cert.root.unwrap().is_zero());
    }

    #[test]
    fn squares_of_random_looking_elements_in_q_zeta_29() {
        let k = f(29);
        let a = Cyclotomic::reduce(
            &k,
            &(0..29).map(|i| int((i * 7 % 11) as i64 - 5)).collect::<Vec<_>>(),
        )
        .scale(&crate::algebra::rational::rat(1, 6));
        let x = &a * &a;
        let cert = is_square(&x, &SquareConfig::default());
        assert_eq!(cert.verdict, SquareVerdict::Yes);
        assert!(cert.verify(&x));
        let y = &x * &Cyclotomic::from_integer(&k, 3);
        assert_eq!(is_square(&y, &SquareConfig::default()).verdict, SquareVerdict::No);
    }

    #[test]
    fn rational_field() {
        let q = CyclotomicField::rationals();
        let cert = is_square(&Cyclotomic::from_integer(&q, 49), &SquareConfig::default());
        assert_eq!(cert.root.unwrap().as_rational().unwrap(), int(7));
        let cert = is_square(&Cyclotomic::from_integer(&q, -3), &SquareConfig::default());
        assert_eq!(cert.verdict, SquareVerdict::No);
    }

    #[test]
    fn non_cyclic_unit_group_still_finds_roots_of_rationals() {
        let k = f(8);
        let x = Cyclotomic::from_integer(&k, 9);
        assert_eq!(is_square(&x, &SquareConfig::default()).verdict, SquareVerdict::Yes);
    }
}
