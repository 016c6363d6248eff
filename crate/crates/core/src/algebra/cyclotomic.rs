//! The cyclotomic fields Q(ζ_d).
//!
//! Elements are stored as integer coefficient vectors over the power basis
//! `1, ζ, …, ζ^{φ(d)−1}` together with one positive common denominator. The
//! representation is reduced modulo Φ_d and the content is kept coprime to
//! the denominator, so structural equality is field equality.
//!
//! `d = 1` (and `d = 2`) give the rationals.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Structure constants for Q(ζ_d).
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    degree: usize,
    phi: Vec<BigInt>,
    // x^k mod Φ_d for degree <= k < order
    fold: Vec<Vec<BigInt>>,
    units: Vec<u32>,
    unit_generator: Option<u32>,
}

/// Coefficients of the d-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(d: u32) -> Vec<BigInt> {
    assert!(d >= 1);
    // x^d - 1
    let mut num = vec![BigInt::zero(); d as usize + 1];
    num[0] = BigInt::from(-1);
    num[d as usize] = BigInt::one();
    for e in 1..d {
        if d.is_multiple_of(e) {
            num = div_monic(&num, &cyclotomic_polynomial(e));
        }
    }
    num
}

// Exact quotient of integer polynomials by a monic divisor.
fn div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let da = a.len() - 1;
    let mut q = vec![BigInt::zero(); da - db + 1];
    for i in (0..=da - db).rev() {
        let c = rem[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for j in 0..=db {
            rem[i + j] -= &c * &b[j];
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

pub fn euler_phi(d: u32) -> u32 {
    (1..=d).filter(|k| k.gcd(&d) == 1).count() as u32
}

impl CyclotomicField {
    pub fn new(d: u32) -> Result<Arc<Self>> {
        if d == 0 {
            return Err(Error::InvalidArgument("cyclotomic order must be positive".into()));
        }
        let phi = cyclotomic_polynomial(d);
        let degree = phi.len() - 1;
        let mut fold = Vec::new();
        if degree < d as usize {
            // x^degree = -(phi_0 + ... + phi_{degree-1} x^{degree-1})
            let mut cur: Vec<BigInt> = phi[..degree].iter().map(|c| -c).collect();
            fold.push(cur.clone());
            for _ in degree + 1..d as usize {
                let top = cur[degree - 1].clone();
                let mut next = vec![BigInt::zero(); degree];
                for i in (1..degree).rev() {
                    next[i] = cur[i - 1].clone();
                }
                if !top.is_zero() {
                    for i in 0..degree {
                        next[i] -= &top * &phi[i];
                    }
                }
                cur = next;
                fold.push(cur.clone());
            }
        }
        let units: Vec<u32> = (0..d).filter(|k| k.gcd(&d) == 1).collect();
        let unit_generator = units
            .iter()
            .copied()
            .find(|&g| multiplicative_order(g, d) == units.len() as u32);
        Ok(Arc::new(CyclotomicField {
            order: d,
            degree,
            phi,
            fold,
            units,
            unit_generator,
        }))
    }

    pub fn rationals() -> Arc<Self> {
        Self::new(1).expect("d = 1 is valid")
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// φ(d), the degree of the field over Q.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cyclotomic_polynomial(&self) -> &[BigInt] {
        &self.phi
    }

    /// Residues modulo d that index the Galois group.
    pub fn units(&self) -> &[u32] {
        &self.units
    }

    /// A generator of (Z/d)* when that group is cyclic.
    pub fn unit_generator(&self) -> Option<u32> {
        self.unit_generator
    }

    pub fn is_rational_field(&self) -> bool {
        self.degree == 1
    }

    /// Reduces an integer vector indexed by powers `0..d` into the basis.
    pub(crate) fn reduce_raw(&self, mut raw: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.order as usize;
        debug_assert_eq!(raw.len(), d);
        for k in (self.degree..d).rev() {
            if raw[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut raw[k]);
            for (i, f) in self.fold[k - self.degree].iter().enumerate() {
                if !f.is_zero() {
                    raw[i] += &c * f;
                }
            }
        }
        raw.truncate(self.degree);
        raw
    }

    pub(crate) fn reduce_exponent(&self, k: i64) -> usize {
        k.rem_euclid(self.order as i64) as usize
    }
}

pub(crate) fn multiplicative_order(a: u32, d: u32) -> u32 {
    if d == 1 {
        return 1;
    }
    let mut x = a as u64 % d as u64;
    let mut k = 1;
    while x != 1 {
        x = x * a as u64 % d as u64;
        k += 1;
        if k > d {
            return 0;
        }
    }
    k
}

/// An element of Q(ζ_d).
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    num: Vec<BigInt>,
    den: BigInt,
}

fn normalize(num: &mut [BigInt], den: &mut BigInt) {
    if den.is_negative() {
        *den = -&*den;
        for c in num.iter_mut() {
            *c = -&*c;
        }
    }
    if num.iter().all(Zero::is_zero) {
        *den = BigInt::one();
        return;
    }
    if den.is_one() {
        return;
    }
    let mut g = den.clone();
    for c in num.iter() {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
    }
    for c in num.iter_mut() {
        *c = &*c / &g;
    }
    *den = &*den / &g;
}

impl Cyclotomic {
    fn from_parts(field: Arc<CyclotomicField>, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        normalize(&mut num, &mut den);
        Cyclotomic { field, num, den }
    }

    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Cyclotomic {
            field: field.clone(),
            num: vec![BigInt::zero(); field.degree],
            den: BigInt::one(),
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_integer(field, 1)
    }

    pub fn from_integer(field: &Arc<CyclotomicField>, n: i64) -> Self {
        Self::from_bigint(field, BigInt::from(n))
    }

    pub fn from_bigint(field: &Arc<CyclotomicField>, n: BigInt) -> Self {
        let mut num = vec![BigInt::zero(); field.degree];
        num[0] = n;
        Cyclotomic {
            field: field.clone(),
            num,
            den: BigInt::one(),
        }
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, r: &Rational) -> Self {
        let mut num = vec![BigInt::zero(); field.degree];
        num[0] = r.numer().clone();
        Self::from_parts(field.clone(), num, r.denom().clone())
    }

    /// ζ^k for any integer k.
    pub fn zeta_power(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let d = field.order as usize;
        let mut raw = vec![BigInt::zero(); d];
        raw[field.reduce_exponent(k)] = BigInt::one();
        Cyclotomic {
            field: field.clone(),
            num: field.reduce_raw(raw),
            den: BigInt::one(),
        }
    }

    /// Builds an element from rational coefficients of `1, ζ, …, ζ^{d−1}`
    /// (any length; indices are read modulo d) and reduces it modulo Φ_d.
    pub fn reduce(field: &Arc<CyclotomicField>, raw_coeffs: &[Rational]) -> Self {
        let d = field.order as usize;
        let den = raw_coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut raw = vec![BigInt::zero(); d];
        for (i, c) in raw_coeffs.iter().enumerate() {
            raw[i % d] += c.numer() * (&den / c.denom());
        }
        Self::from_parts(field.clone(), field.reduce_raw(raw), den)
    }

    /// Builds an element from coefficients already in the reduced basis.
    pub fn from_basis(field: &Arc<CyclotomicField>, coeffs: &[Rational]) -> Result<Self> {
        if coeffs.len() != field.degree {
            return Err(Error::Dimension(format!(
                "Q(zeta_{}) needs {} coefficients, got {}",
                field.order,
                field.degree,
                coeffs.len()
            )));
        }
        Ok(Self::reduce(field, coeffs))
    }

    /// Integer coefficients over the reduced basis with a common denominator.
    pub fn from_integer_basis(field: &Arc<CyclotomicField>, num: Vec<BigInt>, den: BigInt) -> Self {
        assert_eq!(num.len(), field.degree);
        assert!(!den.is_zero());
        Self::from_parts(field.clone(), num, den)
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn modulus(&self) -> u32 {
        self.field.order
    }

    /// Coefficients over `1, ζ, …, ζ^{φ(d)−1}`.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Number of nonzero basis coefficients.
    pub fn weight(&self) -> usize {
        self.num.iter().filter(|c| !c.is_zero()).count()
    }

    /// Rough size in bits, used for pivot selection.
    pub fn bit_size(&self) -> u64 {
        self.num.iter().map(|c| c.bits()).max().unwrap_or(0) + self.den.bits()
    }

    fn check_field(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field.order == other.field.order,
            "mixing Q(zeta_{}) and Q(zeta_{})",
            self.field.order,
            other.field.order
        );
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Self::from_parts(self.field.clone(), num, &self.den * r.denom())
    }

    pub fn scale_int(&self, n: &BigInt) -> Self {
        let num = self.num.iter().map(|c| c * n).collect();
        Self::from_parts(self.field.clone(), num, self.den.clone())
    }

    /// The Galois automorphism σ_n: ζ ↦ ζ^n.
    pub fn galois(&self, n: i64) -> Result<Self> {
        let d = self.field.order as i64;
        if n.gcd(&d) != 1 {
            return Err(Error::InvalidArgument(format!(
                "gcd({n}, {d}) != 1, not a Galois automorphism"
            )));
        }
        Ok(self.galois_unchecked(n))
    }

    pub(crate) fn galois_unchecked(&self, n: i64) -> Self {
        let d = self.field.order as usize;
        let mut raw = vec![BigInt::zero(); d];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                raw[self.field.reduce_exponent(i as i64 * n)] += c;
            }
        }
        Cyclotomic {
            field: self.field.clone(),
            num: self.field.reduce_raw(raw),
            den: self.den.clone(),
        }
    }

    /// Complex conjugation σ_{−1}.
    pub fn conj(&self) -> Self {
        self.galois_unchecked(-1)
    }

    /// ∏ σ_{g^i}(self) for i in 0..len, g a generator of the unit group.
    fn orbit_product(&self, g: i64, len: usize) -> Self {
        let d = self.field.order as i64;
        if len == 0 {
            return Cyclotomic::one(&self.field);
        }
        if len == 1 {
            return self.clone();
        }
        let half = self.orbit_product(g, len / 2);
        let shift = pow_mod(g, (len / 2) as u64, d);
        let mut acc = &half * &half.galois_unchecked(shift);
        if len % 2 == 1 {
            let last = pow_mod(g, (len - 1) as u64, d);
            acc = &acc * &self.galois_unchecked(last);
        }
        acc
    }

    /// Product of all nontrivial Galois conjugates; `self * cofactor` is the norm.
    fn norm_cofactor(&self) -> Self {
        let units = &self.field.units;
        match self.field.unit_generator {
            Some(g) if units.len() > 1 => {
                // ∏_{i=1}^{φ-1} σ_{g^i}(x) = σ_g(∏_{i=0}^{φ-2} σ_{g^i}(x))
                self.orbit_product(g as i64, units.len() - 1)
                    .galois_unchecked(g as i64)
            }
            _ => {
                let mut acc = Cyclotomic::one(&self.field);
                for &s in units {
                    if s as u64 % self.field.order as u64 != 1 % self.field.order as u64 {
                        acc = &acc * &self.galois_unchecked(s as i64);
                    }
                }
                acc
            }
        }
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        let n = self * &self.norm_cofactor();
        n.as_rational().expect("norm lies in Q")
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.weight() == 1 {
            let (i, c) = self
                .num
                .iter()
                .enumerate()
                .find(|(_, c)| !c.is_zero())
                .unwrap();
            let inv_c = Rational::new(self.den.clone(), c.clone());
            return Some(Cyclotomic::zeta_power(&self.field, -(i as i64)).scale(&inv_c));
        }
        let cof = self.norm_cofactor();
        let n = (self * &cof).as_rational().expect("norm lies in Q");
        Some(cof.scale(&n.recip()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let inv = other
            .inverse()
            .ok_or_else(|| Error::InvalidArgument("division by zero in cyclotomic field".into()))?;
        Ok(self * &inv)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficients `b_1..b_{d−1}` over `ζ, ζ², …, ζ^{d−1}` for prime d, the
    /// constant-free basis used when printing elements of Q(ζ_p).
    pub fn zeta_basis_coeffs(&self) -> Option<Vec<Rational>> {
        let d = self.field.order as usize;
        if self.field.degree != d - 1 || d < 3 {
            return None;
        }
        let a = self.coeffs();
        let mut out = Vec::with_capacity(d - 1);
        for i in 1..d - 1 {
            out.push(&a[i] - &a[0]);
        }
        out.push(-a[0].clone());
        Some(out)
    }

    /// Inverse of [`Cyclotomic::zeta_basis_coeffs`].
    pub fn from_zeta_basis(field: &Arc<CyclotomicField>, b: &[Rational]) -> Self {
        let mut raw = vec![Rational::zero(); field.order as usize];
        for (i, c) in b.iter().enumerate() {
            raw[(i + 1) % field.order as usize] += c;
        }
        Cyclotomic::reduce(field, &raw)
    }

    /// Human-readable form in ζ powers; prime d uses the constant-free basis.
    pub fn to_zeta_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<(usize, Rational)> = match self.zeta_basis_coeffs() {
            Some(b) if self.as_rational().is_none() => b
                .into_iter()
                .enumerate()
                .map(|(i, c)| (i + 1, c))
                .rev()
                .collect(),
            _ => self.coeffs().into_iter().enumerate().rev().collect(),
        };
        let mut s = String::new();
        for (p, c) in terms.into_iter().filter(|(_, c)| !c.is_zero()) {
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match p {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{p}"),
            };
            if mono.is_empty() {
                s.push_str(&format_rational(&a));
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{}*{}", format_rational(&a), mono));
            }
        }
        s
    }
}

pub(crate) fn pow_mod(base: i64, mut e: u64, m: i64) -> i64 {
    let m = m as i128;
    let mut b = (base as i128).rem_euclid(m);
    let mut acc = 1i128 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as i64
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.den == other.den && self.num == other.num
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self, self.field.order)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_zeta_string())
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.check_field(rhs);
        if self.den == rhs.den {
            let num = self.num.iter().zip(&rhs.num).map(|(a, b)| a + b).collect();
            return Cyclotomic::from_parts(self.field.clone(), num, self.den.clone());
        }
        let num = self
            .num
            .iter()
            .zip(&rhs.num)
            .map(|(a, b)| a * &rhs.den + b * &self.den)
            .collect();
        Cyclotomic::from_parts(self.field.clone(), num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.check_field(rhs);
        let d = self.field.order as usize;
        let mut raw = vec![BigInt::zero(); d];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = if i + j >= d { i + j - d } else { i + j };
                raw[k] += a * b;
            }
        }
        let num = self.field.reduce_raw(raw);
        Cyclotomic::from_parts(self.field.clone(), num, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn field(d: u32) -> Arc<CyclotomicField> {
        CyclotomicField::new(d).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        let small = |d| {
            cyclotomic_polynomial(d)
                .into_iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(small(1), vec![-1, 1]);
        assert_eq!(small(2), vec![1, 1]);
        assert_eq!(small(4), vec![1, 0, 1]);
        assert_eq!(small(6), vec![1, -1, 1]);
        assert_eq!(small(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(small(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(29).len(), 29);
    }

    #[test]
    fn zero_modulus_rejected() {
        assert!(CyclotomicField::new(0).is_err());
    }

    #[test]
    fn zeta_to_the_d_is_one() {
        let f = field(5);
        assert!(Cyclotomic::zeta_power(&f, 5).is_one());
        let raw: Vec<Rational> = (0..6).map(|i| if i == 5 { int(1) } else { int(0) }).collect();
        assert!(Cyclotomic::reduce(&f, &raw).is_one());
    }

    #[test]
    fn phi5_relation_vanishes() {
        let f = field(5);
        let raw = vec![int(1); 5];
        assert!(Cyclotomic::reduce(&f, &raw).is_zero());
    }

    #[test]
    fn minus_one_in_constant_free_basis() {
        let f = field(29);
        let m1 = Cyclotomic::from_integer(&f, -1);
        let b = m1.zeta_basis_coeffs().unwrap();
        assert_eq!(b.len(), 28);
        assert!(b.iter().all(|c| *c == int(1)));
        assert_eq!(Cyclotomic::from_zeta_basis(&f, &b), m1);
    }

    #[test]
    fn reduction_is_idempotent() {
        let f = field(12);
        let raw: Vec<Rational> = (0..12).map(|i| rat(i * i - 3, i + 1)).collect();
        let x = Cyclotomic::reduce(&f, &raw);
        assert_eq!(Cyclotomic::from_basis(&f, &x.coeffs()).unwrap(), x);
    }

    #[test]
    fn galois_composition_mod_29() {
        let f = field(29);
        let raw: Vec<Rational> = (0..29).map(|i| int((i * 7 % 11) - 5)).collect();
        let x = Cyclotomic::reduce(&f, &raw);
        assert_eq!(x.galois(1).unwrap(), x);
        assert_eq!(x.galois(17).unwrap().galois(12).unwrap(), x);
        let z = Cyclotomic::zeta_power(&f, 1);
        assert_eq!(z.galois(-1).unwrap(), Cyclotomic::zeta_power(&f, 28));
        assert!(x.galois(29).is_err());
    }

    #[test]
    fn inverse_and_norm() {
        let f = field(29);
        let one = Cyclotomic::one(&f);
        let z = Cyclotomic::zeta_power(&f, 3);
        let x = &(&z + &one) + &Cyclotomic::zeta_power(&f, 10).scale(&rat(3, 2));
        let inv = x.inverse().unwrap();
        assert!((&x * &inv).is_one());
        // N(1 - ζ) = 29 for prime 29
        let y = &one - &Cyclotomic::zeta_power(&f, 1);
        assert_eq!(y.norm(), int(29));
        assert!(Cyclotomic::zero(&f).inverse().is_none());
    }

    #[test]
    fn inverse_without_cyclic_unit_group() {
        let f = field(8);
        let one = Cyclotomic::one(&f);
        let x = &Cyclotomic::zeta_power(&f, 1) + &one.scale(&rat(2, 3));
        assert!((&x * &x.inverse().unwrap()).is_one());
    }

    #[test]
    fn rational_field_behaves_like_q() {
        let q = CyclotomicField::rationals();
        let a = Cyclotomic::from_rational(&q, &rat(3, 4));
        let b = Cyclotomic::from_rational(&q, &rat(-2, 5));
        assert_eq!((&a * &b).as_rational().unwrap(), rat(-3, 10));
        assert_eq!(a.inverse().unwrap().as_rational().unwrap(), rat(4, 3));
        assert!(Cyclotomic::zeta_power(&q, 7).is_one());
        let q2 = field(2);
        assert_eq!(Cyclotomic::zeta_power(&q2, 1).as_rational().unwrap(), int(-1));
    }

    #[test]
    fn printing() {
        let f = field(5);
        let x = &Cyclotomic::zeta_power(&f, 1).scale(&int(2)) - &Cyclotomic::zeta_power(&f, 4);
        assert_eq!(x.to_zeta_string(), "-z^4 + 2*z");
        let q = CyclotomicField::rationals();
        assert_eq!(Cyclotomic::from_rational(&q, &rat(-1, 3)).to_string(), "-1/3");
    }
}
