//! Exact signs of real cyclotomic numbers under ζ ↦ e^{2πi/d}, by Sturm
//! sequences over Q.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use super::cyclotomic::Cyclotomic;
use super::rational::{int, rat, Rational};
use crate::error::{Error, Result};

/// Rational polynomial, lowest degree first, no trailing zeros.
pub type QPoly = Vec<Rational>;

fn trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn derivative(p: &[Rational]) -> QPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * int(i as i64))
            .collect(),
    )
}

fn sub(a: &[Rational], b: &[Rational]) -> QPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
            .collect(),
    )
}

fn rem(a: &[Rational], b: &[Rational]) -> QPoly {
    let mut r = trim(a.to_vec());
    let lead = b.last().expect("nonzero divisor");
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let q = r.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &q * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn gcd(a: &[Rational], b: &[Rational]) -> QPoly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn exact_quotient(a: &[Rational], b: &[Rational]) -> QPoly {
    let mut r = trim(a.to_vec());
    let mut q = vec![Rational::zero(); r.len().saturating_sub(b.len()) + 1];
    let lead = b.last().expect("nonzero divisor");
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / lead;
        for (i, x) in b.iter().enumerate() {
            r[i + shift] -= &c * x;
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    trim(q)
}

/// Sturm sequence p, p', −rem(…), ….
pub struct Sturm(Vec<QPoly>);

impl Sturm {
    pub fn new(p: &[Rational]) -> Self {
        let mut seq = vec![trim(p.to_vec())];
        let d = derivative(&seq[0]);
        if !d.is_empty() {
            seq.push(d);
        }
        while seq.len() >= 2 {
            let n = seq.len();
            let r = rem(&seq[n - 2], &seq[n - 1]);
            if r.is_empty() {
                break;
            }
            seq.push(r.iter().map(|c| -c).collect());
        }
        Sturm(seq)
    }

    fn variations(&self, x: &Rational) -> usize {
        let signs: Vec<Ordering> = self
            .0
            .iter()
            .map(|p| eval(p, x).cmp(&Rational::zero()))
            .filter(|s| *s != Ordering::Equal)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct real roots in (a, b].
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Dickson polynomial D_n with ζ^n + ζ^{−n} = D_n(ζ + ζ^{−1}).
pub fn dickson(n: usize) -> QPoly {
    let mut prev = vec![int(2)];
    let mut cur = vec![Rational::zero(), Rational::one()];
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let mut next = vec![Rational::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = trim(next);
    }
    cur
}

/// A real cyclotomic number as g(ζ + ζ^{−1}).
pub fn real_part_polynomial(x: &Cyclotomic) -> Result<QPoly> {
    if x.conj() != *x {
        return Err(Error::InvalidArgument(format!("{x} is not real")));
    }
    let mut g: QPoly = vec![];
    for (i, a) in x.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let d = dickson(i);
        let scale = a / int(2);
        if g.len() < d.len() {
            g.resize(d.len(), Rational::zero());
        }
        for (j, c) in d.iter().enumerate() {
            g[j] += c * &scale;
        }
    }
    Ok(trim(g))
}

/// Sturm sequence of the squarefree part of D_d − 2 and a rational interval
/// isolating its root ζ + ζ^{−1} = 2cos(2π/d); the other roots are 2cos(2πk/d).
struct Isolation {
    h: QPoly,
    lo: Rational,
    hi: Rational,
}

fn isolation(d: usize) -> Result<Arc<Isolation>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Isolation>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(i) = cache.lock().expect("cache lock").get(&d) {
        return Ok(i.clone());
    }
    let dd = sub(&dickson(d), &[int(2)]);
    let h = exact_quotient(&dd, &gcd(&dd, &derivative(&dd)));
    let sturm = Sturm::new(&h);
    let approx = 2.0 * (2.0 * std::f64::consts::PI / d as f64).cos();
    let delta = (2.0 - approx) / 4.0;
    let to_q = |f: f64| Rational::from_float(f).ok_or_else(|| Error::InvalidArgument("non-finite bound".into()));
    let (lo, hi) = (to_q(approx - delta)?, to_q(approx + delta)?);
    if sturm.count(&lo, &hi) != 1 || sturm.count(&hi, &int(3)) != 1 {
        return Err(Error::Inconsistent(format!("could not isolate 2cos(2pi/{d})")));
    }
    let iso = Arc::new(Isolation { h, lo, hi });
    cache.lock().expect("cache lock").insert(d, iso.clone());
    Ok(iso)
}

/// Sign of a real element of Q(ζ_d) with ζ = e^{2πi/d}.
pub fn real_sign(x: &Cyclotomic) -> Result<Ordering> {
    if let Some(r) = x.as_rational() {
        return Ok(r.cmp(&Rational::zero()));
    }
    let iso = isolation(x.modulus() as usize)?;
    let g = rem(&real_part_polynomial(x)?, &iso.h);
    // |g(y) − g(mid)| ≤ L·|y − mid| on [−2, 2] with L = Σ i|g_i|2^{i−1}
    let lipschitz = derivative(&g)
        .iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (i, c)| acc + c.abs() * int(2).pow(i as i32));
    let (mut lo, mut hi) = (iso.lo.clone(), iso.hi.clone());
    // the root is simple, so h changes sign across it
    let lo_sign = eval(&iso.h, &lo).cmp(&Rational::zero());
    for _ in 0..4096 {
        let mid = (&lo + &hi) * rat(1, 2);
        let value = eval(&g, &mid);
        if value.abs() > &lipschitz * (&hi - &lo) {
            return Ok(value.cmp(&Rational::zero()));
        }
        if eval(&iso.h, &mid).cmp(&Rational::zero()) != lo_sign {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Err(Error::Inconsistent(format!("sign of {x} not separated after 4096 bisections")))
}

/// Sign variations among the nonzero signs.
pub fn sign_variations(signs: &[Ordering]) -> usize {
    let s: Vec<_> = signs.iter().filter(|s| **s != Ordering::Equal).collect();
    s.windows(2).filter(|w| w[0] != w[1]).count()
}
