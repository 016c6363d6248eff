//! Finite abelian groups with linking forms, Seifert data and characters.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::matrix::{IntegerMatrix, RationalMatrix};
use crate::algebra::rational::{frac, Rational};
use crate::error::{Error, Result};

/// Groups at most this large are checked exhaustively.
pub const EXHAUSTIVE_LIMIT: u64 = 10_000;

/// `⊕ Z/d_i` with a Q/Z-valued symmetric form on the basis `e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkedAbelianGroup {
    orders: Vec<u64>,
    linking: Vec<Vec<Rational>>,
}

impl LinkedAbelianGroup {
    pub fn new(orders: Vec<u64>, linking: Vec<Vec<Rational>>) -> Result<Self> {
        let n = orders.len();
        if linking.len() != n || linking.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("linking matrix shape differs from group rank".into()));
        }
        if orders.iter().any(|&d| d < 2) {
            return Err(Error::InvalidArgument("invariant factors must be at least 2".into()));
        }
        let linking: Vec<Vec<Rational>> = linking.iter().map(|r| r.iter().map(frac).collect()).collect();
        for (i, row) in linking.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if *x != linking[j][i] {
                    return Err(Error::Inconsistent("linking form is not symmetric".into()));
                }
                if !(x * Rational::from_integer(orders[i].into())).is_integer() {
                    return Err(Error::Inconsistent(format!("d_{i} * lk(e_{i}, e_{j}) is not integral")));
                }
            }
        }
        let g = LinkedAbelianGroup { orders, linking };
        if g.order() <= EXHAUSTIVE_LIMIT && !g.is_nonsingular() {
            return Err(Error::Singular("linking form is singular".into()));
        }
        Ok(g)
    }

    pub fn trivial() -> Self {
        LinkedAbelianGroup {
            orders: vec![],
            linking: vec![],
        }
    }

    /// `Z/n` with `lk(1, 1) = u/n`.
    pub fn cyclic(n: u64, u: i64) -> Result<Self> {
        Self::new(vec![n], vec![vec![Rational::new(u.into(), (n as i64).into())]])
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn linking_matrix(&self) -> &[Vec<Rational>] {
        &self.linking
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.len() <= 1
    }

    pub fn normalize(&self, x: &[i64]) -> Vec<i64> {
        x.iter().zip(&self.orders).map(|(a, &d)| a.rem_euclid(d as i64)).collect()
    }

    pub fn add(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        self.normalize(&x.iter().zip(y).map(|(a, b)| a + b).collect::<Vec<_>>())
    }

    pub fn scale(&self, x: &[i64], k: i64) -> Vec<i64> {
        self.normalize(&x.iter().map(|a| a * k).collect::<Vec<_>>())
    }

    pub fn is_zero(&self, x: &[i64]) -> bool {
        self.normalize(x).iter().all(|&a| a == 0)
    }

    pub fn element_order(&self, x: &[i64]) -> u64 {
        let x = self.normalize(x);
        x.iter()
            .zip(&self.orders)
            .map(|(&a, &d)| d / num_integer::gcd(a as u64, d))
            .fold(1, num_integer::lcm)
    }

    /// λ(x, y) ∈ [0, 1).
    pub fn lambda(&self, x: &[i64], y: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for (i, a) in x.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if *b != 0 {
                    acc += &self.linking[i][j] * Rational::from_integer((a * b).into());
                }
            }
        }
        frac(&acc)
    }

    /// All elements in mixed-radix order.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for &d in &self.orders {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..d as i64).map(move |a| {
                        let mut w = v.clone();
                        w.push(a);
                        w
                    })
                })
                .collect();
        }
        out
    }

    /// λ(x, ·) ≡ 0 only for x = 0, checked on generators.
    pub fn is_nonsingular(&self) -> bool {
        let basis: Vec<Vec<i64>> = (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| i64::from(i == j)).collect())
            .collect();
        self.elements()
            .iter()
            .filter(|x| !self.is_zero(x))
            .all(|x| basis.iter().any(|e| !self.lambda(x, e).is_zero()))
    }

    pub fn orthogonal_sum(&self, other: &Self) -> Self {
        let n = self.rank() + other.rank();
        let mut linking = vec![vec![Rational::zero(); n]; n];
        for (i, row) in self.linking.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                linking[i][j] = v.clone();
            }
        }
        let o = self.rank();
        for (i, row) in other.linking.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                linking[o + i][o + j] = v.clone();
            }
        }
        LinkedAbelianGroup {
            orders: self.orders.iter().chain(&other.orders).copied().collect(),
            linking,
        }
    }

    pub fn describe(&self) -> String {
        if self.orders.is_empty() {
            return "0".into();
        }
        self.orders.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" + ")
    }
}

/// A homomorphism to Z/d given by its values on the invariant-factor basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Character {
    pub modulus: u64,
    pub values: Vec<u64>,
}

impl Character {
    pub fn new(modulus: u64, values: Vec<i64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidArgument("character modulus must be positive".into()));
        }
        let values = values.iter().map(|v| v.rem_euclid(modulus as i64) as u64).collect();
        Ok(Character { modulus, values })
    }

    pub fn trivial(modulus: u64, rank: usize) -> Self {
        Character {
            modulus,
            values: vec![0; rank],
        }
    }

    /// Checks `d_i · v_i ≡ 0 (mod d)` so the map is well defined on `⊕ Z/d_i`.
    pub fn validate(&self, orders: &[u64]) -> Result<()> {
        if orders.len() != self.values.len() {
            return Err(Error::Dimension(format!(
                "character has {} values for a group of rank {}",
                self.values.len(),
                orders.len()
            )));
        }
        for (i, (&d, &v)) in orders.iter().zip(&self.values).enumerate() {
            if !(d as u128 * v as u128).is_multiple_of(self.modulus as u128) {
                return Err(Error::InvalidArgument(format!(
                    "value {v} on a generator of order {d} is not a homomorphism to Z/{} (index {i})",
                    self.modulus
                )));
            }
        }
        Ok(())
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn eval(&self, x: &[i64]) -> u64 {
        let d = self.modulus as i64;
        x.iter()
            .zip(&self.values)
            .map(|(a, &v)| (a.rem_euclid(d) * v as i64) % d)
            .sum::<i64>()
            .rem_euclid(d) as u64
    }

    /// Order of the image in Z/d.
    pub fn order(&self) -> u64 {
        let g = self
            .values
            .iter()
            .fold(self.modulus, |acc, &v| num_integer::gcd(acc, v));
        self.modulus / g
    }

    pub fn scaled(&self, s: i64) -> Self {
        Character::new(
            self.modulus,
            self.values.iter().map(|&v| v as i64 * s).collect(),
        )
        .expect("modulus unchanged")
    }
}

/// χ(x) = d·λ(x, h) mod d.
pub fn character_from_element(g: &LinkedAbelianGroup, h: &[i64], d: u64) -> Result<Character> {
    if h.len() != g.rank() {
        return Err(Error::Dimension("element rank differs from group rank".into()));
    }
    let mut values = Vec::with_capacity(g.rank());
    for i in 0..g.rank() {
        let e: Vec<i64> = (0..g.rank()).map(|j| i64::from(i == j)).collect();
        let v = g.lambda(&e, h) * Rational::from_integer(d.into());
        if !v.is_integer() {
            return Err(Error::InvalidArgument(format!(
                "d = {d} does not annihilate lk(., h); choose d divisible by the order of h"
            )));
        }
        values.push(v.to_integer().to_i64().unwrap());
    }
    Character::new(d, values)
}

/// A Seifert matrix, checked to satisfy det(V − Vᵀ) = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix(IntegerMatrix);

impl SeifertMatrix {
    pub fn new(v: IntegerMatrix) -> Result<Self> {
        if !v.is_square() || !v.rows().is_multiple_of(2) {
            return Err(Error::Dimension("Seifert matrix must be square of even size".into()));
        }
        let diff = v.add(&neg(&v.transpose()))?;
        if !diff.det()?.is_one() {
            return Err(Error::Inconsistent("det(V - V^T) must be 1".into()));
        }
        Ok(SeifertMatrix(v))
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        if rows.is_empty() {
            return Self::new(IntegerMatrix::zeros(0, 0));
        }
        Self::new(IntegerMatrix::from_i64(rows))
    }

    /// `[[−1, 1], [0, k]]`.
    pub fn twist_knot(k: i64) -> Self {
        Self::from_i64(&[vec![-1, 1], vec![0, k]]).expect("valid twist-knot Seifert matrix")
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.0
    }

    pub fn symmetrized(&self) -> IntegerMatrix {
        self.0.add(&self.0.transpose()).expect("square")
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        self.0
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_i64().expect("small entry")).collect())
            .collect()
    }
}

fn neg(m: &IntegerMatrix) -> IntegerMatrix {
    let rows = m.to_rows().into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect();
    IntegerMatrix::from_rows_with_cols(rows, m.cols()).expect("same shape")
}

/// The linking form of the 2-fold branched cover, λ(x, y) = xᵀ(V+Vᵀ)⁻¹y mod 1,
/// with the map from Z^{2g} (columns of V+Vᵀ) to invariant-factor coordinates.
#[derive(Clone, Debug)]
pub struct SeifertLinking {
    pub group: LinkedAbelianGroup,
    /// Row i gives the i-th invariant coordinate of a vector in Z^{2g}.
    pub to_basis: Vec<Vec<i64>>,
}

impl SeifertLinking {
    pub fn coordinates(&self, y: &[i64]) -> Vec<i64> {
        let raw: Vec<i64> = self
            .to_basis
            .iter()
            .map(|row| row.iter().zip(y).map(|(a, b)| a * b).sum())
            .collect();
        self.group.normalize(&raw)
    }
}

pub fn linking_form(v: &SeifertMatrix) -> Result<SeifertLinking> {
    let s = v.symmetrized();
    let n = s.rows();
    if n == 0 {
        return Ok(SeifertLinking {
            group: LinkedAbelianGroup::trivial(),
            to_basis: vec![],
        });
    }
    if s.det()?.is_zero() {
        return Err(Error::Singular("V + V^T is singular".into()));
    }
    let snf = s.smith_normal_form();
    let s_inv = s.to_rational().inverse()?;
    let u_inv = snf.u.to_rational().inverse()?;
    let keep: Vec<usize> = (0..n).filter(|&i| !snf.d.get(i, i).is_one()).collect();
    let orders: Vec<u64> = keep
        .iter()
        .map(|&i| snf.d.get(i, i).abs().to_u64().expect("small invariant factor"))
        .collect();
    // generator i ↔ column i of U⁻¹
    let gens: Vec<Vec<Rational>> = keep
        .iter()
        .map(|&i| (0..n).map(|r| u_inv.rows[r][i].clone()).collect())
        .collect();
    let col = |g: &[Rational]| RationalMatrix {
        rows: g.iter().map(|x| vec![x.clone()]).collect(),
        cols: 1,
    };
    let row = |g: &[Rational]| RationalMatrix {
        rows: vec![g.to_vec()],
        cols: g.len(),
    };
    let mut linking = vec![vec![Rational::zero(); keep.len()]; keep.len()];
    for (a, ga) in gens.iter().enumerate() {
        for (b, gb) in gens.iter().enumerate() {
            let v = row(ga).mul(&s_inv)?.mul(&col(gb))?;
            linking[a][b] = v.rows[0][0].clone();
        }
    }
    let to_basis = keep
        .iter()
        .map(|&i| snf.u.row(i).iter().map(|x| x.to_i64().expect("small")).collect())
        .collect();
    Ok(SeifertLinking {
        group: LinkedAbelianGroup::new(orders, linking)?,
        to_basis,
    })
}

/// Group order as a BigInt, for comparison with |Δ(−1)|.
pub fn group_order(g: &LinkedAbelianGroup) -> BigInt {
    g.orders().iter().map(|&d| BigInt::from(d)).product()
}
