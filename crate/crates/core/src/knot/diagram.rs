//! Crossing diagrams, Wirtinger presentations and 2-bridge constructions.

use serde::{Deserialize, Serialize};

use crate::group::{Letter, Presentation, Word};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingDiagram {
    pub arc_count: usize,
    pub crossings: Vec<Crossing>,
}

impl CrossingDiagram {
    pub fn new(arc_count: usize, crossings: Vec<Crossing>) -> Result<Self> {
        let d = CrossingDiagram {
            arc_count,
            crossings,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        if self.crossings.is_empty() {
            return Err(Error::MalformedDiagram(
                "diagram has no crossings; use the presentation <x1 | > for the unknot".into(),
            ));
        }
        let n = self.arc_count;
        let mut ins = vec![0usize; n];
        let mut outs = vec![0usize; n];
        for (i, c) in self.crossings.iter().enumerate() {
            if c.over >= n || c.under_in >= n || c.under_out >= n {
                return Err(Error::MalformedDiagram(format!("crossing {i} references an arc >= {n}")));
            }
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::MalformedDiagram(format!("crossing {i} has sign {}", c.sign)));
            }
            ins[c.under_in] += 1;
            outs[c.under_out] += 1;
        }
        if let Some(a) = (0..n).find(|&a| ins[a] != 1 || outs[a] != 1) {
            return Err(Error::MalformedDiagram(format!(
                "arc {a} is under_in {} times and under_out {} times",
                ins[a], outs[a]
            )));
        }
        Ok(())
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// One generator per arc, relator `under_out⁻¹ · over^s · under_in · over^{−s}`
    /// per crossing, the last relator dropped.
    pub fn wirtinger(&self) -> Result<Presentation> {
        self.validate()?;
        let mut relators: Vec<Word> = self
            .crossings
            .iter()
            .map(|c| {
                let s = c.sign as i32;
                Word::from_letters([
                    Letter::new(c.under_out, -1),
                    Letter::new(c.over, s),
                    Letter::new(c.under_in, 1),
                    Letter::new(c.over, -s),
                ])
            })
            .collect();
        relators.pop();
        Presentation::new(self.arc_count, relators, Some(vec![1; self.arc_count]))
    }
}

/// Continued fraction `[a1; a2, …]` with positive terms for `p/q > 1`.
pub fn continued_fraction(mut p: u64, mut q: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while q != 0 {
        out.push(p / q);
        (p, q) = (q, p % q);
    }
    out
}

/// Value of a continued fraction as `(p, q)`.
pub fn fraction_of(cf: &[u64]) -> (u64, u64) {
    let (mut p, mut q) = (1u64, 0u64);
    for &a in cf.iter().rev() {
        (p, q) = (a * p + q, p);
    }
    (p, q)
}

#[derive(Clone, Copy)]
struct Passage {
    crossing: usize,
    over: bool,
    dir: (i64, i64),
}

/// Diagram of the 4-plat `σ2^{a1} σ1^{−a2} σ2^{a3} …` closed by caps joining
/// strands (0,1) and (2,3) at both ends. Even-length inputs are rewritten to
/// odd length via `[…, a] = […, a − 1, 1]`.
pub fn four_plat(cf: &[u64]) -> Result<CrossingDiagram> {
    if cf.is_empty() || cf.contains(&0) {
        return Err(Error::InvalidArgument("continued fraction terms must be positive".into()));
    }
    let mut cf = cf.to_vec();
    if cf.len().is_multiple_of(2) {
        let last = cf.pop().unwrap();
        if last > 1 {
            cf.push(last - 1);
            cf.push(1);
        } else {
            *cf.last_mut().unwrap() += 1;
        }
    }
    // each level: (left position of the swapped pair, braid exponent sign)
    let mut levels: Vec<(usize, i64)> = Vec::new();
    for (i, &a) in cf.iter().enumerate() {
        let (pos, sign) = if i % 2 == 0 { (1, 1) } else { (0, -1) };
        levels.extend(std::iter::repeat_n((pos, sign), a as usize));
    }
    let n_levels = levels.len();
    let partner = |p: usize| p ^ 1;

    // walk the closed curve from the top of strand 0, heading down
    let mut passages = Vec::with_capacity(2 * n_levels);
    let (mut pos, mut down) = (0usize, true);
    loop {
        let order: Vec<usize> = if down {
            (0..n_levels).collect()
        } else {
            (0..n_levels).rev().collect()
        };
        for k in order {
            let (left, sign) = levels[k];
            if pos != left && pos != left + 1 {
                continue;
            }
            let next = if pos == left { left + 1 } else { left };
            // σ^{+1}: the strand moving left→right as we descend is on top
            let descending_right = if down { next > pos } else { pos > next };
            let over = (sign > 0) == descending_right;
            let dx = next as i64 - pos as i64;
            let dy = if down { -1 } else { 1 };
            passages.push(Passage {
                crossing: k,
                over,
                dir: (dx, dy),
            });
            pos = next;
        }
        pos = partner(pos);
        down = !down;
        if down && pos == 0 {
            break;
        }
        if passages.len() > 2 * n_levels {
            break;
        }
    }
    if passages.len() != 2 * n_levels {
        return Err(Error::MalformedDiagram(
            "plat closure is a link, not a knot (even numerator)".into(),
        ));
    }

    // arcs run from one underpass to the next
    let first_under = passages.iter().position(|p| !p.over).expect("some underpass");
    passages.rotate_left(first_under + 1);
    let arc_count = passages.iter().filter(|p| !p.over).count();
    let mut over_arc = vec![usize::MAX; n_levels];
    let mut under = vec![(0usize, 0usize, (0i64, 0i64)); n_levels];
    let mut over_dir = vec![(0i64, 0i64); n_levels];
    let mut arc = 0usize;
    for p in &passages {
        if p.over {
            over_arc[p.crossing] = arc;
            over_dir[p.crossing] = p.dir;
        } else {
            under[p.crossing] = (arc, (arc + 1) % arc_count, p.dir);
            arc += 1;
        }
    }
    let crossings = (0..n_levels)
        .map(|k| {
            let (o, u) = (over_dir[k], under[k].2);
            let cross = o.0 * u.1 - o.1 * u.0;
            Crossing {
                over: over_arc[k],
                under_in: under[k].0,
                under_out: under[k].1,
                sign: if cross > 0 { 1 } else { -1 },
            }
        })
        .collect();
    CrossingDiagram::new(arc_count, crossings)
}

/// Schubert's presentation `⟨a, b | a w b⁻¹ w⁻¹⟩` of the 2-bridge knot `b(p, q)`,
/// `w = b^{ε1} a^{ε2} b^{ε3} …` with `ε_i = (−1)^{⌊iq/p⌋}`, where an even `q`
/// is first replaced by `q − p`.
pub fn two_bridge_presentation(p: u64, q: u64) -> Result<Presentation> {
    if p.is_multiple_of(2) || p < 3 || q == 0 || q >= p || num_integer::gcd(p, q) != 1 {
        return Err(Error::InvalidArgument(format!(
            "2-bridge knot needs odd p >= 3 and 0 < q < p coprime, got {p}/{q}"
        )));
    }
    let (p, q) = (p as i64, if q.is_multiple_of(2) { q as i64 - p as i64 } else { q as i64 });
    let mut w = Word::identity();
    for i in 1..p {
        let gen = if i % 2 == 1 { 1 } else { 0 };
        let eps = if (i * q).div_euclid(p) % 2 == 0 { 1 } else { -1 };
        w.push(Letter::new(gen, eps));
    }
    let rel = Word::generator(0)
        .mul(&w)
        .mul(&Word::generator(1).inverse())
        .mul(&w.inverse());
    Presentation::new(2, vec![rel], Some(vec![1, 1]))
}
