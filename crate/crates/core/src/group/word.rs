//! Freely reduced words in a free group.

use std::fmt;

use crate::error::{Error, Result};

/// A generator raised to ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, exp: i32) -> Self {
        debug_assert!(exp == 1 || exp == -1);
        Letter {
            gen,
            inverse: exp < 0,
        }
    }

    pub fn exp(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(gen: usize) -> Self {
        Word(vec![Letter::new(gen, 1)])
    }

    /// Builds a word from letters, cancelling adjacent inverse pairs.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Word::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// `(generator, ±1)` pairs.
    pub fn from_pairs(pairs: &[(usize, i32)]) -> Self {
        Self::from_letters(pairs.iter().map(|&(g, e)| Letter::new(g, e)))
    }

    pub fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inv()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Word::identity(), |acc, _| acc.mul(&base))
    }

    /// Σ weight[gen]·exp over the letters.
    pub fn weighted_sum(&self, weights: &[i64]) -> i64 {
        self.0.iter().map(|l| weights[l.gen] * l.exp()).sum()
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.0.iter().filter(|l| l.gen == gen).map(|l| l.exp()).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen).max()
    }

    /// Parses `"x1 X2 x3"`: 1-based indices, upper case for inverses.
    /// An empty string or `"1"` is the identity.
    pub fn parse(s: &str) -> Result<Self> {
        let mut w = Word::identity();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (inverse, rest) = if let Some(r) = tok.strip_prefix('x') {
                (false, r)
            } else if let Some(r) = tok.strip_prefix('X') {
                (true, r)
            } else {
                return Err(Error::Parse(format!("bad letter {tok:?}")));
            };
            let idx: usize = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator index in {tok:?}")))?;
            if idx == 0 {
                return Err(Error::Parse("generator indices start at 1".into()));
            }
            w.push(Letter {
                gen: idx - 1,
                inverse,
            });
        }
        Ok(w)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| format!("{}{}", if l.inverse { 'X' } else { 'x' }, l.gen + 1))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let w = Word::from_pairs(&[(0, 1), (1, 1), (1, -1), (0, -1), (2, 1)]);
        assert_eq!(w, Word::generator(2));
        assert!(w.mul(&w.inverse()).is_empty());
    }

    #[test]
    fn parse_round_trip() {
        let w = Word::parse("x1 X2 x3 x3").unwrap();
        assert_eq!(w.to_string(), "x1 X2 x3 x3");
        assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
        assert_eq!(Word::parse("x1 X1").unwrap(), Word::identity());
        assert!(Word::parse("y1").is_err());
        assert!(Word::parse("x0").is_err());
    }

    #[test]
    fn sums() {
        let w = Word::parse("x1 x2 X1 X1").unwrap();
        assert_eq!(w.exponent_sum(0), -1);
        assert_eq!(w.weighted_sum(&[2, 5]), 3);
        assert_eq!(Word::generator(1).pow(-3).len(), 3);
    }
}
