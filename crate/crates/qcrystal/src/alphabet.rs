//! Primed integers, primed words, strict partitions and weights.

use std::fmt;
use std::ops::{Deref, DerefMut};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// A possibly primed integer. `k` is stored as `2k`, `k'` as `2k - 1`,
/// so the derived order is `... < 0' < 0 < 1' < 1 < 2' < ...`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Letter(i64);

impl Letter {
    pub const fn new(value: i64, primed: bool) -> Letter {
        if primed {
            Letter(2 * value - 1)
        } else {
            Letter(2 * value)
        }
    }

    pub const fn unprimed(value: i64) -> Letter {
        Letter(2 * value)
    }

    pub const fn primed(value: i64) -> Letter {
        Letter(2 * value - 1)
    }

    pub const fn from_code(code: i64) -> Letter {
        Letter(code)
    }

    pub const fn code(self) -> i64 {
        self.0
    }

    /// The integer `k` for both `k` and `k'`.
    pub const fn ceil(self) -> i64 {
        (self.0 + 1).div_euclid(2)
    }

    pub const fn is_primed(self) -> bool {
        self.0.rem_euclid(2) == 1
    }

    pub const fn add_prime(self) -> Letter {
        Letter::primed(self.ceil())
    }

    pub const fn remove_prime(self) -> Letter {
        Letter::unprimed(self.ceil())
    }

    pub const fn toggle_prime(self) -> Letter {
        Letter::new(self.ceil(), !self.is_primed())
    }

    /// Adds the integer `d`, keeping the prime.
    pub const fn shift(self, d: i64) -> Letter {
        Letter(self.0 + 2 * d)
    }

    pub const fn with_prime_of(self, other: Letter) -> Letter {
        Letter::new(self.ceil(), other.is_primed())
    }

    pub const fn same_prime(self, other: Letter) -> bool {
        self.is_primed() == other.is_primed()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_primed() {
            write!(f, "{}'", self.ceil())
        } else {
            write!(f, "{}", self.ceil())
        }
    }
}

impl FromStr for Letter {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Letter, ParseError> {
        let t = s.trim();
        let (body, primed) = match t.strip_suffix('\'').or_else(|| t.strip_suffix('′')) {
            Some(b) => (b, true),
            None => (t, false),
        };
        let value: i64 = body.parse().map_err(|_| ParseError::new(format!("bad letter {s:?}")))?;
        Ok(Letter::new(value, primed))
    }
}

/// Swaps the primes of two letters when exactly one of them is primed.
pub fn interchange_primes(a: Letter, b: Letter) -> (Letter, Letter) {
    if a.same_prime(b) {
        (a, b)
    } else {
        (a.toggle_prime(), b.toggle_prime())
    }
}

/// A finite sequence of letters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn unprime(&self) -> Word {
        self.iter().map(|l| l.remove_prime()).collect()
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.windows(2).all(|p| p[0] < p[1])
    }

    /// Positions `i` (1-based) with `w_i > w_{i+1}`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self[i - 1] > self[i]).collect()
    }

    /// Compact rendering with no separators; only faithful for letters in `0..=9`.
    pub fn compact(&self) -> String {
        self.iter().map(|l| l.to_string()).collect()
    }

    pub fn into_inner(self) -> Vec<Letter> {
        self.0
    }
}

impl Deref for Word {
    type Target = Vec<Letter>;
    fn deref(&self) -> &Vec<Letter> {
        &self.0
    }
}

impl DerefMut for Word {
    fn deref_mut(&mut self) -> &mut Vec<Letter> {
        &mut self.0
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Word {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ParseError;

    /// Whitespace separated tokens, or a compact string of single digits
    /// each optionally followed by a prime.
    fn from_str(s: &str) -> Result<Word, ParseError> {
        let t = s.trim();
        if t.is_empty() || t == "∅" || t == "()" {
            return Ok(Word::new());
        }
        if t.contains(char::is_whitespace) || t.contains('-') {
            return t.split_whitespace().map(str::parse).collect();
        }
        let mut out = Vec::new();
        for c in t.chars() {
            match c {
                '0'..='9' => out.push(Letter::unprimed(c as i64 - '0' as i64)),
                '\'' | '′' => {
                    let last = out
                        .pop()
                        .ok_or_else(|| ParseError::new(format!("dangling prime in {s:?}")))?;
                    if last.is_primed() {
                        return Err(ParseError::new(format!("double prime in {s:?}")));
                    }
                    out.push(last.add_prime());
                }
                _ => return Err(ParseError::new(format!("bad word {s:?}"))),
            }
        }
        Ok(Word(out))
    }
}

/// Convenience for tests and examples; panics on malformed input.
pub fn word(s: &str) -> Word {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}

/// Weight vectors, indexed from 0 for `x_1`.
pub type Weight = Vec<i64>;

pub fn basis_vector(n: usize, i: usize) -> Weight {
    let mut v = vec![0; n];
    v[i - 1] = 1;
    v
}

/// A strict partition, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<StrictPartition, ParseError> {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|p| p[0] <= p[1]) {
            return Err(ParseError::new(format!("{parts:?} is not a strict partition")));
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> StrictPartition {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// All strict partitions whose shifted diagram sits inside that of `self`.
    pub fn contained(&self) -> Vec<StrictPartition> {
        fn go(bound: &[usize], cap: usize, acc: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            out.push(StrictPartition(acc.clone()));
            if let Some((&b, rest)) = bound.split_first() {
                for p in 1..=b.min(cap) {
                    acc.push(p);
                    go(rest, p - 1, acc, out);
                    acc.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(&self.0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Every strict partition of `size`.
    pub fn all_of_size(size: usize) -> Vec<StrictPartition> {
        fn go(rem: usize, cap: usize, acc: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            if rem == 0 {
                out.push(StrictPartition(acc.clone()));
                return;
            }
            for p in (1..=rem.min(cap)).rev() {
                acc.push(p);
                go(rem - p, p - 1, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for StrictPartition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<StrictPartition, ParseError> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() || t == "∅" {
            return Ok(StrictPartition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| ParseError::new(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        StrictPartition::new(parts)
    }
}

/// Positions `(i, i + j - 1)` for `1 <= j <= λ_i`.
pub fn shifted_diagram(lambda: &StrictPartition) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(lambda.size());
    for (r, &p) in lambda.parts().iter().enumerate() {
        let i = r + 1;
        for j in 1..=p {
            out.push((i, i + j - 1));
        }
    }
    out
}
