//! Semistandard (skew) shifted tableaux.
//!
//! Positions are `(x, y)` = (row, column), 1-based, French convention: row 1 is the
//! bottom row and row `x` of a straight shape starts in column `x`.

mod dual;
mod ops;

pub use dual::{descents, descents_by_rule, dual_equiv, dual_s};
pub use ops::{
    tab_e, tab_e0, tab_ebar, tab_f, tab_f0, tab_fbar, traced_e, traced_f, unpaired_boxes, Case, ShTabCrystal,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Letter, StrictPartition, Weight, Word};
use crate::error::{CrystalError, ParseError};

pub type Pos = (usize, usize);

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct ShiftedTableau {
    /// Inner shape, trailing zeros trimmed.
    inner: Vec<usize>,
    /// `rows[x-1]` holds the entries of row `x` from left to right.
    rows: Vec<Vec<Letter>>,
}

impl ShiftedTableau {
    pub fn empty() -> ShiftedTableau {
        ShiftedTableau {
            inner: Vec::new(),
            rows: Vec::new(),
        }
    }

    /// A straight-shape tableau from its rows, row 1 first. Fails unless the shape is strict.
    pub fn from_rows(rows: Vec<Vec<Letter>>) -> Result<ShiftedTableau, ParseError> {
        ShiftedTableau::skew(&StrictPartition::empty(), rows)
    }

    pub fn skew(inner: &StrictPartition, rows: Vec<Vec<Letter>>) -> Result<ShiftedTableau, ParseError> {
        let mut inner: Vec<usize> = inner.parts().to_vec();
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.is_empty()) && rows.len() > inner.len() {
            rows.pop();
        }
        let outer: Vec<usize> = (0..rows.len().max(inner.len()))
            .map(|k| inner.get(k).copied().unwrap_or(0) + rows.get(k).map_or(0, |r| r.len()))
            .collect();
        let outer: Vec<usize> = outer.into_iter().filter(|&p| p > 0).collect();
        StrictPartition::new(outer.clone())
            .map_err(|_| ParseError::new(format!("row lengths do not form a strict shape: {outer:?}")))?;
        if outer.len() < rows.iter().rposition(|r| !r.is_empty()).map_or(0, |k| k + 1) {
            return Err(ParseError::new("empty row below a nonempty row"));
        }
        rows.resize(outer.len(), Vec::new());
        inner.truncate(outer.len());
        Ok(ShiftedTableau { inner, rows })
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn inner_part(&self, x: usize) -> usize {
        self.inner.get(x - 1).copied().unwrap_or(0)
    }

    pub fn is_straight(&self) -> bool {
        self.inner.iter().all(|&p| p == 0)
    }

    /// First column of row `x`.
    pub fn row_start(&self, x: usize) -> usize {
        x + self.inner_part(x)
    }

    pub fn shape(&self) -> StrictPartition {
        let parts = (1..=self.rows.len())
            .map(|x| self.inner_part(x) + self.rows[x - 1].len())
            .collect();
        StrictPartition::new(parts).expect("validated on construction")
    }

    pub fn inner_shape(&self) -> StrictPartition {
        StrictPartition::new(self.inner.clone()).expect("validated on construction")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn get(&self, x: usize, y: usize) -> Option<Letter> {
        if x == 0 || x > self.rows.len() {
            return None;
        }
        let s = self.row_start(x);
        if y < s {
            return None;
        }
        self.rows[x - 1].get(y - s).copied()
    }

    pub fn set(&mut self, x: usize, y: usize, l: Letter) {
        let s = self.row_start(x);
        self.rows[x - 1][y - s] = l;
    }

    /// All boxes, row by row from left to right.
    pub fn boxes(&self) -> Vec<Pos> {
        let mut out = Vec::with_capacity(self.size());
        for x in 1..=self.rows.len() {
            let s = self.row_start(x);
            out.extend((0..self.rows[x - 1].len()).map(|k| (x, s + k)));
        }
        out
    }

    pub fn entries(&self) -> impl Iterator<Item = (Pos, Letter)> + '_ {
        self.boxes()
            .into_iter()
            .map(move |(x, y)| ((x, y), self.get(x, y).unwrap()))
    }

    pub fn weight(&self, n: usize) -> Weight {
        let mut wt = vec![0; n];
        for row in &self.rows {
            for l in row {
                let k = l.ceil() as usize;
                if k >= 1 && k <= n {
                    wt[k - 1] += 1;
                }
            }
        }
        wt
    }

    pub fn max_value(&self) -> i64 {
        self.rows.iter().flatten().map(|l| l.ceil()).max().unwrap_or(0)
    }

    pub fn primes(&self) -> usize {
        self.rows.iter().flatten().filter(|l| l.is_primed()).count()
    }

    pub fn primed_diagonal(&self) -> Vec<usize> {
        (1..=self.rows.len())
            .filter(|&x| self.get(x, x).is_some_and(|l| l.is_primed()))
            .collect()
    }

    pub fn unprime_diag(&self) -> ShiftedTableau {
        let mut t = self.clone();
        for x in 1..=t.rows.len() {
            if let Some(l) = t.get(x, x) {
                t.set(x, x, l.remove_prime());
            }
        }
        t
    }

    pub fn map_entries(&self, f: impl Fn(Letter) -> Letter) -> ShiftedTableau {
        ShiftedTableau {
            inner: self.inner.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(|&l| f(l)).collect()).collect(),
        }
    }

    /// Weakly increasing rows and columns, no repeated primed letter in a row, no
    /// repeated unprimed letter in a column.
    pub fn is_semistandard(&self) -> bool {
        self.entries().all(|((x, y), l)| {
            let left_ok = self.get(x, y - 1).is_none_or(|a| a < l || (a == l && !l.is_primed()));
            let below_ok = self.get(x - 1, y).is_none_or(|a| a < l || (a == l && l.is_primed()));
            left_ok && below_ok && l.ceil() >= 1
        })
    }

    /// Strictly increasing rows and columns.
    pub fn is_increasing(&self) -> bool {
        self.entries()
            .all(|((x, y), l)| self.get(x, y - 1).is_none_or(|a| a < l) && self.get(x - 1, y).is_none_or(|a| a < l))
    }

    /// Entries `1..=N` each used once, primed or not.
    pub fn is_standard(&self) -> bool {
        let mut seen: Vec<i64> = self.rows.iter().flatten().map(|l| l.ceil()).collect();
        seen.sort();
        seen.iter().enumerate().all(|(k, &v)| v == k as i64 + 1) && self.is_semistandard()
    }

    /// Boxes in the order they contribute to the shifted reading word: for
    /// `k = K, …, 1`, the primed entries of column `k` from bottom to top, then the
    /// unprimed entries of row `k` from left to right.
    pub fn reading_positions(&self) -> Vec<Pos> {
        let maxcol = (1..=self.rows.len())
            .map(|x| self.row_start(x) + self.rows[x - 1].len())
            .max()
            .unwrap_or(0);
        let k = maxcol.max(self.rows.len());
        let mut out = Vec::with_capacity(self.size());
        for c in (1..=k).rev() {
            for x in 1..=self.rows.len().min(c) {
                if self.get(x, c).is_some_and(|l| l.is_primed()) {
                    out.push((x, c));
                }
            }
            if c <= self.rows.len() {
                let s = self.row_start(c);
                for (j, l) in self.rows[c - 1].iter().enumerate() {
                    if !l.is_primed() {
                        out.push((c, s + j));
                    }
                }
            }
        }
        out
    }

    pub fn shword(&self) -> Vec<i64> {
        self.reading_positions()
            .into_iter()
            .map(|(x, y)| self.get(x, y).unwrap().ceil())
            .collect()
    }

    /// Row reading word: rows left to right, top row first.
    pub fn row_word(&self) -> Word {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn standardize(&self) -> ShiftedTableau {
        let mut order: Vec<(i64, usize, Pos)> = self
            .reading_positions()
            .into_iter()
            .enumerate()
            .map(|(k, p)| (self.get(p.0, p.1).unwrap().ceil(), k, p))
            .collect();
        order.sort();
        let mut t = self.clone();
        for (k, &(_, _, (x, y))) in order.iter().enumerate() {
            let old = self.get(x, y).unwrap();
            t.set(x, y, Letter::new(k as i64 + 1, old.is_primed()));
        }
        t
    }

    /// The position holding `j` or `j'`.
    pub fn find_value(&self, j: i64) -> Option<Pos> {
        self.entries().find(|(_, l)| l.ceil() == j).map(|(p, _)| p)
    }

    /// Multi-line picture, top row first, in French convention.
    pub fn diagram(&self) -> String {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|l| l.to_string().chars().count())
            .max()
            .unwrap_or(1);
        let mut lines = Vec::new();
        for x in (1..=self.rows.len()).rev() {
            let mut line = String::new();
            for y in 1..self.row_start(x) {
                let cell = if y < x { " " } else { "." };
                line.push_str(&format!("{cell:>width$} "));
            }
            for l in &self.rows[x - 1] {
                line.push_str(&format!("{:>width$} ", l.to_string()));
            }
            lines.push(line.trim_end().to_string());
        }
        lines.join("\n")
    }
}

impl fmt::Display for ShiftedTableau {
    /// Rows separated by `/`, row 1 first; inner boxes of a skew shape shown as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("∅");
        }
        let rows: Vec<String> = (1..=self.rows.len())
            .map(|x| {
                let mut cells: Vec<String> = vec![".".to_string(); self.inner_part(x)];
                cells.extend(self.rows[x - 1].iter().map(|l| l.to_string()));
                cells.join(" ")
            })
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

impl FromStr for ShiftedTableau {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<ShiftedTableau, ParseError> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(ShiftedTableau::empty());
        }
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for part in s.split('/') {
            let tokens: Vec<&str> = part.split_whitespace().collect();
            let skip = tokens.iter().take_while(|t| **t == ".").count();
            inner.push(skip);
            let w: Word = tokens[skip..].join(" ").parse()?;
            rows.push(w.into_inner());
        }
        let inner = StrictPartition::new(inner).map_err(|e| ParseError::new(format!("inner shape: {e}")))?;
        let t = ShiftedTableau::skew(&inner, rows)?;
        if !t.is_semistandard() {
            return Err(ParseError::new(format!("{s:?} is not semistandard")));
        }
        Ok(t)
    }
}

/// Semistandard skew shifted tableaux of shape `outer/inner` with entries at most `n`.
/// With `diag_primes` false, primed diagonal entries are excluded.
pub fn semistandard_tableaux(
    outer: &StrictPartition,
    inner: &StrictPartition,
    n: usize,
    diag_primes: bool,
) -> Vec<ShiftedTableau> {
    let rows: Vec<Vec<Letter>> = (1..=outer.len())
        .map(|x| vec![Letter::unprimed(1); outer.part(x).saturating_sub(inner.part(x))])
        .collect();
    let Ok(mut t) = ShiftedTableau::skew(inner, rows) else {
        return Vec::new();
    };
    let boxes = t.boxes();
    let mut out = Vec::new();
    fill(&mut t, &boxes, 0, n as i64, diag_primes, &mut out);
    out
}

fn fill(t: &mut ShiftedTableau, boxes: &[Pos], k: usize, n: i64, diag_primes: bool, out: &mut Vec<ShiftedTableau>) {
    if k == boxes.len() {
        out.push(t.clone());
        return;
    }
    let (x, y) = boxes[k];
    let left = if y > t.row_start(x) { t.get(x, y - 1) } else { None };
    let below = if x > 1 { t.get(x - 1, y) } else { None };
    for code in 1..=2 * n {
        let l = Letter::from_code(code);
        if l.is_primed() && x == y && !diag_primes {
            continue;
        }
        if left.is_some_and(|a| a > l || (a == l && l.is_primed())) {
            continue;
        }
        if below.is_some_and(|a| a > l || (a == l && !l.is_primed())) {
            continue;
        }
        t.set(x, y, l);
        fill(t, boxes, k + 1, n, diag_primes, out);
    }
}

/// Standard shifted tableaux of shape `lambda`; with `primes`, every prime pattern.
pub fn standard_tableaux(lambda: &StrictPartition, primes: bool) -> Vec<ShiftedTableau> {
    let n = lambda.size();
    let rows: Vec<Vec<Letter>> = lambda.parts().iter().map(|&p| vec![Letter::unprimed(0); p]).collect();
    let mut t = ShiftedTableau::from_rows(rows).expect("strict shape");
    let mut fills = Vec::new();
    place(&mut t, lambda, &mut vec![0; lambda.len()], 1, n, &mut fills);
    if !primes {
        return fills;
    }
    let mut out = Vec::new();
    for t in fills {
        let boxes = t.boxes();
        for mask in 0u64..(1 << boxes.len()) {
            let mut u = t.clone();
            for (k, &(x, y)) in boxes.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    u.set(x, y, u.get(x, y).unwrap().add_prime());
                }
            }
            out.push(u);
        }
    }
    out
}

fn place(
    t: &mut ShiftedTableau,
    lambda: &StrictPartition,
    filled: &mut Vec<usize>,
    next: usize,
    n: usize,
    out: &mut Vec<ShiftedTableau>,
) {
    if next > n {
        out.push(t.clone());
        return;
    }
    for r in 0..lambda.len() {
        let len = filled[r];
        if len == lambda.parts()[r] {
            continue;
        }
        let col = r + 1 + len;
        if r > 0 && filled[r - 1] + r < col + 1 {
            continue;
        }
        t.set(r + 1, col, Letter::unprimed(next as i64));
        filled[r] += 1;
        place(t, lambda, filled, next + 1, n, out);
        filled[r] -= 1;
    }
}

/// `T^highest_λ`: every entry of row `i` equals `i`.
pub fn highest_tableau(lambda: &StrictPartition) -> ShiftedTableau {
    let rows = (1..=lambda.len())
        .map(|x| vec![Letter::unprimed(x as i64); lambda.part(x)])
        .collect();
    ShiftedTableau::from_rows(rows).expect("strict shape")
}

/// `T^lowest_λ`: ribbon `i` from the outside is filled with `n-i`, a box primed exactly
/// when the box above it lies in the same ribbon.
pub fn lowest_tableau(lambda: &StrictPartition, n: usize) -> Result<ShiftedTableau, CrystalError> {
    if lambda.len() > n {
        return Err(CrystalError::Rank(lambda.len(), n));
    }
    let mut t = highest_tableau(lambda);
    let parts = lambda.parts();
    for i in 0..parts.len() {
        let outer = &parts[i..];
        let inner = &parts[(i + 1).min(parts.len())..];
        let value = (n - i) as i64;
        let member = |x: usize, y: usize| -> bool {
            let row_out = outer.get(x - 1).copied().unwrap_or(0);
            let row_in = inner.get(x - 1).copied().unwrap_or(0);
            y >= x + row_in && y < x + row_out
        };
        for x in 1..=outer.len() {
            let row_out = outer[x - 1];
            let row_in = inner.get(x - 1).copied().unwrap_or(0);
            for y in x + row_in..x + row_out {
                t.set(x, y, Letter::new(value, member(x + 1, y)));
            }
        }
    }
    Ok(t)
}

/// `T̂^lowest_λ`: `T^lowest_λ` with every diagonal entry primed.
pub fn lowest_hat_tableau(lambda: &StrictPartition, n: usize) -> Result<ShiftedTableau, CrystalError> {
    let mut t = lowest_tableau(lambda, n)?;
    for x in 1..=t.num_rows() {
        let l = t.get(x, x).unwrap();
        t.set(x, x, l.add_prime());
    }
    Ok(t)
}

/// Replaces each entry `k` by `2k`, keeping primes.
pub fn double(t: &ShiftedTableau) -> ShiftedTableau {
    t.map_entries(|l| Letter::new(2 * l.ceil(), l.is_primed()))
}

/// Inverse of [`double`]; `None` if some entry is odd.
pub fn halve(t: &ShiftedTableau) -> Option<ShiftedTableau> {
    if t.rows.iter().flatten().any(|l| l.ceil() % 2 != 0) {
        return None;
    }
    Some(t.map_entries(|l| Letter::new(l.ceil() / 2, l.is_primed())))
}
