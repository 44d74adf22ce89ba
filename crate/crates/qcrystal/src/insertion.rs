//! Orthogonal Edelman-Greene insertion and orthogonal mixed insertion.

use thiserror::Error;

use crate::alphabet::{interchange_primes, Letter, Word};
use crate::crystal::Enumerable;
use crate::factorization::{Factorization, IncrCrystal};
use crate::involutions::{primed_word_involution, Perm};
use crate::tableau::{double, halve, ShiftedTableau};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InsertionError {
    #[error("bumping stalled inserting {letter} at step {step}")]
    Stalled { letter: Letter, step: usize },
    #[error("row word {0} of the insertion tableau is not a primed involution word")]
    NotInvolutionWord(Word),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Row,
    Column,
}

/// A growing shifted tableau stored as rows, row `r` starting in column `r`.
struct Grid {
    rows: Vec<Vec<Letter>>,
}

impl Grid {
    fn get(&self, r: usize, c: usize) -> Option<Letter> {
        if c < r {
            return None;
        }
        self.rows.get(r - 1)?.get(c - r).copied()
    }

    fn set(&mut self, r: usize, c: usize, l: Letter) {
        self.rows[r - 1][c - r] = l;
    }

    fn column_height(&self, c: usize) -> usize {
        (1..=c).take_while(|&r| self.get(r, c).is_some()).count()
    }

    /// Inserts `x` and returns the new box and whether the process ended in column insertion.
    fn insert(&mut self, x: Letter, step: usize) -> Result<((usize, usize), bool), InsertionError> {
        let mut x = x;
        let mut mode = Mode::Row;
        let mut line = 1;
        loop {
            let cells: Vec<(usize, usize)> = match mode {
                Mode::Row => {
                    let len = self.rows.get(line - 1).map_or(0, |r| r.len());
                    (0..len).map(|k| (line, line + k)).collect()
                }
                Mode::Column => (1..=self.column_height(line)).map(|r| (r, line)).collect(),
            };
            let find = |strict: bool| {
                cells.iter().copied().find(|&(r, c)| {
                    let v = self.get(r, c).unwrap().ceil();
                    if strict {
                        x.ceil() < v
                    } else {
                        x.ceil() <= v
                    }
                })
            };
            let (y, yt) = (find(false), find(true));
            let Some(y) = y else {
                let pos = match mode {
                    Mode::Row => (line, line + cells.len()),
                    Mode::Column => (cells.len() + 1, line),
                };
                let diagonal = pos.0 == pos.1;
                let placed = if diagonal { x.remove_prime() } else { x };
                if pos.0 > self.rows.len() {
                    self.rows.push(Vec::new());
                }
                if self.rows[pos.0 - 1].len() + pos.0 != pos.1 {
                    return Err(InsertionError::Stalled { letter: x, step });
                }
                self.rows[pos.0 - 1].push(placed);
                let column = mode == Mode::Column || (diagonal && x.is_primed());
                return Ok((pos, column));
            };
            let on_diag = y.0 == y.1;
            match yt {
                Some(t) if t != y => {
                    let (a, b) = interchange_primes(self.get(y.0, y.1).unwrap(), self.get(t.0, t.1).unwrap());
                    self.set(y.0, y.1, a);
                    self.set(t.0, t.1, b);
                    x = x.shift(1);
                }
                Some(_) => {
                    let old = self.get(y.0, y.1).unwrap();
                    if on_diag {
                        self.set(y.0, y.1, x.remove_prime());
                        x = diag_bump(old, x);
                    } else {
                        self.set(y.0, y.1, x);
                        x = old;
                    }
                }
                None => return Err(InsertionError::Stalled { letter: x, step }),
            }
            if mode == Mode::Row && on_diag {
                mode = Mode::Column;
            }
            line = match mode {
                Mode::Row => y.0 + 1,
                Mode::Column => y.1 + 1,
            };
        }
    }
}

/// The letter bumped out of the diagonal: `y - (⌈x⌉ - x)`, i.e. `y` primed when `x` was.
fn diag_bump(y: Letter, x: Letter) -> Letter {
    if x.is_primed() {
        y.add_prime()
    } else {
        y
    }
}

/// The insertion and recording tableaux.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Insertion {
    pub p: ShiftedTableau,
    pub q: ShiftedTableau,
}

fn finish(grid: Grid) -> ShiftedTableau {
    ShiftedTableau::from_rows(grid.rows).expect("insertion keeps a strict shape")
}

/// Orthogonal Edelman-Greene insertion of an increasing factorization.
pub fn eg_insert(a: &Factorization) -> Result<Insertion, InsertionError> {
    let mut p = Grid { rows: Vec::new() };
    let mut q = Grid { rows: Vec::new() };
    let mut step = 0;
    for (j, factor) in a.0.iter().enumerate() {
        for &x in factor.iter() {
            step += 1;
            let (pos, column) = p.insert(x, step)?;
            if pos.0 > q.rows.len() {
                q.rows.push(Vec::new());
            }
            q.rows[pos.0 - 1].push(Letter::new(j as i64 + 1, column));
        }
    }
    let p = finish(p);
    if primed_word_involution(&p.row_word()) != primed_word_involution(&a.concat()) {
        return Err(InsertionError::NotInvolutionWord(p.row_word()));
    }
    Ok(Insertion { p, q: finish(q) })
}

/// Insertion of a word, viewed as a factorization into one-letter factors.
pub fn eg_insert_word(w: &Word) -> Result<Insertion, InsertionError> {
    eg_insert(&Factorization(w.iter().map(|&l| Word(vec![l])).collect()))
}

/// All `a ∈ Incr⁺_n(z)` with `P_EG(a) = P`.
pub fn eg_fiber(z: &Perm, n: usize, p: &ShiftedTableau) -> Vec<Factorization> {
    IncrCrystal::new(z.clone(), n)
        .elements()
        .into_iter()
        .filter(|a| eg_insert(a).map(|r| &r.p == p).unwrap_or(false))
        .collect()
}

/// `w^⊤`: factor `i` lists the positions `j` with `w_j ∈ {i', i}`, primed like `w_j`.
pub fn transpose_word(w: &Word, n: usize) -> Factorization {
    let mut out = Factorization::empty(n);
    for (j, &l) in w.iter().enumerate() {
        out.0[(l.ceil() - 1) as usize].push(Letter::new(j as i64 + 1, l.is_primed()));
    }
    out
}

pub fn double_factorization(a: &Factorization) -> Factorization {
    Factorization(
        a.0.iter()
            .map(|w| w.iter().map(|l| Letter::new(2 * l.ceil(), l.is_primed())).collect())
            .collect(),
    )
}

/// `double(w^⊤) ∈ Incr⁺_n(s_2 s_4 ⋯ s_{2m})`.
pub fn double_and_transpose(w: &Word, n: usize) -> Factorization {
    double_factorization(&transpose_word(w, n))
}

/// Orthogonal mixed insertion `w ↦ (P_HM, Q_HM)`.
pub fn mixed_insert(w: &Word, n: usize) -> Result<Insertion, InsertionError> {
    let r = eg_insert(&double_and_transpose(w, n))?;
    let q = halve(&r.p).expect("entries of P are even");
    debug_assert_eq!(double(&q), r.p);
    Ok(Insertion { p: r.q, q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::word;

    fn tab(s: &str) -> ShiftedTableau {
        s.parse().unwrap()
    }

    fn fac(s: &str) -> Factorization {
        s.parse().unwrap()
    }

    #[test]
    fn displayed_insertion() {
        let a = fac("4 | 1' 3 5 | | 4' | | 2");
        let r = eg_insert(&a).unwrap();
        assert_eq!(r.p, tab("1 2 4 5 / 3 5'"));
        assert_eq!(r.q, tab("1 2' 2 6' / 2' 4"));
        let r = eg_insert_word(&word("41'354'2")).unwrap();
        assert_eq!(r.p, tab("1 2 4 5 / 3 5'"));
        assert_eq!(r.q, tab("1 2' 4 6' / 3' 5"));
    }

    #[test]
    fn unprimed_insertion() {
        let r = eg_insert(&fac("4 | 135 | | 4 | | 2")).unwrap();
        assert_eq!(r.p, tab("1 2 4 5 / 3 5"));
        assert_eq!(r.q, tab("1 2' 2 6' / 2 4"));
    }

    #[test]
    fn single_letter() {
        let r = eg_insert_word(&word("3'")).unwrap();
        assert_eq!((r.p, r.q), (tab("3"), tab("1'")));
        let r = eg_insert_word(&word("3")).unwrap();
        assert_eq!((r.p, r.q), (tab("3"), tab("1")));
    }

    #[test]
    fn transpose_and_mixed() {
        assert_eq!(transpose_word(&word("2'211'2'"), 3), fac("3 4' | 1' 2 5' | "));
        assert_eq!(double_and_transpose(&word("3'311'3"), 3), fac("6 8' | | 2' 4 10"));
        let w = word("3'311'3'");
        assert_eq!(double_and_transpose(&w, 3), fac("6 8' | | 2' 4 10'"));
        let r = eg_insert(&double_and_transpose(&w, 3)).unwrap();
        assert_eq!(r.p, tab("2 4 8' 10' / 6"));
        let m = mixed_insert(&w, 3).unwrap();
        assert_eq!(m.p, tab("1 1 3' 3 / 3'"));
        assert_eq!(m.q, tab("1 2 4' 5' / 3"));
        assert_eq!(double_and_transpose(&Word::new(), 2), Factorization::empty(2));
    }
}
