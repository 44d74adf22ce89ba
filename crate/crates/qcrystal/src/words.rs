//! The q⁺_n-crystal of primed words of length m.

use crate::alphabet::{Letter, Weight, Word};
use crate::crystal::{Category, Crystal, Enumerable, Label};

/// `i`-unpaired positions (0-based) under `i, i' ↦ ")"` and `i+1, (i+1)' ↦ "("`.
pub fn unpaired_indices(w: &[Letter], i: i64) -> Vec<usize> {
    let mut open: Vec<usize> = Vec::new();
    let mut closes: Vec<usize> = Vec::new();
    for (k, l) in w.iter().enumerate() {
        let c = l.ceil();
        if c == i + 1 {
            open.push(k);
        } else if c == i && open.pop().is_none() {
            closes.push(k);
        }
    }
    let mut out = closes;
    out.extend(open);
    out.sort();
    out
}

fn first_with_ceil(w: &[Letter], c: i64, from: usize) -> Option<usize> {
    (from..w.len()).find(|&k| w[k].ceil() == c)
}

pub fn word_f(w: &Word, i: Label) -> Option<Word> {
    let mut out = w.clone();
    match i {
        Label::Index(i) => {
            let i = i as i64;
            let k = unpaired_indices(w, i).into_iter().rfind(|&k| w[k].ceil() == i)?;
            out[k] = w[k].shift(1);
        }
        Label::Bar => {
            let j = first_with_ceil(w, 1, 0)?;
            if w[..j].iter().any(|l| l.ceil() == 2) {
                return None;
            }
            match first_with_ceil(w, 1, j + 1) {
                Some(k) if w[j] != w[k] => {
                    if w[j].is_primed() {
                        out[j] = Letter::unprimed(2);
                        out[k] = Letter::primed(1);
                    } else {
                        out[j] = Letter::primed(2);
                        out[k] = Letter::unprimed(1);
                    }
                }
                _ => out[j] = w[j].shift(1),
            }
        }
        Label::Zero => {
            let j = first_with_ceil(w, 1, 0)?;
            if w[j] != Letter::unprimed(1) {
                return None;
            }
            out[j] = Letter::primed(1);
        }
    }
    Some(out)
}

pub fn word_e(w: &Word, i: Label) -> Option<Word> {
    let mut out = w.clone();
    match i {
        Label::Index(i) => {
            let i = i as i64;
            let j = unpaired_indices(w, i).into_iter().find(|&k| w[k].ceil() == i + 1)?;
            out[j] = w[j].shift(-1);
        }
        Label::Bar => {
            let j = first_with_ceil(w, 2, 0)?;
            if w[..j].iter().any(|l| l.ceil() == 1) {
                return None;
            }
            match first_with_ceil(w, 1, j + 1) {
                Some(k) if !w[j].same_prime(w[k]) => {
                    if w[j].is_primed() {
                        out[j] = Letter::unprimed(1);
                        out[k] = Letter::primed(1);
                    } else {
                        out[j] = Letter::primed(1);
                        out[k] = Letter::unprimed(1);
                    }
                }
                _ => out[j] = w[j].shift(-1),
            }
        }
        Label::Zero => {
            let j = first_with_ceil(w, 1, 0)?;
            if w[j] != Letter::primed(1) {
                return None;
            }
            out[j] = Letter::unprimed(1);
        }
    }
    Some(out)
}

pub fn word_weight(w: &[Letter], n: usize) -> Weight {
    let mut wt = vec![0; n];
    for l in w {
        wt[(l.ceil() - 1) as usize] += 1;
    }
    wt
}

/// `W⁺_n(m)`, or its unprimed q_n-subcrystal `W_n(m)` when `primed` is false.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordCrystal {
    pub n: usize,
    pub m: usize,
    pub primed: bool,
}

impl WordCrystal {
    pub fn plus(n: usize, m: usize) -> WordCrystal {
        WordCrystal { n, m, primed: true }
    }

    pub fn unprimed(n: usize, m: usize) -> WordCrystal {
        WordCrystal { n, m, primed: false }
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() == self.m
            && w.iter()
                .all(|l| l.ceil() >= 1 && l.ceil() <= self.n as i64 && (self.primed || !l.is_primed()))
    }
}

impl Crystal for WordCrystal {
    type Elem = Word;

    fn rank(&self) -> usize {
        self.n
    }
    fn category(&self) -> Category {
        if self.primed {
            Category::QPlus
        } else {
            Category::Q
        }
    }
    fn weight(&self, w: &Word) -> Weight {
        word_weight(w, self.n)
    }
    fn raise(&self, i: Label, w: &Word) -> Option<Word> {
        if !self.category().has(self.n, i) {
            return None;
        }
        word_e(w, i)
    }
    fn lower(&self, i: Label, w: &Word) -> Option<Word> {
        if !self.category().has(self.n, i) {
            return None;
        }
        word_f(w, i)
    }
    fn render(&self, w: &Word) -> String {
        if self.n <= 9 {
            w.compact()
        } else {
            w.to_string()
        }
    }
}

impl Enumerable for WordCrystal {
    fn elements(&self) -> Vec<Word> {
        let mut letters = Vec::new();
        for k in 1..=self.n as i64 {
            if self.primed {
                letters.push(Letter::primed(k));
            }
            letters.push(Letter::unprimed(k));
        }
        let mut out = vec![Word::new()];
        for _ in 0..self.m {
            let mut next = Vec::with_capacity(out.len() * letters.len());
            for w in &out {
                for &l in &letters {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }
}
