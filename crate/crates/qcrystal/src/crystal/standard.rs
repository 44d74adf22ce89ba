//! The standard one-row crystals and the trivial crystal.

use super::{Category, Crystal, Enumerable, Label};
use crate::alphabet::{basis_vector, Letter, Weight};

/// `B_n` for gl_n and q_n, `B⁺_n` for q⁺_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StandardCrystal {
    pub n: usize,
    pub cat: Category,
}

impl StandardCrystal {
    pub fn new(n: usize, cat: Category) -> StandardCrystal {
        assert!(n >= 1, "standard crystal needs n >= 1");
        StandardCrystal { n, cat }
    }

    pub fn plus(n: usize) -> StandardCrystal {
        StandardCrystal::new(n, Category::QPlus)
    }

    fn contains(&self, b: Letter) -> bool {
        let k = b.ceil();
        k >= 1 && k <= self.n as i64 && (self.cat == Category::QPlus || !b.is_primed())
    }
}

impl Crystal for StandardCrystal {
    type Elem = Letter;

    fn rank(&self) -> usize {
        self.n
    }
    fn category(&self) -> Category {
        self.cat
    }
    fn weight(&self, b: &Letter) -> Weight {
        basis_vector(self.n, b.ceil() as usize)
    }

    fn raise(&self, i: Label, b: &Letter) -> Option<Letter> {
        if !self.cat.has(self.n, i) || !self.contains(*b) {
            return None;
        }
        match i {
            Label::Index(k) if b.ceil() == k as i64 + 1 => Some(b.shift(-1)),
            Label::Bar if b.ceil() == 2 => Some(b.shift(-1)),
            Label::Zero if *b == Letter::primed(1) => Some(Letter::unprimed(1)),
            _ => None,
        }
    }

    fn lower(&self, i: Label, b: &Letter) -> Option<Letter> {
        if !self.cat.has(self.n, i) || !self.contains(*b) {
            return None;
        }
        match i {
            Label::Index(k) if b.ceil() == k as i64 => Some(b.shift(1)),
            Label::Bar if b.ceil() == 1 => Some(b.shift(1)),
            Label::Zero if *b == Letter::unprimed(1) => Some(Letter::primed(1)),
            _ => None,
        }
    }

    fn render(&self, b: &Letter) -> String {
        b.to_string()
    }
}

impl Enumerable for StandardCrystal {
    fn elements(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for k in 1..=self.n as i64 {
            if self.cat == Category::QPlus {
                out.push(Letter::primed(k));
            }
            out.push(Letter::unprimed(k));
        }
        out
    }
}

/// The one-element crystal of weight zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unit {
    pub n: usize,
    pub cat: Category,
}

impl Crystal for Unit {
    type Elem = ();

    fn rank(&self) -> usize {
        self.n
    }
    fn category(&self) -> Category {
        self.cat
    }
    fn weight(&self, _: &()) -> Weight {
        vec![0; self.n]
    }
    fn raise(&self, _: Label, _: &()) -> Option<()> {
        None
    }
    fn lower(&self, _: Label, _: &()) -> Option<()> {
        None
    }
    fn render(&self, _: &()) -> String {
        "∅".to_string()
    }
}

impl Enumerable for Unit {
    fn elements(&self) -> Vec<()> {
        vec![()]
    }
}
