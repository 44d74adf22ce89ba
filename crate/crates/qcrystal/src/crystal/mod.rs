//! Finite crystals for gl_n, q_n and q⁺_n.
//!
//! A model supplies a weight map and partial raising/lowering operators on
//! opaque payloads. Everything else (string lengths, the Weyl group action,
//! the conjugated queer operators, tensor products, graphs) is derived here.

use std::fmt;
use std::fmt::Debug;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alphabet::Weight;
use crate::error::ParseError;

pub mod axioms;
pub mod export;
pub mod graph;
pub mod iso;
pub mod ops;
pub mod standard;
pub mod tensor;

pub use graph::{components, materialize, CrystalGraph};
pub use ops::*;
pub use standard::{StandardCrystal, Unit};
pub use tensor::{Tensor, TensorPower};

/// Operator index: `1̄`, `0`, or an ordinary index in `[n-1]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Label {
    Bar,
    Zero,
    Index(usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Bar => f.write_str("bar1"),
            Label::Zero => f.write_str("0"),
            Label::Index(i) => write!(f, "{i}"),
        }
    }
}

impl FromStr for Label {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Label, ParseError> {
        match s.trim() {
            "bar1" | "1bar" | "-1" => Ok(Label::Bar),
            "0" => Ok(Label::Zero),
            t => t
                .parse::<usize>()
                .map(Label::Index)
                .map_err(|_| ParseError::new(format!("bad label {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Category {
    Gl,
    Q,
    QPlus,
}

impl Category {
    /// All operator labels present for this category in rank `n`.
    pub fn labels(self, n: usize) -> Vec<Label> {
        let mut out = Vec::new();
        if n >= 2 && self != Category::Gl {
            out.push(Label::Bar);
        }
        if self == Category::QPlus {
            out.push(Label::Zero);
        }
        out.extend((1..n).map(Label::Index));
        out
    }

    pub fn has(self, n: usize, i: Label) -> bool {
        match i {
            Label::Bar => n >= 2 && self != Category::Gl,
            Label::Zero => self == Category::QPlus,
            Label::Index(k) => k >= 1 && k < n,
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Gl => "gl",
            Category::Q => "q",
            Category::QPlus => "qplus",
        })
    }
}

impl FromStr for Category {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Category, ParseError> {
        match s.trim() {
            "gl" => Ok(Category::Gl),
            "q" => Ok(Category::Q),
            "qplus" | "q+" => Ok(Category::QPlus),
            _ => Err(ParseError::new(format!("unknown category {s:?}"))),
        }
    }
}

/// A crystal model given by pure functions on payloads.
pub trait Crystal {
    type Elem: Clone + Eq + Hash + Ord + Debug;

    fn rank(&self) -> usize;
    fn category(&self) -> Category;
    fn weight(&self, b: &Self::Elem) -> Weight;
    fn raise(&self, i: Label, b: &Self::Elem) -> Option<Self::Elem>;
    fn lower(&self, i: Label, b: &Self::Elem) -> Option<Self::Elem>;
    fn render(&self, b: &Self::Elem) -> String;

    fn labels(&self) -> Vec<Label> {
        self.category().labels(self.rank())
    }
}

/// Models whose full element set can be listed.
pub trait Enumerable: Crystal {
    fn elements(&self) -> Vec<Self::Elem>;
}

impl<C: Crystal + ?Sized> Crystal for &C {
    type Elem = C::Elem;
    fn rank(&self) -> usize {
        (**self).rank()
    }
    fn category(&self) -> Category {
        (**self).category()
    }
    fn weight(&self, b: &C::Elem) -> Weight {
        (**self).weight(b)
    }
    fn raise(&self, i: Label, b: &C::Elem) -> Option<C::Elem> {
        (**self).raise(i, b)
    }
    fn lower(&self, i: Label, b: &C::Elem) -> Option<C::Elem> {
        (**self).lower(i, b)
    }
    fn render(&self, b: &C::Elem) -> String {
        (**self).render(b)
    }
    fn labels(&self) -> Vec<Label> {
        (**self).labels()
    }
}

impl<C: Enumerable + ?Sized> Enumerable for &C {
    fn elements(&self) -> Vec<C::Elem> {
        (**self).elements()
    }
}
