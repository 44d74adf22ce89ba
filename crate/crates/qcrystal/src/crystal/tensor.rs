//! Tensor products in the anti-Kashiwara convention.

use super::{epsilon, phi, Category, Crystal, Enumerable, Label};
use crate::alphabet::Weight;
use crate::error::CrystalError;

fn add(mut a: Weight, b: Weight) -> Weight {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn on_left<A: Crystal, B: Crystal>(x: Option<A::Elem>, y: &B::Elem) -> Option<(A::Elem, B::Elem)> {
    x.map(|x| (x, y.clone()))
}

fn on_right<A: Crystal, B: Crystal>(x: &A::Elem, y: Option<B::Elem>) -> Option<(A::Elem, B::Elem)> {
    y.map(|y| (x.clone(), y))
}

fn step<C: Crystal>(c: &C, i: Label, b: &C::Elem, up: bool) -> Option<C::Elem> {
    if up {
        c.raise(i, b)
    } else {
        c.lower(i, b)
    }
}

/// Applies `e_i` (`up`) or `f_i` to `x ⊗ y` for the given category.
pub fn tensor_step<A: Crystal, B: Crystal>(
    a: &A,
    bc: &B,
    cat: Category,
    i: Label,
    x: &A::Elem,
    y: &B::Elem,
    up: bool,
) -> Option<(A::Elem, B::Elem)> {
    match i {
        Label::Index(_) => {
            let eps = epsilon(a, i, x);
            let ph = phi(bc, i, y);
            let right = if up { eps <= ph } else { eps < ph };
            if right {
                on_right::<A, B>(x, step(bc, i, y, up))
            } else {
                on_left::<A, B>(step(a, i, x, up), y)
            }
        }
        Label::Zero => {
            if a.weight(x)[0] != 0 {
                on_left::<A, B>(step(a, i, x, up), y)
            } else {
                on_right::<A, B>(x, step(bc, i, y, up))
            }
        }
        Label::Bar => {
            let w = a.weight(x);
            if w[0] == 0 && w[1] == 0 {
                return on_right::<A, B>(x, step(bc, i, y, up));
            }
            if cat == Category::QPlus {
                let guard = if up { w[0] == 0 } else { w[0] == 1 };
                if guard {
                    let e0y = bc.raise(Label::Zero, y);
                    let f0y = bc.lower(Label::Zero, y);
                    let (first, second) = if up {
                        (
                            a.raise(Label::Bar, x).and_then(|t| a.lower(Label::Zero, &t)),
                            a.raise(Label::Bar, x).and_then(|t| a.raise(Label::Zero, &t)),
                        )
                    } else {
                        (
                            a.lower(Label::Zero, x).and_then(|t| a.lower(Label::Bar, &t)),
                            a.raise(Label::Zero, x).and_then(|t| a.lower(Label::Bar, &t)),
                        )
                    };
                    if let (Some(p), Some(q)) = (&first, e0y) {
                        return Some((p.clone(), q));
                    }
                    if let (Some(p), Some(q)) = (second, f0y) {
                        return Some((p, q));
                    }
                }
            }
            on_left::<A, B>(step(a, i, x, up), y)
        }
    }
}

/// `A ⊗ B`, with elements written as pairs.
#[derive(Clone, Debug)]
pub struct Tensor<A, B> {
    pub left: A,
    pub right: B,
    cat: Category,
}

impl<A: Crystal, B: Crystal> Tensor<A, B> {
    pub fn new(left: A, right: B) -> Result<Tensor<A, B>, CrystalError> {
        if left.rank() != right.rank() {
            return Err(CrystalError::Rank(left.rank(), right.rank()));
        }
        if left.category() != right.category() {
            return Err(CrystalError::Category(format!(
                "{} ⊗ {}",
                left.category(),
                right.category()
            )));
        }
        let cat = left.category();
        Ok(Tensor { left, right, cat })
    }
}

impl<A: Crystal, B: Crystal> Crystal for Tensor<A, B> {
    type Elem = (A::Elem, B::Elem);

    fn rank(&self) -> usize {
        self.left.rank()
    }
    fn category(&self) -> Category {
        self.cat
    }
    fn weight(&self, b: &Self::Elem) -> Weight {
        add(self.left.weight(&b.0), self.right.weight(&b.1))
    }
    fn raise(&self, i: Label, b: &Self::Elem) -> Option<Self::Elem> {
        if !self.cat.has(self.rank(), i) {
            return None;
        }
        tensor_step(&self.left, &self.right, self.cat, i, &b.0, &b.1, true)
    }
    fn lower(&self, i: Label, b: &Self::Elem) -> Option<Self::Elem> {
        if !self.cat.has(self.rank(), i) {
            return None;
        }
        tensor_step(&self.left, &self.right, self.cat, i, &b.0, &b.1, false)
    }
    fn render(&self, b: &Self::Elem) -> String {
        format!("{} ⊗ {}", self.left.render(&b.0), self.right.render(&b.1))
    }
}

impl<A: Enumerable, B: Enumerable> Enumerable for Tensor<A, B> {
    fn elements(&self) -> Vec<Self::Elem> {
        let rs = self.right.elements();
        let mut out = Vec::new();
        for x in self.left.elements() {
            for y in &rs {
                out.push((x.clone(), y.clone()));
            }
        }
        out
    }
}

/// `C^{⊗m}` with elements stored as vectors, bracketed as `c_1 ⊗ (c_2 ⊗ (⋯))`.
#[derive(Clone, Debug)]
pub struct TensorPower<C> {
    pub base: C,
    pub m: usize,
}

impl<C: Crystal> TensorPower<C> {
    pub fn new(base: C, m: usize) -> TensorPower<C> {
        TensorPower { base, m }
    }
}

struct Power<'a, C> {
    base: &'a C,
    m: usize,
}

impl<C: Crystal> Crystal for Power<'_, C> {
    type Elem = Vec<C::Elem>;

    fn rank(&self) -> usize {
        self.base.rank()
    }
    fn category(&self) -> Category {
        self.base.category()
    }
    fn weight(&self, b: &Self::Elem) -> Weight {
        b.iter()
            .fold(vec![0; self.rank()], |acc, x| add(acc, self.base.weight(x)))
    }
    fn raise(&self, i: Label, b: &Self::Elem) -> Option<Self::Elem> {
        self.apply(i, b, true)
    }
    fn lower(&self, i: Label, b: &Self::Elem) -> Option<Self::Elem> {
        self.apply(i, b, false)
    }
    fn render(&self, b: &Self::Elem) -> String {
        let parts: Vec<String> = b.iter().map(|x| self.base.render(x)).collect();
        parts.join(" ⊗ ")
    }
}

impl<C: Crystal> Power<'_, C> {
    fn apply(&self, i: Label, b: &[C::Elem], up: bool) -> Option<Vec<C::Elem>> {
        debug_assert_eq!(b.len(), self.m);
        if !self.category().has(self.rank(), i) {
            return None;
        }
        match b.len() {
            0 => None,
            1 => step(self.base, i, &b[0], up).map(|x| vec![x]),
            _ => {
                let tail = Power {
                    base: self.base,
                    m: self.m - 1,
                };
                let rest = b[1..].to_vec();
                let (x, mut ys) = tensor_step(self.base, &tail, self.category(), i, &b[0], &rest, up)?;
                ys.insert(0, x);
                Some(ys)
            }
        }
    }
}

impl<C: Crystal> Crystal for TensorPower<C> {
    type Elem = Vec<C::Elem>;

    fn rank(&self) -> usize {
        self.base.rank()
    }
    fn category(&self) -> Category {
        self.base.category()
    }
    fn weight(&self, b: &Self::Elem) -> Weight {
        Power {
            base: &self.base,
            m: self.m,
        }
        .weight(b)
    }
    fn raise(&self, i: Label, b: &Self::Elem) -> Option<Self::Elem> {
        Power {
            base: &self.base,
            m: self.m,
        }
        .apply(i, b, true)
    }
    fn lower(&self, i: Label, b: &Self::Elem) -> Option<Self::Elem> {
        Power {
            base: &self.base,
            m: self.m,
        }
        .apply(i, b, false)
    }
    fn render(&self, b: &Self::Elem) -> String {
        Power {
            base: &self.base,
            m: self.m,
        }
        .render(b)
    }
}

impl<C: Enumerable> Enumerable for TensorPower<C> {
    fn elements(&self) -> Vec<Self::Elem> {
        let base = self.base.elements();
        let mut out: Vec<Vec<C::Elem>> = vec![Vec::new()];
        for _ in 0..self.m {
            let mut next = Vec::with_capacity(out.len() * base.len());
            for w in &out {
                for x in &base {
                    let mut v = w.clone();
                    v.push(x.clone());
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }
}
