//! String lengths, the Weyl group action and the conjugated operators.

use super::{Category, Crystal, Label};
use crate::error::CrystalError;

/// Maximum number of consecutive applications before a model is declared runaway.
pub const STRING_CAP: usize = 1_000_000;

fn run_length<C: Crystal>(c: &C, i: Label, b: &C::Elem, up: bool) -> Result<usize, CrystalError> {
    let mut k = 0;
    let mut cur = b.clone();
    loop {
        let next = if up { c.raise(i, &cur) } else { c.lower(i, &cur) };
        match next {
            Some(x) => {
                k += 1;
                if k > STRING_CAP {
                    return Err(CrystalError::Runaway {
                        label: i.to_string(),
                        cap: STRING_CAP,
                        at: c.render(b),
                    });
                }
                cur = x;
            }
            None => return Ok(k),
        }
    }
}

/// `(ε_i(b), φ_i(b))`.
pub fn string_lengths<C: Crystal>(c: &C, i: Label, b: &C::Elem) -> Result<(usize, usize), CrystalError> {
    Ok((run_length(c, i, b, true)?, run_length(c, i, b, false)?))
}

pub fn epsilon<C: Crystal>(c: &C, i: Label, b: &C::Elem) -> usize {
    run_length(c, i, b, true).unwrap_or_else(|e| panic!("{e}"))
}

pub fn phi<C: Crystal>(c: &C, i: Label, b: &C::Elem) -> usize {
    run_length(c, i, b, false).unwrap_or_else(|e| panic!("{e}"))
}

fn iterate<C: Crystal>(c: &C, i: Label, b: &C::Elem, k: usize, up: bool) -> C::Elem {
    let mut cur = b.clone();
    for _ in 0..k {
        cur = if up { c.raise(i, &cur) } else { c.lower(i, &cur) }
            .unwrap_or_else(|| panic!("string through {} shorter than its length", c.render(b)));
    }
    cur
}

/// Reverses the `i`-string through `b`, for `i = 0` or `i` in `[n-1]`.
pub fn sigma<C: Crystal>(c: &C, i: Label, b: &C::Elem) -> C::Elem {
    let eps = epsilon(c, i, b);
    let ph = phi(c, i, b);
    if ph >= eps {
        iterate(c, i, b, ph - eps, false)
    } else {
        iterate(c, i, b, eps - ph, true)
    }
}

fn sigma_index<C: Crystal>(c: &C, i: usize, b: &C::Elem) -> C::Elem {
    if i == 0 {
        sigma(c, Label::Zero, b)
    } else {
        sigma(c, Label::Index(i), b)
    }
}

/// Applies `σ_{s_1} σ_{s_2} ⋯ σ_{s_k}` as a composition, so `σ_{s_k}` acts first.
/// Index 0 stands for `σ_0`.
pub fn sigma_compose<C: Crystal>(c: &C, seq: &[usize], b: &C::Elem) -> C::Elem {
    seq.iter().rev().fold(b.clone(), |x, &i| sigma_index(c, i, &x))
}

/// `σ_1 σ_2 ⋯ σ_{i-1}` written as an index list, with `σ_{i-1}` acting first.
fn ascending(lo: usize, hi: usize) -> Vec<usize> {
    (lo..hi).collect()
}

/// The factor sequence `(σ_1)(σ_2σ_1)⋯(σ_{n-1}⋯σ_1)`.
pub fn w0_word(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for top in 1..n {
        out.extend((1..=top).rev());
    }
    out
}

/// The factor sequence `(σ_0)(σ_1σ_0)⋯(σ_{n-1}⋯σ_0)`.
pub fn w0_plus_word(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for top in 0..n {
        out.extend((0..=top).rev());
    }
    out
}

pub fn sigma_w0<C: Crystal>(c: &C, b: &C::Elem) -> C::Elem {
    sigma_compose(c, &w0_word(c.rank()), b)
}

/// Inverse of [`sigma_w0`], composing the inverses of the factors in reverse order.
pub fn sigma_w0_inv<C: Crystal>(c: &C, b: &C::Elem) -> C::Elem {
    let mut seq = w0_word(c.rank());
    seq.reverse();
    sigma_compose(c, &seq, b)
}

pub fn sigma_w0_plus<C: Crystal>(c: &C, b: &C::Elem) -> C::Elem {
    sigma_compose(c, &w0_plus_word(c.rank()), b)
}

/// Whether `σ_w0` fails to be an involution at `b`.
pub fn w0_not_involutive_at<C: Crystal>(c: &C, b: &C::Elem) -> bool {
    sigma_w0(c, &sigma_w0(c, b)) != *b
}

fn bar_op<C: Crystal>(c: &C, i: usize, b: &C::Elem, up: bool) -> Option<C::Elem> {
    assert!(i >= 1 && i < c.rank().max(2), "bar index {i} out of range");
    if i == 1 {
        return if up {
            c.raise(Label::Bar, b)
        } else {
            c.lower(Label::Bar, b)
        };
    }
    let x = sigma_index(c, i - 1, b);
    let x = sigma_index(c, i, &x);
    let x = bar_op(c, i - 1, &x, up)?;
    let x = sigma_index(c, i, &x);
    Some(sigma_index(c, i - 1, &x))
}

/// `e_ī` for `i` in `[n-1]`.
pub fn e_bar<C: Crystal>(c: &C, i: usize, b: &C::Elem) -> Option<C::Elem> {
    bar_op(c, i, b, true)
}

/// `f_ī` for `i` in `[n-1]`.
pub fn f_bar<C: Crystal>(c: &C, i: usize, b: &C::Elem) -> Option<C::Elem> {
    bar_op(c, i, b, false)
}

/// `e_{ī'} = σ_w0 f_{\overline{n-i}} σ_w0^{-1}`.
pub fn e_bar_prime<C: Crystal>(c: &C, i: usize, b: &C::Elem) -> Option<C::Elem> {
    let n = c.rank();
    let x = sigma_w0_inv(c, b);
    let x = f_bar(c, n - i, &x)?;
    Some(sigma_w0(c, &x))
}

/// `f_{ī'} = σ_w0 e_{\overline{n-i}} σ_w0^{-1}`.
pub fn f_bar_prime<C: Crystal>(c: &C, i: usize, b: &C::Elem) -> Option<C::Elem> {
    let n = c.rank();
    let x = sigma_w0_inv(c, b);
    let x = e_bar(c, n - i, &x)?;
    Some(sigma_w0(c, &x))
}

fn zero_bracket<C: Crystal>(c: &C, i: usize, b: &C::Elem, up: bool) -> Option<C::Elem> {
    let inner = ascending(1, i);
    let x = sigma_compose(c, &inner, b);
    let x = if up {
        c.raise(Label::Zero, &x)
    } else {
        c.lower(Label::Zero, &x)
    }?;
    let mut outer = inner;
    outer.reverse();
    Some(sigma_compose(c, &outer, &x))
}

/// `e_0^{[i]} = σ_{i-1}⋯σ_1 e_0 σ_1⋯σ_{i-1}`.
pub fn e0_bracket<C: Crystal>(c: &C, i: usize, b: &C::Elem) -> Option<C::Elem> {
    zero_bracket(c, i, b, true)
}

pub fn f0_bracket<C: Crystal>(c: &C, i: usize, b: &C::Elem) -> Option<C::Elem> {
    zero_bracket(c, i, b, false)
}

pub fn is_highest<C: Crystal>(c: &C, b: &C::Elem, flavor: Category) -> bool {
    let n = c.rank();
    if (1..n).any(|i| c.raise(Label::Index(i), b).is_some()) {
        return false;
    }
    if flavor == Category::Gl {
        return true;
    }
    if (1..n).any(|i| e_bar(c, i, b).is_some()) {
        return false;
    }
    if flavor == Category::Q {
        return true;
    }
    (1..=n).all(|i| e0_bracket(c, i, b).is_none())
}

pub fn is_lowest<C: Crystal>(c: &C, b: &C::Elem, flavor: Category) -> bool {
    let n = c.rank();
    if (1..n).any(|i| c.lower(Label::Index(i), b).is_some()) {
        return false;
    }
    if flavor == Category::Gl {
        return true;
    }
    if (1..n).any(|i| f_bar_prime(c, i, b).is_some()) {
        return false;
    }
    if flavor == Category::Q {
        return true;
    }
    (1..=n).all(|i| f0_bracket(c, i, b).is_none())
}
