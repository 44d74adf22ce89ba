//! Browser bindings for a handful of qcrystal operations.
//!
//! Every export takes and returns strings so the page needs no glue beyond
//! the generated module. The same functions are called directly in native tests.

use wasm_bindgen::prelude::wasm_bindgen;

use qcrystal::alphabet::StrictPartition;
use qcrystal::characters::{character, expand_in_schur_q, format_expansion};
use qcrystal::crystal::export::{to_dot, to_text};
use qcrystal::crystal::{materialize, Enumerable};
use qcrystal::factorization::{Factorization, IncrCrystal};
use qcrystal::insertion::eg_insert;
use qcrystal::involutions::Perm;
use qcrystal::tableau::ShTabCrystal;

/// Keeps a single call well under a second in the browser.
pub const MAX_RANK: usize = 6;
pub const MAX_VERTICES: usize = 20_000;
pub const MAX_BOXES: usize = 6;
pub const MAX_POINTS: i64 = 6;

fn rank(n: u32) -> Result<usize, String> {
    let n = n as usize;
    if n == 0 || n > MAX_RANK {
        return Err(format!("n must lie in [1, {MAX_RANK}]"));
    }
    Ok(n)
}

/// The crystal of shifted tableaux of the given shape, as DOT (`dot = true`) or plain text.
#[wasm_bindgen]
pub fn shtab_graph(shape: &str, n: u32, dot: bool) -> Result<String, String> {
    let n = rank(n)?;
    let lambda: StrictPartition = shape.parse().map_err(|e| format!("{e}"))?;
    if lambda.size() > MAX_BOXES {
        return Err(format!("at most {MAX_BOXES} boxes"));
    }
    let c = ShTabCrystal::new(lambda.clone(), n);
    let elems = c.elements();
    if elems.is_empty() {
        return Err(format!("no tableaux: ({lambda}) has more than {n} rows"));
    }
    let g = materialize(&c, &elems, MAX_VERTICES).map_err(|e| e.to_string())?;
    Ok(if dot { to_dot(&g, "shtab") } else { to_text(&g) })
}

/// Insertion and recording tableaux of an increasing factorization such as `4 | 1'35 | | 2`.
#[wasm_bindgen]
pub fn insert(factorization: &str) -> Result<String, String> {
    let a: Factorization = factorization.parse().map_err(|e| format!("{e}"))?;
    let r = eg_insert(&a).map_err(|e| e.to_string())?;
    Ok(format!(
        "P: {}\nQ: {}\n\nP\n{}\nQ\n{}",
        r.p,
        r.q,
        r.p.diagram(),
        r.q.diagram()
    ))
}

/// Schur Q expansion of the character of the factorization crystal of `z`.
#[wasm_bindgen]
pub fn expand(z: &str, n: u32) -> Result<String, String> {
    let n = rank(n)?;
    let z: Perm = z.parse().map_err(|e| format!("{e}"))?;
    if !z.is_involution() {
        return Err(format!("{z} is not an involution"));
    }
    if z.window().is_some_and(|(lo, hi)| lo < 1 || hi > MAX_POINTS) {
        return Err(format!("keep the involution inside S_{MAX_POINTS}"));
    }
    let c = IncrCrystal::new(z, n);
    if !c.is_nonempty() {
        return Err(format!("the crystal is empty for n = {n}"));
    }
    let e = expand_in_schur_q(&character(&c)).map_err(|e| e.to_string())?;
    Ok(format_expansion(&e))
}
