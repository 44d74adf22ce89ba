//! Verification suites. Each check reports `PASS|FAIL <id> <details>`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::alphabet::{Letter, StrictPartition, Word};
use crate::characters::{
    all_nonnegative, character, expand_in_schur_q, expansion_by_highest, format_expansion, inv_stanley, schur_p,
    schur_q,
};
use crate::crystal::axioms::{check_axioms, check_braids, check_zero_bar_corollary, nu0_and_wt11};
use crate::crystal::iso::isomorphic_erased;
use crate::crystal::{
    is_highest, is_lowest, materialize, sigma_w0, sigma_w0_plus, Category, Crystal, CrystalGraph, Enumerable, Label,
    StandardCrystal, Tensor, TensorPower,
};
use crate::error::ParseError;
use crate::factorization::{ock, Factorization, IncrCrystal};
use crate::insertion::{double_and_transpose, eg_insert, eg_insert_word};
use crate::involutions::{involution_shape, involutions_of, is_vexillary, primed_invol_words, Perm};
use crate::tableau::{dual_equiv, highest_tableau, lowest_hat_tableau, ShTabCrystal, ShiftedTableau};
use crate::words::WordCrystal;

/// One line of a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub ok: bool,
    pub details: String,
}

impl Check {
    pub fn new(id: impl Into<String>, ok: bool, details: impl Into<String>) -> Check {
        Check {
            id: id.into(),
            ok,
            details: details.into(),
        }
    }

    /// Passes when `failures` is empty; otherwise reports the first few.
    pub fn from_failures(id: impl Into<String>, failures: Vec<String>, summary: impl Into<String>) -> Check {
        if failures.is_empty() {
            Check::new(id, true, summary)
        } else {
            let shown: Vec<&str> = failures.iter().take(3).map(|s| s.as_str()).collect();
            Check::new(
                id,
                false,
                format!("{} failure(s): {}", failures.len(), shown.join("; ")),
            )
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}",
            if self.ok { "PASS" } else { "FAIL" },
            self.id,
            self.details
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    TensorAssoc,
    Braid,
    HighestWeight,
    InsertionCommute,
    Characters,
    Stanley,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Axioms,
        Suite::TensorAssoc,
        Suite::Braid,
        Suite::HighestWeight,
        Suite::InsertionCommute,
        Suite::Characters,
        Suite::Stanley,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::TensorAssoc => "tensor-assoc",
            Suite::Braid => "braid",
            Suite::HighestWeight => "highest-weight",
            Suite::InsertionCommute => "insertion-commute",
            Suite::Characters => "characters",
            Suite::Stanley => "stanley",
        }
    }
}

impl FromStr for Suite {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Suite, ParseError> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| ParseError::new(format!("unknown suite {s:?}")))
    }
}

/// Bounds for the suites.
#[derive(Clone, Debug)]
pub struct Params {
    /// Largest rank.
    pub n: usize,
    /// Largest word length.
    pub m: usize,
    /// Involutions are taken from `S_size`.
    pub size: usize,
    /// Shapes are all strict partitions inside this one.
    pub shape: StrictPartition,
}

impl Default for Params {
    fn default() -> Params {
        Params {
            n: 3,
            m: 3,
            size: 4,
            shape: StrictPartition::new(vec![3, 2, 1]).unwrap(),
        }
    }
}

pub fn run(suite: Suite, p: &Params) -> Vec<Check> {
    match suite {
        Suite::Axioms => axioms(p),
        Suite::TensorAssoc => tensor_assoc(p),
        Suite::Braid => braid(p),
        Suite::HighestWeight => highest_weight(p),
        Suite::InsertionCommute => insertion_commute(p),
        Suite::Characters => characters(p),
        Suite::Stanley => stanley(p),
    }
}

/// Axioms, the `0`/`1̄` corollary, and `ν_0` on every component.
pub fn model_failures<C: Enumerable + Sync>(c: &C) -> Vec<String>
where
    C::Elem: Send + Sync,
{
    let elems = c.elements();
    let mut out = check_axioms(c, &elems);
    out.extend(check_zero_bar_corollary(c, &elems));
    if c.category() == Category::QPlus && !elems.is_empty() {
        match materialize(c, &elems, usize::MAX) {
            Ok(g) => {
                for comp in g.split() {
                    if let Err(e) = nu0_and_wt11(c, &comp) {
                        out.push(format!("nu_0: {e}"));
                    }
                }
            }
            Err(e) => out.push(e.to_string()),
        }
    }
    out
}

fn strict_shapes(p: &Params, n: usize) -> Vec<StrictPartition> {
    p.shape.contained().into_iter().filter(|l| l.len() <= n).collect()
}

pub fn axioms(p: &Params) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=p.n {
        for cat in [Category::Gl, Category::Q, Category::QPlus] {
            let c = StandardCrystal::new(n, cat);
            out.push(Check::from_failures(
                format!("axioms/standard/{cat}/n={n}"),
                model_failures(&c),
                "ok",
            ));
        }
        for m in 0..=p.m {
            for (tag, c) in [
                ("words+", WordCrystal::plus(n, m)),
                ("words", WordCrystal::unprimed(n, m)),
            ] {
                let k = c.elements().len();
                out.push(Check::from_failures(
                    format!("axioms/{tag}/n={n}/m={m}"),
                    model_failures(&c),
                    format!("{k} elements"),
                ));
            }
        }
        let shapes = strict_shapes(p, n);
        let fails: Vec<String> = shapes
            .par_iter()
            .flat_map_iter(|l| {
                let mut f = model_failures(&ShTabCrystal::new(l.clone(), n));
                f.extend(model_failures(&ShTabCrystal::unprimed(l.clone(), n)));
                f.into_iter().map(move |s| format!("{l}: {s}"))
            })
            .collect();
        out.push(Check::from_failures(
            format!("axioms/shtab/n={n}"),
            fails,
            format!("{} shapes", shapes.len()),
        ));
        let mut skew = Vec::new();
        for outer in &shapes {
            for inner in outer.contained() {
                if &inner != outer {
                    skew.push((outer.clone(), inner));
                }
            }
        }
        let fails: Vec<String> = skew
            .par_iter()
            .flat_map_iter(|(o, i)| {
                model_failures(&ShTabCrystal::skew(o.clone(), i.clone(), n))
                    .into_iter()
                    .map(move |s| format!("{o}/{i}: {s}"))
            })
            .collect();
        out.push(Check::from_failures(
            format!("axioms/skew-shtab/n={n}"),
            fails,
            format!("{} skew shapes", skew.len()),
        ));
        let zs = involutions_of(p.size);
        let fails: Vec<String> = zs
            .par_iter()
            .flat_map_iter(|z| {
                let mut f = model_failures(&IncrCrystal::new(z.clone(), n));
                f.extend(model_failures(&IncrCrystal::unprimed(z.clone(), n)));
                f.into_iter().map(move |s| format!("{z}: {s}"))
            })
            .collect();
        out.push(Check::from_failures(
            format!("axioms/incr/n={n}/size={}", p.size),
            fails,
            format!("{} involutions", zs.len()),
        ))
    }
    out
}

/// Compares `(B ⊗ B) ⊗ B`, `B ⊗ (B ⊗ B)` and the tensor cube on every element and label.
pub fn tensor_assoc(p: &Params) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=p.n {
        for cat in [Category::Gl, Category::Q, Category::QPlus] {
            let b = StandardCrystal::new(n, cat);
            let left = Tensor::new(Tensor::new(b, b).unwrap(), b).unwrap();
            let right = Tensor::new(b, Tensor::new(b, b).unwrap()).unwrap();
            let cube = TensorPower::new(b, 3);
            let mut fails = Vec::new();
            for x in cube.elements() {
                let l = ((x[0], x[1]), x[2]);
                let r = (x[0], (x[1], x[2]));
                for i in cube.labels() {
                    for up in [true, false] {
                        let go = |v: Option<Vec<Letter>>| v;
                        let a = if up { left.raise(i, &l) } else { left.lower(i, &l) }.map(|((u, v), w)| vec![u, v, w]);
                        let bb =
                            if up { right.raise(i, &r) } else { right.lower(i, &r) }.map(|(u, (v, w))| vec![u, v, w]);
                        let c = go(if up { cube.raise(i, &x) } else { cube.lower(i, &x) });
                        if a != bb || a != c {
                            fails.push(format!("{} {}_{i}", cube.render(&x), if up { "e" } else { "f" }));
                        }
                    }
                }
                if left.weight(&l) != cube.weight(&x) {
                    fails.push(format!("weight at {}", cube.render(&x)));
                }
            }
            out.push(Check::from_failures(
                format!("tensor-assoc/{cat}/n={n}"),
                fails,
                format!("{} triples", (cube.elements().len())),
            ));
        }
    }
    out
}

pub fn braid(p: &Params) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=p.n {
        for m in 0..=p.m {
            let c = WordCrystal::plus(n, m);
            let elems = c.elements();
            let fails: Vec<String> = elems.par_chunks(256).flat_map_iter(|ch| check_braids(&c, ch)).collect();
            out.push(Check::from_failures(
                format!("braid/words+/n={n}/m={m}"),
                fails,
                format!("{} words", elems.len()),
            ));
        }
    }
    out
}

/// Checks for one `ShTab⁺_n(λ)`: connectivity, extremal elements, character, Weyl group action.
pub fn shtab_failures(lambda: &StrictPartition, n: usize) -> Vec<String> {
    let c = ShTabCrystal::new(lambda.clone(), n);
    let elems = c.elements();
    let mut f = Vec::new();
    if lambda.len() > n {
        if !elems.is_empty() {
            f.push(format!("expected empty, found {} tableaux", elems.len()));
        }
        return f;
    }
    let top = highest_tableau(lambda);
    let bottom = lowest_hat_tableau(lambda, n).expect("shape fits");
    match materialize(&c, std::slice::from_ref(&top), usize::MAX) {
        Ok(g) if g.len() == elems.len() => {}
        Ok(g) => f.push(format!(
            "component of T_highest has {} of {} elements",
            g.len(),
            elems.len()
        )),
        Err(e) => f.push(e.to_string()),
    }
    let highs: Vec<&ShiftedTableau> = elems.iter().filter(|t| is_highest(&c, t, Category::QPlus)).collect();
    let lows: Vec<&ShiftedTableau> = elems.iter().filter(|t| is_lowest(&c, t, Category::QPlus)).collect();
    if highs != vec![&top] {
        f.push(format!(
            "q+ highest {:?}",
            highs.iter().map(|t| t.to_string()).collect::<Vec<_>>()
        ));
    }
    if lows != vec![&bottom] {
        f.push(format!(
            "q+ lowest {:?}",
            lows.iter().map(|t| t.to_string()).collect::<Vec<_>>()
        ));
    }
    let ch = character(&c);
    if ch != schur_q(lambda, n) {
        f.push("ch != Q_lambda".into());
    }
    if ch != schur_p(lambda, n).scale(&(BigInt::one() << lambda.len())) {
        f.push("ch != 2^l P_lambda".into());
    }
    if sigma_w0_plus(&c, &top) != bottom || sigma_w0_plus(&c, &bottom) != top {
        f.push("sigma_w0+ does not exchange highest and lowest".into());
    }
    let qh: BTreeSet<ShiftedTableau> = elems
        .iter()
        .filter(|t| is_highest(&c, t, Category::Q))
        .cloned()
        .collect();
    let ql: BTreeSet<ShiftedTableau> = elems
        .iter()
        .filter(|t| is_lowest(&c, t, Category::Q))
        .cloned()
        .collect();
    let img: BTreeSet<ShiftedTableau> = qh.iter().map(|t| sigma_w0(&c, t)).collect();
    let back: BTreeSet<ShiftedTableau> = ql.iter().map(|t| sigma_w0(&c, t)).collect();
    if img != ql || back != qh {
        f.push(format!(
            "sigma_w0 does not exchange {} q-highest and {} q-lowest",
            qh.len(),
            ql.len()
        ));
    }
    f
}

pub fn highest_weight(p: &Params) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=p.n {
        let shapes = p.shape.contained();
        let fails: Vec<String> = shapes
            .par_iter()
            .flat_map_iter(|l| shtab_failures(l, n).into_iter().map(move |s| format!("({l}): {s}")))
            .collect();
        out.push(Check::from_failures(
            format!("highest-weight/shtab/n={n}"),
            fails,
            format!("{} shapes", shapes.len()),
        ));
    }
    out
}

fn op(c: &IncrCrystal, i: Label, up: bool, a: &Factorization) -> Option<Factorization> {
    if up {
        c.raise(i, a)
    } else {
        c.lower(i, a)
    }
}

/// Commutation of `Q_EG` with the operators, fibers versus components, and the insertion lemma.
pub fn incr_failures(z: &Perm, n: usize) -> Vec<String> {
    let c = IncrCrystal::new(z.clone(), n);
    let elems = c.elements();
    let mut f = Vec::new();
    let mut ins = BTreeMap::new();
    for a in &elems {
        match eg_insert(a) {
            Ok(r) => {
                ins.insert(a.clone(), r);
            }
            Err(e) => f.push(format!("{a}: {e}")),
        }
    }
    if !f.is_empty() {
        return f;
    }
    for a in &elems {
        let r = &ins[a];
        let t = ShTabCrystal::new(r.q.shape(), n);
        for i in c.labels() {
            for up in [true, false] {
                let lhs = op(&c, i, up, a).map(|b| ins[&b].q.clone());
                let rhs = if up { t.raise(i, &r.q) } else { t.lower(i, &r.q) };
                if lhs != rhs {
                    f.push(format!("{}_{i} at {a}", if up { "e" } else { "f" }));
                }
                if let Some(b) = op(&c, i, up, a) {
                    if ins[&b].p != r.p {
                        f.push(format!("P changes along {i} at {a}"));
                    }
                }
            }
        }
        if r.q.weight(n) != a.weight() {
            f.push(format!("wt(Q) != wt(a) at {a}"));
        }
        let u = a.unprime();
        match eg_insert(&u) {
            Ok(ru) => {
                if ru.p != r.p.map_entries(|l| l.remove_prime()) || ru.q != r.q.unprime_diag() {
                    f.push(format!("unprime rule at {a}"));
                }
            }
            Err(e) => f.push(format!("{u}: {e}")),
        }
        match eg_insert_word(&a.concat()) {
            Ok(rw) => {
                if rw.p != r.p || rw.q != r.q.standardize() {
                    f.push(format!("concat rule at {a}"));
                }
            }
            Err(e) => f.push(format!("{}: {e}", a.concat())),
        }
    }
    if !f.is_empty() {
        return f;
    }
    let mut fibers: BTreeMap<&ShiftedTableau, Vec<&Factorization>> = BTreeMap::new();
    for (a, r) in &ins {
        fibers.entry(&r.p).or_default().push(a);
    }
    let g: CrystalGraph<Factorization> = match materialize(&c, &elems, usize::MAX) {
        Ok(g) => g,
        Err(e) => return vec![e.to_string()],
    };
    let comps = g.split();
    if comps.len() != fibers.len() {
        f.push(format!("{} components but {} P-fibers", comps.len(), fibers.len()));
    }
    for comp in &comps {
        let ps: BTreeSet<&ShiftedTableau> = comp.vertices.iter().map(|a| &ins[a].p).collect();
        if ps.len() != 1 {
            f.push(format!("component of {} meets {} P-fibers", comp.vertices[0], ps.len()));
            continue;
        }
        let p = *ps.iter().next().unwrap();
        let qs: BTreeSet<&ShiftedTableau> = comp.vertices.iter().map(|a| &ins[a].q).collect();
        let target = ShTabCrystal::new(p.shape(), n).elements().len();
        if fibers[p].len() != comp.len() || qs.len() != comp.len() || target != comp.len() {
            f.push(format!(
                "fiber of {p}: {} elements, {} Q values, |ShTab+| = {target}",
                comp.len(),
                qs.len()
            ));
        }
        let t = ShTabCrystal::new(p.shape(), n);
        match materialize(&t, &[highest_tableau(&p.shape())], usize::MAX) {
            Ok(tg) if isomorphic_erased(comp, &tg) => {}
            _ => f.push(format!("fiber of {p} is not isomorphic to ShTab+_{n}({})", p.shape())),
        }
    }
    for w in primed_invol_words(z) {
        let Ok(rw) = eg_insert_word(&w) else { continue };
        if w.descents() != crate::tableau::descents(&rw.q) {
            f.push(format!("Des mismatch at {w}"));
        }
        for i in -1..w.len() as i64 - 1 {
            let v = ock(&w, i);
            match eg_insert_word(&v) {
                Ok(rv) if rv.p == rw.p && rv.q == dual_equiv(&rw.q, i) => {}
                _ => f.push(format!("ock_{i} at {w}")),
            }
        }
    }
    f
}

/// `W⁺_n(m) → Incr⁺_n(s_2 s_4 ⋯ s_{2m})`, `w ↦ double(w^⊤)`, is an isomorphism.
pub fn word_factor_failures(n: usize, m: usize) -> Vec<String> {
    let words = WordCrystal::plus(n, m);
    let z = (1..=m as i64).fold(Perm::identity(), |acc, k| acc.compose(&Perm::s(2 * k)));
    let incr = IncrCrystal::new(z, n);
    let elems = words.elements();
    let mut f = Vec::new();
    let image: BTreeSet<Factorization> = elems.iter().map(|w| double_and_transpose(w, n)).collect();
    let target: BTreeSet<Factorization> = incr.elements().into_iter().collect();
    if image != target || image.len() != elems.len() {
        f.push(format!(
            "image has {} of {} elements, target {}",
            image.len(),
            elems.len(),
            target.len()
        ));
    }
    for w in &elems {
        let a = double_and_transpose(w, n);
        for i in words.labels() {
            for up in [true, false] {
                let lhs = if up { words.raise(i, w) } else { words.lower(i, w) }.map(|v| double_and_transpose(&v, n));
                let rhs = op(&incr, i, up, &a);
                if lhs != rhs {
                    f.push(format!("{}_{i} at {w}", if up { "e" } else { "f" }));
                }
            }
        }
    }
    f
}

pub fn insertion_commute(p: &Params) -> Vec<Check> {
    let mut out = Vec::new();
    let zs = involutions_of(p.size);
    for n in 1..=p.n {
        let fails: Vec<String> = zs
            .par_iter()
            .flat_map_iter(|z| incr_failures(z, n).into_iter().map(move |s| format!("{z}: {s}")))
            .collect();
        out.push(Check::from_failures(
            format!("insertion-commute/incr/n={n}/size={}", p.size),
            fails,
            format!("{} involutions", zs.len()),
        ));
    }
    for n in 1..=p.n {
        for m in 0..=p.m {
            out.push(Check::from_failures(
                format!("insertion-commute/word-factor/n={n}/m={m}"),
                word_factor_failures(n, m),
                "isomorphism",
            ));
        }
    }
    out
}

/// Sym_P/Sym_Q membership and Schur Q positivity for the character of a model.
pub fn character_failures<C: Enumerable>(c: &C) -> Vec<String> {
    let ch = character(c);
    let mut f = Vec::new();
    match c.category() {
        Category::QPlus => {
            if !ch.in_sym_q() {
                f.push("character not in Sym_Q".into());
            }
            match expand_in_schur_q(&ch) {
                Ok(exp) => {
                    if !all_nonnegative(&exp) {
                        f.push("negative Schur Q coefficient".into());
                    }
                    let count: BigInt = exp
                        .iter()
                        .map(|(l, k)| k * BigInt::from(ShTabCrystal::new(l.clone(), c.rank()).elements().len()))
                        .sum();
                    if count != ch.at_ones() {
                        f.push(format!("sum of coefficients times sizes {count} != {}", ch.at_ones()));
                    }
                }
                Err(e) => f.push(e.to_string()),
            }
        }
        Category::Q => {
            if !ch.in_sym_p() {
                f.push("character not in Sym_P".into());
            }
        }
        Category::Gl => {
            if !ch.in_sym() {
                f.push("character not symmetric".into());
            }
        }
    }
    f
}

pub fn characters(p: &Params) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=p.n {
        for m in 0..=p.m {
            let mut f = character_failures(&WordCrystal::plus(n, m));
            f.extend(character_failures(&WordCrystal::unprimed(n, m)));
            out.push(Check::from_failures(format!("characters/words/n={n}/m={m}"), f, "ok"));
        }
        let shapes = strict_shapes(p, n);
        let mut f = Vec::new();
        for l in &shapes {
            let q = schur_q(l, n);
            if q != schur_p(l, n).scale(&(BigInt::one() << l.len())) {
                f.push(format!("Q != 2^l P for {l}"));
            }
            f.extend(character_failures(&ShTabCrystal::unprimed(l.clone(), n)));
            match expand_in_schur_q(&q) {
                Ok(e) if e == BTreeMap::from([(l.clone(), BigInt::one())]) => {}
                _ => f.push(format!("expansion of Q_{l}")),
            }
        }
        out.push(Check::from_failures(
            format!("characters/schur/n={n}"),
            f,
            format!("{} shapes", shapes.len()),
        ));
        let zs = involutions_of(p.size);
        let f: Vec<String> = zs
            .par_iter()
            .flat_map_iter(|z| {
                let mut f = character_failures(&IncrCrystal::new(z.clone(), n));
                f.extend(character_failures(&IncrCrystal::unprimed(z.clone(), n)));
                f.into_iter().map(move |s| format!("{z}: {s}"))
            })
            .collect();
        out.push(Check::from_failures(
            format!("characters/incr/n={n}/size={}", p.size),
            f,
            format!("{} involutions", zs.len()),
        ));
    }
    out
}

/// Expansions of `ĝ_z` by peeling and by highest weight counting, with `n = ℓ̂(z)`.
pub fn stanley_check(z: &Perm) -> Check {
    let id = format!("stanley/{z}");
    let n = z.hat_length().max(1);
    let by_peeling = match expand_in_schur_q(&inv_stanley(z, n)) {
        Ok(e) => e,
        Err(e) => return Check::new(id, false, e.to_string()),
    };
    let by_highest = match expansion_by_highest(z, n) {
        Ok(e) => e,
        Err(e) => return Check::new(id, false, e.to_string()),
    };
    let mut f = Vec::new();
    if by_peeling != by_highest {
        f.push(format!("peeling {by_peeling:?} != highest count {by_highest:?}"));
    }
    if !all_nonnegative(&by_peeling) {
        f.push("negative coefficient".into());
    }
    if is_vexillary(z) && by_peeling != BTreeMap::from([(involution_shape(z), BigInt::one())]) {
        f.push(format!("vexillary but expansion is {by_peeling:?}"));
    }
    let summary = format!("n={n} {}", format_expansion(&by_peeling).replace('\n', "; "));
    Check::from_failures(id, f, summary)
}

pub fn stanley(p: &Params) -> Vec<Check> {
    let zs = involutions_of(p.size);
    zs.par_iter().map(stanley_check).collect()
}

/// Shorthand used by the CLI and tests.
pub fn word_of(s: &str) -> Result<Word, ParseError> {
    s.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Params {
        Params {
            n: 2,
            m: 2,
            size: 3,
            shape: StrictPartition::new(vec![2, 1]).unwrap(),
        }
    }

    #[test]
    fn suites_pass_small() {
        for s in Suite::ALL {
            for c in run(s, &small()) {
                assert!(c.ok, "{c}");
            }
        }
    }

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!(Check::new("x", false, "y").to_string(), "FAIL x y");
    }
}
