//! Acceptance run: one PASS/FAIL line per criterion, with its time bound.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use qcrystal::alphabet::{word, Letter, StrictPartition, Word};
use qcrystal::characters::{character, expansion_by_highest, inv_stanley};
use qcrystal::crystal::axioms::check_braids;
use qcrystal::crystal::iso::isomorphic;
use qcrystal::crystal::{
    is_highest, is_lowest, materialize, sigma_w0, sigma_w0_plus, Category, Crystal, Enumerable, Label, StandardCrystal,
    Tensor, TensorPower,
};
use qcrystal::factorization::{ock, Factorization, IncrCrystal};
use qcrystal::insertion::{eg_insert, eg_insert_word};
use qcrystal::involutions::{involution_shape, involutions_of, is_vexillary, Perm};
use qcrystal::tableau::{descents, dual_equiv, highest_tableau, lowest_hat_tableau, ShTabCrystal, ShiftedTableau};
use qcrystal::verify::{incr_failures, model_failures, shtab_failures, stanley_check, word_factor_failures};
use qcrystal::words::WordCrystal;

const SUB_SECOND: Duration = Duration::from_secs(1);
const TWO_MIN: Duration = Duration::from_secs(120);
const FIVE_MIN: Duration = Duration::from_secs(300);
const ONE_MIN: Duration = Duration::from_secs(60);

type Edge = (Vec<Letter>, Vec<Letter>, Label);

fn lab(s: &str) -> Label {
    s.parse().unwrap()
}

fn edges_of(table: &[(&str, &str, &str)]) -> BTreeSet<Edge> {
    table.iter().map(|&(s, l, d)| (word(s).0, word(d).0, lab(l))).collect()
}

/// Edges of a graph over tensor powers, as letter vectors.
fn graph_edges<C: Crystal<Elem = Vec<Letter>>>(
    c: &C,
    seeds: &[Vec<Letter>],
) -> (BTreeSet<Vec<Letter>>, BTreeSet<Edge>) {
    let g = materialize(c, seeds, usize::MAX).unwrap();
    let verts = g.vertices.iter().cloned().collect();
    let edges = g
        .edges
        .iter()
        .map(|&(s, d, l)| (g.vertices[s].clone(), g.vertices[d].clone(), l))
        .collect();
    (verts, edges)
}

/// Forgets the `0` operators, viewing a q⁺-crystal as a q-crystal.
struct AsQ<C>(C);

impl<C: Crystal> Crystal for AsQ<C> {
    type Elem = C::Elem;
    fn rank(&self) -> usize {
        self.0.rank()
    }
    fn category(&self) -> Category {
        Category::Q
    }
    fn weight(&self, b: &C::Elem) -> Vec<i64> {
        self.0.weight(b)
    }
    fn raise(&self, i: Label, b: &C::Elem) -> Option<C::Elem> {
        self.0.raise(i, b)
    }
    fn lower(&self, i: Label, b: &C::Elem) -> Option<C::Elem> {
        self.0.lower(i, b)
    }
    fn render(&self, b: &C::Elem) -> String {
        self.0.render(b)
    }
}

fn c1() -> Vec<String> {
    let mut f = Vec::new();
    for n in 1..=4usize {
        let c = StandardCrystal::plus(n);
        let elems: BTreeSet<Letter> = c.elements().into_iter().collect();
        let expected: BTreeSet<Letter> = (1..=n as i64)
            .flat_map(|k| [Letter::primed(k), Letter::unprimed(k)])
            .collect();
        if elems != expected {
            f.push(format!("n={n}: vertex set {elems:?}"));
        }
        let mut want = BTreeSet::from([(Letter::unprimed(1), Letter::primed(1), Label::Zero)]);
        for k in 1..n as i64 {
            want.insert((Letter::unprimed(k), Letter::unprimed(k + 1), Label::Index(k as usize)));
            want.insert((Letter::primed(k), Letter::primed(k + 1), Label::Index(k as usize)));
        }
        if n >= 2 {
            want.insert((Letter::unprimed(1), Letter::unprimed(2), Label::Bar));
            want.insert((Letter::primed(1), Letter::primed(2), Label::Bar));
        }
        let g = materialize(&c, &c.elements(), usize::MAX).unwrap();
        let got: BTreeSet<(Letter, Letter, Label)> = g
            .edges
            .iter()
            .map(|&(s, d, l)| (g.vertices[s], g.vertices[d], l))
            .collect();
        if got != want {
            f.push(format!("n={n}: edges differ"));
        }
        for b in &elems {
            let mut w = vec![0; n];
            w[b.ceil() as usize - 1] = 1;
            if c.weight(b) != w {
                f.push(format!("n={n}: weight of {b}"));
            }
        }
        f.extend(model_failures(&c));
    }
    f
}

fn c2() -> Vec<String> {
    let b = StandardCrystal::plus(2);
    let c = TensorPower::new(b, 2);
    let want = edges_of(&[
        ("12", "1", "22"),
        ("12", "bar1", "22"),
        ("12", "0", "1'2"),
        ("11", "1", "12"),
        ("11", "0", "1'1"),
        ("11", "bar1", "21"),
        ("21", "0", "21'"),
        ("2'1", "0", "2'1'"),
        ("11'", "0", "1'1'"),
        ("11'", "1", "12'"),
        ("11'", "bar1", "2'1"),
        ("12'", "0", "1'2'"),
        ("12'", "1", "22'"),
        ("12'", "bar1", "22'"),
        ("1'2", "1", "2'2"),
        ("1'2", "bar1", "2'2"),
        ("1'2'", "1", "2'2'"),
        ("1'2'", "bar1", "2'2'"),
        ("1'1'", "1", "1'2'"),
        ("1'1'", "bar1", "2'1'"),
        ("1'1", "1", "1'2"),
        ("1'1", "bar1", "21'"),
    ]);
    let mut f = Vec::new();
    let elems = c.elements();
    if elems.len() != 16 {
        f.push(format!("{} vertices", elems.len()));
    }
    let (_, got) = graph_edges(&c, &elems);
    if got != want {
        f.push(format!("edge set differs: {} drawn, {} built", want.len(), got.len()));
    }
    let g = materialize(&c, &elems, usize::MAX).unwrap();
    let comps = g.split();
    if comps.len() != 2 || !isomorphic(&comps[0], &comps[1]) {
        f.push(format!("{} components", comps.len()));
    }
    let highs: BTreeSet<Word> = elems
        .iter()
        .filter(|x| is_highest(&c, x, Category::QPlus))
        .map(|x| Word(x.clone()))
        .collect();
    let lows: BTreeSet<Word> = elems
        .iter()
        .filter(|x| is_lowest(&c, x, Category::QPlus))
        .map(|x| Word(x.clone()))
        .collect();
    if highs != BTreeSet::from([word("11"), word("11'")]) {
        f.push(format!("highest {highs:?}"));
    }
    if lows != BTreeSet::from([word("2'2"), word("2'2'")]) {
        f.push(format!("lowest {lows:?}"));
    }
    f.extend(model_failures(&c));
    f.extend(model_failures(&Tensor::new(b, b).unwrap()));
    f
}

fn c3() -> Vec<String> {
    let c = TensorPower::new(StandardCrystal::plus(2), 3);
    let seed = word("1'21").0;
    let (verts, got) = graph_edges(&c, std::slice::from_ref(&seed));
    let mut f = Vec::new();
    let want_v: BTreeSet<Vec<Letter>> = ["121", "221", "1'21", "121'", "221'", "2'21", "1'21'", "2'21'"]
        .iter()
        .map(|s| word(s).0)
        .collect();
    if verts != want_v {
        f.push(format!("{} vertices", verts.len()));
    }
    let want = edges_of(&[
        ("121", "bar1", "221"),
        ("121", "1", "221"),
        ("121", "0", "1'21"),
        ("2'21", "0", "2'21'"),
        ("121'", "0", "1'21'"),
        ("121'", "bar1", "2'21"),
        ("121'", "1", "221'"),
        ("1'21", "1", "2'21"),
        ("1'21", "bar1", "221'"),
        ("221", "0", "221'"),
        ("1'21'", "bar1", "2'21'"),
        ("1'21'", "1", "2'21'"),
    ]);
    if got != want {
        f.push(format!("edge set differs: {} drawn, {} built", want.len(), got.len()));
    }
    let q = AsQ(&c);
    let (sub, _) = graph_edges(&q, &[seed]);
    let want_sub: BTreeSet<Vec<Letter>> = ["1'21", "121'", "221'", "2'21"].iter().map(|s| word(s).0).collect();
    if sub != want_sub {
        f.push(format!("q_2-subcomponent has {} vertices", sub.len()));
    }
    let highs = sub.iter().filter(|x| is_highest(&q, x, Category::Q)).count();
    if highs != 2 {
        f.push(format!("{highs} q_2-highest elements"));
    }
    f.extend(model_failures(&c));
    f
}

fn c4_shapes() -> Vec<StrictPartition> {
    common::sp("4,3,2,1").contained()
}

fn c4() -> Vec<String> {
    let jobs: Vec<(StrictPartition, usize)> = c4_shapes()
        .into_iter()
        .flat_map(|l| (1..=4).map(move |n| (l.clone(), n)))
        .collect();
    jobs.par_iter()
        .flat_map_iter(|(l, n)| {
            let c = ShTabCrystal::new(l.clone(), *n);
            let mut f = shtab_failures(l, *n);
            if character(&c) != common::pfaffian_q(l, *n) {
                f.push("ch != Pfaffian Q_lambda".into());
            }
            f.extend(model_failures(&c));
            f.into_iter().map(move |s| format!("({l}) n={n}: {s}"))
        })
        .collect()
}

fn c5() -> Vec<String> {
    let mut f = Vec::new();
    for n in 1..=3 {
        for m in 0..=5 {
            let c = WordCrystal::plus(n, m);
            let elems = c.elements();
            f.extend(
                elems
                    .par_chunks(256)
                    .flat_map_iter(|ch| check_braids(&c, ch))
                    .collect::<Vec<_>>(),
            );
            f.extend(model_failures(&c));
        }
    }
    f
}

fn c6() -> Vec<String> {
    let jobs: Vec<(Perm, usize)> = involutions_of(5)
        .into_iter()
        .flat_map(|z| (1..=3).map(move |n| (z.clone(), n)))
        .collect();
    jobs.par_iter()
        .flat_map_iter(|(z, n)| {
            let mut f = incr_failures(z, *n);
            f.extend(model_failures(&IncrCrystal::new(z.clone(), *n)));
            f.into_iter().map(move |s| format!("{z} n={n}: {s}"))
        })
        .collect()
}

fn c7() -> Vec<String> {
    let mut f = Vec::new();
    for n in 1..=3 {
        for m in 0..=4 {
            f.extend(
                word_factor_failures(n, m)
                    .into_iter()
                    .map(|s| format!("n={n} m={m}: {s}")),
            );
            let z = (1..=m as i64).fold(Perm::identity(), |acc, k| acc.compose(&Perm::s(2 * k)));
            f.extend(model_failures(&IncrCrystal::new(z, n)));
        }
    }
    f
}

fn tab(s: &str) -> ShiftedTableau {
    s.parse().unwrap()
}

fn c8() -> Vec<String> {
    let mut f = Vec::new();
    let mut expect = |ok: bool, what: &str| {
        if !ok {
            f.push(what.to_string());
        }
    };
    let a: Factorization = "4 | 1'35 | | 4' | | 2".parse().unwrap();
    let r = eg_insert(&a).unwrap();
    expect(r.p == tab("1 2 4 5 / 3 5'"), "P_EG of a");
    expect(r.q == tab("1 2' 2 6' / 2' 4"), "Q_EG of a");
    expect(a.weight() == vec![1, 3, 0, 1, 0, 1], "wt(a)");
    let u = eg_insert(&a.unprime()).unwrap();
    expect(u.p == tab("1 2 4 5 / 3 5"), "P_EG of unprimed a");
    expect(u.q == tab("1 2' 2 6' / 2 4"), "Q_EG of unprimed a");

    let w = word("41'354'2");
    expect(a.concat() == w, "concatenation of a");
    let rw = eg_insert_word(&w).unwrap();
    expect(rw.p == r.p, "P_EG of w");
    expect(rw.q == tab("1 2' 4 6' / 3' 5"), "Q_EG of w");
    expect(w.descents() == vec![1, 4, 5], "Des(w)");
    expect(descents(&rw.q) == vec![1, 4, 5], "Des(Q_EG(w))");

    for (i, v, d) in [(0, "14'354'2", "1 2 4 6' / 3' 5"), (1, "1'4354'2", "1' 2 4 6' / 3 5")] {
        expect(ock(&w, i) == word(v), &format!("ock_{i}(w)"));
        let rv = eg_insert_word(&word(v)).unwrap();
        expect(rv.p == rw.p, &format!("P_EG(ock_{i} w)"));
        expect(rv.q == tab(d), &format!("Q_EG(ock_{i} w)"));
        expect(dual_equiv(&rw.q, i) == tab(d), &format!("d_{i}(Q_EG(w))"));
    }
    let z: Perm = "(1,3)(2,6)(4,5)".parse().unwrap();
    let c = IncrCrystal::new(z, 6);
    expect(c.contains(&a), "a in Incr+_6((1,3)(2,6)(4,5))");
    f
}

fn c9() -> Vec<String> {
    let zs = involutions_of(5);
    let mut f: Vec<String> = zs
        .par_iter()
        .flat_map_iter(|z| {
            let mut f = Vec::new();
            let ch = stanley_check(z);
            if !ch.ok {
                f.push(ch.to_string());
            }
            if is_vexillary(z) != common::brute_vexillary(z, 5) {
                f.push(format!("{z}: vexillary test disagrees with 2143 scan"));
            }
            let n = z.hat_length().max(1);
            let c = IncrCrystal::new(z.clone(), n);
            if character(&c) != inv_stanley(z, n) {
                f.push(format!("{z}: character differs"));
            }
            f.extend(model_failures(&c).into_iter().map(|s| format!("{z}: {s}")));
            f
        })
        .collect();
    let z: Perm = "(1,5)(2,3)".parse().unwrap();
    match expansion_by_highest(&z, 5) {
        Ok(e) if e == BTreeMap::from([(common::sp("4,1"), BigInt::one())]) => {}
        other => f.push(format!("(1,5)(2,3): {other:?}")),
    }
    if involution_shape(&z) != common::sp("4,1") {
        f.push("mu((1,5)(2,3))".into());
    }
    f
}

fn c10() -> Vec<String> {
    let mut f = Vec::new();
    for l in c4_shapes() {
        for n in l.len().max(1)..=4 {
            let c = ShTabCrystal::new(l.clone(), n);
            let top = highest_tableau(&l);
            let bottom = lowest_hat_tableau(&l, n).unwrap();
            if sigma_w0_plus(&c, &top) != bottom || sigma_w0_plus(&c, &bottom) != top {
                f.push(format!("({l}) n={n}: sigma_w0+"));
            }
            let elems = c.elements();
            let hi: BTreeSet<_> = elems
                .iter()
                .filter(|t| is_highest(&c, t, Category::Q))
                .cloned()
                .collect();
            let lo: BTreeSet<_> = elems
                .iter()
                .filter(|t| is_lowest(&c, t, Category::Q))
                .cloned()
                .collect();
            let up: BTreeSet<_> = hi.iter().map(|t| sigma_w0(&c, t)).collect();
            let down: BTreeSet<_> = lo.iter().map(|t| sigma_w0(&c, t)).collect();
            if up != lo || down != hi {
                f.push(format!("({l}) n={n}: sigma_w0"));
            }
        }
    }
    f
}

/// Runs every crystal family of criteria 1 to 9 through the axiom checks once more,
/// including the unprimed variants built alongside them.
fn c11() -> Vec<String> {
    let mut f = Vec::new();
    for n in 1..=4 {
        for cat in [Category::Gl, Category::Q, Category::QPlus] {
            f.extend(model_failures(&StandardCrystal::new(n, cat)));
        }
    }
    for n in 1..=3 {
        for m in 0..=5 {
            f.extend(model_failures(&WordCrystal::unprimed(n, m)));
        }
    }
    let shapes = c4_shapes();
    f.extend(
        shapes
            .par_iter()
            .flat_map_iter(|l| {
                (1..=4)
                    .flat_map(|n| model_failures(&ShTabCrystal::unprimed(l.clone(), n)))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>(),
    );
    f.extend(
        involutions_of(5)
            .par_iter()
            .flat_map_iter(|z| {
                (1..=3)
                    .flat_map(|n| model_failures(&IncrCrystal::unprimed(z.clone(), n)))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>(),
    );
    f
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Vec<String>, Duration); 11] = [
        ("C1 standard crystals B+_n, n<=4", c1, SUB_SECOND),
        ("C2 B+_2 (x) B+_2", c2, SUB_SECOND),
        ("C3 component of 1'21", c3, SUB_SECOND),
        ("C4 ShTab+_n(lambda), lambda in (4,3,2,1), n<=4", c4, TWO_MIN),
        ("C5 braid relations on W+_n(m), n<=3, m<=5", c5, TWO_MIN),
        ("C6 Q_EG morphism on Incr+_n(z), z in I_5, n<=3", c6, FIVE_MIN),
        ("C7 W+_n(m) = Incr+_n(s_2...s_2m), n<=3, m<=4", c7, ONE_MIN),
        ("C8 insertion example", c8, SUB_SECOND),
        ("C9 Schur Q expansions of I_5", c9, FIVE_MIN),
        ("C10 Weyl group exchanges extremal elements", c10, TWO_MIN),
        ("C11 axiom regression", c11, FIVE_MIN),
    ];
    let mut ok = true;
    for (name, run, bound) in criteria {
        let start = Instant::now();
        let failures = run();
        let took = start.elapsed();
        let pass = failures.is_empty() && took <= bound;
        ok &= pass;
        println!(
            "{} {name} ({:.3}s, bound {}s){}",
            if pass { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            bound.as_secs(),
            if failures.is_empty() {
                String::new()
            } else {
                format!(": {}", failures[..failures.len().min(3)].join("; "))
            }
        );
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
