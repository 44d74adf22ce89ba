//! Axiom checks, braid relations, and the grading `ν_0`.

use std::collections::VecDeque;

use super::graph::CrystalGraph;
use super::{epsilon, is_lowest, phi, sigma, Category, Crystal, Label};
use crate::error::CrystalError;

const MAX_REPORTS: usize = 25;

struct Report {
    items: Vec<String>,
    total: usize,
}

impl Report {
    fn new() -> Report {
        Report {
            items: Vec::new(),
            total: 0,
        }
    }

    fn fail(&mut self, msg: impl FnOnce() -> String) {
        self.total += 1;
        if self.items.len() < MAX_REPORTS {
            self.items.push(msg());
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.fail(msg);
        }
    }

    fn finish(mut self) -> Vec<String> {
        if self.total > self.items.len() {
            self.items.push(format!("... {} violations in total", self.total));
        }
        self.items
    }
}

fn diff(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn simple_root(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i - 1] = 1;
    v[i] = -1;
    v
}

/// Checks that `e` and `f` for `label` are mutually inverse on `elems`.
fn inverse_pair<C: Crystal>(c: &C, label: Label, b: &C::Elem, r: &mut Report) {
    if let Some(x) = c.raise(label, b) {
        r.check(c.lower(label, &x).as_ref() == Some(b), || {
            format!("f_{label} e_{label} != id at {}", c.render(b))
        });
    }
    if let Some(x) = c.lower(label, b) {
        r.check(c.raise(label, &x).as_ref() == Some(b), || {
            format!("e_{label} f_{label} != id at {}", c.render(b))
        });
    }
}

fn apply<C: Crystal>(c: &C, label: Label, up: bool, b: &C::Elem) -> Option<C::Elem> {
    if up {
        c.raise(label, b)
    } else {
        c.lower(label, b)
    }
}

fn commute<C: Crystal>(c: &C, a: Label, z: Label, b: &C::Elem, r: &mut Report) {
    for up_a in [true, false] {
        for up_z in [true, false] {
            let lhs = apply(c, a, up_a, b).and_then(|x| apply(c, z, up_z, &x));
            let rhs = apply(c, z, up_z, b).and_then(|x| apply(c, a, up_a, &x));
            r.check(lhs == rhs, || {
                format!(
                    "{}_{a} and {}_{z} do not commute at {}",
                    if up_a { "e" } else { "f" },
                    if up_z { "e" } else { "f" },
                    c.render(b)
                )
            });
        }
    }
}

/// S1-S2, and P1-P3 / Q1-Q3 as the category requires. Returns violations.
pub fn check_axioms<C: Crystal>(c: &C, elems: &[C::Elem]) -> Vec<String> {
    let n = c.rank();
    let cat = c.category();
    let mut r = Report::new();
    for b in elems {
        let wt = c.weight(b);
        r.check(wt.len() == n, || format!("weight length at {}", c.render(b)));
        if cat != Category::Gl {
            r.check(wt.iter().all(|&x| x >= 0), || {
                format!("negative weight at {}", c.render(b))
            });
        }
        for i in 1..n {
            let l = Label::Index(i);
            inverse_pair(c, l, b, &mut r);
            if let Some(x) = c.raise(l, b) {
                r.check(diff(&c.weight(&x), &wt) == simple_root(n, i), || {
                    format!("S1 weight at {} label {i}", c.render(b))
                });
            }
            let e = epsilon(c, l, b) as i64;
            let p = phi(c, l, b) as i64;
            r.check(p - e == wt[i - 1] - wt[i], || {
                format!("S2 at {} label {i}", c.render(b))
            });
        }
        if cat != Category::Gl && n >= 2 {
            let l = Label::Bar;
            inverse_pair(c, l, b, &mut r);
            if let Some(x) = c.raise(l, b) {
                r.check(diff(&c.weight(&x), &wt) == simple_root(n, 1), || {
                    format!("P1 weight at {}", c.render(b))
                });
                for i in 3..n {
                    let li = Label::Index(i);
                    r.check(
                        epsilon(c, li, b) == epsilon(c, li, &x) && phi(c, li, b) == phi(c, li, &x),
                        || format!("P1 string lengths at {} label {i}", c.render(b)),
                    );
                }
            }
            for i in 3..n {
                commute(c, Label::Index(i), l, b, &mut r);
            }
            let s = epsilon(c, l, b) + phi(c, l, b);
            let want = if wt[0] == 0 && wt[1] == 0 { 0 } else { 1 };
            r.check(s == want, || format!("P3 at {}", c.render(b)));
        }
        if cat == Category::QPlus {
            let l = Label::Zero;
            inverse_pair(c, l, b, &mut r);
            if let Some(x) = c.raise(l, b) {
                r.check(c.weight(&x) == wt, || format!("Q1 weight at {}", c.render(b)));
                let mut others: Vec<Label> = (1..n).map(Label::Index).collect();
                if n >= 2 {
                    others.push(Label::Bar);
                }
                for li in others {
                    r.check(
                        epsilon(c, li, b) == epsilon(c, li, &x) && phi(c, li, b) == phi(c, li, &x),
                        || format!("Q1 string lengths at {} label {li}", c.render(b)),
                    );
                }
            }
            for i in 2..n {
                commute(c, Label::Index(i), l, b, &mut r);
            }
            let s = epsilon(c, l, b) + phi(c, l, b);
            let want = if wt[0] == 0 { 0 } else { 1 };
            r.check(s == want, || format!("Q3 at {}", c.render(b)));
        }
    }
    r.finish()
}

/// The two consequences for normal q⁺_n crystals relating `1̄` and `0`.
pub fn check_zero_bar_corollary<C: Crystal>(c: &C, elems: &[C::Elem]) -> Vec<String> {
    let mut r = Report::new();
    if c.category() != Category::QPlus || c.rank() < 2 {
        return Vec::new();
    }
    for b in elems {
        if c.weight(b)[0] != 0 {
            for up in [true, false] {
                let lhs = apply(c, Label::Zero, up, b).and_then(|x| c.raise(Label::Bar, &x));
                let rhs = c.raise(Label::Bar, b).and_then(|x| apply(c, Label::Zero, up, &x));
                r.check(lhs == rhs, || {
                    format!(
                        "e_bar1 {}_0 != {}_0 e_bar1 at {}",
                        if up { "e" } else { "f" },
                        if up { "e" } else { "f" },
                        c.render(b)
                    )
                });
            }
        }
        if let Some(x) = c.raise(Label::Bar, b) {
            r.check(
                epsilon(c, Label::Zero, b) <= epsilon(c, Label::Zero, &x)
                    && phi(c, Label::Zero, b) <= phi(c, Label::Zero, &x),
                || format!("eps_0/phi_0 decrease along e_bar1 at {}", c.render(b)),
            );
        }
    }
    r.finish()
}

fn sig<C: Crystal>(c: &C, seq: &[usize], b: &C::Elem) -> C::Elem {
    super::sigma_compose(c, seq, b)
}

/// Type BC relations among `σ_0, …, σ_{n-1}` (type A among `σ_1, …` for gl and q).
pub fn check_braids<C: Crystal>(c: &C, elems: &[C::Elem]) -> Vec<String> {
    let n = c.rank();
    let lo = if c.category() == Category::QPlus { 0 } else { 1 };
    let mut r = Report::new();
    for b in elems {
        for i in lo..n {
            let l = if i == 0 { Label::Zero } else { Label::Index(i) };
            let once = sigma(c, l, b);
            r.check(sigma(c, l, &once) == *b, || {
                format!("sigma_{i}^2 != 1 at {}", c.render(b))
            });
            r.check(c.weight(&once) == swapped(&c.weight(b), i), || {
                format!("sigma_{i} weight at {}", c.render(b))
            });
            for j in i + 1..n {
                let (lhs, rhs, name) = match (i, j - i) {
                    (0, 1) => (sig(c, &[0, 1, 0, 1], b), sig(c, &[1, 0, 1, 0], b), "0101=1010"),
                    (_, 1) => (sig(c, &[i, j, i], b), sig(c, &[j, i, j], b), "iji=jij"),
                    _ => (sig(c, &[i, j], b), sig(c, &[j, i], b), "ij=ji"),
                };
                r.check(lhs == rhs, || format!("braid {name} for ({i},{j}) at {}", c.render(b)));
            }
        }
    }
    r.finish()
}

fn swapped(w: &[i64], i: usize) -> Vec<i64> {
    let mut v = w.to_vec();
    if i >= 1 {
        v.swap(i - 1, i);
    }
    v
}

/// `ν_0` on a connected normal q⁺_n component, anchored at its q⁺_n-lowest element,
/// together with `wt^{1|1} = (ν_0 + ε_0 + φ_0, -ν_0)`.
pub fn nu0_and_wt11<C: Crystal>(c: &C, g: &CrystalGraph<C::Elem>) -> Result<Vec<(i64, (i64, i64))>, CrystalError> {
    let lowest: Vec<usize> = (0..g.len())
        .filter(|&v| is_lowest(c, &g.vertices[v], Category::QPlus))
        .collect();
    if lowest.len() != 1 {
        return Err(CrystalError::Nu(format!("{} q⁺-lowest elements", lowest.len())));
    }
    let mut adj = vec![Vec::new(); g.len()];
    for &(s, d, l) in &g.edges {
        let step = if l == Label::Zero { -1 } else { 0 };
        adj[s].push((d, step));
        adj[d].push((s, -step));
    }
    let mut nu: Vec<Option<i64>> = vec![None; g.len()];
    nu[lowest[0]] = Some(0);
    let mut queue = VecDeque::from([lowest[0]]);
    while let Some(v) = queue.pop_front() {
        let here = nu[v].unwrap();
        for &(u, step) in &adj[v] {
            match nu[u] {
                None => {
                    nu[u] = Some(here + step);
                    queue.push_back(u);
                }
                Some(x) if x != here + step => return Err(CrystalError::Nu(g.names[u].clone())),
                _ => {}
            }
        }
    }
    let mut out = Vec::with_capacity(g.len());
    for v in 0..g.len() {
        let x = nu[v].ok_or_else(|| CrystalError::Nu(format!("{} unreachable", g.names[v])))?;
        if x < 0 {
            return Err(CrystalError::Nu(format!("negative at {}", g.names[v])));
        }
        let b = &g.vertices[v];
        let s = (epsilon(c, Label::Zero, b) + phi(c, Label::Zero, b)) as i64;
        out.push((x, (x + s, -x)));
    }
    Ok(out)
}
