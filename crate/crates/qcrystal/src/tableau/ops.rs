//! Crystal operators on shifted tableaux.

use std::collections::BTreeSet;

use super::{semistandard_tableaux, Pos, ShiftedTableau};
use crate::alphabet::{interchange_primes, Letter, StrictPartition, Weight};
use crate::crystal::{Category, Crystal, Enumerable, Label};
use crate::words::unpaired_indices;

/// Which branch of the case analysis produced a result.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Case {
    L1a,
    L1b,
    L1c,
    L1d,
    L2a,
    L2b,
    L2c,
    R1a,
    R1b,
    R1c,
    R2a,
    R2b,
    R2c,
    R2d,
}

/// Positions of `T|_{[i,i+1]}` in reading order with matched pairs removed.
pub fn unpaired_boxes(t: &ShiftedTableau, i: i64) -> Vec<Pos> {
    let pos: Vec<Pos> = t
        .reading_positions()
        .into_iter()
        .filter(|&(x, y)| {
            let c = t.get(x, y).unwrap().ceil();
            c == i || c == i + 1
        })
        .collect();
    let letters: Vec<Letter> = pos.iter().map(|&(x, y)| t.get(x, y).unwrap()).collect();
    unpaired_indices(&letters, i).into_iter().map(|k| pos[k]).collect()
}

/// The edge-connected set of boxes with entries `v'` or `v` containing `p`, ordered
/// from its northwest end to its southeast end.
fn ribbon(t: &ShiftedTableau, p: Pos, v: i64) -> Vec<Pos> {
    let mut seen = BTreeSet::from([p]);
    let mut stack = vec![p];
    while let Some((x, y)) = stack.pop() {
        for q in [(x + 1, y), (x.wrapping_sub(1), y), (x, y + 1), (x, y.wrapping_sub(1))] {
            if t.get(q.0, q.1).is_some_and(|l| l.ceil() == v) && seen.insert(q) {
                stack.push(q);
            }
        }
    }
    let mut out: Vec<Pos> = seen.into_iter().collect();
    out.sort_by_key(|&(x, y)| (y, std::cmp::Reverse(x)));
    out
}

fn is(t: &ShiftedTableau, x: usize, y: usize, l: Letter) -> bool {
    x >= 1 && y >= 1 && t.get(x, y) == Some(l)
}

fn is_any(t: &ShiftedTableau, x: usize, y: usize, ls: [Letter; 2]) -> bool {
    ls.iter().any(|&l| is(t, x, y, l))
}

fn swap_diag_primes(t: &mut ShiftedTableau, a: usize, b: usize) {
    let (p, q) = interchange_primes(t.get(a, a).unwrap(), t.get(b, b).unwrap());
    t.set(a, a, p);
    t.set(b, b, q);
}

pub fn traced_f(t: &ShiftedTableau, i: usize) -> Option<(ShiftedTableau, Case)> {
    let iv = i as i64;
    let (ip, iu) = (Letter::primed(iv), Letter::unprimed(iv));
    let (jp, ju) = (Letter::primed(iv + 1), Letter::unprimed(iv + 1));
    let (x, y) = unpaired_boxes(t, iv)
        .into_iter()
        .rfind(|&(x, y)| t.get(x, y).unwrap().ceil() == iv)?;
    let mut u = t.clone();
    let case = if t.get(x, y) == Some(iu) {
        if is(t, x, y + 1, jp) {
            assert!(x != y, "f_{i}: case L1(a) on the diagonal at {t}");
            u.set(x, y, jp);
            u.set(x, y + 1, ju);
            Case::L1a
        } else if !is_any(t, x + 1, y, [jp, ju]) {
            u.set(x, y, ju);
            Case::L1b
        } else {
            let (nx, ny) = ribbon(t, (x + 1, y), iv + 1)[0];
            u.set(x, y, jp);
            if nx != ny {
                assert!(
                    t.get(nx, ny) == Some(jp),
                    "f_{i}: case L1(c) northwest end unprimed at {t}"
                );
                u.set(nx, ny, ju);
                Case::L1c
            } else {
                assert!(
                    is_any(t, nx - 1, nx - 1, [ip, iu]),
                    "f_{i}: case L1(d) without i on the diagonal at {t}"
                );
                swap_diag_primes(&mut u, nx, nx - 1);
                Case::L1d
            }
        }
    } else if is(t, x + 1, y, iu) {
        assert!(x + 1 != y, "f_{i}: case L2(a) on the diagonal at {t}");
        u.set(x, y, iu);
        u.set(x + 1, y, jp);
        Case::L2a
    } else if !is_any(t, x, y + 1, [iu, jp]) {
        u.set(x, y, jp);
        Case::L2b
    } else {
        assert!(x != y, "f_{i}: case L2(c) on the diagonal at {t}");
        let rib = ribbon(t, (x, y), iv);
        let here = rib.iter().position(|&p| p == (x, y)).unwrap();
        let &(nx, ny) = rib[here + 1..]
            .iter()
            .find(|&&(a, b)| is(t, a, b, iu) && !is_any(t, a, b + 1, [iu, jp]))
            .unwrap_or_else(|| panic!("f_{i}: case L2(c) has no target at {t}"));
        u.set(x, y, iu);
        u.set(nx, ny, jp);
        Case::L2c
    };
    Some((u, case))
}

pub fn traced_e(t: &ShiftedTableau, i: usize) -> Option<(ShiftedTableau, Case)> {
    let iv = i as i64;
    let (ip, iu) = (Letter::primed(iv), Letter::unprimed(iv));
    let (jp, ju) = (Letter::primed(iv + 1), Letter::unprimed(iv + 1));
    let (x, y) = unpaired_boxes(t, iv)
        .into_iter()
        .find(|&(x, y)| t.get(x, y).unwrap().ceil() == iv + 1)?;
    let mut u = t.clone();
    let case = if t.get(x, y) == Some(ju) {
        if is(t, x, y - 1, jp) {
            assert!(x != y - 1, "e_{i}: case R1(a) on the diagonal at {t}");
            u.set(x, y, jp);
            u.set(x, y - 1, iu);
            Case::R1a
        } else if !is_any(t, x - 1, y, [iu, jp]) {
            u.set(x, y, iu);
            Case::R1b
        } else {
            assert!(x != y, "e_{i}: case R1(c) on the diagonal at {t}");
            let rib = ribbon(t, (x, y), iv + 1);
            let here = rib.iter().position(|&p| p == (x, y)).unwrap();
            let &(nx, ny) = rib[here + 1..]
                .iter()
                .find(|&&(a, b)| is(t, a, b, jp) && !is_any(t, a - 1, b, [iu, jp]))
                .unwrap_or_else(|| panic!("e_{i}: case R1(c) has no target at {t}"));
            u.set(x, y, jp);
            u.set(nx, ny, iu);
            Case::R1c
        }
    } else if is(t, x - 1, y, iu) {
        assert!(x != y, "e_{i}: case R2(a) on the diagonal at {t}");
        u.set(x, y, iu);
        u.set(x - 1, y, ip);
        Case::R2a
    } else if !is_any(t, x, y - 1, [ip, iu]) {
        u.set(x, y, ip);
        Case::R2b
    } else {
        let (nx, ny) = ribbon(t, (x, y - 1), iv)[0];
        u.set(x, y, iu);
        if nx != ny {
            assert!(
                t.get(nx, ny) == Some(iu),
                "e_{i}: case R2(c) northwest end primed at {t}"
            );
            u.set(nx, ny, ip);
            Case::R2c
        } else {
            assert!(
                is_any(t, nx + 1, nx + 1, [jp, ju]),
                "e_{i}: case R2(d) without i+1 on the diagonal at {t}"
            );
            swap_diag_primes(&mut u, nx, nx + 1);
            Case::R2d
        }
    };
    Some((u, case))
}

pub fn tab_f(t: &ShiftedTableau, i: usize) -> Option<ShiftedTableau> {
    traced_f(t, i).map(|r| r.0)
}

pub fn tab_e(t: &ShiftedTableau, i: usize) -> Option<ShiftedTableau> {
    traced_e(t, i).map(|r| r.0)
}

/// Straight shapes only.
pub fn tab_fbar(t: &ShiftedTableau) -> Option<ShiftedTableau> {
    let row = t.rows().first()?;
    if row.contains(&Letter::primed(2)) {
        return None;
    }
    let k = row.iter().rposition(|l| l.ceil() == 1)?;
    let y = k + 1;
    let mut u = t.clone();
    let new = if y == 1 && row[k] == Letter::unprimed(1) {
        Letter::unprimed(2)
    } else {
        Letter::primed(2)
    };
    u.set(1, y, new);
    Some(u)
}

/// Straight shapes only.
pub fn tab_ebar(t: &ShiftedTableau) -> Option<ShiftedTableau> {
    let row = t.rows().first()?;
    let mut u = t.clone();
    if row[0].ceil() == 2 {
        u.set(1, 1, row[0].shift(-1));
        return Some(u);
    }
    let k = row.iter().position(|&l| l == Letter::primed(2))?;
    u.set(1, k + 1, Letter::unprimed(1));
    Some(u)
}

pub fn tab_f0(t: &ShiftedTableau) -> Option<ShiftedTableau> {
    (t.get(1, 1)? == Letter::unprimed(1)).then(|| {
        let mut u = t.clone();
        u.set(1, 1, Letter::primed(1));
        u
    })
}

pub fn tab_e0(t: &ShiftedTableau) -> Option<ShiftedTableau> {
    (t.get(1, 1)? == Letter::primed(1)).then(|| {
        let mut u = t.clone();
        u.set(1, 1, Letter::unprimed(1));
        u
    })
}

/// `ShTab⁺_n(λ/μ)`, or `ShTab_n(λ/μ)` when `primed` is false. Straight shapes carry the
/// q⁺_n (resp. q_n) structure; skew shapes only the gl_n operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShTabCrystal {
    pub outer: StrictPartition,
    pub inner: StrictPartition,
    pub n: usize,
    pub primed: bool,
}

impl ShTabCrystal {
    pub fn new(lambda: StrictPartition, n: usize) -> ShTabCrystal {
        ShTabCrystal {
            outer: lambda,
            inner: StrictPartition::empty(),
            n,
            primed: true,
        }
    }

    pub fn unprimed(lambda: StrictPartition, n: usize) -> ShTabCrystal {
        ShTabCrystal {
            outer: lambda,
            inner: StrictPartition::empty(),
            n,
            primed: false,
        }
    }

    pub fn skew(outer: StrictPartition, inner: StrictPartition, n: usize) -> ShTabCrystal {
        ShTabCrystal {
            outer,
            inner,
            n,
            primed: true,
        }
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }
}

impl Crystal for ShTabCrystal {
    type Elem = ShiftedTableau;

    fn rank(&self) -> usize {
        self.n
    }
    fn category(&self) -> Category {
        match (self.is_straight(), self.primed) {
            (false, _) => Category::Gl,
            (true, true) => Category::QPlus,
            (true, false) => Category::Q,
        }
    }
    fn weight(&self, t: &ShiftedTableau) -> Weight {
        t.weight(self.n)
    }
    fn raise(&self, i: Label, t: &ShiftedTableau) -> Option<ShiftedTableau> {
        if !self.category().has(self.n, i) {
            return None;
        }
        match i {
            Label::Index(k) => tab_e(t, k),
            Label::Bar => tab_ebar(t),
            Label::Zero => tab_e0(t),
        }
    }
    fn lower(&self, i: Label, t: &ShiftedTableau) -> Option<ShiftedTableau> {
        if !self.category().has(self.n, i) {
            return None;
        }
        match i {
            Label::Index(k) => tab_f(t, k),
            Label::Bar => tab_fbar(t),
            Label::Zero => tab_f0(t),
        }
    }
    fn render(&self, t: &ShiftedTableau) -> String {
        t.to_string()
    }
}

impl Enumerable for ShTabCrystal {
    fn elements(&self) -> Vec<ShiftedTableau> {
        let mut v = semistandard_tableaux(&self.outer, &self.inner, self.n, self.primed);
        v.sort();
        v
    }
}
