//! Dual equivalence operators and descents of standard shifted tableaux.

use super::{Pos, ShiftedTableau};
use crate::alphabet::Letter;

fn boxes_by_value(t: &ShiftedTableau) -> Vec<Pos> {
    let mut v: Vec<(i64, Pos)> = t.entries().map(|(p, l)| (l.ceil(), p)).collect();
    v.sort();
    v.into_iter().map(|x| x.1).collect()
}

fn toggle(t: &mut ShiftedTableau, p: Pos) {
    let l = t.get(p.0, p.1).unwrap();
    t.set(p.0, p.1, l.toggle_prime());
}

fn on_diag(p: Pos) -> bool {
    p.0 == p.1
}

/// `𝔰_i` on a standard tableau; the identity unless `i, i+1` both occur.
pub fn dual_s(t: &ShiftedTableau, i: usize) -> ShiftedTableau {
    let sq = boxes_by_value(t);
    let n = sq.len();
    if i == 0 || i + 1 > n {
        return t.clone();
    }
    let at = |j: usize| sq[j - 1];
    let (a, b) = (at(i), at(i + 1));
    let mut u = t.clone();
    if a.0 == b.0 || a.1 == b.1 {
        for p in [a, b] {
            if !on_diag(p) {
                toggle(&mut u, p);
            }
        }
        for (j, k) in [(i.wrapping_sub(1), i + 1), (i, i + 2)] {
            if j >= 1 && k <= n && on_diag(at(j)) && on_diag(at(k)) {
                let (p, q) = (at(j), at(k));
                if !t.get(p.0, p.1).unwrap().same_prime(t.get(q.0, q.1).unwrap()) {
                    toggle(&mut u, p);
                    toggle(&mut u, q);
                }
            }
        }
    } else {
        let (la, lb) = (t.get(a.0, a.1).unwrap(), t.get(b.0, b.1).unwrap());
        u.set(a.0, a.1, Letter::new(i as i64 + 1, la.is_primed()));
        u.set(b.0, b.1, Letter::new(i as i64, lb.is_primed()));
    }
    u
}

/// `𝔡_i` on a standard tableau with `N` boxes; the identity unless `i+2 ∈ [N]`.
pub fn dual_equiv(t: &ShiftedTableau, i: i64) -> ShiftedTableau {
    let n = t.size() as i64;
    if i + 2 < 1 || i + 2 > n {
        return t.clone();
    }
    if i <= 0 {
        let mut u = t.clone();
        let p = t.find_value(i + 2).unwrap();
        toggle(&mut u, p);
        return u;
    }
    let w = t.shword();
    let pos = |v: i64| w.iter().position(|&x| x == v).unwrap();
    let (a, b, c) = (pos(i), pos(i + 1), pos(i + 2));
    let between = |m: usize, l: usize, r: usize| (l < m && m < r) || (r < m && m < l);
    let i = i as usize;
    if between(c, a, b) {
        dual_s(t, i)
    } else if between(a, b, c) {
        dual_s(t, i + 1)
    } else {
        t.clone()
    }
}

/// `i` such that `i+1` precedes `i` in the reading word.
pub fn descents(t: &ShiftedTableau) -> Vec<usize> {
    let w = t.shword();
    let mut pos = vec![0; w.len() + 2];
    for (k, &v) in w.iter().enumerate() {
        pos[v as usize] = k;
    }
    (1..w.len()).filter(|&i| pos[i + 1] < pos[i]).collect()
}

/// The same set via the row/column description.
pub fn descents_by_rule(t: &ShiftedTableau) -> Vec<usize> {
    let n = t.size();
    let find = |v: usize| {
        let p = t.find_value(v as i64).unwrap();
        (p, t.get(p.0, p.1).unwrap().is_primed())
    };
    (1..n)
        .filter(|&i| {
            let ((pa, ra), (pb, rb)) = (find(i), find(i + 1));
            (!ra && !rb && pb.0 > pa.0) || (ra && rb && pb.1 > pa.1) || (!ra && rb)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(s: &str) -> ShiftedTableau {
        s.parse().unwrap()
    }

    #[test]
    fn s_examples() {
        assert_eq!(dual_s(&tab("1 2 3 4 / 5 6 7'"), 6), tab("1 2 3 4 / 5 6' 7"));
        assert_eq!(dual_s(&tab("1 2 3 6' / 4 5"), 5), tab("1 2 3 5' / 4 6"));
        assert_eq!(dual_s(&tab("1 2 3 7 / 4' 5 8 / 6'"), 4), tab("1 2 3 7 / 4' 5' 8 / 6'"));
        assert_eq!(dual_s(&tab("1 2 3 7 / 4' 5' 8 / 6"), 5), tab("1 2 3 7 / 4 5 8 / 6'"));
    }

    #[test]
    fn d_example() {
        let q = tab("1 2' 4 6' / 3' 5");
        assert_eq!(dual_equiv(&q, 0), tab("1 2 4 6' / 3' 5"));
        assert_eq!(dual_equiv(&q, 1), tab("1' 2 4 6' / 3 5"));
        for i in -2..7 {
            assert_eq!(dual_equiv(&dual_equiv(&q, i), i), q);
        }
        assert_eq!(descents(&q), vec![1, 4, 5]);
        assert_eq!(descents_by_rule(&q), vec![1, 4, 5]);
        assert!(descents(&tab("1 2 3")).is_empty());
    }
}
