//! Independent reference implementations used by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::One;

use qcrystal::alphabet::{Letter, StrictPartition};
use qcrystal::characters::Poly;
use qcrystal::involutions::Perm;
use qcrystal::tableau::ShiftedTableau;

/// `Q_(r)` from `Π (1 + x_i t) / (1 - x_i t)`: the coefficient of `x^a` is `2^{#nonzero a_i}`.
pub fn one_row_q(r: usize, n: usize) -> Poly {
    let mut p = Poly::zero(n);
    if r == 0 {
        return Poly::one(n);
    }
    fn go(k: usize, left: usize, e: &mut Vec<u32>, p: &mut Poly) {
        if k + 1 == e.len() {
            e[k] = left as u32;
            let nz = e.iter().filter(|&&a| a > 0).count();
            p.add_term(e.clone(), BigInt::one() << nz);
            return;
        }
        for a in 0..=left {
            e[k] = a as u32;
            go(k + 1, left - a, e, p);
        }
    }
    go(0, r, &mut vec![0; n], &mut p);
    p
}

/// `Q_(r,s) = Q_r Q_s + 2 Σ_{k=1}^{s} (-1)^k Q_{r+k} Q_{s-k}`.
fn two_row_q(r: usize, s: usize, n: usize) -> Poly {
    let mut p = &one_row_q(r, n) * &one_row_q(s, n);
    for k in 1..=s {
        let t = (&one_row_q(r + k, n) * &one_row_q(s - k, n)).scale(&BigInt::from(2));
        p = if k % 2 == 1 { &p - &t } else { &p + &t };
    }
    p
}

/// `Q_λ` as the Pfaffian of the matrix `Q_(λ_i, λ_j)`.
pub fn pfaffian_q(lambda: &StrictPartition, n: usize) -> Poly {
    let mut parts = lambda.parts().to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    fn pf(idx: &[usize], parts: &[usize], n: usize) -> Poly {
        if idx.is_empty() {
            return Poly::one(n);
        }
        let mut acc = Poly::zero(n);
        for j in 1..idx.len() {
            let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[j]).collect();
            let entry = if parts[idx[j]] == 0 {
                one_row_q(parts[idx[0]], n)
            } else {
                two_row_q(parts[idx[0]], parts[idx[j]], n)
            };
            let term = &entry * &pf(&rest, parts, n);
            acc = if j % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        acc
    }
    let idx: Vec<usize> = (0..parts.len()).collect();
    pf(&idx, &parts, n)
}

/// All fillings of a straight shifted shape with letters `1' … n`, kept when semistandard
/// by a direct check of the row and column rules.
pub fn brute_shtab(lambda: &StrictPartition, n: usize, diag_primes: bool) -> Vec<ShiftedTableau> {
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |k| (r + 1, r + 1 + k)))
        .collect();
    let letters: Vec<Letter> = (1..=n as i64)
        .flat_map(|k| [Letter::primed(k), Letter::unprimed(k)])
        .collect();
    let mut out = Vec::new();
    let total = letters.len().pow(cells.len() as u32);
    for code in 0..total {
        let mut c = code;
        let mut grid = std::collections::HashMap::new();
        for &cell in &cells {
            grid.insert(cell, letters[c % letters.len()]);
            c /= letters.len();
        }
        let ok = cells.iter().all(|&(x, y)| {
            let v = grid[&(x, y)];
            if x == y && v.is_primed() && !diag_primes {
                return false;
            }
            let right = grid
                .get(&(x, y + 1))
                .is_none_or(|&r| v < r || (v == r && !v.is_primed()));
            let up = grid
                .get(&(x + 1, y))
                .is_none_or(|&u| v < u || (v == u && v.is_primed()));
            right && up
        });
        if ok {
            let rows = lambda
                .parts()
                .iter()
                .enumerate()
                .map(|(r, &len)| (0..len).map(|k| grid[&(r + 1, r + 1 + k)]).collect())
                .collect();
            out.push(ShiftedTableau::from_rows(rows).unwrap());
        }
    }
    out
}

/// 2143-containment by scanning all 4-subsets of a one-line window.
pub fn brute_vexillary(z: &Perm, size: i64) -> bool {
    let v = z.one_line(1, size);
    let m = v.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    if v[b] < v[a] && v[a] < v[d] && v[d] < v[c] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn sp(s: &str) -> StrictPartition {
    s.parse().unwrap()
}
