//! Finitely supported permutations of ℤ, involution words and their invariants.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Letter, StrictPartition, Word};
use crate::error::ParseError;

/// A permutation of ℤ fixing all but finitely many points, stored as its non-fixed points.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Perm(BTreeMap<i64, i64>);

impl Perm {
    pub fn identity() -> Perm {
        Perm(BTreeMap::new())
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn s(i: i64) -> Perm {
        Perm(BTreeMap::from([(i, i + 1), (i + 1, i)]))
    }

    /// Builds from images `π(start), π(start+1), …`; panics if not a bijection.
    pub fn from_one_line(start: i64, images: &[i64]) -> Perm {
        let mut m = BTreeMap::new();
        for (k, &v) in images.iter().enumerate() {
            let i = start + k as i64;
            if i != v {
                m.insert(i, v);
            }
        }
        let p = Perm(m);
        assert!(p.is_bijection(), "not a permutation: {images:?}");
        p
    }

    pub fn from_cycles(cycles: &[Vec<i64>]) -> Result<Perm, ParseError> {
        let mut m = BTreeMap::new();
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let b = c[(k + 1) % c.len()];
                if m.insert(a, b).is_some() {
                    return Err(ParseError::new(format!("{a} appears twice in cycles")));
                }
            }
        }
        m.retain(|a, b| a != b);
        let p = Perm(m);
        if !p.is_bijection() {
            return Err(ParseError::new("cycles do not define a permutation"));
        }
        Ok(p)
    }

    fn is_bijection(&self) -> bool {
        let keys: BTreeSet<i64> = self.0.keys().copied().collect();
        let vals: BTreeSet<i64> = self.0.values().copied().collect();
        keys == vals && vals.len() == self.0.len()
    }

    pub fn apply(&self, i: i64) -> i64 {
        self.0.get(&i).copied().unwrap_or(i)
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Non-fixed points, ascending.
    pub fn support(&self) -> Vec<i64> {
        self.0.keys().copied().collect()
    }

    /// Smallest interval containing the support.
    pub fn window(&self) -> Option<(i64, i64)> {
        Some((*self.0.keys().next()?, *self.0.keys().next_back()?))
    }

    /// `self ∘ other`, that is `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        let mut pts: BTreeSet<i64> = self.0.keys().copied().collect();
        pts.extend(other.0.keys().copied());
        let mut m = BTreeMap::new();
        for x in pts {
            let y = self.apply(other.apply(x));
            if x != y {
                m.insert(x, y);
            }
        }
        Perm(m)
    }

    pub fn inverse(&self) -> Perm {
        Perm(self.0.iter().map(|(&a, &b)| (b, a)).collect())
    }

    pub fn is_involution(&self) -> bool {
        self.0.iter().all(|(&a, &b)| self.apply(b) == a)
    }

    /// The Demazure product `π ∘ s_i`.
    pub fn demazure(&self, i: i64) -> Perm {
        if self.apply(i) > self.apply(i + 1) {
            self.clone()
        } else {
            self.compose(&Perm::s(i))
        }
    }

    /// `s_i ∘ z ∘ s_i` for an involution `z`.
    pub fn twisted(&self, i: i64) -> Perm {
        let (a, b) = (self.apply(i), self.apply(i + 1));
        if a > b {
            self.clone()
        } else if a == i && b == i + 1 {
            self.compose(&Perm::s(i))
        } else {
            Perm::s(i).compose(self).compose(&Perm::s(i))
        }
    }

    /// Coxeter length (number of inversions).
    pub fn length(&self) -> usize {
        let pts: Vec<i64> = match self.window() {
            Some((lo, hi)) => (lo..=hi).collect(),
            None => return 0,
        };
        let mut inv = 0;
        for (k, &i) in pts.iter().enumerate() {
            for &j in &pts[k + 1..] {
                if self.apply(i) > self.apply(j) {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `ℓ_abs(z) = |{i : i < z(i)}|`.
    pub fn abs_length(&self) -> usize {
        self.0.iter().filter(|(&a, &b)| a < b).count()
    }

    /// `ℓ̂(z) = (ℓ(z) + ℓ_abs(z)) / 2`, the common length of all involution words.
    pub fn hat_length(&self) -> usize {
        (self.length() + self.abs_length()) / 2
    }

    /// Descents `i` with `π(i) > π(i+1)`.
    pub fn descents(&self) -> Vec<i64> {
        match self.window() {
            None => Vec::new(),
            Some((lo, hi)) => (lo..hi).filter(|&i| self.apply(i) > self.apply(i + 1)).collect(),
        }
    }

    /// 2-cycles `(a, b)` with `a < b`.
    pub fn cycles(&self) -> Vec<(i64, i64)> {
        self.0.iter().filter(|(&a, &b)| a < b).map(|(&a, &b)| (a, b)).collect()
    }

    pub fn one_line(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).map(|i| self.apply(i)).collect()
    }

    /// Shifts every point by `k`.
    pub fn shift(&self, k: i64) -> Perm {
        Perm(self.0.iter().map(|(&a, &b)| (a + k, b + k)).collect())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("()");
        }
        let mut seen = BTreeSet::new();
        for &a in self.0.keys() {
            if seen.contains(&a) {
                continue;
            }
            let mut cyc = vec![a];
            seen.insert(a);
            let mut x = self.apply(a);
            while x != a {
                cyc.push(x);
                seen.insert(x);
                x = self.apply(x);
            }
            let s: Vec<String> = cyc.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for Perm {
    type Err = ParseError;

    /// Cycle notation `(1,5)(2,3)`, bracketed one-line `[5,3,2,4,1]` starting at 1,
    /// a compact one-line string such as `53241`, or `id`.
    fn from_str(s: &str) -> Result<Perm, ParseError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() || t == "id" || t == "()" || t == "1" {
            return Ok(Perm::identity());
        }
        let num = |x: &str| {
            x.parse::<i64>()
                .map_err(|_| ParseError::new(format!("bad integer {x:?} in {s:?}")))
        };
        if t.starts_with('(') {
            let mut cycles = Vec::new();
            for chunk in t.split(')').filter(|c| !c.is_empty()) {
                let body = chunk
                    .strip_prefix('(')
                    .ok_or_else(|| ParseError::new(format!("bad cycle notation {s:?}")))?;
                if body.is_empty() {
                    continue;
                }
                cycles.push(body.split(',').map(num).collect::<Result<Vec<_>, _>>()?);
            }
            return Perm::from_cycles(&cycles);
        }
        let images: Vec<i64> = if let Some(body) = t.strip_prefix('[') {
            let body = body
                .strip_suffix(']')
                .ok_or_else(|| ParseError::new(format!("unclosed bracket in {s:?}")))?;
            body.split(',').map(num).collect::<Result<_, _>>()?
        } else if t.chars().all(|c| c.is_ascii_digit()) {
            t.chars().map(|c| c as i64 - '0' as i64).collect()
        } else {
            return Err(ParseError::new(format!("bad permutation {s:?}")));
        };
        let mut sorted = images.clone();
        sorted.sort();
        if sorted != (1..=images.len() as i64).collect::<Vec<_>>() {
            return Err(ParseError::new(format!("{s:?} is not a permutation of 1..n")));
        }
        Ok(Perm::from_one_line(1, &images))
    }
}

pub type Involution = Perm;

/// All involutions of `{1, …, n}`.
pub fn involutions_of(n: usize) -> Vec<Perm> {
    fn go(free: &[i64], acc: &mut Vec<Vec<i64>>, out: &mut Vec<Perm>) {
        match free.split_first() {
            None => out.push(Perm::from_cycles(acc).expect("disjoint cycles")),
            Some((&a, rest)) => {
                go(rest, acc, out);
                for k in 0..rest.len() {
                    let b = rest[k];
                    let mut left: Vec<i64> = rest.to_vec();
                    left.remove(k);
                    acc.push(vec![a, b]);
                    go(&left, acc, out);
                    acc.pop();
                }
            }
        }
    }
    let pts: Vec<i64> = (1..=n as i64).collect();
    let mut out = Vec::new();
    go(&pts, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Evaluates `s_{a_n} ∘ ⋯ ∘ s_{a_1} ∘ 1 ∘ s_{a_1} ∘ ⋯ ∘ s_{a_n}`, returning `None`
/// unless every step strictly grows (that is, the word is an involution word).
pub fn evaluate(word: &[i64]) -> Option<Perm> {
    let mut z = Perm::identity();
    for &a in word {
        if z.apply(a) > z.apply(a + 1) {
            return None;
        }
        z = z.twisted(a);
    }
    Some(z)
}

/// Same as [`evaluate`] but without the minimality requirement.
pub fn evaluate_any(word: &[i64]) -> Perm {
    word.iter().fold(Perm::identity(), |z, &a| z.twisted(a))
}

fn letters(w: &Word) -> Vec<i64> {
    w.iter().map(|l| l.ceil()).collect()
}

fn to_word(v: &[i64]) -> Word {
    v.iter().map(|&a| Letter::unprimed(a)).collect()
}

/// The set `R_inv(z)` of involution words, built by stripping final descents.
pub fn invol_words(z: &Perm) -> BTreeSet<Vec<i64>> {
    fn go(z: &Perm, memo: &mut HashMap<Perm, BTreeSet<Vec<i64>>>) -> BTreeSet<Vec<i64>> {
        if z.is_identity() {
            return BTreeSet::from([Vec::new()]);
        }
        if let Some(s) = memo.get(z) {
            return s.clone();
        }
        let mut out = BTreeSet::new();
        for a in z.descents() {
            let y = if z.apply(a) == a + 1 {
                z.compose(&Perm::s(a))
            } else {
                Perm::s(a).compose(z).compose(&Perm::s(a))
            };
            for mut w in go(&y, memo) {
                w.push(a);
                out.insert(w);
            }
        }
        memo.insert(z.clone(), out.clone());
        out
    }
    go(z, &mut HashMap::new())
}

/// Commutation positions (1-based) of an unprimed involution word.
pub fn commutations(w: &[i64]) -> Vec<usize> {
    let mut z = Perm::identity();
    let mut out = Vec::new();
    for (k, &a) in w.iter().enumerate() {
        if z.apply(a) == a && z.apply(a + 1) == a + 1 {
            out.push(k + 1);
        }
        z = z.twisted(a);
    }
    out
}

/// `R⁺_inv(z)`: involution words with any subset of commutations primed.
pub fn primed_invol_words(z: &Perm) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for w in invol_words(z) {
        let comm = commutations(&w);
        for mask in 0u64..(1u64 << comm.len()) {
            let mut v = to_word(&w);
            for (bit, &pos) in comm.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    v[pos - 1] = v[pos - 1].add_prime();
                }
            }
            out.insert(v);
        }
    }
    out
}

/// The involution `z` with `w ∈ R⁺_inv(z)`, if any.
pub fn primed_word_involution(w: &Word) -> Option<Perm> {
    let u = letters(w);
    let z = evaluate(&u)?;
    let comm: BTreeSet<usize> = commutations(&u).into_iter().collect();
    for (k, l) in w.iter().enumerate() {
        if l.is_primed() && !comm.contains(&(k + 1)) {
            return None;
        }
    }
    Some(z)
}

fn hat_neighbors(w: &Word) -> Vec<Word> {
    let mut out = Vec::new();
    let m = w.len();
    for k in 0..m.saturating_sub(1) {
        if (w[k].ceil() - w[k + 1].ceil()).abs() > 1 {
            let mut v = w.clone();
            v.swap(k, k + 1);
            out.push(v);
        }
    }
    for k in 0..m.saturating_sub(2) {
        let (p, q, r) = (w[k], w[k + 1], w[k + 2]);
        if (p.ceil() - q.ceil()).abs() != 1 || q.is_primed() {
            continue;
        }
        let mut v = w.clone();
        if p.ceil() == r.ceil() {
            match (p.is_primed(), r.is_primed()) {
                (false, false) => {
                    v[k] = q;
                    v[k + 1] = p;
                    v[k + 2] = q;
                    out.push(v);
                }
                (true, false) => {
                    v[k] = q;
                    v[k + 1] = r;
                    v[k + 2] = q.add_prime();
                    out.push(v);
                }
                _ => {}
            }
        }
        // YXY' back to X'YX
        let mut v = w.clone();
        if !p.is_primed() && r.is_primed() && p.ceil() == r.ceil() {
            v[k] = q.add_prime();
            v[k + 1] = p;
            v[k + 2] = q;
            out.push(v);
        }
    }
    if m >= 1 {
        let mut v = w.clone();
        v[0] = w[0].toggle_prime();
        out.push(v);
    }
    if m >= 2 && !w[0].is_primed() && !w[1].is_primed() {
        let mut v = w.clone();
        v.swap(0, 1);
        out.push(v);
    }
    out
}

/// Closure of `w` under the relation `≡̂`.
pub fn hat_equiv_class(w: &Word) -> BTreeSet<Word> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for y in hat_neighbors(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// `γ_i(w) = s_{w_m} ⋯ s_{w_{i+1}}({w_i, w_i + 1})` for a 1-based position `i`.
pub fn gamma(w: &Word, i: usize) -> (i64, i64) {
    let mut a = w[i - 1].ceil();
    let mut b = a + 1;
    for l in &w[i..] {
        let s = Perm::s(l.ceil());
        a = s.apply(a);
        b = s.apply(b);
    }
    (a.min(b), a.max(b))
}

/// The cycles attached to the primed positions of `w`.
pub fn marked_cycles(w: &Word) -> BTreeSet<(i64, i64)> {
    (1..=w.len())
        .filter(|&i| w[i - 1].is_primed())
        .map(|i| gamma(w, i))
        .collect()
}

/// The involution code `ĉ_i(z) = |{j : z(j) ≤ i < j, z(i) > z(j)}|` over the support window.
pub fn involution_code(z: &Perm) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    if let Some((lo, hi)) = z.window() {
        for i in lo..=hi {
            let c = (i + 1..=hi)
                .filter(|&j| z.apply(j) <= i && z.apply(i) > z.apply(j))
                .count();
            out.insert(i, c);
        }
    }
    out
}

/// The code under the strict inequality `z(j) < i < j` as literally displayed; kept for comparison.
pub fn involution_code_strict(z: &Perm) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    if let Some((lo, hi)) = z.window() {
        for i in lo..=hi {
            let c = (i + 1..=hi)
                .filter(|&j| z.apply(j) < i && z.apply(i) > z.apply(j))
                .count();
            out.insert(i, c);
        }
    }
    out
}

fn transpose_of_sorted(code: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut c: Vec<usize> = code.filter(|&x| x > 0).collect();
    c.sort_by(|a, b| b.cmp(a));
    let top = c.first().copied().unwrap_or(0);
    (1..=top).map(|k| c.iter().filter(|&&x| x >= k).count()).collect()
}

/// `μ(z)`, the transpose of the sorted involution code.
pub fn involution_shape(z: &Perm) -> StrictPartition {
    let parts = transpose_of_sorted(involution_code(z).into_values());
    StrictPartition::new(parts).expect("involution shape is strict")
}

/// The shape produced by the strict-inequality code, as a plain partition.
pub fn involution_shape_strict(z: &Perm) -> Vec<usize> {
    transpose_of_sorted(involution_code_strict(z).into_values())
}

/// True when no `i1 < i2 < i3 < i4` has `π(i2) < π(i1) < π(i4) < π(i3)`.
pub fn is_vexillary(z: &Perm) -> bool {
    let Some((lo, hi)) = z.window() else {
        return true;
    };
    let v = z.one_line(lo - 1, hi + 1);
    let m = v.len();
    for a in 0..m {
        for b in a + 1..m {
            if v[b] >= v[a] {
                continue;
            }
            for c in b + 1..m {
                if v[c] <= v[a] {
                    continue;
                }
                for d in c + 1..m {
                    if v[a] < v[d] && v[d] < v[c] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The first forbidden consecutive pattern found in a primed involution word.
pub fn forbidden_pattern(w: &Word) -> Option<String> {
    let m = w.len();
    for k in 0..m.saturating_sub(1) {
        let (p, q) = (w[k], w[k + 1]);
        if p.ceil() == q.ceil() {
            return Some(format!("repeated letter {p}{q} at {}", k + 1));
        }
        if p.is_primed() && q.is_primed() && (p.ceil() - q.ceil()).abs() == 1 {
            return Some(format!("adjacent primed neighbours {p}{q} at {}", k + 1));
        }
    }
    for k in 0..m.saturating_sub(2) {
        let (p, q, r) = (w[k], w[k + 1], w[k + 2]);
        if p.ceil() != r.ceil() {
            continue;
        }
        let primes = (p.is_primed(), q.is_primed(), r.is_primed());
        let mild = matches!(
            primes,
            (false, false, false) | (true, false, false) | (false, false, true)
        );
        if !mild {
            return Some(format!("pattern {p}{q}{r} at {}", k + 1));
        }
        if k == 0 {
            return Some(format!("initial pattern {p}{q}{r}"));
        }
        if (p.ceil() - q.ceil()).abs() != 1 {
            return Some(format!("pattern {p}{q}{r} at {} with |X-Y| > 1", k + 1));
        }
    }
    if m >= 2 {
        let (p, q) = (w[0], w[1]);
        if !p.is_primed() && q.is_primed() && (q.ceil() - p.ceil()).abs() == 1 {
            return Some(format!("initial pattern {p}{q}"));
        }
    }
    None
}
