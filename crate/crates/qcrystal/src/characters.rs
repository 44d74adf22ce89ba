//! Sparse integer polynomials and Schur P/Q machinery.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::alphabet::{StrictPartition, Weight};
use crate::crystal::{is_highest, Category, Crystal, Enumerable};
use crate::error::CrystalError;
use crate::factorization::IncrCrystal;
use crate::involutions::Perm;
use crate::tableau::semistandard_tableaux;

/// A polynomial in `x_1, …, x_n` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Poly {
    pub fn zero(n: usize) -> Poly {
        Poly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Poly {
        Poly::monomial(vec![0; n], BigInt::one())
    }

    pub fn monomial(exps: Vec<u32>, c: BigInt) -> Poly {
        let mut p = Poly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Poly {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Poly::monomial(e, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        assert_eq!(exps.len(), self.n, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        let mut p = Poly::zero(self.n);
        for (e, v) in &self.terms {
            p.add_term(e.clone(), v * c);
        }
        p
    }

    /// The lexicographically largest exponent and its coefficient.
    pub fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Value at `x_1 = … = x_n = 1`.
    pub fn at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn map_exps(&self, f: impl Fn(&[u32]) -> (Vec<u32>, bool)) -> Poly {
        let mut p = Poly::zero(self.n);
        for (e, v) in &self.terms {
            let (e2, negate) = f(e);
            p.add_term(e2, if negate { -v } else { v.clone() });
        }
        p
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> Poly {
        self.map_exps(|e| {
            let mut e = e.to_vec();
            e.swap(i - 1, j - 1);
            (e, false)
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|i| self.swap_vars(i, i + 1) == *self)
    }

    /// `f(x_1, -x_1, x_3, …, x_n)`.
    pub fn substitute_opposite(&self) -> Poly {
        self.map_exps(|e| {
            let mut e = e.to_vec();
            let b = e[1];
            e[0] += b;
            e[1] = 0;
            (e, b % 2 == 1)
        })
    }

    pub fn in_sym(&self) -> bool {
        self.is_symmetric()
    }

    pub fn in_sym_p(&self) -> bool {
        if self.n < 2 {
            return true;
        }
        self.is_symmetric() && self.substitute_opposite().terms.keys().all(|e| e[0] == 0)
    }

    pub fn in_sym_q(&self) -> bool {
        let two = BigInt::from(2);
        self.in_sym_p() && self.terms.iter().all(|(e, c)| e[0] == 0 || (c % &two).is_zero())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let key: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                let val = match i64::try_from(c) {
                    Ok(v) => serde_json::Value::from(v),
                    Err(_) => serde_json::Value::from(c.to_string()),
                };
                (key.join(","), val)
            })
            .collect();
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for Poly {
    /// Terms `c * x1^a1 x2^a2 …` in decreasing lex order, joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a > 0)
                    .map(|(i, &a)| {
                        if a == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{a}", i + 1)
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else {
                    format!("{c} * {}", vars.join(" "))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, other: &Poly) -> Poly {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&BigInt::from(-1))
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, other: &Poly) -> Poly {
        self + &(-other)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, other: &Poly) -> Poly {
        assert_eq!(self.n, other.n, "variable count");
        let mut p = Poly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }
}

pub fn weight_monomial(wt: &Weight) -> Vec<u32> {
    wt.iter()
        .map(|&x| u32::try_from(x).expect("nonnegative weight"))
        .collect()
}

/// `Σ x^{wt(b)}` over an enumerable model.
pub fn character<C: Enumerable>(c: &C) -> Poly {
    let mut p = Poly::zero(c.rank());
    for b in c.elements() {
        p.add_term(weight_monomial(&c.weight(&b)), BigInt::one());
    }
    p
}

fn tableau_polynomial(mu: &StrictPartition, n: usize, diag_primes: bool) -> Poly {
    let mut p = Poly::zero(n);
    if mu.len() > n {
        return p;
    }
    for t in semistandard_tableaux(mu, &StrictPartition::empty(), n, diag_primes) {
        p.add_term(weight_monomial(&t.weight(n)), BigInt::one());
    }
    p
}

/// `Q_μ(x_1, …, x_n)` as the generating function of `ShTab⁺_n(μ)`.
pub fn schur_q(mu: &StrictPartition, n: usize) -> Poly {
    tableau_polynomial(mu, n, true)
}

/// `P_μ(x_1, …, x_n)` as the generating function of `ShTab_n(μ)`.
pub fn schur_p(mu: &StrictPartition, n: usize) -> Poly {
    tableau_polynomial(mu, n, false)
}

/// `s_λ(x_1, …, x_n)` from semistandard Young tableaux; `lambda` weakly decreasing.
pub fn schur_s(lambda: &[usize], n: usize) -> Poly {
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = lambda.iter().map(|&len| vec![0; len]).collect();
    let mut p = Poly::zero(n);
    fn go(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, n: usize, p: &mut Poly) {
        if k == cells.len() {
            let mut e = vec![0u32; n];
            for v in grid.iter().flatten() {
                e[*v as usize - 1] += 1;
            }
            p.add_term(e, BigInt::one());
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col).max(1)..=n as u32 {
            grid[r][c] = v;
            go(k + 1, cells, grid, n, p);
        }
    }
    go(0, &cells, &mut grid, n, &mut p);
    p
}

/// `q_λ = Q_(λ_1) Q_(λ_2) ⋯`.
pub fn one_row_product(lambda: &[usize], n: usize) -> Poly {
    lambda.iter().filter(|&&p| p > 0).fold(Poly::one(n), |acc, &p| {
        &acc * &schur_q(&StrictPartition::new(vec![p]).unwrap(), n)
    })
}

fn as_strict_partition(e: &[u32]) -> Option<StrictPartition> {
    let parts: Vec<usize> = e.iter().map(|&x| x as usize).collect();
    let nonzero: Vec<usize> = parts.iter().copied().take_while(|&x| x > 0).collect();
    if parts[nonzero.len()..].iter().any(|&x| x > 0) {
        return None;
    }
    StrictPartition::new(nonzero).ok()
}

/// Coefficients of `f` in the Schur Q basis, found by peeling off lex-leading terms.
pub fn expand_in_schur_q(f: &Poly) -> Result<BTreeMap<StrictPartition, BigInt>, CrystalError> {
    let n = f.nvars();
    let mut rest = f.clone();
    let mut cache: HashMap<StrictPartition, Poly> = HashMap::new();
    let mut out = BTreeMap::new();
    while let Some((e, c)) = rest.leading() {
        let lambda = as_strict_partition(e)
            .ok_or_else(|| CrystalError::Invalid(format!("not Schur-Q-decomposable: leading exponent {e:?}")))?;
        let unit = BigInt::one() << lambda.len();
        if !(c % &unit).is_zero() {
            return Err(CrystalError::Invalid(format!(
                "not Schur-Q-decomposable: coefficient {c} of x^{e:?} is not divisible by {unit}"
            )));
        }
        let k = c / &unit;
        let q = cache.entry(lambda.clone()).or_insert_with(|| schur_q(&lambda, n));
        rest = &rest - &q.scale(&k);
        out.insert(lambda, k);
    }
    Ok(out)
}

/// `ĝ_z(x_1, …, x_n)` as the character of `Incr⁺_n(z)`.
pub fn inv_stanley(z: &Perm, n: usize) -> Poly {
    character(&IncrCrystal::new(z.clone(), n))
}

/// The Schur Q expansion of `ĝ_z` read off from q⁺_n-highest weight elements.
pub fn expansion_by_highest(z: &Perm, n: usize) -> Result<BTreeMap<StrictPartition, BigInt>, CrystalError> {
    let c = IncrCrystal::new(z.clone(), n);
    let mut out: BTreeMap<StrictPartition, BigInt> = BTreeMap::new();
    for a in c.elements() {
        if is_highest(&c, &a, Category::QPlus) {
            let e = weight_monomial(&c.weight(&a));
            let lambda = as_strict_partition(&e)
                .ok_or_else(|| CrystalError::Invalid(format!("highest weight {e:?} is not a strict partition")))?;
            *out.entry(lambda).or_default() += 1;
        }
    }
    Ok(out)
}

/// `Σ coeff · Q_λ`.
pub fn from_expansion(exp: &BTreeMap<StrictPartition, BigInt>, n: usize) -> Poly {
    exp.iter()
        .fold(Poly::zero(n), |acc, (lambda, k)| &acc + &schur_q(lambda, n).scale(k))
}

pub fn format_expansion(exp: &BTreeMap<StrictPartition, BigInt>) -> String {
    if exp.is_empty() {
        return "0".to_string();
    }
    exp.iter()
        .rev()
        .map(|(lambda, k)| format!("({lambda}): {k}"))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn all_nonnegative(exp: &BTreeMap<StrictPartition, BigInt>) -> bool {
    exp.values().all(|k| !k.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    #[test]
    fn q_is_power_of_two_times_p() {
        for mu in sp("3,2,1").contained() {
            for n in 1..=3 {
                let lhs = schur_q(&mu, n);
                let rhs = schur_p(&mu, n).scale(&(BigInt::one() << mu.len()));
                assert_eq!(lhs, rhs, "{mu} n={n}");
            }
        }
    }

    #[test]
    fn small_values() {
        let q = schur_q(&sp("3"), 1);
        assert_eq!(q, Poly::monomial(vec![3], 2.into()));
        let p = schur_p(&sp("2,1"), 2);
        let want = &Poly::monomial(vec![2, 1], 1.into()) + &Poly::monomial(vec![1, 2], 1.into());
        assert_eq!(p, want);
        assert_eq!(schur_q(&StrictPartition::empty(), 3), Poly::one(3));
    }

    #[test]
    fn membership() {
        assert!(schur_q(&sp("2,1"), 3).in_sym_q());
        let f = &Poly::var(2, 1) + &Poly::var(2, 2);
        assert!(f.in_sym());
        assert!(!f.in_sym_q());
        let z = Poly::zero(3);
        assert!(z.in_sym() && z.in_sym_p() && z.in_sym_q());
        assert!(!Poly::var(2, 1).in_sym());
        assert!(Poly::one(1).in_sym_q());
        assert!(!Poly::var(1, 1).in_sym_q());
    }

    #[test]
    fn peeling() {
        let q21 = schur_q(&sp("2,1"), 3);
        assert_eq!(
            expand_in_schur_q(&q21).unwrap(),
            BTreeMap::from([(sp("2,1"), BigInt::one())])
        );
        let q = one_row_product(&[2, 1], 3);
        assert_eq!(expand_in_schur_q(&q).unwrap()[&sp("2,1")], BigInt::one());
        let x = &Poly::var(2, 1) + &Poly::var(2, 2);
        let sq = (&x * &x).scale(&4.into());
        let exp = expand_in_schur_q(&sq).unwrap();
        assert_eq!(exp, BTreeMap::from([(sp("2"), BigInt::from(2))]));
        assert_eq!(from_expansion(&exp, 2), sq);
        assert!(expand_in_schur_q(&Poly::var(2, 1)).is_err());
    }

    #[test]
    fn schur_s_small() {
        let s = schur_s(&[1, 1], 3);
        assert_eq!(s.at_ones(), BigInt::from(3));
        assert!(s.in_sym());
        assert_eq!(schur_s(&[2], 2).terms().len(), 3);
    }
}
