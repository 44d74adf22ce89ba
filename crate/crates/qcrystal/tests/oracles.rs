//! Brute-force cross-checks against the library's direct constructions.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::One;

use qcrystal::alphabet::{Letter, StrictPartition, Word};
use qcrystal::characters::{character, expand_in_schur_q, schur_p, schur_q, Poly};
use qcrystal::crystal::{Enumerable, StandardCrystal, TensorPower};
use qcrystal::factorization::IncrCrystal;
use qcrystal::insertion::{eg_fiber, eg_insert, mixed_insert};
use qcrystal::involutions::{invol_words, involutions_of, is_vexillary, Perm};
use qcrystal::tableau::{descents, descents_by_rule, dual_equiv, semistandard_tableaux, standard_tableaux};
use qcrystal::words::{word_weight, WordCrystal};

#[test]
fn semistandard_enumeration_matches_brute_force() {
    for l in common::sp("3,2,1").contained() {
        for n in 1..=3 {
            for diag in [true, false] {
                let fast: BTreeSet<_> = semistandard_tableaux(&l, &StrictPartition::empty(), n, diag)
                    .into_iter()
                    .collect();
                let slow: BTreeSet<_> = common::brute_shtab(&l, n, diag).into_iter().collect();
                assert_eq!(fast, slow, "({l}) n={n} diag={diag}");
            }
        }
    }
}

#[test]
fn schur_q_matches_pfaffian() {
    for l in common::sp("4,3,1").contained() {
        for n in 1..=4 {
            let q = schur_q(&l, n);
            assert_eq!(q, common::pfaffian_q(&l, n), "({l}) n={n}");
            assert_eq!(q, schur_p(&l, n).scale(&(BigInt::one() << l.len())));
        }
    }
}

#[test]
fn small_schur_p() {
    let mut want = Poly::zero(2);
    want.add_term(vec![2, 1], BigInt::one());
    want.add_term(vec![1, 2], BigInt::one());
    assert_eq!(schur_p(&common::sp("2,1"), 2), want);
}

/// `y ↦ y s_a` when `s_a` commutes with `y`, else `s_a y s_a`; only ascents are allowed.
fn twisted_step(y: &[usize], a: usize) -> Option<Vec<usize>> {
    if y[a] > y[a + 1] {
        return None;
    }
    let s = |i: usize| {
        if i == a {
            a + 1
        } else if i == a + 1 {
            a
        } else {
            i
        }
    };
    let conj: Vec<usize> = (0..y.len()).map(|i| s(y[s(i)])).collect();
    if conj == y {
        Some((0..y.len()).map(|i| y[s(i)]).collect())
    } else {
        Some(conj)
    }
}

#[test]
fn involution_words_by_brute_force() {
    let size = 5;
    let mut found: BTreeMap<Vec<usize>, BTreeSet<Vec<i64>>> = BTreeMap::new();
    let id: Vec<usize> = (0..=size).collect();
    let mut layer = vec![(id.clone(), Vec::<i64>::new())];
    found.entry(id).or_default().insert(Vec::new());
    while !layer.is_empty() {
        let mut next = Vec::new();
        for (y, w) in &layer {
            for a in 1..size {
                if let Some(v) = twisted_step(y, a) {
                    let mut w2 = w.clone();
                    w2.push(a as i64);
                    found.entry(v.clone()).or_default().insert(w2.clone());
                    next.push((v, w2));
                }
            }
        }
        layer = next;
    }
    let zs = involutions_of(size);
    assert_eq!(found.len(), zs.len());
    for z in zs {
        let key: Vec<usize> = std::iter::once(0)
            .chain(z.one_line(1, size as i64).into_iter().map(|v| v as usize))
            .collect();
        assert_eq!(invol_words(&z), found[&key], "{z}");
        assert!(found[&key].iter().all(|w| w.len() == z.hat_length()));
    }
}

#[test]
fn descents_and_dual_equivalence_exhaustive() {
    for size in 1..=5 {
        for l in StrictPartition::all_of_size(size) {
            for t in standard_tableaux(&l, true) {
                assert_eq!(descents(&t), descents_by_rule(&t), "{t}");
                for i in -1..size as i64 - 1 {
                    assert_eq!(dual_equiv(&dual_equiv(&t, i), i), t);
                }
            }
        }
    }
}

#[test]
fn mixed_insertion_is_injective() {
    for m in 0..=4 {
        let words = WordCrystal::plus(2, m).elements();
        let mut seen = BTreeSet::new();
        for w in &words {
            let r = mixed_insert(w, 2).unwrap();
            assert!(r.p.is_semistandard());
            assert_eq!(r.p.weight(2), word_weight(w, 2));
            assert!(seen.insert((r.p, r.q)), "collision at {w}");
        }
        assert_eq!(seen.len(), 4usize.pow(m as u32));
    }
}

#[test]
fn simple_reflection_fiber() {
    for p in 1..=3 {
        for n in 1..=3 {
            let z = Perm::s(p);
            let elems = IncrCrystal::new(z.clone(), n).elements();
            assert_eq!(elems.len(), 2 * n);
            let top = eg_insert(&elems[0]).unwrap().p;
            assert_eq!(eg_fiber(&z, n, &top).len(), 2 * n);
        }
    }
}

#[test]
fn two_letter_tensor_expansion() {
    let c = TensorPower::new(StandardCrystal::plus(2), 2);
    let exp = expand_in_schur_q(&character(&c)).unwrap();
    assert_eq!(exp, BTreeMap::from([(common::sp("2"), BigInt::from(2))]));
}

#[test]
fn word_characters_are_powers() {
    for n in 1..=3 {
        let mut q1 = Poly::zero(n);
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            q1.add_term(e, BigInt::from(2));
        }
        let mut pow = Poly::one(n);
        for m in 0..=4 {
            assert_eq!(character(&WordCrystal::plus(n, m)), pow, "n={n} m={m}");
            pow = &pow * &q1;
        }
    }
}

#[test]
fn vexillary_by_pattern_scan() {
    for z in involutions_of(6) {
        assert_eq!(is_vexillary(&z), common::brute_vexillary(&z, 6), "{z}");
    }
}

#[test]
fn word_parsing_is_stable() {
    let w: Word = "3' 1 2".parse().unwrap();
    assert_eq!(w.0, vec![Letter::primed(3), Letter::unprimed(1), Letter::unprimed(2)]);
}
