mod common;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use qcrystal::alphabet::{Letter, StrictPartition, Word};
use qcrystal::characters::{expand_in_schur_q, from_expansion, Poly};
use qcrystal::crystal::{sigma, Crystal, Enumerable, Label, StandardCrystal, Tensor};
use qcrystal::factorization::{ock, Factorization, IncrCrystal};
use qcrystal::insertion::{eg_insert, mixed_insert};
use qcrystal::involutions::{involutions_of, primed_invol_words, primed_word_involution, Perm};
use qcrystal::tableau::{descents, descents_by_rule, dual_equiv, standard_tableaux, ShTabCrystal, ShiftedTableau};
use qcrystal::words::{word_weight, WordCrystal};

fn letter(n: i64) -> impl Strategy<Value = Letter> {
    (1..=n, any::<bool>()).prop_map(|(k, p)| Letter::new(k, p))
}

fn primed_word(n: i64, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(letter(n), 0..=max_len).prop_map(Word)
}

fn shape() -> impl Strategy<Value = StrictPartition> {
    let shapes = common::sp("4,2,1").contained();
    (0..shapes.len()).prop_map(move |i| shapes[i].clone())
}

fn shtab() -> impl Strategy<Value = (ShTabCrystal, ShiftedTableau)> {
    (shape(), 1..=3usize, any::<prop::sample::Index>()).prop_filter_map("empty", |(l, n, ix)| {
        let c = ShTabCrystal::new(l, n);
        let elems = c.elements();
        (!elems.is_empty()).then(|| {
            let t = ix.get(&elems).clone();
            (c, t)
        })
    })
}

fn incr() -> impl Strategy<Value = (IncrCrystal, Factorization)> {
    let zs = involutions_of(4);
    (0..zs.len(), 1..=3usize, any::<prop::sample::Index>()).prop_filter_map("empty", move |(k, n, ix)| {
        let c = IncrCrystal::new(zs[k].clone(), n);
        let elems = c.elements();
        (!elems.is_empty()).then(|| {
            let a = ix.get(&elems).clone();
            (c, a)
        })
    })
}

fn standard_tab() -> impl Strategy<Value = ShiftedTableau> {
    let all: Vec<ShiftedTableau> = StrictPartition::all_of_size(5)
        .into_iter()
        .chain(StrictPartition::all_of_size(4))
        .flat_map(|l| standard_tableaux(&l, true))
        .collect();
    any::<prop::sample::Index>().prop_map(move |ix| ix.get(&all).clone())
}

fn poly(n: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0..3u32, n), -5..=5i64), 0..6).prop_map(move |ts| {
        let mut p = Poly::zero(n);
        for (e, c) in ts {
            p.add_term(e, BigInt::from(c));
        }
        p
    })
}

/// `f_i b = c` exactly when `e_i c = b`, for every label.
fn inverse_pair<C: Crystal>(c: &C, b: &C::Elem) -> Result<(), TestCaseError> {
    for i in c.labels() {
        if let Some(x) = c.lower(i, b) {
            prop_assert_eq!(c.raise(i, &x), Some(b.clone()), "e_{} f_{}", i, i);
        }
        if let Some(x) = c.raise(i, b) {
            prop_assert_eq!(c.lower(i, &x), Some(b.clone()), "f_{} e_{}", i, i);
        }
    }
    Ok(())
}

fn sigma_involutive<C: Crystal>(c: &C, b: &C::Elem) -> Result<(), TestCaseError> {
    for i in 1..c.rank() {
        let s = sigma(c, Label::Index(i), b);
        prop_assert_eq!(&sigma(c, Label::Index(i), &s), b);
        prop_assert_eq!(c.weight(&s).len(), c.weight(b).len());
    }
    Ok(())
}

proptest! {
    #[test]
    fn words_operators_invert(w in primed_word(4, 6)) {
        let c = WordCrystal::plus(4, w.len());
        inverse_pair(&c, &w)?;
        sigma_involutive(&c, &w)?;
    }

    #[test]
    fn tensor_operators_invert(x in letter(3), y in letter(3)) {
        let b = StandardCrystal::plus(3);
        let c = Tensor::new(b, b).unwrap();
        inverse_pair(&c, &(x, y))?;
        sigma_involutive(&c, &(x, y))?;
    }

    #[test]
    fn shtab_operators_invert((c, t) in shtab()) {
        inverse_pair(&c, &t)?;
        sigma_involutive(&c, &t)?;
        prop_assert!(t.is_semistandard());
    }

    #[test]
    fn incr_operators_invert((c, a) in incr()) {
        inverse_pair(&c, &a)?;
        sigma_involutive(&c, &a)?;
    }

    #[test]
    fn insertion_invariants((_c, a) in incr()) {
        let r = eg_insert(&a).unwrap();
        prop_assert_eq!(r.p.shape(), r.q.shape());
        prop_assert!(r.p.is_increasing());
        prop_assert!(r.q.is_semistandard());
        prop_assert_eq!(r.q.weight(a.n()), a.weight());
        prop_assert!(r.q.primed_diagonal().is_empty() || a.concat().iter().any(|l| l.is_primed()));
    }

    #[test]
    fn mixed_insertion_shapes(w in primed_word(3, 5)) {
        let r = mixed_insert(&w, 3).unwrap();
        prop_assert_eq!(r.p.shape(), r.q.shape());
        prop_assert_eq!(r.p.size(), w.len());
        prop_assert!(r.p.is_semistandard());
        prop_assert_eq!(r.p.weight(3), word_weight(&w, 3));
        prop_assert!(r.q.is_increasing());
    }

    #[test]
    fn poly_ring_laws(a in poly(3), b in poly(3), c in poly(3)) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn expansion_round_trip(coeffs in prop::collection::vec(0..4i64, 8)) {
        let n = 3;
        let shapes: Vec<StrictPartition> =
            common::sp("3,2,1").contained().into_iter().filter(|l| l.len() <= n).collect();
        let exp: BTreeMap<StrictPartition, BigInt> = shapes
            .iter()
            .zip(coeffs)
            .filter(|(_, k)| *k != 0)
            .map(|(l, k)| (l.clone(), BigInt::from(k)))
            .collect();
        let f = from_expansion(&exp, n);
        prop_assert!(f.in_sym_q());
        prop_assert_eq!(expand_in_schur_q(&f).unwrap(), exp);
    }

    #[test]
    fn dual_equivalence_involutive(t in standard_tab()) {
        for i in -1..t.size() as i64 - 1 {
            let d = dual_equiv(&t, i);
            prop_assert!(d.is_standard());
            prop_assert_eq!(d.shape(), t.shape());
            prop_assert_eq!(dual_equiv(&d, i), t.clone());
        }
        prop_assert_eq!(descents(&t), descents_by_rule(&t));
    }

    #[test]
    fn ock_involutive(k in 0..26usize, pick in any::<prop::sample::Index>()) {
        let z = involutions_of(5)[k].clone();
        let words: Vec<Word> = primed_invol_words(&z).into_iter().collect();
        let w = pick.get(&words);
        for i in -1..w.len() as i64 - 1 {
            let v = ock(w, i);
            prop_assert_eq!(&ock(&v, i), w);
            prop_assert_eq!(primed_word_involution(&v), Some(z.clone()));
        }
    }

    #[test]
    fn standardize_idempotent((_c, t) in shtab()) {
        let s = t.standardize();
        prop_assert!(s.is_standard());
        prop_assert_eq!(s.standardize(), s.clone());
        prop_assert_eq!(s.shape(), t.shape());
    }

    #[test]
    fn text_round_trips(w in primed_word(9, 6), (_c, t) in shtab(), (_d, a) in incr(), k in 0..76usize) {
        for l in w.iter() {
            prop_assert_eq!(l.to_string().parse::<Letter>().unwrap(), *l);
        }
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w.clone());
        prop_assert_eq!(t.to_string().parse::<ShiftedTableau>().unwrap(), t);
        prop_assert_eq!(a.to_string().parse::<Factorization>().unwrap(), a);
        let z = involutions_of(6)[k].clone();
        prop_assert_eq!(z.to_string().parse::<Perm>().unwrap(), z);
    }
}
