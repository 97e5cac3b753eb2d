use std::collections::{BTreeSet, VecDeque};

use markov_quivers::classify::{descend, in_fundamental_domain, Verdict};
use markov_quivers::hochschild::{dim_h1, dim_h1_closed_form, AcyclicQuiver3};
use markov_quivers::spectral::{cartan, char_poly, coxeter};
use markov_quivers::{acyclic_by_constant, cyclic_by_band, GroupWord, Letter, Permutation, Triple, Vertex};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

/// Every triple reachable from `t` without an entry exceeding `limit` in
/// absolute value. Walks stop expanding at triples with a non-positive
/// entry.
fn boxed_orbit(t: &Triple, limit: &BigInt) -> BTreeSet<Triple> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([t.clone()]);
    while let Some(u) = queue.pop_front() {
        if !seen.insert(u.clone()) || u.has_nonpositive_entry() {
            continue;
        }
        for letter in Letter::ALL {
            let next = letter.apply(&u);
            if next.entries().iter().all(|e| e.abs() <= *limit) && !seen.contains(&next) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Brute-force acyclicity: some orbit element inside the box has an entry
/// `<= 0`. Descent never increases the largest entry, so the box of the
/// starting maximum is enough.
fn acyclic_by_search(t: &Triple) -> bool {
    boxed_orbit(t, &t.max_entry().clone())
        .iter()
        .any(Triple::has_nonpositive_entry)
}

#[test]
fn descent_matches_exhaustive_search() {
    for x in 0..=12 {
        for y in 0..=12 {
            for z in 0..=12 {
                let t = Triple::new(x, y, z);
                let expected = acyclic_by_search(&t);
                let got = descend(&t).unwrap().verdict == Verdict::Acyclic;
                assert_eq!(got, expected, "{t}");
                assert_eq!(acyclic_by_constant(&t).unwrap(), expected, "{t}");
            }
        }
    }
}

#[test]
fn fundamental_point_is_unique_in_box() {
    for x in 2..=14 {
        for y in 2..=14 {
            for z in 2..=14 {
                let t = Triple::new(x, y, z);
                if !cyclic_by_band(&t).unwrap() {
                    continue;
                }
                let in_f: Vec<Triple> = boxed_orbit(&t, &t.max_entry().clone())
                    .into_iter()
                    .filter(in_fundamental_domain)
                    .collect();
                assert_eq!(in_f.len(), 1, "{t}: {in_f:?}");
                assert_eq!(descend(&t).unwrap().representative, in_f[0], "{t}");
            }
        }
    }
}

#[test]
fn markov_triples_by_tree_search() {
    // Markov triples with x >= y >= z and x <= 1000, grown from (3,3,3) by
    // raising the smallest entry.
    let mut found = BTreeSet::new();
    let mut stack = vec![Triple::new(3, 3, 3)];
    let limit = BigInt::from(1000);
    while let Some(t) = stack.pop() {
        if t.max_entry() > &limit || !found.insert(t.sorted_descending()) {
            continue;
        }
        for v in Vertex::ALL {
            let u = t.mutate(v);
            if u.max_entry() > t.max_entry() {
                stack.push(u);
            }
        }
    }
    // 3 times the classical Markov numbers 1, 2, 5, 13, 29, 34, 89, 169, 194, 233, 433.
    let maxima: BTreeSet<BigInt> = found.iter().map(|t| t.x.clone()).collect();
    let want: BTreeSet<BigInt> = [3, 6, 15, 39, 87, 102, 267, 507, 582, 699]
        .into_iter()
        .map(BigInt::from)
        .collect();
    assert_eq!(maxima, want);
    for t in &found {
        assert_eq!(descend(t).unwrap().representative, Triple::new(3, 3, 3));
    }
}

fn triple(range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = Triple> {
    (range.clone(), range.clone(), range).prop_map(|(x, y, z)| Triple::new(x, y, z))
}

fn letter() -> impl Strategy<Value = Letter> {
    (0..6usize).prop_map(|i| Letter::ALL[i])
}

fn vertex() -> impl Strategy<Value = Vertex> {
    (0..3usize).prop_map(Vertex::from_index)
}

fn permutation() -> impl Strategy<Value = Permutation> {
    (0..6usize).prop_map(|i| Permutation::all()[i])
}

proptest! {
    #[test]
    fn constant_is_invariant(t in triple(-1_000_000..=1_000_000),
                             word in prop::collection::vec(letter(), 0..24)) {
        let word = GroupWord(word);
        prop_assert_eq!(t.apply_word(&word).markov_constant(), t.markov_constant());
    }

    #[test]
    fn word_inverse_undoes_word(t in triple(-1000..=1000),
                                word in prop::collection::vec(letter(), 0..16)) {
        let word = GroupWord(word);
        prop_assert_eq!(t.apply_word(&word).apply_word(&word.inverse()), t);
    }

    #[test]
    fn mutations_are_involutions(t in triple(-1_000_000..=1_000_000), v in vertex()) {
        prop_assert_eq!(t.mutate(v).mutate(v), t);
    }

    #[test]
    fn permutations_conjugate_mutations(t in triple(-10_000..=10_000), v in vertex(),
                                        sigma in permutation()) {
        prop_assert_eq!(
            t.mutate(v).permute(&sigma),
            t.permute(&sigma).mutate(sigma.apply_to_vertex(v))
        );
    }

    #[test]
    fn band_agrees_with_constant(t in triple(0..=1_000_000)) {
        prop_assert_eq!(cyclic_by_band(&t).unwrap(), !acyclic_by_constant(&t).unwrap());
    }

    #[test]
    fn witness_reaches_representative(t in triple(0..=100_000)) {
        let c = descend(&t).unwrap();
        prop_assert_eq!(t.apply_word(&c.witness), c.representative.clone());
        match c.verdict {
            Verdict::Cyclic => prop_assert!(in_fundamental_domain(&c.representative)),
            Verdict::Acyclic => prop_assert!(c.representative.has_nonpositive_entry()),
        }
    }

    #[test]
    fn coxeter_polynomial_shape(t in triple(-1000..=1000)) {
        let p = char_poly(&coxeter(&cartan(&t)));
        let s = t.markov_constant() - 2;
        prop_assert!(p.is_palindromic());
        prop_assert_eq!(&p.coeffs[1], &(1 - s));
    }

    #[test]
    fn closed_form_matches_path_count(r in 0..60i64, s in 0..60i64, t in 0..60i64) {
        let q = AcyclicQuiver3::new(r, s, t).unwrap();
        if let Some(closed) = dim_h1_closed_form(&q) {
            prop_assert_eq!(closed, dim_h1(&q));
        }
    }

    #[test]
    fn json_round_trip(t in triple(-1_000_000..=1_000_000)) {
        let text = serde_json::to_string(&t).unwrap();
        let back: Triple = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, t);
    }
}
