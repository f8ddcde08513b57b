mod common;

use std::collections::BTreeSet;

use rigid_invariants::partition::partitions_of;
use rigid_invariants::rigidity::{enumerate_pairs, enumerate_rigid, is_rigid, is_valid};
use rigid_invariants::symbol::{symbol_of, symbol_of_pair};
use rigid_invariants::{fingerprint, Family, TheoryLabel};

fn theories(max_rank: u32) -> impl Iterator<Item = TheoryLabel> {
    Family::ALL
        .into_iter()
        .flat_map(move |f| (0..=max_rank).map(move |r| TheoryLabel::new(f, r)))
}

#[test]
fn partitions_match_brute_force() {
    for n in 0..=14 {
        let ours: Vec<Vec<u32>> = partitions_of(n)
            .into_iter()
            .map(|p| p.into_parts())
            .collect();
        assert_eq!(ours, common::all_partitions(n), "n = {n}");
    }
}

#[test]
fn rigid_partitions_match_filter() {
    for theory in theories(8) {
        let f = theory.family.letter();
        let want: Vec<Vec<u32>> = common::all_partitions(theory.total_boxes())
            .into_iter()
            .filter(|p| common::family_rigid(p, f))
            .collect();
        let got: Vec<Vec<u32>> = enumerate_rigid(theory)
            .into_iter()
            .map(|p| p.into_parts())
            .collect();
        assert_eq!(got, want, "{theory}");
    }
}

#[test]
fn predicates_match_filter() {
    for theory in theories(6) {
        let f = theory.family.letter();
        for p in partitions_of(theory.total_boxes()) {
            assert_eq!(
                is_valid(&p, theory),
                common::family_valid(p.parts(), f),
                "{theory} {p}"
            );
            assert_eq!(
                is_rigid(&p, theory),
                common::family_rigid(p.parts(), f),
                "{theory} {p}"
            );
        }
    }
}

#[test]
fn pairs_match_filter() {
    for theory in theories(6) {
        let got: BTreeSet<(Vec<u32>, Vec<u32>)> = enumerate_pairs(theory)
            .into_iter()
            .map(|x| (x.lambda1.into_parts(), x.lambda2.into_parts()))
            .collect();
        let want: BTreeSet<(Vec<u32>, Vec<u32>)> =
            common::rigid_pairs(theory.family.letter(), theory.rank)
                .into_iter()
                .map(|(a, b, _, _)| (a, b))
                .collect();
        assert_eq!(got, want, "{theory}");
    }
}

#[test]
fn symbols_match_reference() {
    for theory in theories(7) {
        let f = theory.family.letter();
        for p in enumerate_rigid(theory) {
            let s = symbol_of(&p, theory.family).unwrap();
            assert_eq!(
                (s.top, s.bottom),
                common::symbol(p.parts(), f),
                "{theory} {p}"
            );
        }
    }
}

#[test]
fn pair_invariants_match_reference() {
    for theory in theories(6) {
        for pair in enumerate_pairs(theory) {
            let (a, b) = (pair.lambda1.parts(), pair.lambda2.parts());
            let ka = pair.signature.first.family().letter();
            let kb = pair.signature.second.family().letter();
            let s = symbol_of_pair(&pair).unwrap();
            assert_eq!(
                (s.top, s.bottom),
                common::pair_symbol(a, b, ka, kb),
                "{theory} {pair}"
            );
            let fp = fingerprint(&pair).unwrap();
            let want = common::fingerprint(a, b, theory.family.letter(), true).unwrap();
            assert_eq!(
                (fp.alpha.into_parts(), fp.beta.into_parts()),
                want,
                "{theory} {pair}"
            );
        }
    }
}

#[test]
fn pair_counts_are_stable() {
    let counts = |f: Family| -> Vec<usize> {
        (1..=6)
            .map(|r| enumerate_pairs(TheoryLabel::new(f, r)).len())
            .collect()
    };
    assert_eq!(counts(Family::B), vec![1, 3, 4, 9, 14, 24]);
    assert_eq!(counts(Family::C), vec![2, 5, 8, 14, 24, 38]);
    assert_eq!(counts(Family::D), vec![1, 4, 7, 15, 22, 39]);
}
