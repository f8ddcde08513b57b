use proptest::prelude::*;

use rigid_invariants::fingerprint::{sp_image, sp_map, SignConvention};
use rigid_invariants::rigidity::enumerate_rigid;
use rigid_invariants::symbol::{symbol_of, symbol_of_padded};
use rigid_invariants::{Family, Partition, Symbol, TheoryLabel};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..8, 0..10).prop_map(Partition::from_unsorted)
}

fn symbol() -> impl Strategy<Value = Symbol> {
    (
        prop::collection::vec(0u32..5, 0..6),
        prop::collection::vec(0u32..5, 0..6),
    )
        .prop_map(|(mut t, mut b)| {
            t.sort_unstable();
            b.sort_unstable();
            Symbol::new(t, b)
        })
}

fn sign() -> impl Strategy<Value = SignConvention> {
    prop_oneof![
        Just(SignConvention::PartialSum),
        Just(SignConvention::Position),
        Just(SignConvention::PositionShifted),
    ]
}

fn rigid_with_family() -> impl Strategy<Value = (Family, Partition)> {
    let all: Vec<(Family, Partition)> = Family::ALL
        .iter()
        .flat_map(|&f| {
            (1..=7)
                .flat_map(move |r| enumerate_rigid(TheoryLabel::new(f, r)))
                .map(move |p| (f, p))
        })
        .collect();
    prop::sample::select(all)
}

proptest! {
    #[test]
    fn transpose_is_an_involution(p in partition()) {
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().size(), p.size());
    }

    #[test]
    fn merge_of_rows_is_sum_of_columns(p in partition(), q in partition()) {
        let lhs = p.merge(&q).transpose();
        let rhs = p.transpose().partwise_sum(&q.transpose());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn symbol_addition_commutes_and_associates(a in symbol(), b in symbol(), c in symbol()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&Symbol::empty()), a.clone());
    }

    #[test]
    fn even_zero_padding_leaves_symbols_alone((family, p) in rigid_with_family(), k in 0usize..3) {
        let plain = symbol_of(&p, family).unwrap();
        let padded = symbol_of_padded(&p, family, 2 * k).unwrap().canonicalize();
        prop_assert_eq!(padded, plain.canonicalize());
    }

    #[test]
    fn symbol_rows_increase_with_one_extra_top_entry((family, p) in rigid_with_family()) {
        let s = symbol_of(&p, family).unwrap();
        prop_assert!(s.rows_increasing());
        prop_assert_eq!(s.top.len(), s.bottom.len() + 1);
    }

    #[test]
    fn sp_image_decreases_and_moves_single_boxes(p in partition(), sign in sign()) {
        let image = sp_image(&p, sign);
        prop_assert!(image.windows(2).all(|w| w[0] >= w[1]));
        for (k, &m) in image.iter().enumerate() {
            prop_assert!(m.abs_diff(p.part(k + 1)) <= 1);
        }
    }

    #[test]
    fn sp_lands_on_an_even_size(p in partition()) {
        // partial-sum signs pair each odd part with a box moving the other way
        let mu = sp_map(&p);
        prop_assert_eq!(mu.size() % 2, 0);
        prop_assert!(p.size() - mu.size() <= 1);
    }
}
