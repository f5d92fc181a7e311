use matroid_algebra::freedom::FreedomMatroid;
use matroid_algebra::hopf::coproduct;
use matroid_algebra::iso::canonicalize;
use matroid_algebra::lambda::{is_order_ideal, lambda_image};
use matroid_algebra::matroid::Matroid;
use matroid_algebra::perm::Permutation;
use matroid_algebra::freedom::dual_word;
use matroid_algebra::word::{DominanceLattice, Word};
use num::BigInt;
use proptest::prelude::*;

fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..=1, 0..=max_len).prop_map(|letters| Word::new(letters).unwrap())
}

fn matroid_of(w: &Word) -> Matroid {
    FreedomMatroid::build(w).unwrap().into_matroid()
}

// a freedom matroid, a direct sum of two, or a uniform matroid
fn matroid_strategy(max_n: usize) -> impl Strategy<Value = Matroid> {
    prop_oneof![
        word_strategy(max_n).prop_map(|w| matroid_of(&w)),
        (word_strategy(max_n / 2), word_strategy(max_n / 2))
            .prop_map(|(v, w)| matroid_of(&v).direct_sum(&matroid_of(&w)).unwrap()),
        (0..=max_n).prop_flat_map(|n| (0..=n, Just(n)))
            .prop_map(|(r, n)| Matroid::uniform(r, n).unwrap()),
    ]
}

proptest! {
    #[test]
    fn matroid_json_round_trip(m in matroid_strategy(7)) {
        let text = serde_json::to_string(&m).unwrap();
        let back: Matroid = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn word_round_trips_through_its_matroid(w in word_strategy(9)) {
        // a freedom matroid remembers its word as the image maximum
        let m = matroid_of(&w);
        prop_assert_eq!(matroid_algebra::lambda::distinguished_word(&m), w);
    }

    #[test]
    fn dual_of_dual_is_identity(m in matroid_strategy(7)) {
        prop_assert_eq!(m.dual().dual(), m);
    }

    #[test]
    fn dual_word_matches_matroid_duality(w in word_strategy(7)) {
        // reversing and flipping the word and dualizing the matroid
        // land in the same isomorphism class
        let direct = matroid_of(&dual_word(&w));
        let through = matroid_of(&w).dual();
        prop_assert_eq!(canonicalize(&direct).unwrap(), canonicalize(&through).unwrap());
    }

    #[test]
    fn rank_plus_dual_rank_is_size(m in matroid_strategy(7)) {
        prop_assert_eq!(m.rank() + m.dual().rank(), m.n());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_key_ignores_labels(
        w in word_strategy(6),
        seed in any::<u64>(),
    ) {
        let m = matroid_of(&w);
        let mut images: Vec<u8> = (1..=m.n() as u8).collect();
        let mut state = seed;
        for i in (1..images.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            images.swap(i, j);
        }
        let sigma = Permutation::from_one_line(&images).unwrap();
        let relabeled = m.relabel(&sigma);
        prop_assert_eq!(canonicalize(&m).unwrap(), canonicalize(&relabeled).unwrap());
    }

    #[test]
    fn coproduct_total_counts_subsets(m in matroid_strategy(6)) {
        let d = coproduct(&m).unwrap();
        let expected = BigInt::from(1) << m.n();
        prop_assert_eq!(d.coefficient_total(), expected);
    }

    #[test]
    fn coproduct_terms_split_rank_and_size(m in matroid_strategy(6)) {
        let d = coproduct(&m).unwrap();
        for ((left, right), _) in d.iter() {
            prop_assert_eq!(left.n() + right.n(), m.n());
            prop_assert_eq!(left.rank() + right.rank(), m.rank());
        }
    }

    #[test]
    fn images_are_order_ideals(m in matroid_strategy(6)) {
        let image = lambda_image(&m).unwrap();
        prop_assert!(is_order_ideal(&image));
    }

    #[test]
    fn section_duality(m in matroid_strategy(5)) {
        prop_assert!(matroid_algebra::hopf::coproduct_duality_holds(&m).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn lattice_operations_are_lattice_laws(
        r in 1usize..=3,
        picks in prop::collection::vec(any::<prop::sample::Index>(), 3),
    ) {
        let n = 6;
        let lat = DominanceLattice::new(n, r);
        let words = lat.words();
        let a = &words[picks[0].index(words.len())];
        let b = &words[picks[1].index(words.len())];
        let c = &words[picks[2].index(words.len())];
        // commutativity
        prop_assert_eq!(lat.meet(a, b), lat.meet(b, a));
        prop_assert_eq!(lat.join(a, b), lat.join(b, a));
        // associativity
        prop_assert_eq!(lat.meet(&lat.meet(a, b), c), lat.meet(a, &lat.meet(b, c)));
        prop_assert_eq!(lat.join(&lat.join(a, b), c), lat.join(a, &lat.join(b, c)));
        // absorption ties the two operations together
        prop_assert_eq!(lat.meet(a, &lat.join(a, b)), a.clone());
        prop_assert_eq!(lat.join(a, &lat.meet(a, b)), a.clone());
    }

    #[test]
    fn shuffles_carry_one_set_onto_another_in_order(
        n in 1usize..=8,
        a_bits in any::<u32>(),
        b_bits in any::<u32>(),
    ) {
        let full = matroid_algebra::subset::full_set(n);
        let mut a = a_bits & full;
        let mut b = b_bits & full;
        // trim the larger set so both have the same size
        while a.count_ones() > b.count_ones() {
            a &= a - 1;
        }
        while b.count_ones() > a.count_ones() {
            b &= b - 1;
        }
        let sigma = matroid_algebra::perm::shuffle(a, b, n).unwrap();
        let image_of_b: Vec<usize> = matroid_algebra::subset::elements(b)
            .map(|i| sigma.image(i))
            .collect();
        let a_sorted: Vec<usize> = matroid_algebra::subset::elements(a).collect();
        // the i-th smallest of b lands on the i-th smallest of a,
        // and the complement keeps its relative order
        prop_assert_eq!(image_of_b, a_sorted);
        let rest: Vec<usize> = matroid_algebra::subset::elements(full & !b)
            .map(|i| sigma.image(i))
            .collect();
        prop_assert!(rest.windows(2).all(|p| p[0] < p[1]));
    }
}
