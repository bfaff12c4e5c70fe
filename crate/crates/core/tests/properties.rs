mod common;

use proptest::prelude::*;

use palindefect::identity::{verify_finite_identity, PrefixAnalysis};
use palindefect::palindromes::defect_profile;
use palindefect::words::mirror;
use palindefect::{Alphabet, Eertree, Word};

fn word_strategy(max_len: usize) -> impl Strategy<Value = (u8, Vec<u8>)> {
    (1u8..=4).prop_flat_map(move |k| (Just(k), prop::collection::vec(0..k, 0..=max_len)))
}

fn word(k: u8, w: &[u8]) -> Word {
    let alphabet = Alphabet::new((0..k).map(|c| (b'a' + c) as char)).unwrap();
    Word::parse(&alphabet, &common::text(w)).unwrap()
}

proptest! {
    #[test]
    fn mirror_is_an_involution((k, w) in word_strategy(60)) {
        let x = word(k, &w);
        prop_assert_eq!(mirror(&mirror(&x)), x.clone());
        prop_assert_eq!(x.mirror().len(), x.len());
    }

    #[test]
    fn identity_residual_is_zero((k, w) in word_strategy(200)) {
        let r = verify_finite_identity(&word(k, &w));
        prop_assert_eq!(r.residual, 0);
        prop_assert!(r.is_consistent());
    }

    #[test]
    fn eertree_matches_brute_force((k, w) in word_strategy(40)) {
        let x = word(k, &w);
        let tree = Eertree::build(&x);
        prop_assert_eq!(tree.palindrome_count() + 1, common::palindromes(&w).len());
        prop_assert!(tree.palindrome_count() <= w.len());
    }

    #[test]
    fn defect_is_monotone_and_mirror_invariant((k, w) in word_strategy(120)) {
        let x = word(k, &w);
        let d = defect_profile(&x);
        prop_assert!(d.prefix_defects.windows(2).all(|p| p[0] <= p[1] && p[1] - p[0] <= 1));
        prop_assert_eq!(defect_profile(&x.mirror()).defect, d.defect);
        prop_assert_eq!(d.defect, d.palindrome_deficit());
    }

    #[test]
    fn t_sum_matches_brute_force((k, w) in word_strategy(30)) {
        let a = PrefixAnalysis::new(&word(k, &w));
        let t: Vec<i64> = (0..=w.len()).map(|n| a.t(n)).collect();
        prop_assert_eq!(t, common::t(&w));
    }

    #[test]
    fn trusted_range_never_exceeds_half_prefix((k, w) in word_strategy(80)) {
        let a = PrefixAnalysis::new(&word(k, &w));
        if let Some(t) = a.trusted_n() {
            prop_assert!(t <= w.len());
            prop_assert!(a.closure[..=t.min(w.len())].iter().all(|&c| c));
        }
    }
}
