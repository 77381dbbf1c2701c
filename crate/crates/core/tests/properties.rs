//! Property tests for the algebraic core: group axioms of the signed
//! permutations, length symmetry, linearity and reconstruction of the
//! restriction maps, and serialization round trips.

use num_rational::Rational64;
use num_traits::Zero;
use proptest::prelude::*;

use kostant::oracle::dominant_weights;
use kostant::reps::{self};
use kostant::rootsys::{
    inv_length, restrict_a, restrict_b, HalfInt, RankContext, SignedPermutation, Weight,
};

fn arb_signed_perm(n: usize) -> impl Strategy<Value = SignedPermutation> {
    let targets = Just((1..=n).collect::<Vec<usize>>()).prop_shuffle();
    let signs = prop::collection::vec(prop::bool::ANY, n);
    (targets, signs).prop_map(|(targets, signs)| {
        let signs: Vec<i8> = signs.iter().map(|&b| if b { 1 } else { -1 }).collect();
        SignedPermutation::new(&targets, &signs).unwrap()
    })
}

fn arb_rank_and_pair() -> impl Strategy<Value = (SignedPermutation, SignedPermutation)> {
    (1..=5usize).prop_flat_map(|n| (arb_signed_perm(n), arb_signed_perm(n)))
}

fn arb_weight(n: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec((-20i64..=20, 1i64..=6), n).prop_map(|entries| {
        Weight::new(
            entries
                .into_iter()
                .map(|(num, den)| Rational64::new(num, den))
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn group_axioms((w, u) in arb_rank_and_pair()) {
        let n = w.rank();
        let id = SignedPermutation::identity(n);
        prop_assert_eq!(w.compose(&w.inverse()).unwrap(), id.clone());
        prop_assert_eq!(w.inverse().compose(&w).unwrap(), id.clone());
        prop_assert_eq!(w.compose(&id).unwrap(), w.clone());
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        // lengths are inversion-symmetric
        prop_assert_eq!(inv_length(&w).unwrap(), inv_length(&w.inverse()).unwrap());
        let _ = u;
    }

    #[test]
    fn action_is_a_homomorphism(((w, u), seed) in (arb_rank_and_pair(), any::<i64>())) {
        let n = w.rank();
        let beta = Weight::from_ints(
            &(0..n).map(|i| (seed.wrapping_add(i as i64 * 37)) % 11).collect::<Vec<_>>(),
        );
        let composed = w.compose(&u).unwrap().act(&beta).unwrap();
        let stepwise = w.act(&u.act(&beta).unwrap()).unwrap();
        prop_assert_eq!(composed, stepwise);
    }

    #[test]
    fn action_is_linear((w, _) in arb_rank_and_pair(), scale in -5i64..=5) {
        let n = w.rank();
        let beta = Weight::from_ints(&(0..n as i64).collect::<Vec<_>>());
        let gamma = Weight::from_ints(&(0..n as i64).map(|i| i * i - 3).collect::<Vec<_>>());
        let sum = w.act(&(&beta + &gamma)).unwrap();
        prop_assert_eq!(sum, &w.act(&beta).unwrap() + &w.act(&gamma).unwrap());
        let scaled_in = Weight::new(beta.coords().iter().map(|c| c * scale).collect());
        let scaled_out = Weight::new(w.act(&beta).unwrap().coords().iter().map(|c| c * scale).collect());
        prop_assert_eq!(w.act(&scaled_in).unwrap(), scaled_out);
    }

    #[test]
    fn restriction_reconstructs((n, k) in (1..=5usize).prop_flat_map(|n| (Just(n), 1..=n)),
                                seed in any::<u32>()) {
        let ctx = RankContext::new(n, k).unwrap();
        let weight = {
            let coords = (0..n)
                .map(|i| {
                    let v = i64::from(seed.wrapping_mul(i as u32 + 7) % 41) - 20;
                    Rational64::new(v, 1 + (i as i64 % 3))
                })
                .collect();
            Weight::new(coords)
        };
        let a = restrict_a(&weight, ctx).unwrap();
        let b = restrict_b(&weight, ctx).unwrap();
        // the b-part's leading block sums to zero and the split total is exact
        let head: Rational64 = b.coords()[..k].iter().sum();
        prop_assert!(head.is_zero());
        let total: Rational64 = weight.coords()[..k].iter().sum();
        prop_assert_eq!(a, total);
        // the tail is untouched
        for label in (k + 1)..=n {
            prop_assert_eq!(b.coord(label), weight.coord(label));
        }
    }

    #[test]
    fn weight_json_round_trip(w in (1..=6usize).prop_flat_map(arb_weight)) {
        let json = serde_json::to_string(&w).unwrap();
        let back: Weight = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn half_int_parse_display_round_trip(twice in -1000i64..=1000) {
        let h = HalfInt::from_twice(twice);
        prop_assert_eq!(h.to_string().parse::<HalfInt>().unwrap(), h);
        // ordering agrees with the rational embedding
        let other = HalfInt::from_twice(twice / 2);
        prop_assert_eq!(h.cmp(&other), h.to_rational().cmp(&other.to_rational()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kostant_rep_json_round_trip((n, k, idx) in (1..=4usize)
        .prop_flat_map(|n| (Just(n), 1..=n, any::<prop::sample::Index>()))) {
        let ctx = RankContext::new(n, k).unwrap();
        let reps = reps::enumerate_kostant(ctx);
        let rep = &reps[idx.index(reps.len())];
        let json = serde_json::to_string(rep).unwrap();
        let back: reps::KostantRep = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, rep);
    }

    #[test]
    fn representatives_pass_membership_and_minimality((n, k, idx, cap) in (1..=4usize)
        .prop_flat_map(|n| (Just(n), 1..=n, any::<prop::sample::Index>(), 0..=2i64))) {
        let ctx = RankContext::new(n, k).unwrap();
        let reps_list = reps::enumerate_kostant(ctx);
        let rep = &reps_list[idx.index(reps_list.len())];
        prop_assert!(kostant::rootsys::is_kostant(rep.w(), ctx).unwrap());
        // evaluation data agrees with the definitional route for a sample lambda
        for lam in dominant_weights(n, cap).iter().take(3) {
            let t = reps::eval_t(rep.pair(), lam).unwrap();
            prop_assert_eq!(t, kostant::oracle::brute_t(rep.w(), lam, ctx).unwrap());
        }
    }
}
