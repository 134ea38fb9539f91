//! Randomized properties on words longer than the exhaustive tests reach.

use dyckgrid::dyck::decide_dyck;
use dyckgrid::substring::{find_any, find_first};
use dyckgrid::words::{balance, oracle_dyck, oracle_minimal_substrings, Sign};
use dyckgrid::{ExecutionContext, RunConfig, SearchParams, Word};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(any::<bool>(), 1..=max_len).prop_map(Word::from_bits)
}

/// Words that stay near a Dyck word, so acceptances are not vanishingly rare.
fn near_dyck(max_half: usize) -> impl Strategy<Value = Word> {
    (1..=max_half, any::<u64>(), 0..3usize).prop_map(|(half, seed, flips)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mut h, n) = (0usize, 2 * half);
        let mut bits: Vec<bool> = (0..n)
            .map(|p| {
                let close = h > 0 && (h >= n - p || rng.gen_bool(0.5));
                h = if close { h - 1 } else { h + 1 };
                close
            })
            .collect();
        for _ in 0..flips {
            let i = rng.gen_range(0..n);
            bits[i] = !bits[i];
        }
        Word::from_bits(bits)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn balance_is_additive(a in word(40), b in word(40)) {
        prop_assert_eq!(balance(&a.concat(&b)), balance(&a) + balance(&b));
        let w = a.concat(&b);
        prop_assert_eq!(w.balance_of(0, w.len() - 1), balance(&w));
    }

    #[test]
    fn decide_dyck_matches_brute_force(w in near_dyck(40), k in 1..6usize) {
        for config in [RunConfig::reference(), RunConfig::modeled()] {
            let run = decide_dyck(&w, k, &config).unwrap();
            prop_assert_eq!(run.accept, oracle_dyck(&w, k));
        }
    }

    #[test]
    fn first_and_any_match_brute_force(w in word(64), k in 2..5usize) {
        let all = oracle_minimal_substrings(&w, k);
        let p = SearchParams::new(0, w.len() - 1);
        let mut ctx = ExecutionContext::reference(w.clone());
        let first = find_first(&mut ctx, k, &p).unwrap();
        prop_assert_eq!(first, all.iter().min_by_key(|m| m.i).copied());
        let any = find_any(&mut ctx, k, &p).unwrap();
        prop_assert_eq!(any.is_some(), !all.is_empty());
        if let Some(m) = any {
            prop_assert!(all.contains(&m));
        }
    }

    #[test]
    fn minimal_substrings_are_ordered_and_signed(w in word(64), k in 2..6usize) {
        let all = oracle_minimal_substrings(&w, k);
        for pair in all.windows(2) {
            prop_assert!(pair[0].i < pair[1].i && pair[0].j < pair[1].j);
        }
        for m in &all {
            let want = if m.sign == Sign::Plus { k as i64 } else { -(k as i64) };
            prop_assert_eq!(w.balance_of(m.i, m.j), want);
        }
    }

    #[test]
    fn padding_reduces_membership_to_search(w in near_dyck(30), k in 1..5usize) {
        let padded = Word::from_bits(std::iter::repeat_n(true, k).chain(w.iter()).chain(std::iter::repeat_n(false, k)));
        prop_assert_eq!(oracle_minimal_substrings(&padded, k + 1).is_empty(), oracle_dyck(&w, k));
    }
}
