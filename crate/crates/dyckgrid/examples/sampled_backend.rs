//! Error rates of the sampled backend, where every search primitive fails
//! with probability ε.
//!
//! $ cargo run --release --example sampled_backend

use dyckgrid::bench::{trial_word, Algo};
use dyckgrid::dyck::decide_dyck;
use dyckgrid::substring::find_first;
use dyckgrid::words::{oracle_dyck, oracle_minimal_substrings};
use dyckgrid::{ExecutionContext, RunConfig, SearchParams, Tape, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> dyckgrid::Result<()> {
    let eps = 0.2;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut wrong, mut miss) = (0, 0);
    let trials = 200;
    for seed in 0..trials {
        // Half of these words are Dyck words of depth 3.
        let word = trial_word(Algo::Dyck, 3, 64, seed);
        let run = decide_dyck(&word, 3, &RunConfig::sampled(eps, seed))?;
        wrong += usize::from(run.accept != oracle_dyck(&word, 3));

        let word = Word::from_bits((0..64).map(|_| rng.gen_bool(0.5)));
        let mut ctx =
            ExecutionContext::new(Tape::Plain(word.clone()), RunConfig::sampled(eps, seed))?;
        let got = find_first(&mut ctx, 2, &SearchParams::new(0, 63))?;
        let want = oracle_minimal_substrings(&word, 2)
            .into_iter()
            .min_by_key(|m| m.i);
        miss += usize::from(got != want);
    }
    println!("eps={eps}: dyck errors {wrong}/{trials}, find_first errors {miss}/{trials}");
    Ok(())
}
