//! Decide bounded-depth Dyck membership and compare the classical query
//! ledger with the modeled quantum cost.
//!
//! $ cargo run --example decide_dyck

use dyckgrid::dyck::decide_dyck;
use dyckgrid::words::oracle_dyck;
use dyckgrid::{RunConfig, Word};

fn main() -> dyckgrid::Result<()> {
    for (literal, k) in [
        ("(()())", 2),
        ("(()())", 1),
        ("001100011011", 2),
        ("())(", 3),
    ] {
        let word: Word = literal.parse()?;
        let run = decide_dyck(&word, k, &RunConfig::modeled())?;
        println!(
            "{:>14} k={k}: accept={} (brute force {}), ledger={}, modeled cost={}",
            word.to_parens(),
            run.accept,
            oracle_dyck(&word, k),
            run.ledger,
            run.modeled_cost
        );
    }
    Ok(())
}
