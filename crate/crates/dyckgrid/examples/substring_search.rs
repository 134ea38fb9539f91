//! The minimal ±k-substring search family on one word.
//!
//! $ cargo run --example substring_search

use dyckgrid::substring::{find_any, find_first, find_fixed_pos, find_from, find_from_right};
use dyckgrid::words::oracle_minimal_substrings;
use dyckgrid::{Direction, ExecutionContext, SearchParams, Word};

fn main() -> dyckgrid::Result<()> {
    let word: Word = "0110001110".parse()?;
    let k = 2;
    println!("word {} ({})", word, word.to_parens());
    println!(
        "all minimal ±{k}-substrings: {:?}",
        oracle_minimal_substrings(&word, k)
    );

    let whole = SearchParams::new(0, word.len() - 1);
    let mut ctx = ExecutionContext::modeled(word.clone());
    println!("any:        {:?}", find_any(&mut ctx, k, &whole)?);
    println!("first:      {:?}", find_first(&mut ctx, k, &whole)?);
    println!(
        "last:       {:?}",
        find_first(&mut ctx, k, &whole.direction(Direction::Left))?
    );
    let around = whole.t(5);
    println!("from t=5:   {:?}", find_from(&mut ctx, k, &around)?);
    println!("from_right: {:?}", find_from_right(&mut ctx, k, &around)?);
    println!("fixed_pos:  {:?}", find_fixed_pos(&mut ctx, k, &around)?);
    println!(
        "ledger {} reads, modeled cost {}",
        ctx.ledger(),
        ctx.modeled_cost()
    );
    Ok(())
}
