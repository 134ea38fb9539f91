//! One long Dyck word folded into an undirected grid of small area.
//!
//! $ cargo run --example fold_embedding

use dyckgrid::reductions::{dyck_to_undirected_fold, fold_dims};
use dyckgrid::words::oracle_dyck;
use dyckgrid::Word;

fn main() -> dyckgrid::Result<()> {
    let word: Word = "0010110100110101001011010011010100101101".parse()?;
    let d = 3;
    let (n, k) = fold_dims(word.len(), d)?;
    let e = dyck_to_undirected_fold(&word, d, (n, k))?;
    println!("{} -> {n}x{k} grid ({})", word.len(), e.source);
    println!(
        "in Dyck: {}, grid connected: {}",
        oracle_dyck(&word, d),
        e.target.connected()
    );
    // A taller, narrower grid also works as long as it is wide enough.
    let tall = dyck_to_undirected_fold(&word, d, (40, 16))?;
    println!("40x16: connected {}", tall.target.connected());
    Ok(())
}
