//! Blocks encoding the iterated promise function as Dyck words.
//!
//! $ cargo run --example ex_blocks

use dyckgrid::reductions::{block_to_dyck_answer, ex_to_block, ExParams};
use dyckgrid::words::balance;

fn main() -> dyckgrid::Result<()> {
    let p = ExParams { m: 1, levels: 2 };
    for input in [
        [true, false, false, false],
        [false, false, false, false],
        [false, true, false, false],
    ] {
        let b = ex_to_block(p, &input)?;
        println!(
            "{input:?} -> {} (w={}, h={}, balance {}, in Dyck: {})",
            b.word,
            b.width,
            b.height,
            balance(&b.word),
            block_to_dyck_answer(&b)
        );
    }
    match ex_to_block(p, &[true, true, true, true]) {
        Err(e) => println!("all ones: {e}"),
        Ok(_) => unreachable!("the promise is violated"),
    }
    Ok(())
}
