//! Several Dyck words side by side in one directed grid: the corners are
//! connected iff some word is a Dyck word of the given depth.
//!
//! $ cargo run --example directed_embedding

use dyckgrid::reductions::{dyck_to_directed_grid, EdgeRole};
use dyckgrid::words::oracle_dyck;
use dyckgrid::Word;

fn main() -> dyckgrid::Result<()> {
    let words: Vec<Word> = ["00110101", "01100101", "01010101"]
        .iter()
        .map(|s| s.parse())
        .collect::<dyckgrid::Result<_>>()?;
    let d = 2;
    let e = dyck_to_directed_grid(&words, d)?;
    let inputs = e
        .certificate
        .roles
        .iter()
        .filter(|r| matches!(r, EdgeRole::Input { .. }))
        .count();
    println!(
        "dims {:?}, {} edges, {inputs} input-controlled",
        e.target.dims(),
        e.target.edge_count()
    );
    for w in &words {
        println!(
            "  {} in Dyck(depth {d}): {}",
            w.to_parens(),
            oracle_dyck(w, d)
        );
    }
    println!("grid connected: {}", e.target.connected());
    println!("certificate holds: {}", e.certificate_holds(&words));
    Ok(())
}
