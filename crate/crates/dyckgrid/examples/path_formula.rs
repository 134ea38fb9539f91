//! AND-OR formulas for directed grid connectivity and their sizes.
//!
//! $ cargo run --example path_formula

use dyckgrid::formula::{build_formula, build_padded, formula_size_bound, leaf_recurrence};
use dyckgrid::grid::GridInstance;

fn main() -> dyckgrid::Result<()> {
    for (mu, kappa) in [(0, 3), (1, 1), (3, 2), (6, 4)] {
        let f = build_formula(mu, kappa, 0, 0);
        println!(
            "mu={mu} kappa={kappa}: L={} (recurrence {}), bound {}, {} shared nodes, query estimate {}",
            f.leaf_count(),
            leaf_recurrence(mu, kappa),
            formula_size_bound(mu, kappa),
            f.node_count(),
            f.query_estimate()
        );
    }
    let f = build_padded(5, 2)?;
    let mut g = GridInstance::empty(&[5, 2], true)?;
    for x in 0..5 {
        g.set_between(&[x, 0], &[x + 1, 0], true)?;
    }
    g.set_between(&[5, 0], &[5, 1], true)?;
    println!(
        "padded 5x2: L={}, bottom-row path gives {}",
        f.leaf_count(),
        f.evaluate(&g)?
    );
    g.set_between(&[5, 1], &[5, 2], true)?;
    println!("after closing the last edge: {}", f.evaluate(&g)?);
    Ok(())
}
