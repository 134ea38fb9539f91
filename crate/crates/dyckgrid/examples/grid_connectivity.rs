//! Grid instances, the GRID v1 format and breadth-first connectivity.
//!
//! $ cargo run --example grid_connectivity

use dyckgrid::grid::GridInstance;

fn main() -> dyckgrid::Result<()> {
    let mut g = GridInstance::empty(&[3, 2], true)?;
    // A staircase from (0,0) to (3,2).
    for (a, b) in [
        ([0, 0], [1, 0]),
        ([1, 0], [1, 1]),
        ([1, 1], [2, 1]),
        ([2, 1], [3, 1]),
        ([3, 1], [3, 2]),
    ] {
        g.set_between(&a, &b, true)?;
    }
    let text = g.to_grid_v1();
    print!("{text}");
    let back = GridInstance::from_grid_v1(&text)?;
    let c = back.connectivity();
    println!(
        "connected={} after visiting {} vertices",
        c.connected, c.vertices_visited
    );
    Ok(())
}
