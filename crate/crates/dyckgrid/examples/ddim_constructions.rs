//! Higher-dimensional grids: folding two axes into one, and OR-composition
//! of 2D directed instances.
//!
//! $ cargo run --example ddim_constructions

use dyckgrid::grid::GridInstance;
use dyckgrid::reductions::{directed_ddim_parallel, FoldMap};

fn main() -> dyckgrid::Result<()> {
    let f = FoldMap::new(&[2, 2, 2])?;
    println!("(2,2,2) folds to {:?}", f.target_dims());
    println!("vertex (0,1,2) -> {:?}", f.fold_vertex(&[0, 1, 2]));
    let flat = GridInstance::full(&f.target_dims(), false)?;
    let lifted = f.lift_instance(&flat)?;
    println!(
        "lifted full instance: {} present edges, connected {}",
        lifted.present_count(),
        lifted.connected()
    );

    let plane = [2, 2];
    let slots = vec![
        GridInstance::empty(&plane, true)?,
        GridInstance::full(&plane, true)?,
        GridInstance::empty(&plane, true)?,
    ];
    let g = directed_ddim_parallel(&[2], &slots)?;
    println!(
        "parallel composition dims {:?}, connected {}",
        g.dims(),
        g.connected()
    );
    Ok(())
}
