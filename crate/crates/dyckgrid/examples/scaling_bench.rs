//! A small scaling sweep: CSV rows, the log-log fit and an SVG plot.
//!
//! $ cargo run --release --example scaling_bench

use dyckgrid::bench::{bench_scaling, fit_report, write_csv, Algo, BenchSpec};
use dyckgrid::plot::plot_rows;
use dyckgrid::RunConfig;

fn main() -> dyckgrid::Result<()> {
    let spec = BenchSpec {
        algo: Algo::Dyck,
        k: 2,
        n_min: 32,
        n_max: 512,
        points: 5,
        trials: 2,
        seed: 7,
        config: RunConfig::modeled(),
    };
    let rows = bench_scaling(&spec)?;
    write_csv(&rows, std::io::stdout())?;
    for fit in fit_report(&rows) {
        println!(
            "# {} k={}: slope {:.3}, polylog exponent {:.3}",
            fit.algo, fit.k, fit.slope, fit.polylog_exponent
        );
    }
    let svg = plot_rows(&rows)?;
    println!("# plot: {} bytes of SVG", svg.len());
    Ok(())
}
