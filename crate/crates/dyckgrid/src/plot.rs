//! Self-contained SVG log-log plots of benchmark CSV output.
//!
//! One polyline per `(algo, k)` series, through the mean modeled cost at
//! each `n`. The output depends only on the input rows, so rerunning on
//! the same CSV gives identical bytes.

use std::fmt::Write;

use crate::bench::{self, BenchRow};
use crate::error::{Error, Result};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

/// Parses benchmark CSV text and renders it.
pub fn emit_plot(csv_text: &str) -> Result<String> {
    let rows = bench::read_csv(csv_text.as_bytes())?;
    plot_rows(&rows)
}

/// Renders rows as an SVG document.
pub fn plot_rows(rows: &[BenchRow]) -> Result<String> {
    let series = bench::series(rows);
    if series.is_empty() {
        return Err(Error::Csv("no data rows to plot".into()));
    }
    let pts = series.iter().flat_map(|(_, p)| p.iter());
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(n, c) in pts {
        let (x, y) = ((n as f64).log2(), c.log10());
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let (x0, x1) = (x0.floor(), x1.ceil().max(x0.floor() + 1.0));
    let (y0, y1) = (y0.floor(), y1.ceil().max(y0.floor() + 1.0));
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + (x - x0) / (x1 - x0) * plot_w;
    let sy = |y: f64| TOP + plot_h - (y - y0) / (y1 - y0) * plot_h;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        s,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="14">modeled cost vs n (log-log)</text>"#,
        LEFT + plot_w / 2.0
    );
    let _ = writeln!(
        s,
        r#"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
    );
    let x_step = ((x1 - x0) / 10.0).ceil().max(1.0);
    let mut x = x0;
    while x <= x1 + 1e-9 {
        let px = sx(x);
        let _ = writeln!(
            s,
            r##"<line x1="{px:.2}" y1="{TOP}" x2="{px:.2}" y2="{:.2}" stroke="#dddddd"/><text x="{px:.2}" y="{:.2}" text-anchor="middle">2^{x}</text>"##,
            TOP + plot_h,
            TOP + plot_h + 18.0
        );
        x += x_step;
    }
    let y_step = ((y1 - y0) / 10.0).ceil().max(1.0);
    let mut y = y0;
    while y <= y1 + 1e-9 {
        let py = sy(y);
        let _ = writeln!(
            s,
            r##"<line x1="{LEFT}" y1="{py:.2}" x2="{:.2}" y2="{py:.2}" stroke="#dddddd"/><text x="{:.2}" y="{:.2}" text-anchor="end">1e{y}</text>"##,
            LEFT + plot_w,
            LEFT - 6.0,
            py + 4.0
        );
        y += y_step;
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">n</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 16.0
    );
    let _ = writeln!(
        s,
        r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">modeled cost</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0
    );
    for (i, ((algo, k), points)) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let coords: Vec<String> = points
            .iter()
            .map(|&(n, c)| format!("{:.2},{:.2}", sx((n as f64).log2()), sy(c.log10())))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline class="series" data-series="{algo} k={k}" fill="none" stroke="{color}" stroke-width="2" points="{}"/>"#,
            coords.join(" ")
        );
        for c in &coords {
            let (cx, cy) = c.split_once(',').expect("formatted pair");
            let _ = writeln!(s, r#"<circle cx="{cx}" cy="{cy}" r="3" fill="{color}"/>"#);
        }
        let ly = TOP + 10.0 + 20.0 * i as f64;
        let lx = LEFT + plot_w + 16.0;
        let _ = writeln!(
            s,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"/><text x="{:.2}" y="{:.2}">{algo} k={k}</text>"#,
            lx + 24.0,
            lx + 30.0,
            ly + 4.0
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CSV: &str = "algo,k,n,seed,backend,answer,ledger,modeled_cost\n\
        dyck,2,256,0,modeled,1,10,100\n\
        dyck,2,1024,0,modeled,1,20,400\n\
        findany,3,256,0,modeled,none,5,50\n\
        findany,3,1024,0,modeled,none,5,90\n\
        findany,3,4096,0,modeled,none,5,170\n";

    #[test]
    fn one_polyline_per_series() {
        let svg = emit_plot(CSV).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert!(!svg.contains("href"));
        assert_eq!(svg, emit_plot(CSV).unwrap());
    }

    #[test]
    fn two_points_make_one_segment() {
        let svg = emit_plot(&CSV.lines().take(3).collect::<Vec<_>>().join("\n")).unwrap();
        let line = svg.lines().find(|l| l.starts_with("<polyline")).unwrap();
        let points = line.split("points=\"").nth(1).unwrap();
        assert_eq!(points.split_whitespace().count(), 2);
    }

    #[test]
    fn malformed_input_is_rejected() {
        assert!(emit_plot("not,a,bench\n1,2,3\n").is_err());
        assert!(emit_plot("algo,k,n,seed,backend,answer,ledger,modeled_cost\n").is_err());
        assert!(emit_plot(
            "algo,k,n,seed,backend,answer,ledger,modeled_cost\ndyck,x,1,0,modeled,1,1,1\n"
        )
        .is_err());
    }
}
