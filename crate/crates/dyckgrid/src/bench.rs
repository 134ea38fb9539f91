//! Scaling benchmarks: seeded trials, CSV rows and log-log fits.
//!
//! Each row records one run: the classical query ledger and the modeled
//! cost of the outermost operation (the cost recurrence, which is what the
//! modeled backend charges). Fits regress `ln(cost)` on `ln n` (slope)
//! and, with the `√n` factor divided out, on `ln log₂ n` (polylog
//! exponent).

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dyck;
use crate::error::{Error, Result};
use crate::oracle::{Backend, ExecutionContext, RunConfig, Tape};
use crate::substring::{self, cost::CostModel, SearchParams};
use crate::words::{SubstringMatch, Word};

/// The benchmarked operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    FindAny,
    FindFirst,
    Dyck,
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algo::FindAny => "findany",
            Algo::FindFirst => "findfirst",
            Algo::Dyck => "dyck",
        })
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "findany" => Ok(Algo::FindAny),
            "findfirst" => Ok(Algo::FindFirst),
            "dyck" => Ok(Algo::Dyck),
            _ => Err(Error::InvalidParams(format!(
                "unknown algorithm {s:?} (expected findany, findfirst or dyck)"
            ))),
        }
    }
}

/// One benchmark sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchSpec {
    pub algo: Algo,
    pub k: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub points: usize,
    pub trials: usize,
    pub seed: u64,
    pub config: RunConfig,
}

/// One CSV row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub algo: Algo,
    pub k: usize,
    pub n: usize,
    pub seed: u64,
    pub backend: Backend,
    /// `1`/`0` for `dyck`; `i..j` or `none` for the searches.
    pub answer: String,
    pub ledger: u64,
    #[serde(serialize_with = "serialize_sig6")]
    pub modeled_cost: f64,
}

/// Least-squares fit of one `(algo, k)` series.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FitReport {
    pub algo: Algo,
    pub k: usize,
    pub points: usize,
    /// Slope of `ln(cost)` against `ln n`.
    pub slope: f64,
    /// Exponent `b` in `cost ≈ A·√n·(log₂ n)^b`.
    pub polylog_exponent: f64,
}

/// Rounds to 6 significant digits and prints the shortest exact form.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let rounded: f64 = format!("{x:.5e}").parse().expect("formatted float parses");
    format!("{rounded}")
}

fn serialize_sig6<S: serde::Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&sig6(*x))
}

/// `points` geometrically spaced sizes from `n_min` to `n_max` (rounded,
/// deduplicated).
pub fn sizes(n_min: usize, n_max: usize, points: usize) -> Result<Vec<usize>> {
    if n_min == 0 || n_min >= n_max || points < 3 {
        return Err(Error::InvalidParams(format!(
            "need 1 <= n_min < n_max and points >= 3, got n_min={n_min} n_max={n_max} points={points}"
        )));
    }
    let ratio = (n_max as f64 / n_min as f64).ln();
    let mut out: Vec<usize> = (0..points)
        .map(|i| (n_min as f64 * (ratio * i as f64 / (points - 1) as f64).exp()).round() as usize)
        .collect();
    out.dedup();
    Ok(out)
}

/// The cost recurrence of the outermost operation, without running it.
pub fn analytic_cost(algo: Algo, k: usize, n: usize, config: &RunConfig) -> f64 {
    match algo {
        Algo::Dyck => dyck::modeled_cost(n, k, config),
        Algo::FindAny => CostModel::new(config.constants).any(k, n),
        Algo::FindFirst => CostModel::new(config.constants).first(k, n),
    }
}

/// Test word for one trial. For `dyck`, even trials draw a uniform walk
/// that stays a depth-`k` Dyck word (so both answers occur); everything
/// else is uniform.
pub fn trial_word(algo: Algo, k: usize, n: usize, trial_seed: u64) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed ^ (n as u64).rotate_left(32));
    if algo == Algo::Dyck && trial_seed.is_multiple_of(2) && n.is_multiple_of(2) {
        let mut h = 0usize;
        return Word::from_bits((0..n).map(|p| {
            let close = h > 0 && (h == k || h >= n - p || rng.gen_bool(0.5));
            h = if close { h - 1 } else { h + 1 };
            close
        }));
    }
    Word::from_bits((0..n).map(|_| rng.gen_bool(0.5)))
}

fn show(m: Option<SubstringMatch>) -> String {
    m.map_or_else(|| "none".to_string(), |m| format!("{}..{}", m.i, m.j))
}

/// Runs one trial.
pub fn run_trial(
    algo: Algo,
    k: usize,
    n: usize,
    trial_seed: u64,
    config: &RunConfig,
) -> Result<BenchRow> {
    let word = trial_word(algo, k, n, trial_seed);
    let config = RunConfig {
        seed: trial_seed,
        ..config.clone()
    };
    let (answer, ledger, charged) = match algo {
        Algo::Dyck => {
            let run = dyck::decide_dyck(&word, k, &config)?;
            (
                u8::from(run.accept).to_string(),
                run.ledger,
                run.modeled_cost,
            )
        }
        Algo::FindAny | Algo::FindFirst => {
            if n == 0 {
                return Err(Error::EmptyWord);
            }
            let mut ctx = ExecutionContext::new(Tape::Plain(word), config.clone())?;
            let p = SearchParams::new(0, n - 1);
            let found = if algo == Algo::FindAny {
                substring::find_any(&mut ctx, k, &p)?
            } else {
                substring::find_first(&mut ctx, k, &p)?
            };
            (show(found), ctx.ledger(), ctx.modeled_cost())
        }
    };
    let modeled_cost = if config.backend == Backend::Modeled {
        charged
    } else {
        analytic_cost(algo, k, n, &config)
    };
    Ok(BenchRow {
        algo,
        k,
        n,
        seed: trial_seed,
        backend: config.backend,
        answer,
        ledger,
        modeled_cost,
    })
}

/// Runs every `(n, trial)` pair, in parallel across threads; rows come
/// back in `(n, seed)` order regardless of scheduling.
pub fn bench_scaling(spec: &BenchSpec) -> Result<Vec<BenchRow>> {
    spec.config.validate()?;
    if spec.k < 1 || (spec.algo != Algo::Dyck && spec.k < 2) {
        return Err(Error::InvalidParams(format!(
            "k = {} is too small for {}",
            spec.k, spec.algo
        )));
    }
    if spec.trials == 0 {
        return Err(Error::InvalidParams("trials must be at least 1".into()));
    }
    let tasks: Vec<(usize, u64)> = sizes(spec.n_min, spec.n_max, spec.points)?
        .into_iter()
        .flat_map(|n| (0..spec.trials as u64).map(move |t| (n, spec.seed.wrapping_add(t))))
        .collect();
    let threads = std::thread::available_parallelism()
        .map_or(1, |t| t.get())
        .min(tasks.len());
    let chunk = tasks.len().div_ceil(threads);
    let results: Vec<Result<Vec<BenchRow>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = tasks
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|&(n, seed)| run_trial(spec.algo, spec.k, n, seed, &spec.config))
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("bench worker panicked"))
            .collect()
    });
    let mut rows = Vec::with_capacity(tasks.len());
    for part in results {
        rows.extend(part?);
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(|e| Error::Csv(e.to_string()))?;
    }
    if rows.is_empty() {
        w.write_record([
            "algo",
            "k",
            "n",
            "seed",
            "backend",
            "answer",
            "ledger",
            "modeled_cost",
        ])
        .map_err(|e| Error::Csv(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Csv(e.to_string()))
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<BenchRow>> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers().map_err(|e| Error::Csv(e.to_string()))?.clone();
    let expected = [
        "algo",
        "k",
        "n",
        "seed",
        "backend",
        "answer",
        "ledger",
        "modeled_cost",
    ];
    if header.iter().ne(expected) {
        return Err(Error::Csv(format!(
            "unexpected header {:?}",
            header.iter().collect::<Vec<_>>()
        )));
    }
    let rows: Vec<BenchRow> = r
        .deserialize()
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Csv(e.to_string()))?;
    if let Some(bad) = rows.iter().find(|r| r.n == 0 || !(r.modeled_cost > 0.0)) {
        return Err(Error::Csv(format!(
            "row needs n > 0 and positive cost: {bad:?}"
        )));
    }
    Ok(rows)
}

/// Mean cost per `n` of each `(algo, k)` series, sorted.
pub fn series(rows: &[BenchRow]) -> Vec<((Algo, usize), Vec<(usize, f64)>)> {
    let mut groups: std::collections::BTreeMap<
        (Algo, usize),
        std::collections::BTreeMap<usize, (f64, usize)>,
    > = Default::default();
    for r in rows {
        let e = groups
            .entry((r.algo, r.k))
            .or_default()
            .entry(r.n)
            .or_insert((0.0, 0));
        e.0 += r.modeled_cost;
        e.1 += 1;
    }
    groups
        .into_iter()
        .map(|(key, pts)| {
            (
                key,
                pts.into_iter()
                    .map(|(n, (s, c))| (n, s / c as f64))
                    .collect(),
            )
        })
        .collect()
}

/// Ordinary least squares `y ≈ a + b·x`; returns `b`.
fn ols_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// `(slope, polylog exponent)` of a series of `(n, cost)` points.
pub fn fit_points(points: &[(usize, f64)]) -> (f64, f64) {
    let ln_n: Vec<f64> = points.iter().map(|&(n, _)| (n as f64).ln()).collect();
    let ln_c: Vec<f64> = points.iter().map(|&(_, c)| c.ln()).collect();
    let slope = ols_slope(&ln_n, &ln_c);
    let ln_log: Vec<f64> = points
        .iter()
        .map(|&(n, _)| (n as f64).log2().ln())
        .collect();
    let residual: Vec<f64> = ln_c.iter().zip(&ln_n).map(|(c, n)| c - 0.5 * n).collect();
    (slope, ols_slope(&ln_log, &residual))
}

pub fn fit_report(rows: &[BenchRow]) -> Vec<FitReport> {
    series(rows)
        .into_iter()
        .filter(|(_, pts)| pts.len() >= 2)
        .map(|((algo, k), pts)| {
            let (slope, polylog_exponent) = fit_points(&pts);
            FitReport {
                algo,
                k,
                points: pts.len(),
                slope,
                polylog_exponent,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig6_examples() {
        assert_eq!(sig6(1234567.0), "1234570");
        assert_eq!(sig6(0.000123456789), "0.000123457");
        assert_eq!(sig6(3.0), "3");
        assert_eq!(sig6(0.0), "0");
    }

    #[test]
    fn charged_cost_equals_recurrence() {
        for algo in [Algo::FindAny, Algo::FindFirst, Algo::Dyck] {
            for (n, seed) in [(16, 0), (64, 1), (100, 2)] {
                let config = RunConfig::modeled();
                let row = run_trial(algo, 3, n, seed, &config).unwrap();
                let want = analytic_cost(algo, 3, n, &config);
                assert!(
                    (row.modeled_cost - want).abs() <= 1e-9 * want,
                    "{algo} n={n}"
                );
            }
        }
    }

    #[test]
    fn size_grid() {
        assert_eq!(
            sizes(256, 16384, 7).unwrap(),
            vec![256, 512, 1024, 2048, 4096, 8192, 16384]
        );
        assert!(sizes(8, 8, 3).is_err());
        assert!(sizes(8, 16, 2).is_err());
    }

    #[test]
    fn exact_power_law_fits() {
        let pts: Vec<(usize, f64)> = (4..12)
            .map(|e| {
                let n = 1usize << e;
                (n, 5.0 * (n as f64).sqrt() * (e as f64).powf(1.5))
            })
            .collect();
        let (_, b) = fit_points(&pts);
        assert!((b - 1.5).abs() < 1e-9);
        let line: Vec<(usize, f64)> = (1..6).map(|n| (n, 2.0 * n as f64)).collect();
        assert!((fit_points(&line).0 - 1.0).abs() < 1e-9);
    }

    #[test]
    fn csv_round_trip_and_determinism() {
        let spec = BenchSpec {
            algo: Algo::Dyck,
            k: 2,
            n_min: 8,
            n_max: 32,
            points: 3,
            trials: 3,
            seed: 4,
            config: RunConfig::modeled(),
        };
        let rows = bench_scaling(&spec).unwrap();
        assert_eq!(rows.len(), 9);
        let mut a = Vec::new();
        write_csv(&rows, &mut a).unwrap();
        let mut b = Vec::new();
        write_csv(&bench_scaling(&spec).unwrap(), &mut b).unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(a.clone()).unwrap();
        assert!(text.starts_with("algo,k,n,seed,backend,answer,ledger,modeled_cost\n"));
        let back = read_csv(&a[..]).unwrap();
        assert_eq!(back.len(), rows.len());
        assert!(read_csv("algo,k\n1,2\n".as_bytes()).is_err());
    }
}
