//! A classical laboratory for quantum-query algorithms on bounded-depth
//! Dyck languages and grid connectivity.
//!
//! * [`words`]: parenthesis words and brute-force ground truth.
//! * [`oracle`]: query-counted input access and the three backends.
//! * [`search`]: bounded-error search primitives.
//! * [`substring`]: recursive search for minimal `±k`-substrings.
//! * [`dyck`]: the bounded-depth Dyck decision procedure.
//! * [`grid`]: grid subgraphs, connectivity and the `GRID v1` format.
//! * [`reductions`]: constructive reductions between the problems.
//! * [`formula`]: AND-OR formulas for directed grid connectivity.
//! * [`bench`] and [`plot`]: scaling benchmarks, fits and SVG plots.

pub mod bench;
pub mod dyck;
pub mod error;
pub mod formula;
pub mod grid;
pub mod oracle;
pub mod plot;
pub mod reductions;
pub mod search;
pub mod substring;
pub mod words;

pub use error::{Error, Result};
pub use oracle::{Backend, CostConstants, ExecutionContext, RunConfig, Tape};
pub use substring::{Direction, SearchParams};
pub use words::{Sign, SignSet, SubstringMatch, Word};
