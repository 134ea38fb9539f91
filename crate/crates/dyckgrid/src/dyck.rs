//! Bounded-depth Dyck recognition through the padded word.
//!
//! `x` is in the Dyck language of depth `k` iff `1^k x 0^k` contains no
//! `±(k+1)`-substring, so the decision is a single `find_any` call at level
//! `k + 1` on the padded word. The pads are virtual: reading them does not
//! count as a query.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{ExecutionContext, RunConfig, Tape};
use crate::substring::{self, cost::CostModel, SearchParams};
use crate::words::Word;

/// Outcome of one run of [`decide_dyck`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DyckRun {
    pub accept: bool,
    /// Depth bound actually used (after clamping to `⌈n/2⌉`).
    pub k: usize,
    pub ledger: u64,
    pub modeled_cost: f64,
}

/// The padded word `1^k · w · 0^k` as a tape whose pads are free to read.
pub fn padded_word(w: &Word, k: usize) -> Tape {
    Tape::Padded {
        word: w.clone(),
        pad: k,
    }
}

/// Depth bounds at or above `n/2` are equivalent to `⌈n/2⌉`.
pub fn effective_depth(n: usize, k: usize) -> usize {
    if 2 * k >= n {
        n.div_ceil(2).max(1)
    } else {
        k
    }
}

/// Modeled cost of deciding a word of length `n` at depth `k`.
pub fn modeled_cost(n: usize, k: usize, config: &RunConfig) -> f64 {
    let k = effective_depth(n, k);
    CostModel::new(config.constants).any(k + 1, n + 2 * k)
}

/// Decides whether `w` is a Dyck word of depth at most `k`.
pub fn decide_dyck(w: &Word, k: usize, config: &RunConfig) -> Result<DyckRun> {
    if k == 0 {
        return Err(Error::InvalidParams(
            "depth bound k must be at least 1".into(),
        ));
    }
    let k = effective_depth(w.len(), k);
    let mut ctx = ExecutionContext::new(padded_word(w, k), config.clone())?;
    let accept = decide_in(&mut ctx, k)?;
    Ok(DyckRun {
        accept,
        k,
        ledger: ctx.ledger(),
        modeled_cost: ctx.modeled_cost(),
    })
}

/// Runs the decision on a context whose tape is already the padded word.
pub fn decide_in(ctx: &mut ExecutionContext, k: usize) -> Result<bool> {
    let len = ctx.len();
    let p = SearchParams::new(0, len - 1);
    Ok(substring::find_any(ctx, k + 1, &p)?.is_none())
}
