//! Bounded-error search primitives.
//!
//! The quantum procedures are replaced by the contracts they guarantee:
//!
//! * [`threshold_search`]: among `N` bounded-error predicates, return a true
//!   index when at least `T` are true, `NULL` when none are, anything
//!   otherwise, at modeled cost `c1·⌈√(N/T)⌉` predicate evaluations.
//! * [`amplified_first_success`]: pick a succeeding candidate out of `M`,
//!   at modeled cost `c2·⌈√M⌉` candidate evaluations.
//! * [`max_param_search`]: as above, but the largest succeeding index.
//!
//! Under the reference and modeled backends the answers are exact and the
//! predicates are evaluated lazily in scan order. Under the sampled backend
//! each primitive's outcome is corrupted at rate `ε`; its predicates are
//! evaluated without corruption, because the contract is stated over their
//! true values (the search itself absorbs their bounded error).
//!
//! Modeled cost is charged only by the outermost operation; calls made from
//! inside another charged operation are accounted for by that operation's
//! recurrence.

use crate::error::{Error, Result};
use crate::oracle::ExecutionContext;

/// Modeled cost of threshold search over `n` predicates with threshold `t`,
/// each costing `unit`.
pub fn threshold_charge(c1: f64, n: usize, t: usize, unit: f64) -> f64 {
    c1 * ((n as f64) / (t as f64)).sqrt().ceil() * unit
}

/// Modeled cost of amplified choice among `m` candidates, each costing `unit`.
pub fn amplification_charge(c2: f64, m: usize, unit: f64) -> f64 {
    c2 * (m as f64).sqrt().ceil() * unit
}

fn check_threshold(n: usize, threshold: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParams("threshold search needs N >= 1".into()));
    }
    if threshold == 0 || threshold > n {
        return Err(Error::InvalidParams(format!(
            "threshold T = {threshold} must satisfy 1 <= T <= N = {n}"
        )));
    }
    Ok(())
}

/// Threshold search over a family of value-or-`NULL` procedures.
///
/// Returns the chosen index together with its value. Under the reference
/// and modeled backends this is the least index with a non-`NULL` value.
pub fn threshold_search_values<V>(
    ctx: &mut ExecutionContext,
    n: usize,
    threshold: usize,
    unit_cost: f64,
    mut f: impl FnMut(&mut ExecutionContext, usize) -> Option<V>,
) -> Result<Option<(usize, V)>> {
    check_threshold(n, threshold)?;
    let c1 = ctx.constants().c1;
    ctx.charge_outermost(|_| threshold_charge(c1, n, threshold, unit_cost));
    Ok(ctx.nested(|ctx| {
        if ctx.faults_active() && ctx.adversarial() {
            return adversarial_threshold(ctx, n, threshold, &mut f);
        }
        for i in 0..n {
            if let Some(v) = ctx.exact(|ctx| f(ctx, i)) {
                if ctx.fault() {
                    return None;
                }
                return Some((i, v));
            }
        }
        None
    }))
}

/// Evaluates every predicate; in the unconstrained regime `0 < #true < T`
/// answers with a uniformly random index.
fn adversarial_threshold<V>(
    ctx: &mut ExecutionContext,
    n: usize,
    threshold: usize,
    f: &mut impl FnMut(&mut ExecutionContext, usize) -> Option<V>,
) -> Option<(usize, V)> {
    let mut values: Vec<Option<V>> = (0..n).map(|i| ctx.exact(|ctx| f(ctx, i))).collect();
    let trues = values.iter().filter(|v| v.is_some()).count();
    if trues > 0 && trues < threshold {
        let i = ctx.random_index(n);
        return values[i].take().map(|v| (i, v));
    }
    if trues == 0 || ctx.fault() {
        return None;
    }
    values
        .into_iter()
        .enumerate()
        .find_map(|(i, v)| v.map(|v| (i, v)))
}

/// Threshold search over bit predicates.
///
/// Under the sampled backend errors are two-sided: a found index is
/// dropped with probability `ε`, and when no predicate is true a uniformly
/// random (false) index is reported with probability `ε`.
pub fn threshold_search(
    ctx: &mut ExecutionContext,
    n: usize,
    threshold: usize,
    unit_cost: f64,
    mut f: impl FnMut(&mut ExecutionContext, usize) -> bool,
) -> Result<Option<usize>> {
    let found = threshold_search_values(ctx, n, threshold, unit_cost, |ctx, i| {
        f(ctx, i).then_some(())
    })?;
    match found {
        Some((i, ())) => Ok(Some(i)),
        None if ctx.fault() => Ok(Some(ctx.random_index(n))),
        None => Ok(None),
    }
}

/// Returns the first candidate (in order) with a non-`NULL` value.
pub fn amplified_first_success<V>(
    ctx: &mut ExecutionContext,
    m: usize,
    unit_cost: f64,
    mut f: impl FnMut(&mut ExecutionContext, usize) -> Option<V>,
) -> Option<V> {
    if m == 0 {
        return None;
    }
    let c2 = ctx.constants().c2;
    ctx.charge_outermost(|_| amplification_charge(c2, m, unit_cost));
    ctx.nested(|ctx| {
        for i in 0..m {
            if let Some(v) = ctx.exact(|ctx| f(ctx, i)) {
                if !ctx.fault() {
                    return Some(v);
                }
            }
        }
        None
    })
}

/// Returns the largest candidate index with a non-`NULL` value, with that
/// value. Candidates are evaluated from the largest index down.
pub fn max_param_search<V>(
    ctx: &mut ExecutionContext,
    m: usize,
    unit_cost: f64,
    mut f: impl FnMut(&mut ExecutionContext, usize) -> Option<V>,
) -> Option<(usize, V)> {
    if m == 0 {
        return None;
    }
    let c2 = ctx.constants().c2;
    ctx.charge_outermost(|_| amplification_charge(c2, m, unit_cost));
    ctx.nested(|ctx| {
        for i in (0..m).rev() {
            if let Some(v) = ctx.exact(|ctx| f(ctx, i)) {
                if !ctx.fault() {
                    return Some((i, v));
                }
            }
        }
        None
    })
}
