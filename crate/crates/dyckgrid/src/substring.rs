//! Recursive search for minimal `±k`-substrings.
//!
//! The family is mutually recursive: `find_from` at level `k` glues two
//! consecutive minimal `±(k-1)`-substrings found by `find_from`,
//! `find_from_right` and `find_first` at level `k-1`; `find_first` at
//! level `k` binary-searches with `find_any` and `find_fixed_pos`, which in
//! turn enumerate `find_from` over a ladder of maximal lengths.
//!
//! Right-to-left variants are realized by running the left-to-right
//! procedure on the reversed word (reversal preserves balances and turns
//! "rightmost" into "leftmost"); no copy is made, reads are re-indexed.
//!
//! All public entry points validate their parameters, charge their modeled
//! cost when they are the outermost call, and return `Ok(None)` for `NULL`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{CostConstants, ExecutionContext};
use crate::search::{amplified_first_success, max_param_search, threshold_search_values};
use crate::words::{Sign, SignSet, SubstringMatch};

/// Scan direction of [`find_first`], and side preference of
/// [`find_fixed_pos`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Left,
    Right,
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Direction::Left),
            "right" => Ok(Direction::Right),
            _ => Err(Error::InvalidParams(format!("unknown direction {s:?}"))),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Left => "left",
            Direction::Right => "right",
        })
    }
}

/// Window, anchor, maximal length, sign set and direction of a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchParams {
    pub l: usize,
    pub r: usize,
    pub t: usize,
    pub d: usize,
    pub s: SignSet,
    pub direction: Direction,
}

impl SearchParams {
    /// Window `[l, r]` with anchor `t = l`, `d` the window length, both
    /// signs and direction right.
    pub fn new(l: usize, r: usize) -> Self {
        SearchParams {
            l,
            r,
            t: l,
            d: r.saturating_sub(l) + 1,
            s: SignSet::BOTH,
            direction: Direction::Right,
        }
    }

    pub fn t(mut self, t: usize) -> Self {
        self.t = t;
        self
    }

    pub fn d(mut self, d: usize) -> Self {
        self.d = d;
        self
    }

    pub fn s(mut self, s: SignSet) -> Self {
        self.s = s;
        self
    }

    pub fn direction(mut self, direction: Direction) -> Self {
        self.direction = direction;
        self
    }

    pub fn window_len(&self) -> usize {
        self.r - self.l + 1
    }
}

/// The maximal lengths tried by `find_any` and `find_fixed_pos` on a window
/// of `len` symbols: powers of two from `2^⌈log₂k⌉` up to `2^⌈log₂len⌉`,
/// each clamped to `len`. Empty when the window is shorter than `k`.
pub fn d_ladder(k: usize, len: usize) -> Vec<usize> {
    if len < k || k == 0 {
        return Vec::new();
    }
    let lo = k.next_power_of_two();
    let hi = lo.max(len.next_power_of_two());
    let mut out = Vec::new();
    let mut d = lo;
    while d <= hi {
        out.push(d.min(len));
        d *= 2;
    }
    out
}

fn check_common(ctx: &ExecutionContext, k: usize, p: &SearchParams) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParams(format!(
            "k must be at least 2, got {k}"
        )));
    }
    if ctx.is_empty() {
        return Err(Error::EmptyWord);
    }
    if p.l > p.r || p.r >= ctx.len() {
        return Err(Error::InvalidParams(format!(
            "window [{}, {}] invalid for word of length {}",
            p.l,
            p.r,
            ctx.len()
        )));
    }
    Ok(())
}

fn check_anchor(p: &SearchParams) -> Result<()> {
    if p.t < p.l || p.t > p.r {
        return Err(Error::InvalidParams(format!(
            "anchor t = {} outside window [{}, {}]",
            p.t, p.l, p.r
        )));
    }
    Ok(())
}

fn check_length(p: &SearchParams) -> Result<()> {
    if p.d == 0 || p.d > p.window_len() {
        return Err(Error::InvalidParams(format!(
            "maximal length d = {} must lie in [1, {}]",
            p.d,
            p.window_len()
        )));
    }
    Ok(())
}

/// Outcome of `find_from` together with the two `±(k-1)`-substrings it
/// glued (absent at `k = 2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Traced {
    pub found: SubstringMatch,
    pub parts: Option<(SubstringMatch, SubstringMatch)>,
}

/// Leftmost minimal `±k`-substring `[i, j]` with `l ≤ i ≤ t ≤ j ≤ r`,
/// `j - i + 1 ≤ d` and sign in `s`.
pub fn find_from(
    ctx: &mut ExecutionContext,
    k: usize,
    p: &SearchParams,
) -> Result<Option<SubstringMatch>> {
    Ok(find_from_traced(ctx, k, p)?.map(|t| t.found))
}

/// [`find_from`] also returning the glued pair of sub-matches.
pub fn find_from_traced(
    ctx: &mut ExecutionContext,
    k: usize,
    p: &SearchParams,
) -> Result<Option<Traced>> {
    check_common(ctx, k, p)?;
    check_anchor(p)?;
    check_length(p)?;
    charge(ctx, |m| m.from(k, p.d, p.window_len()));
    Ok(ctx.nested(|ctx| Engine::new(ctx).from(false, k, p.l, p.r, p.t, p.d, p.s)))
}

/// Rightmost minimal `±k`-substring containing `t` (mirror of [`find_from`]).
pub fn find_from_right(
    ctx: &mut ExecutionContext,
    k: usize,
    p: &SearchParams,
) -> Result<Option<SubstringMatch>> {
    check_common(ctx, k, p)?;
    check_anchor(p)?;
    check_length(p)?;
    charge(ctx, |m| m.from(k, p.d, p.window_len()));
    Ok(ctx.nested(|ctx| {
        Engine::new(ctx)
            .from_right(false, k, p.l, p.r, p.t, p.d, p.s)
            .map(|x| x.found)
    }))
}

/// Some minimal `±k`-substring of length at most `d` in `[l, r]`; found
/// whenever one of length at least `d/2` exists.
pub fn find_fixed_len(
    ctx: &mut ExecutionContext,
    k: usize,
    p: &SearchParams,
) -> Result<Option<SubstringMatch>> {
    check_common(ctx, k, p)?;
    if p.d < 2 {
        return Err(Error::InvalidParams(format!(
            "d must be at least 2, got {}",
            p.d
        )));
    }
    let d = p.d.min(p.window_len());
    charge(ctx, |m| m.fixed_len(k, d, p.window_len()));
    Ok(ctx.nested(|ctx| Engine::new(ctx).fixed_len(false, k, p.l, p.r, d, p.s)))
}

/// Some minimal `±k`-substring in `[l, r]` with sign in `s`.
pub fn find_any(
    ctx: &mut ExecutionContext,
    k: usize,
    p: &SearchParams,
) -> Result<Option<SubstringMatch>> {
    check_common(ctx, k, p)?;
    charge(ctx, |m| m.any(k, p.window_len()));
    Ok(ctx.nested(|ctx| Engine::new(ctx).any(false, k, p.l, p.r, p.s)))
}

/// First minimal `±k`-substring in `[l, r]` scanning in `direction`:
/// the leftmost for `Right`, the rightmost for `Left`.
pub fn find_first(
    ctx: &mut ExecutionContext,
    k: usize,
    p: &SearchParams,
) -> Result<Option<SubstringMatch>> {
    check_common(ctx, k, p)?;
    charge(ctx, |m| m.first(k, p.window_len()));
    Ok(ctx.nested(|ctx| {
        let mut e = Engine::new(ctx);
        match p.direction {
            Direction::Right => e.first_right(false, k, p.l, p.r, p.s),
            Direction::Left => e.first_left(false, k, p.l, p.r, p.s),
        }
    }))
}

/// Leftmost (`Left`) or rightmost (`Right`) minimal `±k`-substring inside
/// `[l, r]` containing `t`.
pub fn find_fixed_pos(
    ctx: &mut ExecutionContext,
    k: usize,
    p: &SearchParams,
) -> Result<Option<SubstringMatch>> {
    check_common(ctx, k, p)?;
    check_anchor(p)?;
    charge(ctx, |m| m.fixed_pos(k, p.window_len()));
    Ok(ctx.nested(|ctx| {
        let mut e = Engine::new(ctx);
        match p.direction {
            Direction::Left => e.fixed_pos_left(false, k, p.l, p.r, p.t, p.s),
            Direction::Right => e.fixed_pos_right(false, k, p.l, p.r, p.t, p.s),
        }
    }))
}

fn charge(ctx: &mut ExecutionContext, f: impl FnOnce(&mut cost::CostModel) -> f64) {
    ctx.charge_outermost(|ctx| f(&mut cost::CostModel::new(ctx.constants())));
}

/// Runs the recursive procedures in oriented coordinates: with `rev`
/// set, index `i` denotes symbol `n - 1 - i` of the input.
struct Engine<'a> {
    ctx: &'a mut ExecutionContext,
    n: usize,
    doubling: bool,
}

fn flip(n: usize, m: SubstringMatch) -> SubstringMatch {
    SubstringMatch::new(n - 1 - m.j, n - 1 - m.i, m.sign)
}

impl<'a> Engine<'a> {
    fn new(ctx: &'a mut ExecutionContext) -> Self {
        let n = ctx.len();
        let doubling = ctx.config().find_first_doubling;
        Engine { ctx, n, doubling }
    }

    fn read(&mut self, rev: bool, i: usize) -> bool {
        self.ctx.read(if rev { self.n - 1 - i } else { i })
    }

    /// Gluing check: `a` precedes `b`, equal signs, sign admitted, union
    /// no longer than `d`.
    fn glue(a: SubstringMatch, b: SubstringMatch, d: usize, s: SignSet) -> Option<Traced> {
        if a.sign != b.sign || !s.contains(a.sign) || b.j < a.j {
            return None;
        }
        let (i, j) = (a.i.min(b.i), a.j.max(b.j));
        (j - i < d).then(|| Traced {
            found: SubstringMatch::new(i, j, a.sign),
            parts: Some((a, b)),
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn from(
        &mut self,
        rev: bool,
        k: usize,
        l: usize,
        r: usize,
        t: usize,
        d: usize,
        s: SignSet,
    ) -> Option<Traced> {
        if l > r || t < l || t > r {
            return None;
        }
        let d = d.min(r - l + 1);
        if d < k {
            return None;
        }
        if k == 2 {
            return self.from_base(rev, l, r, t, s);
        }
        let both = SignSet::BOTH;
        match self.from(rev, k - 1, l, r, t, d - 1, both).map(|x| x.found) {
            Some(a) => {
                // Left neighbour: the rightmost short (k-1)-substring through
                // i1 - 1, else the first one to the left within reach.
                if a.i > l {
                    let b = self
                        .from_right(rev, k - 1, l, r, a.i - 1, d - 1, both)
                        .map(|x| x.found)
                        .or_else(|| {
                            let lo = l.max((a.j + 1).saturating_sub(d));
                            self.first_left(rev, k - 1, lo, a.i - 1, both)
                        });
                    if let Some(found) = b.and_then(|b| Self::glue(b, a, d, s)) {
                        return Some(found);
                    }
                }
                // Right neighbours, shifting while the pair still starts at
                // or before t.
                let mut cur = a;
                loop {
                    if cur.j >= r {
                        return None;
                    }
                    let next = self
                        .from(rev, k - 1, l, r, cur.j + 1, d - 1, both)
                        .map(|x| x.found);
                    let next = next.or_else(|| {
                        let hi = r.min(cur.i + d - 1);
                        self.first_right(rev, k - 1, cur.j + 1, hi, both)
                    })?;
                    if let Some(found) = Self::glue(cur, next, d, s) {
                        return Some(found);
                    }
                    if next.i > t {
                        return None;
                    }
                    cur = next;
                }
            }
            None => {
                let q = self.first_right(rev, k - 1, t, r.min(t + d - 1), both)?;
                let p = self.first_left(rev, k - 1, l.max((t + 1).saturating_sub(d)), t, both)?;
                Self::glue(p, q, d, s)
            }
        }
    }

    fn from_base(&mut self, rev: bool, l: usize, r: usize, t: usize, s: SignSet) -> Option<Traced> {
        let xt = self.read(rev, t);
        let sign = if xt { Sign::Minus } else { Sign::Plus };
        if !s.contains(sign) {
            return None;
        }
        let hit = |i| Traced {
            found: SubstringMatch::new(i, i + 1, sign),
            parts: None,
        };
        if t > l && self.read(rev, t - 1) == xt {
            return Some(hit(t - 1));
        }
        if t < r && self.read(rev, t + 1) == xt {
            return Some(hit(t));
        }
        None
    }

    /// Mirror of [`Engine::from`]: rightmost instead of leftmost.
    #[allow(clippy::too_many_arguments)]
    fn from_right(
        &mut self,
        rev: bool,
        k: usize,
        l: usize,
        r: usize,
        t: usize,
        d: usize,
        s: SignSet,
    ) -> Option<Traced> {
        let n = self.n;
        if l > r || t < l || t > r {
            return None;
        }
        self.from(!rev, k, n - 1 - r, n - 1 - l, n - 1 - t, d, s)
            .map(|x| Traced {
                found: flip(n, x.found),
                parts: x.parts.map(|(a, b)| (flip(n, b), flip(n, a))),
            })
    }

    fn fixed_len(
        &mut self,
        rev: bool,
        k: usize,
        l: usize,
        r: usize,
        d: usize,
        s: SignSet,
    ) -> Option<SubstringMatch> {
        if l > r {
            return None;
        }
        let len = r - l + 1;
        let threshold = d.div_ceil(2).clamp(1, len);
        let doubling = self.doubling;
        threshold_search_values(self.ctx, len, threshold, 0.0, |ctx, i| {
            Engine::with(ctx, doubling).from(rev, k, l, r, l + i, d, s)
        })
        .expect("threshold within range")
        .map(|(_, v)| v.found)
    }

    fn any(
        &mut self,
        rev: bool,
        k: usize,
        l: usize,
        r: usize,
        s: SignSet,
    ) -> Option<SubstringMatch> {
        if l > r {
            return None;
        }
        let ladder = d_ladder(k, r - l + 1);
        let doubling = self.doubling;
        amplified_first_success(self.ctx, ladder.len(), 0.0, |ctx, idx| {
            Engine::with(ctx, doubling).fixed_len(rev, k, l, r, ladder[idx], s)
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn fixed_pos_left(
        &mut self,
        rev: bool,
        k: usize,
        l: usize,
        r: usize,
        t: usize,
        s: SignSet,
    ) -> Option<SubstringMatch> {
        if l > r || t < l || t > r {
            return None;
        }
        let ladder = d_ladder(k, r - l + 1);
        let doubling = self.doubling;
        max_param_search(self.ctx, ladder.len(), 0.0, |ctx, idx| {
            Engine::with(ctx, doubling).from(rev, k, l, r, t, ladder[idx], s)
        })
        .map(|(_, v)| v.found)
    }

    fn fixed_pos_right(
        &mut self,
        rev: bool,
        k: usize,
        l: usize,
        r: usize,
        t: usize,
        s: SignSet,
    ) -> Option<SubstringMatch> {
        let n = self.n;
        if l > r || t < l || t > r {
            return None;
        }
        self.fixed_pos_left(!rev, k, n - 1 - r, n - 1 - l, n - 1 - t, s)
            .map(|m| flip(n, m))
    }

    /// Majority of `2u` runs while faults are being injected (ties are
    /// `NULL`); a single run otherwise, since repeated runs would agree.
    fn majority(
        &mut self,
        u: usize,
        mut f: impl FnMut(&mut Self) -> Option<SubstringMatch>,
    ) -> Option<SubstringMatch> {
        if !self.ctx.faults_active() {
            return f(self);
        }
        let mut tally: Vec<(Option<SubstringMatch>, usize)> = Vec::new();
        for _ in 0..2 * u {
            let v = f(self);
            match tally.iter_mut().find(|(w, _)| *w == v) {
                Some((_, c)) => *c += 1,
                None => tally.push((v, 1)),
            }
        }
        tally.sort_by(|a, b| b.1.cmp(&a.1));
        match tally.as_slice() {
            [(v, _)] => *v,
            [(v, c0), (_, c1), ..] if c0 > c1 => *v,
            _ => None,
        }
    }

    /// Leftmost minimal `±k`-substring inside `[l, r]` (binary search).
    fn first_right(
        &mut self,
        rev: bool,
        k: usize,
        l: usize,
        r: usize,
        s: SignSet,
    ) -> Option<SubstringMatch> {
        if l > r {
            return None;
        }
        let mut hi = r;
        if self.doubling {
            let mut w = 1usize;
            loop {
                let end = r.min(l + w - 1);
                if self.any(rev, k, l, end, s).is_some() {
                    hi = end;
                    break;
                }
                if end == r {
                    return None;
                }
                w *= 2;
            }
        }
        let (mut lb, mut rb, mut u) = (l, hi, 1usize);
        while lb + 1 < rb {
            let mid = (lb + rb) / 2;
            if self.majority(u, |e| e.any(rev, k, lb, mid, s)).is_some() {
                rb = mid;
            } else {
                let v = self.majority(u, |e| e.fixed_pos_left(rev, k, lb, rb, mid, s));
                if v.is_some() {
                    return v;
                }
                lb = mid + 1;
            }
            u += 1;
        }
        // At most two symbols remain; they can only hold a ±2-substring.
        self.majority(u, |e| e.any(rev, k, lb, rb, s))
    }

    /// Rightmost minimal `±k`-substring inside `[l, r]`.
    fn first_left(
        &mut self,
        rev: bool,
        k: usize,
        l: usize,
        r: usize,
        s: SignSet,
    ) -> Option<SubstringMatch> {
        let n = self.n;
        if l > r {
            return None;
        }
        self.first_right(!rev, k, n - 1 - r, n - 1 - l, s)
            .map(|m| flip(n, m))
    }

    fn with(ctx: &'a mut ExecutionContext, doubling: bool) -> Self {
        let n = ctx.len();
        Engine { ctx, n, doubling }
    }
}

/// Modeled quantum cost of the procedures above, as a worst-case recurrence
/// over their call trees.
///
/// With `w` the window length and `R` the repetition factor:
///
/// * `C_from(2) = 3`
/// * `C_from(k,d,w) = R·[2·C_from(k-1,d-1,w) + C_fromR(k-1,d-1,w) + 3·C_first(k-1, min(2d,w))]`
/// * `C_fixedlen(k,d,w) = c1·⌈√(w/⌈d/2⌉)⌉·C_from(k,d,w)`
/// * `C_any(k,w) = c2·⌈√#ladder⌉·max_d C_fixedlen(k,d,w)`
/// * `C_fixedpos(k,w) = 2·c2·⌈√#ladder⌉·max_d C_from(k,d,w)`
/// * `C_first(k,w) = Σ_{u=1}^{⌈log₂w⌉} 2u·[C_any(k,w_u) + C_fixedpos(k,w_u)]`,
///   with `w_u = ⌈w/2^{u-1}⌉`.
///
/// `C_fromR` equals `C_from` by symmetry.
pub mod cost {
    use super::*;

    pub struct CostModel {
        c: CostConstants,
        r: f64,
        from: HashMap<(usize, usize, usize), f64>,
        any: HashMap<(usize, usize), f64>,
        fixed_pos: HashMap<(usize, usize), f64>,
        first: HashMap<(usize, usize), f64>,
    }

    fn ceil_log2(w: usize) -> u32 {
        if w <= 1 {
            0
        } else {
            usize::BITS - (w - 1).leading_zeros()
        }
    }

    impl CostModel {
        pub fn new(c: CostConstants) -> Self {
            CostModel {
                r: c.repetition() as f64,
                c,
                from: HashMap::new(),
                any: HashMap::new(),
                fixed_pos: HashMap::new(),
                first: HashMap::new(),
            }
        }

        pub fn from(&mut self, k: usize, d: usize, w: usize) -> f64 {
            if k <= 2 {
                return 3.0;
            }
            if let Some(&v) = self.from.get(&(k, d, w)) {
                return v;
            }
            let inner = self.from(k - 1, d.saturating_sub(1).max(1), w);
            let first = self.first(k - 1, (2 * d).min(w));
            let v = self.r * (3.0 * inner + 3.0 * first);
            self.from.insert((k, d, w), v);
            v
        }

        pub fn fixed_len(&mut self, k: usize, d: usize, w: usize) -> f64 {
            let t = d.div_ceil(2).max(1);
            self.c.c1 * (w as f64 / t as f64).sqrt().ceil() * self.from(k, d, w)
        }

        pub fn any(&mut self, k: usize, w: usize) -> f64 {
            if let Some(&v) = self.any.get(&(k, w)) {
                return v;
            }
            let ladder = d_ladder(k, w);
            let worst = ladder
                .iter()
                .map(|&d| self.fixed_len(k, d, w))
                .fold(0.0, f64::max);
            let v = self.c.c2 * (ladder.len() as f64).sqrt().ceil() * worst;
            self.any.insert((k, w), v);
            v
        }

        pub fn fixed_pos(&mut self, k: usize, w: usize) -> f64 {
            if let Some(&v) = self.fixed_pos.get(&(k, w)) {
                return v;
            }
            let ladder = d_ladder(k, w);
            let worst = ladder
                .iter()
                .map(|&d| self.from(k, d, w))
                .fold(0.0, f64::max);
            let v = 2.0 * self.c.c2 * (ladder.len() as f64).sqrt().ceil() * worst;
            self.fixed_pos.insert((k, w), v);
            v
        }

        pub fn first(&mut self, k: usize, w: usize) -> f64 {
            if let Some(&v) = self.first.get(&(k, w)) {
                return v;
            }
            let mut v = 0.0;
            for u in 1..=ceil_log2(w) as usize {
                let wu = w.div_ceil(1usize << (u - 1));
                v += 2.0 * u as f64 * (self.any(k, wu) + self.fixed_pos(k, wu));
            }
            self.first.insert((k, w), v);
            v
        }
    }
}
