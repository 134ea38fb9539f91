//! Constructive reductions between the problems.
//!
//! * [`ex_to_block`]: iterated promise function `EX` to a Dyck block.
//! * [`dyck_to_directed_grid`]: OR of `t` bounded-depth Dyck instances to
//!   directed 2D connectivity (trapezoids laid side by side).
//! * [`dyck_to_undirected_fold`]: one long instance to undirected 2D
//!   connectivity, the trapezoid strip folded back and forth.
//! * [`FoldMap`]: folding the last two axes of a `d`-dimensional grid into
//!   one, embedding a `(d-1)`-dimensional instance.
//! * [`directed_ddim_parallel`]: OR of 2D directed instances as one
//!   `d`-dimensional directed instance.
//!
//! Grid embeddings come with a certificate classifying every edge as
//! forced present, forced absent, or controlled by one input symbol.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{self, GridInstance};
use crate::words::{balance, oracle_dyck, Word};

/// Parameters of the iterated promise function `EX_m^{m,m+1}` on `2m` bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExParams {
    pub m: usize,
    pub levels: usize,
}

/// A word whose prefix balances stay in `[0, height]` and whose total
/// balance is 0 or 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSpec {
    #[serde(serialize_with = "serialize_word")]
    pub word: Word,
    pub width: usize,
    pub height: usize,
}

fn serialize_word<S: serde::Serializer>(w: &Word, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_binary())
}

impl BlockSpec {
    /// Checks length, evenness, prefix range and total balance.
    pub fn satisfies_invariants(&self) -> bool {
        if self.word.len() != self.width || !self.width.is_multiple_of(2) {
            return false;
        }
        let mut h = 0i64;
        for b in self.word.iter() {
            h += if b { -1 } else { 1 };
            if h < 0 || h > self.height as i64 {
                return false;
            }
        }
        h == 0 || h == 2
    }
}

/// `w_0 = 2`, `w_ℓ = 2m(w_{ℓ-1} + 1)`.
pub fn block_width(m: usize, levels: usize) -> usize {
    (0..levels).fold(2, |w, _| 2 * m * (w + 1))
}

/// `h_ℓ = 2 + 2ℓ(m + 1)`.
pub fn block_height(m: usize, levels: usize) -> usize {
    2 + 2 * levels * (m + 1)
}

/// Builds the block for an input of `(2m)^ℓ` bits (groups are contiguous:
/// the first `(2m)^{ℓ-1}` bits feed the first sub-block, and so on).
///
/// A bit 0 becomes `00` and a bit 1 becomes `01`; a level concatenates the
/// `2m` sub-blocks and appends `1^{2m}`. Each group must contain `m` or
/// `m + 1` zeros (among its sub-results), else a promise violation is
/// reported.
pub fn ex_to_block(p: ExParams, input: &[bool]) -> Result<BlockSpec> {
    if p.m == 0 {
        return Err(Error::InvalidParams("m must be at least 1".into()));
    }
    let arity = 2 * p.m;
    let expected = arity
        .checked_pow(p.levels as u32)
        .ok_or_else(|| Error::InvalidParams("input size overflows".into()))?;
    if input.len() != expected {
        return Err(Error::InvalidParams(format!(
            "expected (2m)^levels = {expected} input bits, got {}",
            input.len()
        )));
    }
    let mut group_counter = vec![0usize; p.levels + 1];
    let (word, _) = build_block(p.m, p.levels, input, &mut group_counter)?;
    Ok(BlockSpec {
        word,
        width: block_width(p.m, p.levels),
        height: block_height(p.m, p.levels),
    })
}

/// Returns the block and the value `EX^ℓ` of its input.
fn build_block(
    m: usize,
    level: usize,
    input: &[bool],
    groups: &mut [usize],
) -> Result<(Word, bool)> {
    if level == 0 {
        let bit = input[0];
        return Ok((Word::from_bits([false, bit]), bit));
    }
    let chunk = input.len() / (2 * m);
    let group = groups[level];
    groups[level] += 1;
    let mut word = Word::new();
    let mut zeros = 0;
    for part in input.chunks(chunk) {
        let (sub, value) = build_block(m, level - 1, part, groups)?;
        word = word.concat(&sub);
        zeros += usize::from(!value);
    }
    if zeros != m && zeros != m + 1 {
        return Err(Error::PromiseViolation {
            level,
            group,
            zeros,
            m,
        });
    }
    for _ in 0..2 * m {
        word.push(true);
    }
    Ok((word, zeros == m))
}

/// `Dyck_{h,w}(B)`, which equals `[f(B) = 0]` for a valid block.
pub fn block_to_dyck_answer(b: &BlockSpec) -> bool {
    let answer = oracle_dyck(&b.word, b.height);
    debug_assert_eq!(answer, balance(&b.word) == 0);
    answer
}

/// How an edge of an embedding is determined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum EdgeRole {
    ForcedPresent,
    ForcedAbsent,
    /// Present iff symbol `index` of word `word` equals `symbol`.
    Input {
        word: usize,
        index: usize,
        symbol: u8,
    },
}

/// The edges realizing one (position, level) state of a Dyck walk: the
/// edge taken on an opening symbol and the one taken on a closing symbol
/// (absent when that step would leave the allowed range).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Slot {
    pub word: usize,
    pub position: usize,
    pub level: usize,
    pub open_edge: Option<usize>,
    pub close_edge: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub roles: Vec<EdgeRole>,
    pub slots: Vec<Slot>,
}

/// A grid instance built from Dyck inputs, with its certificate.
#[derive(Clone, Debug)]
pub struct EmbeddingMap {
    pub source: String,
    pub target: GridInstance,
    pub certificate: Certificate,
}

impl EmbeddingMap {
    /// Whether every edge's presence matches its certified role for the
    /// given source words.
    pub fn certificate_holds(&self, words: &[Word]) -> bool {
        self.certificate.roles.len() == self.target.edge_count()
            && self.certificate.roles.iter().enumerate().all(|(id, role)| {
                let present = self.target.edge(id);
                match *role {
                    EdgeRole::ForcedPresent => present,
                    EdgeRole::ForcedAbsent => !present,
                    EdgeRole::Input {
                        word,
                        index,
                        symbol,
                    } => present == (u8::from(words[word].get(index)) == symbol),
                }
            })
    }
}

/// Accumulates edge classifications; each edge may be classified once.
struct Builder {
    grid: GridInstance,
    roles: Vec<Option<EdgeRole>>,
}

impl Builder {
    fn new(dims: &[usize], directed: bool) -> Result<Self> {
        let grid = GridInstance::empty(dims, directed)?;
        let roles = vec![None; grid.edge_count()];
        Ok(Builder { grid, roles })
    }

    fn classify(&mut self, a: [usize; 2], b: [usize; 2], role: EdgeRole, present: bool) -> usize {
        let id = self
            .grid
            .set_between(&a, &b, present)
            .expect("edge inside grid");
        assert!(
            self.roles[id].is_none(),
            "edge {a:?}-{b:?} classified twice"
        );
        self.roles[id] = Some(role);
        id
    }

    /// Forces present the axis-aligned polyline through `corners`.
    fn wire(&mut self, corners: &[[usize; 2]]) {
        for seg in corners.windows(2) {
            let (a, b) = (seg[0], seg[1]);
            let axis = if a[0] != b[0] { 0 } else { 1 };
            assert!(
                a[1 - axis] == b[1 - axis],
                "wire segment {a:?}-{b:?} not axis-aligned"
            );
            let (lo, hi) = (a[axis].min(b[axis]), a[axis].max(b[axis]));
            for c in lo..hi {
                let mut p = a;
                p[axis] = c;
                let mut q = a;
                q[axis] = c + 1;
                self.classify(p, q, EdgeRole::ForcedPresent, true);
            }
        }
    }

    fn finish(self, source: String, slots: Vec<Slot>) -> EmbeddingMap {
        let roles = self
            .roles
            .into_iter()
            .map(|r| r.unwrap_or(EdgeRole::ForcedAbsent))
            .collect();
        EmbeddingMap {
            source,
            target: self.grid,
            certificate: Certificate { roles, slots },
        }
    }
}

/// Grid dimensions `(n, k)` of the directed embedding of `t` words of
/// length `m` at depth `d`: `n = (d+1)(t-1) + m/2 + 1`, `k = m/2 + 1`.
pub fn directed_dims(t: usize, m: usize, d: usize) -> (usize, usize) {
    ((d + 1) * (t - 1) + m / 2 + 1, m / 2 + 1)
}

/// Directed 2D grid whose corner-to-corner connectivity is the OR over
/// `words` of depth-`d` Dyck membership.
///
/// After `u` opening and `v` closing symbols, instance `s` sits at grid
/// vertex `(s(d+1) + v, u)`; its trapezoid is the band `0 ≤ u - v ≤ d`,
/// `u, v ≤ m/2`. From `(u, v)` the up-edge is present iff `x_{u+v} = 0`
/// and the right-edge iff `x_{u+v} = 1`. Row 0 carries a corridor from the
/// origin to every trapezoid's start; each trapezoid's end `(m/2, m/2)`
/// exits upward to row `k = m/2 + 1`, which carries a corridor to the
/// corner. Every other edge is absent; consecutive bands are one diagonal
/// apart, so the absent edges between them insulate the trapezoids.
pub fn dyck_to_directed_grid(words: &[Word], d: usize) -> Result<EmbeddingMap> {
    let t = words.len();
    if t == 0 {
        return Err(Error::InvalidParams("at least one word is required".into()));
    }
    if d == 0 {
        return Err(Error::InvalidParams(
            "depth bound d must be at least 1".into(),
        ));
    }
    let m = words[0].len();
    if !m.is_multiple_of(2) || words.iter().any(|w| w.len() != m) {
        return Err(Error::InvalidParams(
            "all words must share one even length".into(),
        ));
    }
    let half = m / 2;
    let (n, k) = directed_dims(t, m, d);
    let mut b = Builder::new(&[n, k], true)?;
    let mut slots = Vec::new();
    for (s, w) in words.iter().enumerate() {
        let off = s * (d + 1);
        for u in 0..=half {
            for v in 0..=u.min(half) {
                let h = u - v;
                if h > d || u + v >= m {
                    continue;
                }
                let p = u + v;
                let bit = w.get(p);
                let open_edge = (u < half && h < d).then(|| {
                    let role = EdgeRole::Input {
                        word: s,
                        index: p,
                        symbol: 0,
                    };
                    b.classify([off + v, u], [off + v, u + 1], role, !bit)
                });
                let close_edge = (v < half && h > 0).then(|| {
                    let role = EdgeRole::Input {
                        word: s,
                        index: p,
                        symbol: 1,
                    };
                    b.classify([off + v, u], [off + v + 1, u], role, bit)
                });
                slots.push(Slot {
                    word: s,
                    position: p,
                    level: h,
                    open_edge,
                    close_edge,
                });
            }
        }
        b.wire(&[[off + half, half], [off + half, half + 1]]);
    }
    b.wire(&[[0, 0], [(t - 1) * (d + 1), 0]]);
    b.wire(&[[half, k], [n, k]]);
    let source = format!("{t} word(s) of length {m}, depth {d}");
    Ok(b.finish(source, slots))
}

/// Geometry of the folded strip: strips of `s` positions alternate
/// between running up-right and down-left; consecutive strips are joined
/// at their ends by nested wires, one per even level.
#[derive(Clone, Copy, Debug)]
struct FoldLayout {
    d: usize,
    q: usize,
    s: usize,
    strips: usize,
}

impl FoldLayout {
    fn new(m: usize, d: usize, k: usize) -> Result<Self> {
        if m < 2 || !m.is_multiple_of(2) {
            return Err(Error::InvalidParams(format!(
                "word length must be even and positive, got {m}"
            )));
        }
        if d == 0 {
            return Err(Error::InvalidParams(
                "depth bound d must be at least 1".into(),
            ));
        }
        let q = d / 2;
        if k < 3 * q + 3 {
            return Err(Error::Capacity(format!(
                "height k = {k} below the minimum {} for depth {d}",
                3 * q + 3
            )));
        }
        let s = 2 * (k - 3 * q - 2);
        Ok(FoldLayout {
            d,
            q,
            s,
            strips: m.div_ceil(s),
        })
    }

    fn ox_up(&self, j: usize) -> usize {
        self.q + (j / 2) * (2 * self.d + 2)
    }

    fn ox_down(&self, j: usize) -> usize {
        self.ox_up(j - 1) + self.s / 2 + self.q + 1
    }

    fn oy_down(&self) -> usize {
        self.s / 2 + 2 * self.q + 1
    }

    /// Vertex of local position `p` (in `0..=s`) at level `h` of strip `j`.
    fn vertex(&self, j: usize, p: usize, h: usize) -> [usize; 2] {
        debug_assert!((p + h).is_multiple_of(2));
        let alpha = (p + h) / 2;
        let beta = (p as i64 - h as i64) / 2;
        if j.is_multiple_of(2) {
            [(self.ox_up(j) as i64 + beta) as usize, self.q + 1 + alpha]
        } else {
            [
                (self.ox_down(j) as i64 - beta) as usize,
                self.oy_down() - alpha,
            ]
        }
    }

    fn required_n(&self) -> usize {
        let last = self.strips - 1;
        if last.is_multiple_of(2) {
            self.ox_up(last) + self.s / 2
        } else {
            self.ox_down(last) + self.q + 1
        }
    }
}

/// Smallest-area dimensions `(n, k)` for folding a word of length `m` at
/// depth `d` (ties broken toward smaller `k`).
pub fn fold_dims(m: usize, d: usize) -> Result<(usize, usize)> {
    let q = d / 2;
    let mut best: Option<(usize, usize)> = None;
    let mut s = 2;
    loop {
        let k = s / 2 + 3 * q + 2;
        let layout = FoldLayout::new(m, d, k)?;
        let n = layout.required_n();
        if best.is_none_or(|(bn, bk)| n * k < bn * bk) {
            best = Some((n, k));
        }
        if s >= m {
            break;
        }
        s += 2;
    }
    Ok(best.expect("at least one strip length"))
}

/// Undirected 2D grid of dimensions `dims = (n, k)` whose corner-to-corner
/// connectivity is depth-`d` Dyck membership of `word`.
///
/// The trapezoid strip is cut into pieces of `s = 2(k - 3⌊d/2⌋ - 2)`
/// positions, laid alternately up-right and down-left on adjacent
/// diagonal bands, and joined by nested wires above (after an up strip)
/// or below (after a down strip). The word is extended with `01` pairs to
/// fill the last strip; those positions are constants. Within the strips
/// every vertex has at most one present edge toward the next position, so
/// the present subgraph is a union of paths and an undirected path cannot
/// shortcut the walk.
pub fn dyck_to_undirected_fold(
    word: &Word,
    d: usize,
    dims: (usize, usize),
) -> Result<EmbeddingMap> {
    let m = word.len();
    let (n, k) = dims;
    let lay = FoldLayout::new(m, d, k)?;
    let need = lay.required_n();
    if n < need {
        return Err(Error::Capacity(format!(
            "width n = {n} below the {need} required for a word of length {m} at height {k}"
        )));
    }
    let symbol = |p: usize| if p < m { word.get(p) } else { (p - m) % 2 == 1 };
    let mut b = Builder::new(&[n, k], false)?;
    let mut slots = Vec::new();
    for j in 0..lay.strips {
        for lp in 0..lay.s {
            let p = j * lay.s + lp;
            let bit = symbol(p);
            for h in (0..=d).filter(|h| (lp + h) % 2 == 0) {
                let here = lay.vertex(j, lp, h);
                let mut edge = |to: usize, sym: u8, present: bool| {
                    let role = if p < m {
                        EdgeRole::Input {
                            word: 0,
                            index: p,
                            symbol: sym,
                        }
                    } else if present {
                        EdgeRole::ForcedPresent
                    } else {
                        EdgeRole::ForcedAbsent
                    };
                    b.classify(here, lay.vertex(j, lp + 1, to), role, present)
                };
                let open_edge = (h < d).then(|| edge(h + 1, 0, !bit));
                let close_edge = (h > 0).then(|| edge(h - 1, 1, bit));
                if p < m {
                    slots.push(Slot {
                        word: 0,
                        position: p,
                        level: h,
                        open_edge,
                        close_edge,
                    });
                }
            }
        }
        if j + 1 < lay.strips {
            for q in 0..=lay.q {
                let from = lay.vertex(j, lay.s, 2 * q);
                let to = lay.vertex(j + 1, 0, 2 * q);
                if j % 2 == 0 {
                    let row = lay.s / 2 + 2 * lay.q + 2 + q;
                    b.wire(&[from, [from[0], row], [to[0], row], to]);
                } else {
                    b.wire(&[from, [from[0], q], [to[0], q], to]);
                }
            }
        }
    }
    let start = lay.vertex(0, 0, 0);
    b.wire(&[[0, 0], [start[0], 0], start]);
    let last = lay.strips - 1;
    let end = lay.vertex(last, lay.s, 0);
    if last % 2 == 0 {
        b.wire(&[end, [end[0], k], [n, k]]);
    } else {
        b.wire(&[end, [end[0], 0], [n, 0], [n, k]]);
    }
    let source = format!("word of length {m}, depth {d}, strip length {}", lay.s);
    Ok(b.finish(source, slots))
}

/// The folding of the last two axes of a `d`-dimensional grid of
/// dimensions `dims` into one axis.
///
/// With `n'_a = n_a + 1`, vertex `(…, x_{d-1}, x_d)` maps to
/// `(…, x_d·n'_{d-1} + x_{d-1})` for even `x_d` and to
/// `(…, x_d·n'_{d-1} + n'_{d-1} - 1 - x_{d-1})` for odd `x_d`. When `n'_d`
/// is even only the first `n'_d - 1` layers are folded and the corner is
/// reached by one extra forced edge from `(…, n_{d-1}, n_d - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldMap {
    dims: Vec<usize>,
    layers: usize,
}

impl FoldMap {
    pub fn new(dims: &[usize]) -> Result<Self> {
        if dims.len() < 2 || dims.contains(&0) {
            return Err(Error::DimensionMismatch(format!(
                "folding needs at least two positive dimensions, got {dims:?}"
            )));
        }
        let nd = dims[dims.len() - 1] + 1;
        let layers = if nd % 2 == 1 { nd } else { nd - 1 };
        Ok(FoldMap {
            dims: dims.to_vec(),
            layers,
        })
    }

    fn width(&self) -> usize {
        self.dims[self.dims.len() - 2] + 1
    }

    /// Whether the extra corner edge is needed (`n'_d` even).
    pub fn needs_corner_edge(&self) -> bool {
        self.layers != self.dims[self.dims.len() - 1] + 1
    }

    /// Dimensions of the folded `(d-1)`-dimensional grid.
    pub fn target_dims(&self) -> Vec<usize> {
        let mut out = self.dims[..self.dims.len() - 2].to_vec();
        out.push(self.width() * self.layers - 1);
        out
    }

    /// Folded coordinate of the last two coordinates `(x_{d-1}, x_d)`.
    pub fn fold_pair(&self, a: usize, layer: usize) -> usize {
        let w = self.width();
        if layer.is_multiple_of(2) {
            layer * w + a
        } else {
            layer * w + w - 1 - a
        }
    }

    /// Inverse of [`FoldMap::fold_pair`], by quotient and remainder.
    pub fn unfold_pair(&self, y: usize) -> (usize, usize) {
        let w = self.width();
        let (layer, r) = (y / w, y % w);
        let a = if layer % 2 == 0 { r } else { w - 1 - r };
        (a, layer)
    }

    pub fn fold_vertex(&self, x: &[usize]) -> Vec<usize> {
        let d = x.len();
        let mut out = x[..d - 2].to_vec();
        out.push(self.fold_pair(x[d - 2], x[d - 1]));
        out
    }

    pub fn unfold_vertex(&self, y: &[usize]) -> Vec<usize> {
        let (a, layer) = self.unfold_pair(y[y.len() - 1]);
        let mut out = y[..y.len() - 1].to_vec();
        out.push(a);
        out.push(layer);
        out
    }

    /// The source edge `(lower endpoint, axis)` onto which the target edge
    /// from `lower` along `axis` pulls back.
    pub fn lift_edge(&self, lower: &[usize], axis: usize) -> Result<(Vec<usize>, usize)> {
        let target = self.target_dims();
        grid::edge_id(&target, lower, axis)?;
        let mut upper = lower.to_vec();
        upper[axis] += 1;
        grid::edge_between(&self.unfold_vertex(lower), &self.unfold_vertex(&upper))
    }

    /// Embeds an undirected instance on [`FoldMap::target_dims`] into the
    /// `d`-dimensional grid; every edge not on the image is absent, except
    /// the corner edge when `n'_d` is even.
    pub fn lift_instance(&self, g: &GridInstance) -> Result<GridInstance> {
        if g.directed() {
            return Err(Error::InvalidParams(
                "folding reverses alternate layers; only undirected instances can be lifted".into(),
            ));
        }
        if g.dims() != self.target_dims().as_slice() {
            return Err(Error::DimensionMismatch(format!(
                "instance dims {:?} differ from folded dims {:?}",
                g.dims(),
                self.target_dims()
            )));
        }
        let mut out = GridInstance::empty(&self.dims, false)?;
        for id in 0..g.edge_count() {
            if g.edge(id) {
                let (lower, axis) = g.decode_edge(id)?;
                let (src, src_axis) = self.lift_edge(&lower, axis)?;
                let sid = out.edge_id(&src, src_axis)?;
                out.set_edge(sid, true);
            }
        }
        if self.needs_corner_edge() {
            let mut below = self.dims.clone();
            let last = below.len() - 1;
            below[last] -= 1;
            out.set_between(&below, &self.dims, true)?;
        }
        Ok(out)
    }
}

/// Directed `d`-dimensional instance computing the OR of 2D directed
/// instances, one per index `I` over the first `d - 2` axes
/// (`index_dims`, row-major order of `I`).
///
/// The `(d-2)`-dimensional subgrids at last coordinates `(0, 0)` and
/// `(a, b)` are fully present; instance `G_I` occupies the plane through
/// `I`; every other edge is absent.
pub fn directed_ddim_parallel(
    index_dims: &[usize],
    instances: &[GridInstance],
) -> Result<GridInstance> {
    let slots: usize = index_dims.iter().map(|n| n + 1).product();
    if index_dims.is_empty() || instances.len() != slots {
        return Err(Error::DimensionMismatch(format!(
            "expected {slots} instances for index dims {index_dims:?}, got {}",
            instances.len()
        )));
    }
    let plane = instances[0].dims().to_vec();
    if plane.len() != 2
        || instances
            .iter()
            .any(|g| g.dims() != plane.as_slice() || !g.directed())
    {
        return Err(Error::DimensionMismatch(
            "all instances must be directed 2D grids of equal dimensions".into(),
        ));
    }
    let mut dims = index_dims.to_vec();
    dims.extend_from_slice(&plane);
    let e = index_dims.len();
    let mut out = GridInstance::empty(&dims, true)?;
    let index_grid = GridInstance::empty(index_dims, true)?;
    for id in 0..index_grid.edge_count() {
        let (lower, axis) = index_grid.decode_edge(id)?;
        for tail in [[0, 0], [plane[0], plane[1]]] {
            let mut v = lower.clone();
            v.extend_from_slice(&tail);
            let oid = out.edge_id(&v, axis)?;
            out.set_edge(oid, true);
        }
    }
    for (slot, g) in instances.iter().enumerate() {
        let index = grid::vertex_coords(index_dims, slot);
        for id in 0..g.edge_count() {
            if g.edge(id) {
                let (lower, axis) = g.decode_edge(id)?;
                let mut v = index.clone();
                v.extend_from_slice(&lower);
                let oid = out.edge_id(&v, e + axis)?;
                out.set_edge(oid, true);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn block_examples() {
        let p = ExParams { m: 1, levels: 1 };
        let b = ex_to_block(p, &[true, false]).unwrap();
        assert_eq!(b.word.to_binary(), "010011");
        assert_eq!(balance(&b.word), 0);
        assert!(block_to_dyck_answer(&b));
        let b = ex_to_block(p, &[false, false]).unwrap();
        assert_eq!(balance(&b.word), 2);
        assert!(!block_to_dyck_answer(&b));
        let b = ex_to_block(ExParams { m: 1, levels: 0 }, &[false]).unwrap();
        assert_eq!(
            (b.word.to_binary().as_str(), b.width, b.height),
            ("00", 2, 2)
        );
    }

    #[test]
    fn block_promise_violation() {
        let p = ExParams { m: 2, levels: 1 };
        let err = ex_to_block(p, &[true, true, true, false]).unwrap_err();
        assert_eq!(
            err,
            Error::PromiseViolation {
                level: 1,
                group: 0,
                zeros: 1,
                m: 2
            }
        );
    }

    #[test]
    fn directed_examples() {
        let e = dyck_to_directed_grid(&[w("0011")], 2).unwrap();
        assert!(e.target.connected());
        let e = dyck_to_directed_grid(&[w("0011"), w("0101")], 1).unwrap();
        assert!(e.target.connected());
        let e = dyck_to_directed_grid(&[w("0011"), w("0110")], 1).unwrap();
        assert!(!e.target.connected());
        assert_eq!(directed_dims(2, 8, 3), (9, 5));
        let words = [w("00110101"), w("01010101")];
        let e = dyck_to_directed_grid(&words, 3).unwrap();
        assert_eq!(e.target.dims(), &[9, 5]);
        assert!(e.certificate_holds(&words));
    }

    #[test]
    fn fold_single_strip_and_folds() {
        let word = w("0101");
        let e = dyck_to_undirected_fold(&word, 2, fold_dims(4, 2).unwrap()).unwrap();
        assert!(e.target.connected());
        // A short strip forces several folds.
        let word = w("001101001011010011");
        let dims = (40, 3 + 3 + 1);
        let e = dyck_to_undirected_fold(&word, 2, dims).unwrap();
        assert!(e.certificate_holds(std::slice::from_ref(&word)));
        assert!(e.target.connected());
        let mut bits: Vec<bool> = word.iter().collect();
        bits[5] = !bits[5];
        let broken = Word::from_bits(bits);
        let e = dyck_to_undirected_fold(&broken, 2, dims).unwrap();
        assert!(!e.target.connected());
        assert!(matches!(
            dyck_to_undirected_fold(&word, 2, (5, 7)),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn fold_map_examples() {
        let f = FoldMap::new(&[2, 2, 2]).unwrap();
        assert_eq!(f.fold_pair(1, 2), 7);
        assert_eq!(f.fold_pair(1, 1), 4);
        assert_eq!(f.unfold_pair(4), (1, 1));
        assert_eq!(f.target_dims(), vec![2, 8]);
        let g = FoldMap::new(&[2, 3]).unwrap();
        assert!(g.needs_corner_edge());
        assert_eq!(g.target_dims(), vec![8]);
    }

    #[test]
    fn parallel_examples() {
        let off = GridInstance::empty(&[2, 2], true).unwrap();
        let on = GridInstance::full(&[2, 2], true).unwrap();
        let all_off = vec![off.clone(); 3];
        assert!(!directed_ddim_parallel(&[2], &all_off).unwrap().connected());
        let mut one = all_off.clone();
        one[1] = on;
        assert!(directed_ddim_parallel(&[2], &one).unwrap().connected());
    }
}
