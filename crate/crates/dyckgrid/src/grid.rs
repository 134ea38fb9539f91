//! Subgraphs of the `d`-dimensional grid with a canonical edge order,
//! breadth-first connectivity and the `GRID v1` text format.
//!
//! Vertices have coordinates `0..=n_a` on axis `a`; ids are row-major (the
//! last coordinate varies fastest). Edges join a lower endpoint `v` to
//! `v + e_a`; their ids are axis-major, and lexicographic by lower endpoint
//! within an axis. Axes are numbered from 0 in this API.
//!
//! ```text
//! GRID v1 directed=<0|1> dims=<n1,...,nd>
//! <edge bitmap as '0'/'1' in edge-id order, 64 per line>
//! ```

use std::collections::VecDeque;
use std::fmt::Write as _;

use bitvec::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

const LINE_WIDTH: usize = 64;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GridInstance {
    dims: Vec<usize>,
    directed: bool,
    edges: BitVec<u64, Lsb0>,
}

/// Result of a breadth-first connectivity query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub connected: bool,
    pub vertices_visited: usize,
}

impl GridInstance {
    /// The grid with every edge absent.
    pub fn empty(dims: &[usize], directed: bool) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::DimensionMismatch(format!(
                "dimensions must be nonempty and positive, got {dims:?}"
            )));
        }
        let count = edge_count(dims);
        Ok(GridInstance {
            dims: dims.to_vec(),
            directed,
            edges: bitvec![u64, Lsb0; 0; count],
        })
    }

    /// The grid with every edge present.
    pub fn full(dims: &[usize], directed: bool) -> Result<Self> {
        let mut g = Self::empty(dims, directed)?;
        g.edges.fill(true);
        Ok(g)
    }

    pub fn from_bits(
        dims: &[usize],
        directed: bool,
        bits: impl IntoIterator<Item = bool>,
    ) -> Result<Self> {
        let mut g = Self::empty(dims, directed)?;
        let bits: BitVec<u64, Lsb0> = bits.into_iter().collect();
        if bits.len() != g.edges.len() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} edge bits, got {}",
                g.edges.len(),
                bits.len()
            )));
        }
        g.edges = bits;
        Ok(g)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.dims.iter().map(|n| n + 1).product()
    }

    pub fn present_count(&self) -> usize {
        self.edges.count_ones()
    }

    pub fn edge(&self, id: usize) -> bool {
        self.edges[id]
    }

    pub fn set_edge(&mut self, id: usize, present: bool) {
        self.edges.set(id, present);
    }

    pub fn edge_bits(&self) -> impl Iterator<Item = bool> + '_ {
        self.edges.iter().by_vals()
    }

    /// Id of the edge from `lower` along `axis`.
    pub fn edge_id(&self, lower: &[usize], axis: usize) -> Result<usize> {
        edge_id(&self.dims, lower, axis)
    }

    /// Lower endpoint and axis of edge `id`.
    pub fn decode_edge(&self, id: usize) -> Result<(Vec<usize>, usize)> {
        decode_edge(&self.dims, id)
    }

    pub fn vertex_id(&self, coords: &[usize]) -> Result<usize> {
        vertex_id(&self.dims, coords)
    }

    pub fn vertex_coords(&self, id: usize) -> Vec<usize> {
        vertex_coords(&self.dims, id)
    }

    /// Sets the edge between two adjacent vertices (in either order).
    pub fn set_between(&mut self, a: &[usize], b: &[usize], present: bool) -> Result<usize> {
        let (lower, axis) = edge_between(a, b)?;
        let id = self.edge_id(&lower, axis)?;
        self.set_edge(id, present);
        Ok(id)
    }

    /// Neighbour ids of `v` over present edges (both directions when
    /// undirected), in ascending order.
    fn neighbours(&self, v: usize, out: &mut Vec<usize>) {
        out.clear();
        let coords = self.vertex_coords(v);
        let strides = strides(&self.dims);
        for axis in 0..self.dims.len() {
            if !self.directed && coords[axis] > 0 {
                let mut lower = coords.clone();
                lower[axis] -= 1;
                if self.edges[edge_id_unchecked(&self.dims, &lower, axis)] {
                    out.push(v - strides[axis]);
                }
            }
            if coords[axis] < self.dims[axis]
                && self.edges[edge_id_unchecked(&self.dims, &coords, axis)]
            {
                out.push(v + strides[axis]);
            }
        }
        out.sort_unstable();
    }

    /// Vertices reachable from `source` over present edges.
    pub fn reachable_from(&self, source: usize) -> (Vec<bool>, usize) {
        let mut seen = vec![false; self.vertex_count()];
        seen[source] = true;
        let mut visited = 1;
        let mut frontier = vec![source];
        let mut buf = Vec::new();
        while !frontier.is_empty() {
            frontier.sort_unstable();
            let mut next = Vec::new();
            for &v in &frontier {
                self.neighbours(v, &mut buf);
                for &u in &buf {
                    if !seen[u] {
                        seen[u] = true;
                        visited += 1;
                        next.push(u);
                    }
                }
            }
            frontier = next;
        }
        (seen, visited)
    }

    /// Whether the all-zeros corner reaches the opposite corner `dims`.
    /// Frontiers are expanded in ascending vertex id, so the traversal is
    /// deterministic.
    pub fn connectivity(&self) -> Connectivity {
        let target = self.vertex_count() - 1;
        let mut seen = vec![false; self.vertex_count()];
        seen[0] = true;
        let mut visited = 1;
        let mut queue = VecDeque::from([0usize]);
        let mut level: Vec<usize> = Vec::new();
        let mut buf = Vec::new();
        while !queue.is_empty() {
            level.clear();
            level.extend(queue.drain(..));
            level.sort_unstable();
            for &v in &level {
                if v == target {
                    return Connectivity {
                        connected: true,
                        vertices_visited: visited,
                    };
                }
                self.neighbours(v, &mut buf);
                for &u in &buf {
                    if !seen[u] {
                        seen[u] = true;
                        visited += 1;
                        queue.push_back(u);
                    }
                }
            }
        }
        Connectivity {
            connected: false,
            vertices_visited: visited,
        }
    }

    pub fn connected(&self) -> bool {
        self.connectivity().connected
    }

    /// Serializes to the `GRID v1` format.
    pub fn to_grid_v1(&self) -> String {
        let dims: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        let mut out = format!(
            "GRID v1 directed={} dims={}\n",
            u8::from(self.directed),
            dims.join(",")
        );
        let bits: String = self
            .edges
            .iter()
            .map(|b| if *b { '1' } else { '0' })
            .collect();
        for chunk in bits.as_bytes().chunks(LINE_WIDTH) {
            let _ = writeln!(out, "{}", std::str::from_utf8(chunk).expect("ascii"));
        }
        out
    }

    /// Parses the `GRID v1` format.
    pub fn from_grid_v1(text: &str) -> Result<Self> {
        let err = |m: String| Error::GridFormat(m);
        if !text.ends_with('\n') {
            return Err(err("missing trailing newline".into()));
        }
        let mut lines = text[..text.len() - 1].split('\n');
        let header = lines.next().unwrap_or_default();
        let rest = header
            .strip_prefix("GRID v1 directed=")
            .ok_or_else(|| err(format!("bad header {header:?}")))?;
        let (flag, dims) = rest
            .split_once(" dims=")
            .ok_or_else(|| err(format!("bad header {header:?}")))?;
        let directed = match flag {
            "0" => false,
            "1" => true,
            _ => return Err(err(format!("bad directed flag {flag:?}"))),
        };
        let dims = dims
            .split(',')
            .map(|d| {
                d.parse::<usize>()
                    .map_err(|_| err(format!("bad dimension {d:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut g = Self::empty(&dims, directed)?;
        let body: Vec<&str> = lines.collect();
        let mut count = 0;
        for (i, line) in body.iter().enumerate() {
            let last = i + 1 == body.len();
            if line.is_empty() || line.len() > LINE_WIDTH || (!last && line.len() != LINE_WIDTH) {
                return Err(err(format!(
                    "bitmap line {} has length {}",
                    i + 2,
                    line.len()
                )));
            }
            for c in line.chars() {
                let bit = match c {
                    '0' => false,
                    '1' => true,
                    _ => return Err(err(format!("invalid bitmap character {c:?}"))),
                };
                if count >= g.edges.len() {
                    return Err(err("bitmap longer than the edge count".into()));
                }
                g.edges.set(count, bit);
                count += 1;
            }
        }
        if count != g.edges.len() {
            return Err(err(format!(
                "bitmap has {count} bits, expected {}",
                g.edges.len()
            )));
        }
        Ok(g)
    }
}

/// `Σ_a n_a · Π_{b≠a} (n_b + 1)`.
pub fn edge_count(dims: &[usize]) -> usize {
    (0..dims.len()).map(|a| axis_edge_count(dims, a)).sum()
}

fn axis_edge_count(dims: &[usize], axis: usize) -> usize {
    dims.iter()
        .enumerate()
        .map(|(b, &n)| if b == axis { n } else { n + 1 })
        .product()
}

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for a in (0..dims.len().saturating_sub(1)).rev() {
        s[a] = s[a + 1] * (dims[a + 1] + 1);
    }
    s
}

pub fn vertex_id(dims: &[usize], coords: &[usize]) -> Result<usize> {
    if coords.len() != dims.len() || coords.iter().zip(dims).any(|(c, n)| c > n) {
        return Err(Error::OutOfBounds(format!(
            "vertex {coords:?} outside dims {dims:?}"
        )));
    }
    Ok(coords.iter().zip(strides(dims)).map(|(c, s)| c * s).sum())
}

pub fn vertex_coords(dims: &[usize], mut id: usize) -> Vec<usize> {
    let mut coords = vec![0; dims.len()];
    for a in (0..dims.len()).rev() {
        coords[a] = id % (dims[a] + 1);
        id /= dims[a] + 1;
    }
    coords
}

fn edge_id_unchecked(dims: &[usize], lower: &[usize], axis: usize) -> usize {
    let offset: usize = (0..axis).map(|a| axis_edge_count(dims, a)).sum();
    let mut idx = 0;
    for (b, (&c, &n)) in lower.iter().zip(dims).enumerate() {
        let radix = if b == axis { n } else { n + 1 };
        idx = idx * radix + c;
    }
    offset + idx
}

/// Id of the edge from `lower` to `lower + e_axis`.
pub fn edge_id(dims: &[usize], lower: &[usize], axis: usize) -> Result<usize> {
    if axis >= dims.len() || lower.len() != dims.len() {
        return Err(Error::OutOfBounds(format!(
            "axis {axis} or vertex {lower:?} invalid for dims {dims:?}"
        )));
    }
    let fits = lower
        .iter()
        .zip(dims)
        .enumerate()
        .all(|(b, (&c, &n))| if b == axis { c < n } else { c <= n });
    if !fits {
        return Err(Error::OutOfBounds(format!(
            "edge from {lower:?} along axis {axis} leaves dims {dims:?}"
        )));
    }
    Ok(edge_id_unchecked(dims, lower, axis))
}

/// Inverse of [`edge_id`].
pub fn decode_edge(dims: &[usize], id: usize) -> Result<(Vec<usize>, usize)> {
    let mut rest = id;
    for axis in 0..dims.len() {
        let count = axis_edge_count(dims, axis);
        if rest < count {
            let mut lower = vec![0; dims.len()];
            for b in (0..dims.len()).rev() {
                let radix = if b == axis { dims[b] } else { dims[b] + 1 };
                lower[b] = rest % radix;
                rest /= radix;
            }
            return Ok((lower, axis));
        }
        rest -= count;
    }
    Err(Error::OutOfBounds(format!(
        "edge id {id} outside dims {dims:?}"
    )))
}

/// Lower endpoint and axis of the edge joining adjacent vertices `a`, `b`.
pub fn edge_between(a: &[usize], b: &[usize]) -> Result<(Vec<usize>, usize)> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!("{a:?} and {b:?}")));
    }
    let diffs: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
    match diffs.as_slice() {
        [axis] if a[*axis].abs_diff(b[*axis]) == 1 => {
            let lower = if a[*axis] < b[*axis] { a } else { b };
            Ok((lower.to_vec(), *axis))
        }
        _ => Err(Error::OutOfBounds(format!(
            "{a:?} and {b:?} are not adjacent"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_order_example() {
        let g = GridInstance::empty(&[1, 1], true).unwrap();
        assert_eq!(g.edge_id(&[0, 0], 0).unwrap(), 0);
        assert_eq!(g.edge_id(&[0, 1], 0).unwrap(), 1);
        assert_eq!(g.edge_id(&[0, 0], 1).unwrap(), 2);
        assert_eq!(g.edge_id(&[1, 0], 1).unwrap(), 3);
        assert!(g.edge_id(&[1, 0], 0).is_err());
    }

    #[test]
    fn edge_count_formula_2d() {
        for n in 1..6 {
            for k in 1..6 {
                assert_eq!(edge_count(&[n, k]), n * (k + 1) + k * (n + 1));
            }
        }
    }

    #[test]
    fn decode_round_trip() {
        for dims in [vec![3, 3, 3], vec![1, 2, 3], vec![2, 1]] {
            let mut seen = vec![false; edge_count(&dims)];
            for id in 0..edge_count(&dims) {
                let (v, a) = decode_edge(&dims, id).unwrap();
                assert_eq!(edge_id(&dims, &v, a).unwrap(), id);
                assert!(!seen[id]);
                seen[id] = true;
            }
            assert!(decode_edge(&dims, edge_count(&dims)).is_err());
        }
    }

    #[test]
    fn connectivity_examples() {
        assert!(GridInstance::full(&[3, 2], true).unwrap().connected());
        assert!(!GridInstance::empty(&[3, 2], false).unwrap().connected());
        let mut g = GridInstance::empty(&[1, 1], true).unwrap();
        g.set_between(&[0, 0], &[1, 0], true).unwrap();
        g.set_between(&[1, 0], &[1, 1], true).unwrap();
        assert!(g.connected());
    }

    #[test]
    fn directed_respects_orientation() {
        // A detour that needs a decreasing step is usable only when undirected.
        let path = [[0, 0], [0, 1], [1, 1], [1, 0], [2, 0], [2, 1]];
        for directed in [true, false] {
            let mut g = GridInstance::empty(&[2, 1], directed).unwrap();
            for w in path.windows(2) {
                g.set_between(&w[0], &w[1], true).unwrap();
            }
            assert_eq!(g.connected(), !directed);
        }
    }

    #[test]
    fn grid_v1_round_trip() {
        let mut g = GridInstance::empty(&[5, 6], false).unwrap();
        for id in (0..g.edge_count()).step_by(3) {
            g.set_edge(id, true);
        }
        let text = g.to_grid_v1();
        assert!(text.starts_with("GRID v1 directed=0 dims=5,6\n"));
        assert_eq!(text.lines().nth(1).unwrap().len(), 64);
        assert_eq!(GridInstance::from_grid_v1(&text).unwrap(), g);
        assert!(GridInstance::from_grid_v1(text.trim_end()).is_err());
        assert!(GridInstance::from_grid_v1(&text.replace("dims=5,6", "dims=5,7")).is_err());
        assert!(GridInstance::from_grid_v1("GRID v2 directed=0 dims=1\n0\n").is_err());
    }

    #[test]
    fn grid_v1_exact_bytes() {
        let mut g = GridInstance::empty(&[1, 1], true).unwrap();
        g.set_edge(0, true);
        g.set_edge(3, true);
        assert_eq!(g.to_grid_v1(), "GRID v1 directed=1 dims=1,1\n1001\n");
    }
}
