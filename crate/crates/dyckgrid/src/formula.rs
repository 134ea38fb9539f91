//! AND-OR formulas for directed 2D grid connectivity.
//!
//! `F_{μ,κ,i,j}` is true iff the directed grid has a path from `(i, j)` to
//! `(i + 2^μ, j + κ)`. A path crosses column `i + 2^{μ-1}` first at some
//! row `j + r`, so
//!
//! ```text
//! F_{μ,κ,i,j} = OR_{r=0}^{κ} ( F_{μ-1,r,i,j} AND F_{μ-1,κ-r,i+2^{μ-1},j+r} )
//! ```
//!
//! and `F_{0,κ,i,j}` is the OR of the `κ + 1` staircase paths (up `a`
//! rows, one step right, up `κ - a` rows), each the AND of its `κ + 1`
//! edges. Subformulas are shared, but leaf counts use tree semantics:
//! `L_{μ,κ} = 2·Σ_r L_{μ-1,r}`, `L_{0,κ} = (κ + 1)²`.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{self, GridInstance};

/// A formula node; children refer to earlier nodes of the same formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    And(Vec<usize>),
    Or(Vec<usize>),
    /// The presence bit of an edge, by id in the formula's grid.
    Leaf(usize),
    Const(bool),
}

/// A shared (DAG) formula over the edges of a directed grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Formula {
    dims: [usize; 2],
    nodes: Vec<Node>,
    leaf_counts: Vec<BigUint>,
    root: usize,
}

/// Size summary of a formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaStats {
    /// Leaf instances with multiplicity, as a decimal string (may exceed
    /// 64 bits).
    pub leaf_count: String,
    pub distinct_nodes: usize,
}

impl Formula {
    /// Grid dimensions `(n, k)` the leaves refer to.
    pub fn dims(&self) -> [usize; 2] {
        self.dims
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn node(&self, id: usize) -> &Node {
        &self.nodes[id]
    }

    /// Number of distinct (shared) nodes.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of leaves of the formula viewed as a tree.
    pub fn leaf_count(&self) -> &BigUint {
        &self.leaf_counts[self.root]
    }

    /// `⌈√L⌉`, the query estimate for evaluating the formula (unit
    /// constant).
    pub fn query_estimate(&self) -> BigUint {
        ceil_sqrt(self.leaf_count())
    }

    pub fn stats(&self) -> FormulaStats {
        FormulaStats {
            leaf_count: self.leaf_count().to_string(),
            distinct_nodes: self.node_count(),
        }
    }

    /// Evaluates on a directed instance of the formula's dimensions.
    pub fn evaluate(&self, g: &GridInstance) -> Result<bool> {
        if !g.directed() {
            return Err(Error::InvalidParams(
                "formulas describe directed grids".into(),
            ));
        }
        if g.dims() != self.dims {
            return Err(Error::DimensionMismatch(format!(
                "formula is over {:?}, instance is {:?}",
                self.dims,
                g.dims()
            )));
        }
        let mut memo = vec![None; self.nodes.len()];
        Ok(self.eval_node(self.root, g, &mut memo))
    }

    fn eval_node(&self, id: usize, g: &GridInstance, memo: &mut [Option<bool>]) -> bool {
        if let Some(v) = memo[id] {
            return v;
        }
        let v = match &self.nodes[id] {
            Node::Leaf(e) => g.edge(*e),
            Node::Const(b) => *b,
            Node::And(cs) => cs.iter().all(|&c| self.eval_node(c, g, memo)),
            Node::Or(cs) => cs.iter().any(|&c| self.eval_node(c, g, memo)),
        };
        memo[id] = Some(v);
        v
    }
}

fn ceil_sqrt(x: &BigUint) -> BigUint {
    let s = x.sqrt();
    if &(&s * &s) < x {
        s + 1u32
    } else {
        s
    }
}

/// Hash-consing arena; `and`/`or` collapse single children.
#[derive(Default)]
struct Arena {
    nodes: Vec<Node>,
    leaf_counts: Vec<BigUint>,
    index: HashMap<Node, usize>,
}

impl Arena {
    fn intern(&mut self, node: Node) -> usize {
        if let Some(&id) = self.index.get(&node) {
            return id;
        }
        let count = match &node {
            Node::Leaf(_) => BigUint::from(1u32),
            Node::Const(_) => BigUint::ZERO,
            Node::And(cs) | Node::Or(cs) => cs.iter().map(|&c| &self.leaf_counts[c]).sum(),
        };
        let id = self.nodes.len();
        self.nodes.push(node.clone());
        self.leaf_counts.push(count);
        self.index.insert(node, id);
        id
    }

    fn gate(&mut self, children: Vec<usize>, and: bool) -> usize {
        assert!(!children.is_empty(), "gates have at least one child");
        if children.len() == 1 {
            return children[0];
        }
        self.intern(if and {
            Node::And(children)
        } else {
            Node::Or(children)
        })
    }

    fn finish(self, dims: [usize; 2], root: usize) -> Formula {
        Formula {
            dims,
            nodes: self.nodes,
            leaf_counts: self.leaf_counts,
            root,
        }
    }
}

struct Builder {
    arena: Arena,
    dims: [usize; 2],
    memo: HashMap<(u32, usize, usize, usize), usize>,
}

impl Builder {
    fn leaf(&mut self, x: usize, y: usize, axis: usize) -> usize {
        let id = grid::edge_id(&self.dims, &[x, y], axis).expect("leaf inside grid");
        self.arena.intern(Node::Leaf(id))
    }

    fn build(&mut self, mu: u32, kappa: usize, i: usize, j: usize) -> usize {
        if let Some(&id) = self.memo.get(&(mu, kappa, i, j)) {
            return id;
        }
        let id = if mu == 0 {
            let paths = (0..=kappa)
                .map(|a| {
                    let mut edges: Vec<usize> = (0..a).map(|y| self.leaf(i, j + y, 1)).collect();
                    edges.push(self.leaf(i, j + a, 0));
                    edges.extend((a..kappa).map(|y| self.leaf(i + 1, j + y, 1)));
                    self.arena.gate(edges, true)
                })
                .collect();
            self.arena.gate(paths, false)
        } else {
            let half = 1usize << (mu - 1);
            let splits = (0..=kappa)
                .map(|r| {
                    let left = self.build(mu - 1, r, i, j);
                    let right = self.build(mu - 1, kappa - r, i + half, j + r);
                    self.arena.gate(vec![left, right], true)
                })
                .collect();
            self.arena.gate(splits, false)
        };
        self.memo.insert((mu, kappa, i, j), id);
        id
    }
}

/// The formula `F_{μ,κ,i,j}` over the grid of dimensions
/// `(i + 2^μ, j + κ)`. With `j + κ = 0` the formula is well defined (a
/// single row) but there is no grid instance to evaluate it on.
pub fn build_formula(mu: u32, kappa: usize, i: usize, j: usize) -> Formula {
    let dims = [i + (1usize << mu), j + kappa];
    let mut b = Builder {
        arena: Arena::default(),
        dims,
        memo: HashMap::new(),
    };
    let root = b.build(mu, kappa, i, j);
    b.arena.finish(dims, root)
}

/// `L_{μ,κ}` from its recurrence, independent of any formula.
pub fn leaf_recurrence(mu: u32, kappa: usize) -> BigUint {
    let mut row: Vec<BigUint> = (0..=kappa)
        .map(|r| BigUint::from((r + 1) * (r + 1)))
        .collect();
    for _ in 0..mu {
        let mut prefix = BigUint::ZERO;
        row = row
            .iter()
            .map(|l| {
                prefix += l;
                &prefix * 2u32
            })
            .collect();
    }
    row.pop().expect("kappa + 1 entries")
}

/// `2^{μ+1}·C(κ+μ+2, κ)`, an upper bound on `L_{μ,κ}`.
pub fn formula_size_bound(mu: u32, kappa: usize) -> BigUint {
    let top = kappa + mu as usize + 2;
    let mut binom = BigUint::from(1u32);
    for t in 0..kappa {
        binom = binom * (top - t) / (t + 1);
    }
    binom << (mu as usize + 1)
}

/// Connectivity formula for a directed `(n, k)` grid with arbitrary `n`.
///
/// Builds `F_{m,k,0,0}` with `2^m ≥ n` and replaces leaves in the padding
/// columns by constants: true along the row-`k` corridor from `(n, k)` to
/// `(2^m, k)`, false elsewhere; constants are then absorbed.
pub fn build_padded(n: usize, k: usize) -> Result<Formula> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidParams(format!(
            "grid dimensions must be positive, got ({n}, {k})"
        )));
    }
    let mu = n.next_power_of_two().trailing_zeros();
    let full = build_formula(mu, k, 0, 0);
    if full.dims()[0] == n {
        return Ok(full);
    }
    let dims = [n, k];
    let mut arena = Arena::default();
    let mut map: Vec<usize> = Vec::with_capacity(full.node_count());
    for node in &full.nodes {
        let id = match node {
            Node::Leaf(e) => {
                let (lower, axis) = grid::decode_edge(&full.dims, *e)?;
                let (x, y) = (lower[0], lower[1]);
                let inside = if axis == 0 { x < n } else { x <= n };
                if inside {
                    arena.intern(Node::Leaf(grid::edge_id(&dims, &lower, axis)?))
                } else {
                    arena.intern(Node::Const(axis == 0 && y == k))
                }
            }
            Node::Const(b) => arena.intern(Node::Const(*b)),
            Node::And(cs) | Node::Or(cs) => {
                let and = matches!(node, Node::And(_));
                let mut kept = Vec::with_capacity(cs.len());
                let mut absorbed = false;
                for &c in cs {
                    match arena.nodes[map[c]] {
                        Node::Const(b) if b == and => {}
                        Node::Const(_) => {
                            absorbed = true;
                            break;
                        }
                        _ => kept.push(map[c]),
                    }
                }
                if absorbed {
                    arena.intern(Node::Const(!and))
                } else if kept.is_empty() {
                    arena.intern(Node::Const(and))
                } else {
                    arena.gate(kept, and)
                }
            }
        };
        map.push(id);
    }
    let root = map[full.root];
    Ok(arena.finish(dims, root))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_examples() {
        for kappa in 0..=8 {
            let f = build_formula(0, kappa, 0, 0);
            assert_eq!(*f.leaf_count(), BigUint::from((kappa + 1) * (kappa + 1)));
        }
        assert_eq!(
            *build_formula(1, 1, 0, 0).leaf_count(),
            BigUint::from(10u32)
        );
        assert_eq!(leaf_recurrence(1, 1), BigUint::from(10u32));
        assert_eq!(formula_size_bound(1, 1), BigUint::from(16u32));
        assert_eq!(formula_size_bound(0, 0), BigUint::from(2u32));
        assert_eq!(formula_size_bound(0, 2), BigUint::from(12u32));
        assert!(formula_size_bound(64, 64) > BigUint::from(u128::MAX));
    }

    #[test]
    fn base_case_is_a_single_leaf() {
        let f = build_formula(0, 0, 0, 0);
        assert_eq!(f.node_count(), 1);
        assert_eq!(f.node(f.root()), &Node::Leaf(0));
    }

    #[test]
    fn trivial_instances() {
        for (mu, k) in [(0, 1), (1, 2), (2, 1), (3, 3)] {
            let f = build_formula(mu, k, 0, 0);
            let dims = f.dims();
            assert!(f
                .evaluate(&GridInstance::full(&dims, true).unwrap())
                .unwrap());
            assert!(!f
                .evaluate(&GridInstance::empty(&dims, true).unwrap())
                .unwrap());
        }
        let f = build_formula(1, 1, 0, 0);
        assert!(f
            .evaluate(&GridInstance::full(&[2, 1], false).unwrap())
            .is_err());
        assert!(f
            .evaluate(&GridInstance::full(&[3, 1], true).unwrap())
            .is_err());
    }

    #[test]
    fn padding_is_identity_for_powers_of_two() {
        assert_eq!(build_padded(4, 2).unwrap(), build_formula(2, 2, 0, 0));
        assert_eq!(build_padded(3, 1).unwrap().dims(), [3, 1]);
        assert_eq!(
            build_formula(2, 2, 0, 0).query_estimate(),
            ceil_sqrt(&leaf_recurrence(2, 2))
        );
    }
}
