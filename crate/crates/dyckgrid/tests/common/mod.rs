//! Brute-force selections and graph search shared by the integration tests.
#![allow(dead_code)]

use std::collections::VecDeque;

use dyckgrid::grid::GridInstance;
use dyckgrid::substring::{self, Direction, SearchParams};
use dyckgrid::words::{oracle_minimal_substrings, SubstringMatch};
use dyckgrid::{ExecutionContext, Word};

pub fn in_window(m: &SubstringMatch, p: &SearchParams) -> bool {
    p.l <= m.i && m.j <= p.r && p.s.contains(m.sign)
}

/// Leftmost minimal match containing `t`, inside the window, length `≤ d`.
pub fn expect_from(all: &[SubstringMatch], p: &SearchParams) -> Option<SubstringMatch> {
    all.iter()
        .filter(|m| in_window(m, p) && m.contains(p.t) && m.len() <= p.d)
        .min_by_key(|m| m.i)
        .copied()
}

pub fn expect_from_right(all: &[SubstringMatch], p: &SearchParams) -> Option<SubstringMatch> {
    all.iter()
        .filter(|m| in_window(m, p) && m.contains(p.t) && m.len() <= p.d)
        .max_by_key(|m| m.j)
        .copied()
}

pub fn expect_first(all: &[SubstringMatch], p: &SearchParams) -> Option<SubstringMatch> {
    let it = all.iter().filter(|m| in_window(m, p));
    match p.direction {
        Direction::Right => it.min_by_key(|m| m.i).copied(),
        Direction::Left => it.max_by_key(|m| m.j).copied(),
    }
}

pub fn expect_fixed_pos(all: &[SubstringMatch], p: &SearchParams) -> Option<SubstringMatch> {
    let it = all.iter().filter(|m| in_window(m, p) && m.contains(p.t));
    match p.direction {
        Direction::Left => it.min_by_key(|m| m.i).copied(),
        Direction::Right => it.max_by_key(|m| m.j).copied(),
    }
}

/// Checks every procedure of the substring family on `w` at level `k`
/// against the brute-force selections, over all valid parameters.
/// Returns a description of the first disagreement.
pub fn check_word(w: &Word, k: usize) -> Result<(), String> {
    let n = w.len();
    let all = oracle_minimal_substrings(w, k);
    let lower = if k >= 3 {
        oracle_minimal_substrings(w, k - 1)
    } else {
        Vec::new()
    };
    let mut ctx = ExecutionContext::reference(w.clone());
    let fail = |what: &str,
                p: &SearchParams,
                got: Option<SubstringMatch>,
                want: Option<SubstringMatch>| {
        format!("{what} on {w} k={k} {p:?}: got {got:?}, want {want:?}")
    };
    for l in 0..n {
        for r in l..n {
            for s in dyckgrid::SignSet::all() {
                for dir in [Direction::Left, Direction::Right] {
                    let p = SearchParams::new(l, r).s(s).direction(dir);
                    let got = substring::find_first(&mut ctx, k, &p).unwrap();
                    let want = expect_first(&all, &p);
                    if got != want {
                        return Err(fail("find_first", &p, got, want));
                    }
                    if got.is_some() != substring::find_any(&mut ctx, k, &p).unwrap().is_some() {
                        return Err(fail("find_any", &p, got, want));
                    }
                    for t in l..=r {
                        let p = p.t(t);
                        let got = substring::find_fixed_pos(&mut ctx, k, &p).unwrap();
                        let want = expect_fixed_pos(&all, &p);
                        if got != want {
                            return Err(fail("find_fixed_pos", &p, got, want));
                        }
                    }
                }
                for t in l..=r {
                    for d in 1..=(r - l + 1) {
                        let p = SearchParams::new(l, r).s(s).t(t).d(d);
                        let got = substring::find_from_traced(&mut ctx, k, &p).unwrap();
                        let want = expect_from(&all, &p);
                        if got.map(|x| x.found) != want {
                            return Err(fail("find_from", &p, got.map(|x| x.found), want));
                        }
                        if let Some(tr) = got {
                            if k >= 3 {
                                let (a, b) = tr.parts.ok_or("missing trace")?;
                                let ia = lower.iter().position(|m| *m == a);
                                let ib = lower.iter().position(|m| *m == b);
                                match (ia, ib) {
                                    (Some(x), Some(y)) if y == x + 1 && a.sign == b.sign => {}
                                    _ => {
                                        return Err(format!(
                                            "trace {a:?},{b:?} not consecutive on {w} k={k} {p:?}"
                                        ))
                                    }
                                }
                            }
                        }
                        let got = substring::find_from_right(&mut ctx, k, &p).unwrap();
                        let want = expect_from_right(&all, &p);
                        if got != want {
                            return Err(fail("find_from_right", &p, got, want));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Plain BFS over explicit adjacency lists built from the edge list.
pub fn bfs_connected(g: &GridInstance) -> bool {
    let adj = adjacency(g);
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    seen[g.vertex_count() - 1]
}

pub fn adjacency(g: &GridInstance) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for id in 0..g.edge_count() {
        if g.edge(id) {
            let (lower, axis) = g.decode_edge(id).unwrap();
            let mut upper = lower.clone();
            upper[axis] += 1;
            let (a, b) = (g.vertex_id(&lower).unwrap(), g.vertex_id(&upper).unwrap());
            adj[a].push(b);
            if !g.directed() {
                adj[b].push(a);
            }
        }
    }
    adj
}
