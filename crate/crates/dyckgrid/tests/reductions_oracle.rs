//! Reductions checked against brute-force answers on small inputs.

mod common;

use dyckgrid::grid::GridInstance;
use dyckgrid::reductions::{
    directed_ddim_parallel, dyck_to_directed_grid, dyck_to_undirected_fold, ex_to_block, fold_dims,
    ExParams, FoldMap,
};
use dyckgrid::words::oracle_dyck;
use dyckgrid::{Error, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{adjacency, bfs_connected};

fn all_words(m: usize) -> impl Iterator<Item = Word> {
    (0..1u64 << m).map(move |mask| Word::from_mask(mask, m))
}

#[test]
fn directed_single_word_exhaustive() {
    for m in (0..=10).step_by(2) {
        for d in 1..=4 {
            for w in all_words(m) {
                let e = dyck_to_directed_grid(std::slice::from_ref(&w), d).unwrap();
                assert!(e.certificate_holds(std::slice::from_ref(&w)));
                assert_eq!(bfs_connected(&e.target), oracle_dyck(&w, d), "{w} d={d}");
            }
        }
    }
}

#[test]
fn directed_pairs_exhaustive() {
    for m in [2, 4, 6] {
        for d in 1..=3 {
            let words: Vec<Word> = all_words(m).collect();
            for a in &words {
                for b in &words {
                    let pair = [a.clone(), b.clone()];
                    let e = dyck_to_directed_grid(&pair, d).unwrap();
                    let want = oracle_dyck(a, d) || oracle_dyck(b, d);
                    assert_eq!(bfs_connected(&e.target), want, "{a} {b} d={d}");
                }
            }
        }
    }
}

#[test]
fn directed_many_words_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let t = rng.gen_range(1..=5);
        let m = 2 * rng.gen_range(1..=6);
        let d = rng.gen_range(1..=4);
        let words: Vec<Word> = (0..t)
            .map(|_| Word::from_mask(rng.gen::<u64>(), m))
            .collect();
        let e = dyck_to_directed_grid(&words, d).unwrap();
        assert!(e.certificate_holds(&words));
        let want = words.iter().any(|w| oracle_dyck(w, d));
        assert_eq!(bfs_connected(&e.target), want);
    }
}

fn check_fold(w: &Word, d: usize, dims: (usize, usize)) {
    let e = dyck_to_undirected_fold(w, d, dims).unwrap();
    assert!(e.certificate_holds(std::slice::from_ref(w)));
    assert_eq!(
        bfs_connected(&e.target),
        oracle_dyck(w, d),
        "{w} d={d} dims={dims:?}"
    );
    let degrees = adjacency(&e.target);
    assert!(
        degrees.iter().all(|a| a.len() <= 2),
        "present subgraph must be paths"
    );
}

#[test]
fn fold_exhaustive_small() {
    for m in (2..=10).step_by(2) {
        for d in 1..=4 {
            let q = d / 2;
            for k in [3 * q + 3, 3 * q + 4, fold_dims(m, d).unwrap().1] {
                for w in all_words(m) {
                    check_fold(&w, d, (4 * m + 4 * d + 8, k));
                }
            }
            let dims = fold_dims(m, d).unwrap();
            for w in all_words(m) {
                check_fold(&w, d, dims);
            }
        }
    }
}

#[test]
fn fold_random_long_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let m = 2 * rng.gen_range(1..=40);
        let d = rng.gen_range(1..=6);
        // Bias towards Dyck words so that both answers occur.
        let mut bits = Vec::with_capacity(m);
        let mut h = 0usize;
        for p in 0..m {
            let remaining = m - p;
            let close = if h == 0 {
                false
            } else if h >= remaining {
                true
            } else {
                rng.gen_bool(0.5)
            };
            h = if close { h - 1 } else { h + 1 };
            bits.push(close);
        }
        if rng.gen_bool(0.3) {
            let i = rng.gen_range(0..m);
            bits[i] = !bits[i];
        }
        let w = Word::from_bits(bits);
        let dims = fold_dims(m, d).unwrap();
        check_fold(&w, d, dims);
        check_fold(&w, d, (dims.0 + 3, dims.1));
    }
}

#[test]
fn fold_area_is_near_linear_times_log() {
    for exp in 2..=10 {
        let m = 1usize << exp;
        for d in 1..=exp {
            let (n, k) = fold_dims(m, d).unwrap();
            assert!(n * k <= 8 * m * exp, "m={m} d={d}: {n}x{k}");
        }
    }
}

#[test]
fn fold_rejects_small_grids() {
    let w: Word = "0011".parse().unwrap();
    assert!(matches!(
        dyck_to_undirected_fold(&w, 2, (100, 5)),
        Err(Error::Capacity(_))
    ));
    assert!(matches!(
        dyck_to_undirected_fold(&w, 2, (1, 6)),
        Err(Error::Capacity(_))
    ));
}

fn random_instance(rng: &mut ChaCha8Rng, dims: &[usize], directed: bool, p: f64) -> GridInstance {
    let count = dyckgrid::grid::edge_count(dims);
    GridInstance::from_bits(dims, directed, (0..count).map(|_| rng.gen_bool(p))).unwrap()
}

#[test]
fn fold_map_is_a_bijection_and_preserves_connectivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for dims in [
        vec![2, 2],
        vec![3, 3],
        vec![2, 3],
        vec![1, 2, 2],
        vec![2, 1, 3],
        vec![2, 2, 2],
    ] {
        let f = FoldMap::new(&dims).unwrap();
        let target = f.target_dims();
        let src = GridInstance::empty(&dims, false).unwrap();
        let tgt = GridInstance::empty(&target, false).unwrap();
        let mut hit = vec![false; tgt.vertex_count()];
        for v in 0..src.vertex_count() {
            let x = src.vertex_coords(v);
            // With an even number of layers the top one is not folded.
            if f.needs_corner_edge() && x[x.len() - 1] == dims[dims.len() - 1] {
                continue;
            }
            let y = f.fold_vertex(&x);
            assert_eq!(f.unfold_vertex(&y), x);
            let id = tgt.vertex_id(&y).unwrap();
            assert!(!hit[id]);
            hit[id] = true;
        }
        assert!(hit.iter().all(|&h| h), "{dims:?}");
        for _ in 0..200 {
            let g = random_instance(&mut rng, &target, false, 0.6);
            let lifted = f.lift_instance(&g).unwrap();
            assert_eq!(lifted.dims(), dims.as_slice());
            assert_eq!(bfs_connected(&lifted), bfs_connected(&g), "{dims:?}");
        }
    }
}

#[test]
fn parallel_is_or_without_cross_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for index_dims in [vec![1], vec![3], vec![1, 1], vec![2, 1]] {
        let slots: usize = index_dims.iter().map(|n| n + 1).product();
        for _ in 0..100 {
            let plane = [rng.gen_range(1..=3), rng.gen_range(1..=3)];
            let gs: Vec<GridInstance> = (0..slots)
                .map(|_| random_instance(&mut rng, &plane, true, 0.55))
                .collect();
            let h = directed_ddim_parallel(&index_dims, &gs).unwrap();
            let want = gs.iter().any(bfs_connected);
            assert_eq!(bfs_connected(&h), want);
            // Within the planes only the instance's own edges appear.
            let e = index_dims.len();
            for id in 0..h.edge_count() {
                if !h.edge(id) {
                    continue;
                }
                let (lower, axis) = h.decode_edge(id).unwrap();
                if axis < e {
                    let tail = &lower[e..];
                    assert!(tail == [0, 0] || tail == plane, "stray index-axis edge");
                }
            }
        }
    }
}

/// Iterated promise function evaluated directly.
fn ex(m: usize, levels: usize, input: &[bool]) -> Option<bool> {
    if levels == 0 {
        return Some(input[0]);
    }
    let chunk = input.len() / (2 * m);
    let mut zeros = 0;
    for part in input.chunks(chunk) {
        zeros += usize::from(!ex(m, levels - 1, part)?);
    }
    match zeros {
        z if z == m => Some(true),
        z if z == m + 1 => Some(false),
        _ => None,
    }
}

#[test]
fn ex_blocks_exhaustive() {
    for (m, levels) in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)] {
        let size = (2 * m as u32).pow(levels as u32) as usize;
        for mask in 0..1u64 << size {
            let input: Vec<bool> = (0..size).map(|i| mask >> i & 1 == 1).collect();
            let got = ex_to_block(ExParams { m, levels }, &input);
            match ex(m, levels, &input) {
                Some(v) => {
                    let b = got.unwrap();
                    assert!(b.satisfies_invariants());
                    assert_eq!(oracle_dyck(&b.word, b.height), v);
                }
                None => assert!(matches!(got, Err(Error::PromiseViolation { .. }))),
            }
        }
    }
}
