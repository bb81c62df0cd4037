//! Seeded generators for random graphs and ideals.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{VertexSet, WeightedOrientedGraph};
use crate::monomial::{Monomial, MonomialIdeal, Ring};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

fn random_edges(rng: &mut impl Rng, n: usize, density: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
            }
        }
    }
    edges
}

/// An arbitrary oriented graph on `1..=max_n` vertices with weights in
/// `1..=max_weight`.
pub fn oriented_graph(rng: &mut impl Rng, max_n: usize, max_weight: u32) -> WeightedOrientedGraph {
    let n = rng.gen_range(1..=max_n.max(1));
    let density = rng.gen_range(0.2..0.8);
    let edges = random_edges(rng, n, density);
    let vertices = names(n)
        .into_iter()
        .map(|name| (name, rng.gen_range(1..=max_weight) as i64))
        .collect();
    WeightedOrientedGraph::new("random", vertices, edges).expect("generated graph is valid")
}

/// A graph on `2..=max_n` vertices whose weighted vertices are all sinks.
///
/// A random independent set is chosen, every edge at it is pointed inward,
/// and its members receive weights in `1..=max_weight`.
pub fn sink_graph(rng: &mut impl Rng, max_n: usize, max_weight: u32) -> WeightedOrientedGraph {
    let n = rng.gen_range(2..=max_n.max(2));
    let density = rng.gen_range(0.3..0.8);
    let mut edges = random_edges(rng, n, density);
    if edges.is_empty() {
        edges.push((0, 1));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut sinks = VertexSet::EMPTY;
    for v in order {
        let free = edges
            .iter()
            .all(|&(t, h)| !(t == v && sinks.contains(h)) && !(h == v && sinks.contains(t)));
        if free && rng.gen_bool(0.6) {
            sinks.insert(v);
        }
    }
    for e in &mut edges {
        if sinks.contains(e.0) {
            *e = (e.1, e.0);
        }
    }
    let vertices = names(n)
        .into_iter()
        .enumerate()
        .map(|(v, name)| {
            let w = if sinks.contains(v) { rng.gen_range(1..=max_weight) } else { 1 };
            (name, w as i64)
        })
        .collect();
    WeightedOrientedGraph::new("random-sink", vertices, edges).expect("generated graph is valid")
}

/// A graph on `3..=max_n` vertices containing an induced directed path
/// `v1 -> v2 -> v3` with `w(v2) >= 2`; all other structure is random.
pub fn setting_path_graph(rng: &mut impl Rng, max_n: usize, max_weight: u32) -> WeightedOrientedGraph {
    let n = rng.gen_range(3..=max_n.max(3));
    let density = rng.gen_range(0.2..0.7);
    let mut edges: Vec<(usize, usize)> = random_edges(rng, n, density)
        .into_iter()
        .filter(|&(t, h)| {
            let pair = [t.min(h), t.max(h)];
            !matches!(pair, [0, 1] | [1, 2] | [0, 2])
        })
        .collect();
    edges.push((0, 1));
    edges.push((1, 2));
    let vertices = names(n)
        .into_iter()
        .enumerate()
        .map(|(v, name)| {
            let w = if v == 1 { rng.gen_range(2..=max_weight.max(2)) } else { rng.gen_range(1..=max_weight) };
            (name, w as i64)
        })
        .collect();
    WeightedOrientedGraph::new("random-path", vertices, edges).expect("generated graph is valid")
}

/// A nonzero ideal in `1..=max_n` variables with `1..=max_gens` generators
/// of degree `1..=max_degree`.
pub fn ideal(rng: &mut impl Rng, max_n: usize, max_gens: usize, max_degree: u32) -> MonomialIdeal {
    let n = rng.gen_range(1..=max_n);
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| {
            let degree = rng.gen_range(1..=max_degree);
            let mut e = vec![0u32; n];
            for _ in 0..degree {
                e[rng.gen_range(0..n)] += 1;
            }
            Monomial::new(e)
        })
        .collect();
    let ring = Ring::new((1..=n).map(|i| format!("x{i}")));
    MonomialIdeal::new(ring, gens).expect("generated ideal is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PathMode;

    #[test]
    fn sink_graphs_satisfy_the_hypothesis() {
        let mut r = rng(7);
        for _ in 0..200 {
            let g = sink_graph(&mut r, 7, 4);
            assert!(g.v_plus_all_sinks());
            assert!(!g.edges().is_empty());
        }
    }

    #[test]
    fn path_graphs_contain_the_path() {
        let mut r = rng(8);
        for _ in 0..200 {
            let g = setting_path_graph(&mut r, 7, 4);
            assert!(g.weighted_paths(PathMode::Induced).iter().any(|p| (p.tail, p.middle, p.head) == (0, 1, 2)));
        }
    }

    #[test]
    fn generators_are_deterministic() {
        let a = ideal(&mut rng(3), 5, 6, 8);
        let b = ideal(&mut rng(3), 5, 6, 8);
        assert_eq!(a, b);
    }
}
