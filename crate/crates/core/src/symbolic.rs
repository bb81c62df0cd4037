//! Edge ideals and their symbolic powers.
//!
//! The symbolic power `I^(k)` is the intersection, over the minimal primes
//! `P` of `I`, of `I^k R_P ∩ R`. For a monomial ideal the contraction is the
//! saturation by the variables outside `P`. The minimal primes of `I(D)` are
//! those of its radical `I(G)`, i.e. the minimal vertex covers of `G`.
//!
//! When every vertex of weight at least two is a sink, `I(D)^(k)` is also
//! obtained by substituting `x -> x^w(x)` into the known descriptions of
//! `I(G)^(2)` and `I(G)^(3)`; [`SymbolicMethod::Auto`] uses that second
//! route as a cross-check.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{VertexSet, WeightedOrientedGraph, WeightedPath};
use crate::monomial::{Monomial, MonomialIdeal, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymbolicMethod {
    Primes,
    /// Intersection over all associated primes, embedded ones included.
    Associated,
    SinkFormula,
    Auto,
}

impl FromStr for SymbolicMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "primes" => Ok(Self::Primes),
            "associated" => Ok(Self::Associated),
            "sink-formula" => Ok(Self::SinkFormula),
            "auto" => Ok(Self::Auto),
            other => Err(Error::Parse(format!("unknown method `{other}`"))),
        }
    }
}

/// Which 5-cycles contribute generators to `I(G)^(3)` in the sink formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiveCycles {
    All,
    InducedOnly,
}

pub fn ring_of(graph: &WeightedOrientedGraph) -> Ring {
    Ring::new(graph.vertex_names())
}

/// `I(D) = (x_i x_j^{w(x_j)} : (x_i, x_j) ∈ E(D))`.
pub fn edge_ideal(graph: &WeightedOrientedGraph) -> MonomialIdeal {
    let n = graph.num_vertices();
    let gens = graph
        .edges()
        .iter()
        .map(|&(t, h)| {
            let mut e = vec![0; n];
            e[t] = 1;
            e[h] = graph.weight(h);
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(ring_of(graph), gens).expect("graph size is bounded")
}

/// The squarefree edge ideal `I(G)` of the underlying graph.
pub fn underlying_edge_ideal(graph: &WeightedOrientedGraph) -> MonomialIdeal {
    let n = graph.num_vertices();
    let gens = graph
        .edges()
        .iter()
        .map(|&(t, h)| Monomial::from_mask(1 << t | 1 << h, n))
        .collect();
    MonomialIdeal::new(ring_of(graph), gens).expect("graph size is bounded")
}

pub fn weight_map(graph: &WeightedOrientedGraph) -> BTreeMap<String, u32> {
    graph.vertices().iter().map(|v| (v.name.clone(), v.weight)).collect()
}

/// All minimal vertex covers of the underlying graph, ordered by size and
/// then by their sorted vertex lists.
pub fn minimal_primes(graph: &WeightedOrientedGraph) -> Vec<VertexSet> {
    if graph.edges().is_empty() {
        return Vec::new();
    }
    let mut found = Vec::new();
    cover_search(graph, VertexSet::EMPTY, VertexSet::EMPTY, &mut found);
    let mut minimal: Vec<VertexSet> = found
        .into_iter()
        .filter(|c| c.iter().all(|v| !graph.adjacent(v).is_subset(*c)))
        .collect();
    minimal.sort_by_key(|c| (c.len(), c.iter().collect::<Vec<_>>()));
    minimal.dedup();
    minimal
}

fn cover_search(graph: &WeightedOrientedGraph, chosen: VertexSet, excluded: VertexSet, out: &mut Vec<VertexSet>) {
    let uncovered = graph
        .edges()
        .iter()
        .find(|&&(t, h)| !chosen.contains(t) && !chosen.contains(h));
    let Some(&(t, h)) = uncovered else {
        out.push(chosen);
        return;
    };
    let (u, v) = if excluded.contains(t) { (h, t) } else { (t, h) };
    if excluded.contains(u) {
        // Both endpoints were ruled out.
        return;
    }
    cover_search(graph, chosen.with(u), excluded, out);
    // Leaving u out forces its whole neighbourhood in.
    let forced = graph.adjacent(u);
    if forced.is_disjoint(excluded) {
        debug_assert!(forced.contains(v));
        cover_search(graph, chosen.union(forced), excluded.with(u), out);
    }
}

/// `I^(k)` computed as the intersection of the localizations at the given
/// primes.
pub fn symbolic_power_by_primes(ideal: &MonomialIdeal, primes: &[VertexSet], k: u32) -> MonomialIdeal {
    let all = VertexSet::full(ideal.num_vars());
    let mut acc: Option<MonomialIdeal> = None;
    for p in primes {
        // Localization commutes with powers, so saturate first while the
        // generating set is small.
        let local = ideal.saturate(all.difference(*p).0).power(k);
        acc = Some(match acc {
            None => local,
            Some(a) => a.intersect(&local).expect("same ring"),
        });
    }
    acc.unwrap_or_else(|| MonomialIdeal::zero(ideal.ring().clone()))
}

/// `I(G)^(k)` for `k <= 3` from the combinatorial descriptions:
/// `I(G)^(2) = I(G)^2 + (triangles)` and
/// `I(G)^(3) = I(G)^3 + I(G)·(triangles) + (4-cliques, 5-cycles)`.
pub fn squarefree_symbolic_power(graph: &WeightedOrientedGraph, k: u32, cycles: FiveCycles) -> Result<MonomialIdeal> {
    let n = graph.num_vertices();
    let ig = underlying_edge_ideal(graph);
    let ring = ig.ring().clone();
    let mono = |s: VertexSet| Monomial::from_mask(s.0, n);
    let triangles = MonomialIdeal::new(ring.clone(), graph.triangles().into_iter().map(mono).collect())?;
    match k {
        1 => Ok(ig),
        2 => ig.power(2).add(&triangles),
        3 => {
            let mut j2: Vec<Monomial> = graph.cliques4().into_iter().map(mono).collect();
            for c in graph.cycles5() {
                let set: VertexSet = c.iter().copied().collect();
                let induced = (0..5).all(|i| {
                    let chords = graph.adjacent(c[i]).intersection(set);
                    chords.len() == 2
                });
                if cycles == FiveCycles::All || induced {
                    j2.push(mono(set));
                }
            }
            let j2 = MonomialIdeal::new(ring, j2)?;
            ig.power(3).add(&ig.multiply(&triangles)?)?.add(&j2)
        }
        _ => Err(Error::Hypothesis(format!("the sink formula covers k <= 3, got k = {k}"))),
    }
}

/// The sink-formula route: `Φ(I(G)^(k))`.
pub fn symbolic_power_by_sink_formula(graph: &WeightedOrientedGraph, k: u32) -> Result<MonomialIdeal> {
    if !graph.v_plus_all_sinks() {
        return Err(Error::Hypothesis("the sink formula needs every weighted vertex to be a sink".into()));
    }
    if !(1..=3).contains(&k) {
        return Err(Error::Hypothesis(format!("the sink formula covers 1 <= k <= 3, got k = {k}")));
    }
    squarefree_symbolic_power(graph, k, FiveCycles::All)?.phi(&weight_map(graph))
}

pub fn symbolic_power(graph: &WeightedOrientedGraph, k: u32, method: SymbolicMethod) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::Hypothesis("symbolic powers are defined for k >= 1".into()));
    }
    match method {
        SymbolicMethod::Primes => Ok(symbolic_power_by_primes(&edge_ideal(graph), &minimal_primes(graph), k)),
        SymbolicMethod::Associated => {
            let ideal = edge_ideal(graph);
            let primes: Vec<VertexSet> = ideal.associated_primes().into_iter().map(VertexSet).collect();
            Ok(symbolic_power_by_primes(&ideal, &primes, k))
        }
        SymbolicMethod::SinkFormula => symbolic_power_by_sink_formula(graph, k),
        SymbolicMethod::Auto => {
            let by_primes = symbolic_power_by_primes(&edge_ideal(graph), &minimal_primes(graph), k);
            if graph.v_plus_all_sinks() && k <= 3 {
                let by_formula = symbolic_power_by_sink_formula(graph, k)?;
                if !ideals_equal(&by_primes, &by_formula) {
                    return Err(Error::Inconsistent(format!(
                        "symbolic power k={k}: primes route {by_primes} differs from sink formula {by_formula}"
                    )));
                }
            }
            Ok(by_primes)
        }
    }
}

pub fn ideals_equal(a: &MonomialIdeal, b: &MonomialIdeal) -> bool {
    a == b
}

/// The monomial `x_i x_j^{w(x_j)+k-2} x_r^{w(x_r)(k-1)}` for a weighted path
/// `x_i -> x_j -> x_r`, which lies in `I^(k)` but not in `I^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    pub monomial: Monomial,
    pub in_symbolic: bool,
    pub in_ordinary: bool,
}

pub fn path_witness_monomial(graph: &WeightedOrientedGraph, path: &WeightedPath, k: u32) -> Result<Monomial> {
    let WeightedPath { tail, middle, head, .. } = *path;
    if !graph.has_edge(tail, middle) || !graph.has_edge(middle, head) {
        return Err(Error::Hypothesis(format!(
            "{} -> {} -> {} is not a directed path",
            graph.vertex_name(tail),
            graph.vertex_name(middle),
            graph.vertex_name(head)
        )));
    }
    if graph.weight(middle) < 2 {
        return Err(Error::Hypothesis(format!("w({}) < 2", graph.vertex_name(middle))));
    }
    if k < 2 {
        return Err(Error::Hypothesis(format!("witness needs k >= 2, got {k}")));
    }
    let mut e = vec![0; graph.num_vertices()];
    e[tail] = 1;
    e[middle] = graph.weight(middle) + k - 2;
    e[head] = graph.weight(head) * (k - 1);
    Ok(Monomial::new(e))
}

pub fn path_witness(graph: &WeightedOrientedGraph, path: &WeightedPath, k: u32) -> Result<PathWitness> {
    let monomial = path_witness_monomial(graph, path, k)?;
    let symbolic = symbolic_power(graph, k, SymbolicMethod::Primes)?;
    let ordinary = edge_ideal(graph).power(k);
    Ok(PathWitness {
        in_symbolic: symbolic.contains(&monomial),
        in_ordinary: ordinary.contains(&monomial),
        monomial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{EdgeDocument, GraphDocument, VertexDocument};

    fn graph(vertices: &[(&str, i64)], edges: &[(&str, &str)]) -> WeightedOrientedGraph {
        let doc = GraphDocument {
            schema: None,
            name: "t".into(),
            vertices: vertices
                .iter()
                .map(|&(id, w)| VertexDocument { id: id.into(), weight: Some(w) })
                .collect(),
            edges: edges.iter().map(|&(f, t)| EdgeDocument { from: f.into(), to: t.into() }).collect(),
        };
        WeightedOrientedGraph::from_document(&doc).unwrap()
    }

    fn fig1() -> WeightedOrientedGraph {
        graph(
            &[("x1", 1), ("x2", 1), ("x3", 1), ("y1", 3), ("y2", 9), ("y3", 10)],
            &[("x1", "x2"), ("x2", "x3"), ("x3", "x1"), ("x1", "y1"), ("x2", "y2"), ("x3", "y3")],
        )
    }

    fn fig3() -> WeightedOrientedGraph {
        graph(
            &[("x1", 6), ("x2", 4), ("x3", 7), ("y1", 1), ("y2", 1), ("y3", 1)],
            &[("x1", "x2"), ("x2", "x3"), ("y1", "x1"), ("y2", "x2"), ("y3", "x3")],
        )
    }

    fn fig4() -> WeightedOrientedGraph {
        graph(&[("x1", 8), ("x2", 10), ("y1", 1), ("y2", 1)], &[("x1", "x2"), ("y1", "x1"), ("y2", "x2")])
    }

    fn gens(i: &MonomialIdeal) -> Vec<String> {
        i.gens().iter().map(|g| g.display(i.ring().names())).collect()
    }

    #[test]
    fn fig1_edge_ideal() {
        let mut got = gens(&edge_ideal(&fig1()));
        got.sort();
        let mut want = vec!["x1x2", "x2x3", "x1x3", "x1y1^3", "x2y2^9", "x3y3^10"];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn fig3_edge_ideal() {
        let mut got = gens(&edge_ideal(&fig3()));
        got.sort();
        let mut want = vec!["x1x2^4", "x2x3^7", "x1^6y1", "x2^4y2", "x3^7y3"];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn single_edge_ideal() {
        let g = graph(&[("x", 1), ("y", 5)], &[("x", "y")]);
        assert_eq!(gens(&edge_ideal(&g)), vec!["xy^5"]);
    }

    #[test]
    fn minimal_primes_examples() {
        let g = fig4();
        let covers = minimal_primes(&g);
        let names: Vec<Vec<&str>> =
            covers.iter().map(|c| c.iter().map(|v| g.vertex_name(v)).collect()).collect();
        assert_eq!(names, vec![vec!["x1", "x2"], vec!["x1", "y2"], vec!["x2", "y1"]]);
        let tri = graph(&[("a", 1), ("b", 1), ("c", 1)], &[("a", "b"), ("b", "c"), ("c", "a")]);
        assert_eq!(minimal_primes(&tri).len(), 3);
        let e = graph(&[("x", 1), ("y", 1)], &[("x", "y")]);
        assert_eq!(minimal_primes(&e), vec![VertexSet::singleton(0), VertexSet::singleton(1)]);
        assert!(minimal_primes(&graph(&[("a", 1)], &[])).is_empty());
    }

    #[test]
    fn triangle_second_symbolic_power() {
        let tri = graph(&[("a", 1), ("b", 1), ("c", 1)], &[("a", "b"), ("b", "c"), ("c", "a")]);
        let i = edge_ideal(&tri);
        let abc = MonomialIdeal::new(i.ring().clone(), vec![Monomial::new(vec![1, 1, 1])]).unwrap();
        let want = i.power(2).add(&abc).unwrap();
        for method in [SymbolicMethod::Primes, SymbolicMethod::SinkFormula, SymbolicMethod::Auto] {
            assert_eq!(symbolic_power(&tri, 2, method).unwrap(), want);
        }
    }

    #[test]
    fn principal_symbolic_powers_are_ordinary() {
        let g = graph(&[("x", 1), ("y", 7)], &[("x", "y")]);
        for k in 1..=4 {
            assert_eq!(symbolic_power(&g, k, SymbolicMethod::Primes).unwrap(), edge_ideal(&g).power(k));
        }
    }

    #[test]
    fn sink_formula_rejects_weighted_internal_vertices() {
        assert!(matches!(symbolic_power(&fig4(), 2, SymbolicMethod::SinkFormula), Err(Error::Hypothesis(_))));
        assert!(matches!(symbolic_power(&fig1(), 4, SymbolicMethod::SinkFormula), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn fig1_symbolic_square_differs_from_ordinary() {
        let g = fig1();
        let s2 = symbolic_power(&g, 2, SymbolicMethod::Auto).unwrap();
        let o2 = edge_ideal(&g).power(2);
        assert!(!ideals_equal(&s2, &o2));
        let xyz = Monomial::new(vec![1, 1, 1, 0, 0, 0]);
        assert!(s2.contains(&xyz));
        assert!(!o2.contains(&xyz));
        assert!(o2.is_subset_of(&s2));
    }

    #[test]
    fn bipartite_sink_graph_has_equal_powers() {
        let g = graph(
            &[("a", 1), ("b", 3), ("c", 1), ("d", 2)],
            &[("a", "b"), ("c", "b"), ("c", "d"), ("a", "d")],
        );
        for k in 2..=3 {
            assert!(ideals_equal(&symbolic_power(&g, k, SymbolicMethod::Auto).unwrap(), &edge_ideal(&g).power(k)));
        }
    }

    #[test]
    fn fig3_witnesses() {
        let g = fig3();
        let path = WeightedPath { tail: 0, middle: 1, head: 2, induced: true };
        let w2 = path_witness(&g, &path, 2).unwrap();
        assert_eq!(w2.monomial.exps(), &[1, 4, 7, 0, 0, 0]);
        assert!(w2.in_symbolic && !w2.in_ordinary);
        let w3 = path_witness(&g, &path, 3).unwrap();
        assert_eq!(w3.monomial.exps(), &[1, 5, 14, 0, 0, 0]);
        assert!(w3.in_symbolic && !w3.in_ordinary);
    }

    #[test]
    fn witness_needs_weighted_middle() {
        let g = graph(&[("a", 1), ("b", 1), ("c", 1)], &[("a", "b"), ("b", "c")]);
        let path = WeightedPath { tail: 0, middle: 1, head: 2, induced: true };
        assert!(matches!(path_witness(&g, &path, 2), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn chorded_pentagons_are_redundant() {
        // C5 plus a chord: the chorded cycle monomial is already in I·(triangles).
        let g = graph(
            &[("a", 1), ("b", 1), ("c", 1), ("d", 1), ("e", 1)],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"), ("a", "c")],
        );
        assert_eq!(
            squarefree_symbolic_power(&g, 3, FiveCycles::All).unwrap(),
            squarefree_symbolic_power(&g, 3, FiveCycles::InducedOnly).unwrap()
        );
        assert_eq!(
            squarefree_symbolic_power(&g, 3, FiveCycles::All).unwrap(),
            symbolic_power(&g, 3, SymbolicMethod::Primes).unwrap()
        );
    }
}
