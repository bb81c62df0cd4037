//! Algebraic and combinatorial identities that must hold for every input.
//!
//! Each check returns `Err` with a description of the first violation.

use crate::complex::SimplicialComplex;
use crate::graph::{Bipartition, NeighborhoodKind, VertexSet, WeightedOrientedGraph};
use crate::linalg::Characteristic;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::regularity::{betti_table, lcm_lattice, regularity, takayama_regularity, upper_koszul, Engine};
use crate::sweep::Sweep;
use crate::symbolic::{edge_ideal, minimal_primes, symbolic_power, SymbolicMethod};
use std::collections::BTreeSet;

pub type Check = std::result::Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `(I : m) : m' = I : mm'`, `I ⊆ I : m`, and `I : 1 = I`.
pub fn colon_algebra(ideal: &MonomialIdeal, m: &Monomial, m2: &Monomial) -> Check {
    let left = ideal.colon(m).colon(m2);
    let right = ideal.colon(&m.mul(m2));
    ensure(left == right, || format!("({ideal} : m) : m' = {left} but I : mm' = {right}"))?;
    ensure(ideal.is_subset_of(&ideal.colon(m)), || format!("{ideal} is not inside its colon"))?;
    let one = Monomial::one(ideal.num_vars());
    ensure(ideal.colon(&one) == *ideal, || format!("{ideal} : 1 differs"))
}

/// Saturating by `x` then `y` equals saturating by both at once.
pub fn saturation_composes(ideal: &MonomialIdeal, x: u64, y: u64) -> Check {
    let step = ideal.saturate(x).saturate(y);
    let once = ideal.saturate(x | y);
    ensure(step == once, || format!("stepwise saturation {step} differs from {once}"))
}

/// `m ∈ I ∩ J` iff `m ∈ I` and `m ∈ J`.
pub fn intersection_membership(i: &MonomialIdeal, j: &MonomialIdeal, probes: &[Monomial]) -> Check {
    let meet = i.intersect(j).map_err(|e| e.to_string())?;
    for m in probes {
        let expected = i.contains(m) && j.contains(m);
        ensure(meet.contains(m) == expected, || format!("membership of {m:?} in {i} ∩ {j}"))?;
    }
    Ok(())
}

pub fn power_additivity(ideal: &MonomialIdeal, k1: u32, k2: u32) -> Check {
    let product = ideal.power(k1).multiply(&ideal.power(k2)).map_err(|e| e.to_string())?;
    ensure(product == ideal.power(k1 + k2), || format!("I^{k1} I^{k2} ≠ I^{} for {ideal}", k1 + k2))
}

/// Radical and minimalization are idempotent and the canonical form does not
/// depend on the input order.
pub fn canonical_form(gens: &[Monomial], permutation: &[usize]) -> Check {
    let Some(first) = gens.first() else { return Ok(()) };
    let ring = crate::monomial::Ring::new((1..=first.num_vars()).map(|i| format!("x{i}")));
    let a = MonomialIdeal::new(ring.clone(), gens.to_vec()).map_err(|e| e.to_string())?;
    let shuffled: Vec<Monomial> = permutation.iter().map(|&p| gens[p % gens.len()].clone()).chain(gens.iter().cloned()).collect();
    let b = MonomialIdeal::new(ring.clone(), shuffled).map_err(|e| e.to_string())?;
    ensure(a == b, || format!("order changed the canonical form: {a} vs {b}"))?;
    let again = MonomialIdeal::new(ring, a.gens().to_vec()).map_err(|e| e.to_string())?;
    ensure(again == a, || format!("minimalization is not idempotent on {a}"))?;
    ensure(a.radical().radical() == a.radical(), || format!("radical is not idempotent on {a}"))
}

/// `sqrt(I : x^a)` equals the radical of the colon, and its masks agree.
pub fn sqrt_colon_consistent(ideal: &MonomialIdeal, a: &[u32]) -> Check {
    let m = Monomial::new(a.to_vec());
    let direct = ideal.sqrt_colon(&m);
    let composed = ideal.colon(&m).radical();
    ensure(direct == composed, || format!("sqrt colon {direct} vs radical of colon {composed}"))?;
    let from_masks: Vec<u64> = direct.gens().iter().map(Monomial::support).collect();
    let mut masks = ideal.sqrt_colon_masks(a);
    let mut expected = from_masks;
    masks.sort_unstable();
    expected.sort_unstable();
    ensure(masks == expected, || format!("sqrt colon masks {masks:?} vs {expected:?}"))
}

/// For `J ⊆ L`, `g ∈ G(L)` and `x^a ∉ L` with `f = sqrt(g / gcd(g, x^a))`:
/// `f ∈ sqrt(J : g)` implies `f ∈ sqrt(J : x^a)`.
pub fn colon_transfer(j: &MonomialIdeal, l: &MonomialIdeal, a: &[u32]) -> Check {
    if !j.is_subset_of(l) {
        return Ok(());
    }
    let xa = Monomial::new(a.to_vec());
    if l.contains(&xa) {
        return Ok(());
    }
    for g in l.gens() {
        let f = g.quotient_by_gcd(&xa).radical();
        if j.sqrt_colon(g).contains(&f) {
            ensure(j.sqrt_colon(&xa).contains(&f), || format!("f = {f:?} from g = {g:?} fails at a = {a:?}"))?;
        }
    }
    Ok(())
}

/// Void, irrelevant, simplex and cone conventions.
pub fn homology_conventions(n: usize, ch: Characteristic) -> Check {
    ensure(SimplicialComplex::void(n).homology(ch).is_zero(), || "void complex has homology".into())?;
    let irrelevant = SimplicialComplex::irrelevant(n).homology(ch);
    ensure(irrelevant.get(-1) == 1 && irrelevant.nonzero().count() == 1, || format!("irrelevant complex: {irrelevant:?}"))?;
    if n > 0 {
        ensure(SimplicialComplex::simplex(n).homology(ch).is_zero(), || "simplex has homology".into())?;
    }
    Ok(())
}

/// Reduced Euler characteristic from face counts equals the alternating
/// sum of homology dimensions.
pub fn euler_consistency(complex: &SimplicialComplex, ch: Characteristic) -> Check {
    let from_faces: i64 = complex
        .faces()
        .iter()
        .map(|f| if f.count_ones() % 2 == 0 { -1 } else { 1 })
        .sum();
    let from_homology = complex.homology(ch).euler_characteristic();
    ensure(from_faces == from_homology, || format!("Euler {from_faces} vs {from_homology} on {complex:?}"))
}

/// Euler consistency on every upper Koszul complex of the lcm lattice.
pub fn koszul_euler(ideal: &MonomialIdeal, ch: Characteristic) -> Check {
    let lattice = lcm_lattice(ideal, 10_000).map_err(|e| e.to_string())?;
    for b in &lattice.elements {
        euler_consistency(&upper_koszul(ideal, b), ch)?;
    }
    Ok(())
}

pub fn restriction_monotone(ideal: &MonomialIdeal, keep: u64, ch: Characteristic) -> Check {
    let r = regularity(ideal, ch, Engine::Takayama).map_err(|e| e.to_string())?;
    let restricted = ideal.restrict(keep);
    if restricted.is_zero() {
        return Ok(());
    }
    let rr = regularity(&restricted, ch, Engine::Takayama).map_err(|e| e.to_string())?;
    ensure(rr <= r, || format!("reg of restriction {rr} exceeds {r} for {ideal}"))
}

/// At every extremal exponent `(a, i)`, a variable `x_j` of
/// `sqrt(I : x^a)` with `j ∉ supp a` can be deleted without changing `reg`.
pub fn extremal_reduction(ideal: &MonomialIdeal, ch: Characteristic) -> Check {
    if ideal.is_zero() {
        return Ok(());
    }
    let n = ideal.num_vars();
    let t = takayama_regularity(ideal, ch).map_err(|e| e.to_string())?;
    let reg = t.reg_quotient + 1;
    for ex in &t.extremal {
        for mask in ideal.sqrt_colon_masks(&ex.a) {
            if mask.count_ones() != 1 {
                continue;
            }
            let j = mask.trailing_zeros() as usize;
            if ex.a[j] != 0 {
                continue;
            }
            let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            let restricted = ideal.restrict(all & !mask);
            let rr = regularity(&restricted, ch, Engine::Takayama).map_err(|e| e.to_string())?;
            ensure(rr == reg, || format!("deleting x{} changes reg {reg} to {rr} on {ideal}", j + 1))?;
        }
    }
    Ok(())
}

/// For `J ⊆ I` with `Δ_a(I) = Δ_a(J)` whenever `x^a ∉ I`: `reg(I) ≤ reg(J)`.
pub fn degree_complex_comparison(i: &MonomialIdeal, j: &MonomialIdeal, ch: Characteristic) -> Check {
    if !j.is_subset_of(i) || j.is_zero() {
        return Ok(());
    }
    let sweep = Sweep::for_ideals(&[i, j], &[]);
    let same = sweep
        .find_map(|a| {
            let differs = !i.contains(&Monomial::new(a.to_vec())) && i.sqrt_colon_masks(a) != j.sqrt_colon_masks(a);
            differs.then_some(())
        })
        .is_none();
    if !same {
        return Ok(());
    }
    let ri = regularity(i, ch, Engine::Takayama).map_err(|e| e.to_string())?;
    let rj = regularity(j, ch, Engine::Takayama).map_err(|e| e.to_string())?;
    ensure(ri <= rj, || format!("reg {ri} of {i} exceeds reg {rj} of {j}"))
}

/// Permuting variables leaves the coarse Betti table unchanged.
pub fn permutation_invariance(ideal: &MonomialIdeal, permutation: &[usize], ch: Characteristic) -> Check {
    let n = ideal.num_vars();
    let gens: Vec<Monomial> = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut e = vec![0; n];
            for (j, &x) in g.exps().iter().enumerate() {
                e[permutation[j]] = x;
            }
            Monomial::new(e)
        })
        .collect();
    let permuted = MonomialIdeal::new(ideal.ring().clone(), gens).map_err(|e| e.to_string())?;
    let a = betti_table(ideal, ch).map_err(|e| e.to_string())?;
    let b = betti_table(&permuted, ch).map_err(|e| e.to_string())?;
    ensure(a.coarse() == b.coarse(), || format!("coarse Betti tables differ after permuting {ideal}"))
}

/// Both engines, and char 0 against the default prime.
pub fn engines_agree(ideal: &MonomialIdeal) -> Check {
    for ch in [Characteristic::Zero, Characteristic::Prime(crate::linalg::DEFAULT_PRIME)] {
        regularity(ideal, ch, Engine::Both).map_err(|e| e.to_string())?;
    }
    Ok(())
}

pub fn neighborhood_union(graph: &WeightedOrientedGraph, set: VertexSet) -> Check {
    let whole = graph.neighborhood(set, NeighborhoodKind::Closed);
    let parts = set
        .iter()
        .fold(VertexSet::EMPTY, |acc, v| acc.union(graph.neighborhood(VertexSet::singleton(v), NeighborhoodKind::Closed)));
    ensure(whole == parts, || format!("N[S] = {whole:?} but union = {parts:?}"))
}

pub fn induced_composes(graph: &WeightedOrientedGraph, a: VertexSet, b: VertexSet) -> Check {
    let inner = graph.induced_subgraph(a);
    // Translate `b` into the vertex indices of `inner`.
    let b_inner: VertexSet = a.iter().enumerate().filter(|&(_, v)| b.contains(v)).map(|(i, _)| i).collect();
    let twice = inner.induced_subgraph(b_inner);
    let once = graph.induced_subgraph(a.intersection(b));
    ensure(twice.to_document() == once.to_document(), || "induced subgraphs do not compose".into())
}

/// Underlying-graph symmetry, gaps against induced 2-matchings, and the
/// bipartition against odd cycles.
pub fn graph_structure(graph: &WeightedOrientedGraph) -> Check {
    for &(t, h) in graph.edges() {
        ensure(graph.is_adjacent(t, h) && graph.is_adjacent(h, t), || "adjacency is not symmetric".into())?;
    }
    ensure(graph.gaps().is_empty() == graph.induced_matchings(2).is_empty(), || "gaps and 2-matchings disagree".into())?;
    match graph.bipartition() {
        Bipartition::Bipartite { left, right } => {
            ensure(graph.triangles().is_empty() && graph.cycles5().is_empty(), || "bipartite graph with an odd cycle".into())?;
            for &(t, h) in graph.edges() {
                ensure(left.contains(t) != left.contains(h), || "edge inside a side".into())?;
            }
            ensure(left.union(right) == graph.all_vertices(), || "bipartition misses vertices".into())
        }
        Bipartition::OddCycle(cycle) => {
            ensure(cycle.len() % 2 == 1, || format!("even cycle {cycle:?}"))?;
            for i in 0..cycle.len() {
                let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                ensure(graph.is_adjacent(u, v), || format!("{cycle:?} is not a cycle"))?;
            }
            Ok(())
        }
    }
}

/// `I^k ⊆ I^(k)`, `I^(a) I^(b) ⊆ I^(a+b)`, `sqrt(I^(k)) = sqrt(I)`, and
/// `I^(1) = I` under the sink hypothesis.
pub fn symbolic_containments(graph: &WeightedOrientedGraph, kmax: u32) -> Check {
    let ideal = edge_ideal(graph);
    let sym = |k| symbolic_power(graph, k, SymbolicMethod::Primes).map_err(|e| e.to_string());
    let powers: Vec<MonomialIdeal> = (1..=kmax).map(sym).collect::<Result<_, _>>()?;
    for k in 1..=kmax {
        let s = &powers[k as usize - 1];
        ensure(ideal.power(k).is_subset_of(s), || format!("I^{k} ⊄ I^({k})"))?;
        ensure(s.radical() == ideal.radical(), || format!("radical of I^({k}) differs"))?;
    }
    ensure(ideal.is_subset_of(&powers[0]), || "I ⊄ I^(1)".into())?;
    if graph.v_plus_all_sinks() {
        ensure(powers[0] == ideal, || "I^(1) ≠ I for a sink graph".into())?;
    }
    for a in 1..=kmax {
        for b in 1..=kmax - a {
            let product = powers[a as usize - 1].multiply(&powers[b as usize - 1]).map_err(|e| e.to_string())?;
            ensure(product.is_subset_of(&powers[(a + b) as usize - 1]), || format!("I^({a}) I^({b}) ⊄ I^({})", a + b))?;
        }
    }
    Ok(())
}

/// Primes route against the sink formula for `k = 2, 3`.
pub fn routes_agree(graph: &WeightedOrientedGraph) -> Check {
    for k in 2..=3 {
        let a = symbolic_power(graph, k, SymbolicMethod::Primes).map_err(|e| e.to_string())?;
        let b = symbolic_power(graph, k, SymbolicMethod::SinkFormula).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("k = {k}: primes {a} vs sink formula {b}"))?;
    }
    Ok(())
}

/// Every monomial in the box `[0, bound]^n`.
pub fn box_monomials(n: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let values: Vec<Vec<u32>> = (0..n).map(|_| (0..=bound).collect()).collect();
    crate::regularity::for_each_point(&values, |a| out.push(Monomial::new(a.to_vec())));
    out
}

/// Minimal vertex covers against exhaustive enumeration of all subsets.
pub fn covers_match_brute_force(graph: &WeightedOrientedGraph) -> Check {
    let n = graph.num_vertices();
    if n > 16 {
        return Ok(());
    }
    let covers: Vec<u64> = (0..1u64 << n)
        .filter(|&s| graph.edges().iter().all(|&(t, h)| s >> t & 1 == 1 || s >> h & 1 == 1))
        .collect();
    let mut expected: Vec<u64> = if graph.edges().is_empty() {
        Vec::new()
    } else {
        covers.iter().copied().filter(|&c| !covers.iter().any(|&d| d != c && d & c == d)).collect()
    };
    let mut found: Vec<u64> = minimal_primes(graph).iter().map(|c| c.0).collect();
    expected.sort_unstable();
    found.sort_unstable();
    ensure(found == expected, || format!("minimal covers {found:?} vs brute force {expected:?}"))
}

/// The threshold-class sweep meets every (membership, radical colon) pattern
/// that the full exponent box meets.
pub fn threshold_sweep_complete(ideal: &MonomialIdeal) -> Check {
    let pattern = |a: &[u32]| (ideal.contains(&Monomial::new(a.to_vec())), ideal.sqrt_colon_masks(a));
    let rho = ideal.exponent_profile();
    let mut full = BTreeSet::new();
    Sweep::full_box(&rho).for_each(|a| {
        full.insert(pattern(a));
    });
    let mut classes = BTreeSet::new();
    Sweep::for_ideals(&[ideal], &[]).for_each(|a| {
        classes.insert(pattern(a));
    });
    ensure(full == classes, || format!("threshold sweep misses patterns of {ideal}"))
}
