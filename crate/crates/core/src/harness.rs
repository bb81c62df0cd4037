//! Machine-checkable verdicts for regularity bounds on concrete graphs.
//!
//! Every check computes the quantities it compares, records whether the
//! claim's hypotheses are met, and only then asserts. A check whose
//! hypotheses fail still reports its comparison with `holds = None`.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{NeighborhoodKind, PathMode, VertexSet, WeightedOrientedGraph, WeightedPath};
use crate::linalg::Characteristic;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::regularity::{betti_table_with, regularity_with, Engine, Limits};
use crate::sweep::Sweep;
use crate::symbolic::{edge_ideal, path_witness_monomial, symbolic_power, underlying_edge_ideal, weight_map, SymbolicMethod};

pub const DEFAULT_SWEEP_CAP: usize = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    LowerBound,
    SymbolicVsOrdinary,
    SecondPowerBound,
    SecondPowerDichotomy,
    GapFreeBound,
    GapFreeEquality,
    GapFreeFormula,
    ColonRadicalSquare,
    ColonRadicalCube,
    ColonLinearGenerator,
    BettiMonotonicity,
    ForestBound,
    Slopes,
}

impl Claim {
    pub const ALL: [Claim; 13] = [
        Claim::LowerBound,
        Claim::SymbolicVsOrdinary,
        Claim::SecondPowerBound,
        Claim::SecondPowerDichotomy,
        Claim::GapFreeBound,
        Claim::GapFreeEquality,
        Claim::GapFreeFormula,
        Claim::ColonRadicalSquare,
        Claim::ColonRadicalCube,
        Claim::ColonLinearGenerator,
        Claim::BettiMonotonicity,
        Claim::ForestBound,
        Claim::Slopes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::LowerBound => "lower-bound",
            Claim::SymbolicVsOrdinary => "symbolic-vs-ordinary",
            Claim::SecondPowerBound => "second-power-bound",
            Claim::SecondPowerDichotomy => "second-power-dichotomy",
            Claim::GapFreeBound => "gap-free-bound",
            Claim::GapFreeEquality => "gap-free-equality",
            Claim::GapFreeFormula => "gap-free-formula",
            Claim::ColonRadicalSquare => "colon-radical-square",
            Claim::ColonRadicalCube => "colon-radical-cube",
            Claim::ColonLinearGenerator => "colon-linear-generator",
            Claim::BettiMonotonicity => "betti-monotonicity",
            Claim::ForestBound => "forest-bound",
            Claim::Slopes => "slopes",
        }
    }

    pub fn parse(s: &str) -> Option<Claim> {
        Claim::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl std::fmt::Display for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Matching { edges: Vec<(String, String)> },
    Triangle { vertices: Vec<String> },
    Path { tail: String, middle: String, head: String },
    Exponent { a: Vec<u32> },
    Monomial { monomial: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim: Claim,
    pub graph: String,
    /// Power the verdict refers to, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    pub hypotheses_met: bool,
    pub reasons: Vec<String>,
    pub quantities: BTreeMap<String, i64>,
    /// `None` when the hypotheses fail or nothing is asserted.
    pub holds: Option<bool>,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Verdict {
    fn new(claim: Claim, graph: &WeightedOrientedGraph, k: Option<u32>) -> Self {
        Verdict {
            claim,
            graph: graph.name().to_string(),
            k,
            hypotheses_met: true,
            reasons: Vec::new(),
            quantities: BTreeMap::new(),
            holds: None,
            witnesses: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: None,
        }
    }

    fn require(&mut self, ok: bool, reason: impl Into<String>) {
        if !ok {
            self.hypotheses_met = false;
            self.reasons.push(reason.into());
        }
    }

    fn set(&mut self, key: &str, value: i64) {
        self.quantities.insert(key.to_string(), value);
    }

    fn assert(&mut self, holds: bool) {
        self.holds = if self.hypotheses_met { Some(holds) } else { None };
    }

    pub fn failed(&self) -> bool {
        self.holds == Some(false)
    }

    pub fn quantity(&self, key: &str) -> Option<i64> {
        self.quantities.get(key).copied()
    }
}

/// Settings shared by all checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub characteristic: Characteristic,
    pub engine: Engine,
    pub limits: Limits,
    pub sweep_cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            characteristic: Characteristic::Zero,
            engine: Engine::Takayama,
            limits: Limits::default(),
            sweep_cap: DEFAULT_SWEEP_CAP,
        }
    }
}

impl Options {
    fn reg(&self, ideal: &MonomialIdeal) -> Result<i64> {
        regularity_with(ideal, self.characteristic, self.engine, self.limits)
    }
}

fn timed(start: Instant, mut v: Verdict) -> Verdict {
    v.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    v
}

fn set_names(graph: &WeightedOrientedGraph, set: VertexSet) -> Vec<String> {
    set.iter().map(|v| graph.vertex_name(v).to_string()).collect()
}

fn path_witness(graph: &WeightedOrientedGraph, p: &WeightedPath) -> Witness {
    Witness::Path {
        tail: graph.vertex_name(p.tail).to_string(),
        middle: graph.vertex_name(p.middle).to_string(),
        head: graph.vertex_name(p.head).to_string(),
    }
}

fn sym(graph: &WeightedOrientedGraph, k: u32) -> Result<MonomialIdeal> {
    symbolic_power(graph, k, SymbolicMethod::Primes)
}

/// Oriented induced matchings: lower bound on `reg(I^(k))`.
pub fn check_lower_bound(graph: &WeightedOrientedGraph, k: u32, opts: &Options) -> Result<Verdict> {
    let start = Instant::now();
    let mut v = Verdict::new(Claim::LowerBound, graph, Some(k));
    v.require(graph.v_plus_all_sinks(), "a vertex of weight at least 2 is not a sink");
    let matchings = graph.all_induced_matchings();
    v.require(!matchings.is_empty(), "the graph has no edges");
    if k == 0 {
        return Err(Error::Hypothesis("k must be at least 1".into()));
    }
    let reg = opts.reg(&sym(graph, k)?)?;
    let global_w = graph.max_weight() as i64;
    let k1 = k as i64 - 1;
    let mut best_proof: Option<(i64, &Vec<usize>)> = None;
    let mut best_literal = i64::MIN;
    let mut literal_violations = 0;
    for m in &matchings {
        let heads: Vec<i64> = m.iter().map(|&e| graph.weight(graph.edges()[e].1) as i64).collect();
        let sum: i64 = heads.iter().sum();
        let proof = k1 * (heads.iter().max().expect("nonempty matching") + 1) + sum + 1;
        let literal = k1 * (global_w + 1) + sum + 1;
        if literal > reg {
            literal_violations += 1;
        }
        best_literal = best_literal.max(literal);
        if best_proof.is_none_or(|(b, _)| proof > b) {
            best_proof = Some((proof, m));
        }
    }
    v.set("reg_symbolic", reg);
    v.set("matchings", matchings.len() as i64);
    v.set("literal_violations", literal_violations);
    if let Some((bound, m)) = best_proof {
        v.set("bound_proof", bound);
        v.set("bound_literal", best_literal);
        let edges = m
            .iter()
            .map(|&e| {
                let (t, h) = graph.edges()[e];
                (graph.vertex_name(t).to_string(), graph.vertex_name(h).to_string())
            })
            .collect();
        v.witnesses.push(Witness::Matching { edges });
        if literal_violations > 0 {
            v.notes.push("the bound with w taken over all vertices exceeds the regularity".into());
        }
        v.assert(bound <= reg);
    }
    Ok(timed(start, v))
}

/// `reg(I^(k)) ≤ reg(I^k)` for `2 ≤ k ≤ kmax`, asserted under whichever
/// hypothesis applies.
pub fn check_symbolic_vs_ordinary(graph: &WeightedOrientedGraph, kmax: u32, opts: &Options) -> Result<Vec<Verdict>> {
    if kmax < 2 {
        return Err(Error::Hypothesis(format!("kmax must be at least 2, got {kmax}")));
    }
    let sinks = graph.v_plus_all_sinks();
    let paths = graph.weighted_paths(PathMode::Induced);
    let directed_only: Vec<WeightedPath> =
        graph.weighted_paths(PathMode::DirectedOnly).into_iter().filter(|p| !p.induced).collect();
    let bipartite = graph.bipartition().is_bipartite();
    let ideal = edge_ideal(graph);
    let mut out = Vec::new();
    for k in 2..=kmax {
        let start = Instant::now();
        let mut v = Verdict::new(Claim::SymbolicVsOrdinary, graph, Some(k));
        let mut applies = Vec::new();
        if sinks && k <= 3 {
            applies.push("weighted vertices are sinks");
        }
        if !paths.is_empty() {
            applies.push("induced weighted path");
        }
        if bipartite {
            applies.push("bipartite");
        }
        v.require(!applies.is_empty(), "no hypothesis applies");
        v.notes.extend(applies.iter().map(|s| s.to_string()));
        let rs = opts.reg(&sym(graph, k)?)?;
        let ro = opts.reg(&ideal.power(k))?;
        v.set("reg_symbolic", rs);
        v.set("reg_ordinary", ro);
        v.set("induced_paths", paths.len() as i64);
        v.set("directed_only_paths", directed_only.len() as i64);
        if let Some(p) = paths.first() {
            v.witnesses.push(path_witness(graph, p));
            let m = path_witness_monomial(graph, p, k)?;
            v.witnesses.push(Witness::Monomial { monomial: m.display(ideal.ring().names()) });
        }
        v.assert(rs <= ro);
        out.push(timed(start, v));
    }
    Ok(out)
}

/// Per-triangle quantity `reg(I(D∖N[T])) + Σ_{N[T]} w - |N[T]| + Σ_T w`,
/// with `reg` of the zero ideal taken as 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleQuantity {
    pub triangle: VertexSet,
    pub neighborhood: VertexSet,
    pub reg_rest: i64,
    pub value: i64,
}

pub fn triangle_quantities(graph: &WeightedOrientedGraph, opts: &Options) -> Result<Vec<TriangleQuantity>> {
    let w = |s: VertexSet| s.iter().map(|x| graph.weight(x) as i64).sum::<i64>();
    graph
        .triangles()
        .into_iter()
        .map(|t| {
            let n = graph.neighborhood(t, NeighborhoodKind::Closed);
            let reg_rest = opts.reg(&edge_ideal(&graph.remove_vertices(n)))?;
            let value = reg_rest + w(n) - n.len() as i64 + w(t);
            Ok(TriangleQuantity { triangle: t, neighborhood: n, reg_rest, value })
        })
        .collect()
}

/// Bounds and the dichotomy for `reg(I^2)`, plus the gap-free corollaries.
pub fn check_second_power_bounds(graph: &WeightedOrientedGraph, opts: &Options) -> Result<Vec<Verdict>> {
    let start = Instant::now();
    let sinks = graph.v_plus_all_sinks();
    let ideal = edge_ideal(graph);
    let r2 = opts.reg(&ideal.power(2))?;
    let rs2 = opts.reg(&sym(graph, 2)?)?;
    let quantities = triangle_quantities(graph, opts)?;
    let max_q = quantities.iter().map(|q| q.value).max();
    let best = quantities.iter().max_by_key(|q| q.value);
    let gap_free = graph.is_gap_free();
    let v_plus = graph.classify().v_plus;

    let base = |claim| {
        let mut v = Verdict::new(claim, graph, Some(2));
        v.require(sinks, "a vertex of weight at least 2 is not a sink");
        v.set("reg_square", r2);
        v.set("reg_symbolic_square", rs2);
        v.set("triangles", quantities.len() as i64);
        if let Some(q) = max_q {
            v.set("max_q", q);
        }
        if let Some(b) = best {
            v.set("reg_rest", b.reg_rest);
            v.witnesses.push(Witness::Triangle { vertices: set_names(graph, b.triangle) });
        }
        v.notes.push("reg of the zero ideal is taken to be 1".into());
        v
    };

    let mut bound = base(Claim::SecondPowerBound);
    bound.assert(r2 <= max_q.map_or(rs2, |q| rs2.max(q)));

    let mut dichotomy = base(Claim::SecondPowerDichotomy);
    let branch = if r2 == rs2 {
        1
    } else if Some(r2) == max_q {
        2
    } else {
        0
    };
    dichotomy.set("branch", branch);
    dichotomy.assert(branch != 0);

    let mut cor_bound = base(Claim::GapFreeBound);
    cor_bound.require(gap_free, "the graph has a gap");
    cor_bound.assert(r2 <= max_q.map_or(rs2, |q| rs2.max(q)));

    let mut equality = base(Claim::GapFreeEquality);
    equality.require(gap_free, "the graph has a gap");
    let crowded = quantities.iter().find(|q| q.neighborhood.intersection(v_plus).len() > 1);
    if let Some(q) = crowded {
        equality.require(false, "a triangle has two weighted vertices in its closed neighbourhood");
        equality.witnesses.push(Witness::Triangle { vertices: set_names(graph, q.triangle) });
    }
    equality.assert(r2 == rs2);

    let mut formula = base(Claim::GapFreeFormula);
    formula.require(gap_free, "the graph has a gap");
    formula.require(r2 != rs2, "reg(I^2) equals reg(I^(2))");
    formula.require(max_q.is_some(), "the graph has no triangles");
    formula.assert(Some(r2) == max_q);

    Ok([bound, dichotomy, cor_bound, equality, formula].into_iter().map(|v| timed(start, v)).collect())
}

/// Radical colons of `I^(k)` and `I^k` at a point, as minimal generator
/// supports, together with the generators of the first that are missing
/// from the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColonDifference {
    pub symbolic: Vec<u64>,
    pub ordinary: Vec<u64>,
    pub extra: Vec<u64>,
}

pub fn colon_difference(symbolic: &MonomialIdeal, ordinary: &MonomialIdeal, a: &[u32]) -> ColonDifference {
    let s = symbolic.sqrt_colon_masks(a);
    let o = ordinary.sqrt_colon_masks(a);
    let extra = s.iter().copied().filter(|&f| !o.iter().any(|&m| m & !f == 0)).collect();
    ColonDifference { symbolic: s, ordinary: o, extra }
}

fn support(a: &[u32]) -> u64 {
    a.iter().enumerate().filter(|(_, &x)| x > 0).fold(0, |acc, (j, _)| acc | 1 << j)
}

/// Sweeps the exponents that matter for `I^(k)` against `I^k` and checks the
/// colon lemmas: equal radicals for `k = 2`, degree-one differences with a
/// weighted triangle-plus-vertex divisor for `k = 3`, and the linear
/// generator produced by an induced weighted path for any `k ≥ 2`.
pub fn check_colon_lemmas(graph: &WeightedOrientedGraph, k: u32, opts: &Options) -> Result<Vec<Verdict>> {
    if k < 2 {
        return Err(Error::Hypothesis(format!("k must be at least 2, got {k}")));
    }
    let start = Instant::now();
    let n = graph.num_vertices();
    let symbolic = sym(graph, k)?;
    let ordinary = edge_ideal(graph).power(k);
    let weights = graph.weights();
    let paths = graph.weighted_paths(PathMode::Induced);
    let mut extra: Vec<Vec<u32>> = weights.iter().map(|&w| vec![w]).collect();
    for p in &paths {
        extra[p.middle].push(weights[p.middle] + k - 2);
        extra[p.head].push(weights[p.head] * (k - 1));
    }
    let sweep = Sweep::for_ideals(&[&symbolic, &ordinary], &extra);
    sweep.check_cap(opts.sweep_cap)?;
    let triangles = graph.triangles();
    let divides = |set: VertexSet, a: &[u32]| set.iter().all(|x| a[x] >= weights[x]);

    let mut points = 0i64;
    let mut differing = 0i64;
    let mut radical_failure: Option<Vec<u32>> = None;
    let mut cube_failure: Option<Vec<u32>> = None;
    let mut cube_divisor_failures = 0i64;
    let mut cube_degree_failures = 0i64;
    let mut cube_support_failures = 0i64;
    let mut path_instances = 0i64;
    let mut path_failure: Option<(Vec<u32>, WeightedPath)> = None;
    let mut unsupported_steps = 0i64;
    sweep.for_each(|a| {
        if symbolic.contains(&Monomial::new(a.to_vec())) {
            return;
        }
        points += 1;
        let supp = support(a);
        let d = colon_difference(&symbolic, &ordinary, a);
        if d.symbolic != d.ordinary {
            differing += 1;
            if radical_failure.is_none() {
                radical_failure = Some(a.to_vec());
            }
            let linear_outside = d.symbolic.iter().any(|&f| f.count_ones() == 1 && f & supp == 0);
            if !linear_outside {
                unsupported_steps += 1;
            }
            let divisor = triangles.iter().any(|&t| {
                divides(t, a) && (0..n).any(|x| !t.contains(x) && divides(t.with(x), a))
            });
            if !divisor {
                cube_divisor_failures += 1;
                cube_failure.get_or_insert_with(|| a.to_vec());
            }
            if !d.extra.iter().all(|&f| f.count_ones() == 1) {
                cube_degree_failures += 1;
                cube_failure.get_or_insert_with(|| a.to_vec());
            }
            if !d.extra.iter().all(|&f| f & supp == 0) {
                cube_support_failures += 1;
                cube_failure.get_or_insert_with(|| a.to_vec());
            }
        }
        for p in &paths {
            if a[p.middle] >= weights[p.middle] + k - 2 && a[p.head] >= weights[p.head] * (k - 1) {
                path_instances += 1;
                let ok = d.symbolic.contains(&(1 << p.tail)) && a[p.tail] == 0;
                if !ok && path_failure.is_none() {
                    path_failure = Some((a.to_vec(), *p));
                }
            }
        }
    });

    let mut out = Vec::new();
    let fill = |v: &mut Verdict| {
        v.set("points", points);
        v.set("differing_points", differing);
        v.set("sweep_size", sweep.len().unwrap_or(usize::MAX) as i64);
    };
    let radical_claim = match k {
        2 => Some(Claim::ColonRadicalSquare),
        3 => Some(Claim::ColonRadicalCube),
        _ => None,
    };
    if let Some(claim) = radical_claim {
        let mut v = Verdict::new(claim, graph, Some(k));
        v.require(graph.v_plus_all_sinks(), "a vertex of weight at least 2 is not a sink");
        fill(&mut v);
        if k == 3 {
            v.set("divisor_failures", cube_divisor_failures);
            v.set("degree_failures", cube_degree_failures);
            v.set("support_failures", cube_support_failures);
        }
        let failure = if k == 2 { radical_failure } else { cube_failure };
        if let Some(a) = &failure {
            v.witnesses.push(Witness::Exponent { a: a.clone() });
        }
        v.assert(failure.is_none());
        out.push(timed(start, v));
    }
    let mut v = Verdict::new(Claim::ColonLinearGenerator, graph, Some(k));
    v.require(!paths.is_empty(), "no induced weighted path");
    fill(&mut v);
    v.set("path_instances", path_instances);
    v.set("unsupported_steps", unsupported_steps);
    if let Some(p) = paths.first() {
        v.witnesses.push(path_witness(graph, p));
    }
    if let Some((a, p)) = &path_failure {
        v.witnesses.push(Witness::Exponent { a: a.clone() });
        v.witnesses.push(path_witness(graph, p));
    }
    if unsupported_steps > 0 {
        v.notes.push("some points with differing radicals have no linear generator outside supp a".into());
    }
    v.assert(path_failure.is_none());
    out.push(timed(start, v));
    Ok(out)
}

/// Coarse Betti numbers of `I(H)^(k)` against `I(D)^(k)` for the induced
/// subgraph `H` on `keep`.
pub fn check_betti_monotonicity(graph: &WeightedOrientedGraph, keep: VertexSet, k: u32, opts: &Options) -> Result<Verdict> {
    let start = Instant::now();
    let mut v = Verdict::new(Claim::BettiMonotonicity, graph, Some(k));
    v.require(graph.v_plus_all_sinks(), "a vertex of weight at least 2 is not a sink");
    let h = graph.induced_subgraph(keep);
    let phi = underlying_edge_ideal(&h).phi(&weight_map(&h))?;
    v.set("phi_matches_edge_ideal", (phi == edge_ideal(&h)) as i64);
    let big = sym(graph, k)?;
    let small = sym(&h, k)?;
    let tb = betti_table_with(&big, opts.characteristic, opts.limits)?.coarse();
    let ts = betti_table_with(&small, opts.characteristic, opts.limits)?.coarse();
    let violations: Vec<(usize, u64)> = ts
        .iter()
        .filter(|(key, &d)| d > tb.get(key).copied().unwrap_or(0))
        .map(|(&key, _)| key)
        .collect();
    let reg_of = |t: &BTreeMap<(usize, u64), usize>| t.keys().map(|&(i, j)| j as i64 - i as i64).max().unwrap_or(1);
    let (rb, rs) = (reg_of(&tb), reg_of(&ts));
    v.set("reg_symbolic", rb);
    v.set("reg_induced_symbolic", rs);
    v.set("entry_violations", violations.len() as i64);
    let assoc = symbolic_power(&h, k, SymbolicMethod::Associated)?;
    if assoc != small {
        v.set("reg_induced_symbolic_associated", opts.reg(&assoc)?);
    }
    v.notes.push(format!("kept vertices: {}", set_names(graph, keep).join(",")));
    v.assert(violations.is_empty() && rs <= rb);
    Ok(timed(start, v))
}

/// Underlying forest in which every component has exactly one source and
/// every other vertex has in-degree one.
pub fn is_rooted_forest(graph: &WeightedOrientedGraph) -> bool {
    if !graph.is_forest() {
        return false;
    }
    let sources: Vec<usize> = (0..graph.num_vertices()).filter(|&v| graph.in_neighbors(v).is_empty()).collect();
    let mut seen = VertexSet::EMPTY;
    for &s in &sources {
        if seen.contains(s) {
            return false;
        }
        let mut component = VertexSet::singleton(s);
        loop {
            let next = component.union(graph.neighborhood(component, NeighborhoodKind::Open));
            if next == component {
                break;
            }
            component = next;
        }
        seen = seen.union(component);
    }
    seen == graph.all_vertices() && (0..graph.num_vertices()).all(|v| graph.in_neighbors(v).len() <= 1)
}

/// Forest upper bound on `reg(I^(k))` and the finite slope report.
pub fn check_forest_bound_and_slopes(graph: &WeightedOrientedGraph, kmax: u32, opts: &Options) -> Result<Vec<Verdict>> {
    if kmax < 2 {
        return Err(Error::Hypothesis(format!("kmax must be at least 2, got {kmax}")));
    }
    let start = Instant::now();
    let regs: Vec<i64> = (1..=kmax).map(|k| opts.reg(&sym(graph, k)?)).collect::<Result<_>>()?;
    let w = graph.max_weight() as i64;
    let total: i64 = graph.weights().iter().map(|&x| x as i64).sum();
    let e = graph.edges().len() as i64;

    let mut forest = Verdict::new(Claim::ForestBound, graph, None);
    forest.require(is_rooted_forest(graph), "not a rooted forest");
    let light: Vec<usize> = (0..graph.num_vertices())
        .filter(|&x| graph.degree(x) != 1 && graph.weight(x) < 2)
        .collect();
    if let Some(&x) = light.first() {
        forest.require(false, format!("w({}) < 2 with degree {}", graph.vertex_name(x), graph.degree(x)));
    }
    let paths = graph.weighted_paths(PathMode::Induced);
    forest.require(!paths.is_empty(), "no induced weighted path");
    let mut ok = true;
    for k in 2..=kmax {
        let bound = total - e + (k as i64 - 1) * (w + 1);
        let reg = regs[k as usize - 1];
        forest.set(&format!("bound_k{k}"), bound);
        forest.set(&format!("reg_symbolic_k{k}"), reg);
        ok &= reg <= bound;
    }
    forest.assert(ok);

    let mut slopes = Verdict::new(Claim::Slopes, graph, None);
    slopes.set("max_w_plus_1", w + 1);
    for k in 1..=kmax {
        slopes.set(&format!("reg_symbolic_k{k}"), regs[k as usize - 1]);
    }
    for k in 2..=kmax {
        let d = regs[k as usize - 1] - regs[k as usize - 2];
        slopes.set(&format!("difference_k{k}"), d);
    }
    slopes.notes.push("report only; no limit is asserted".into());
    Ok(vec![timed(start, forest), timed(start, slopes)])
}

/// Every check on one graph: powers up to `kmax`, colon lemmas for `k = 2, 3`,
/// monotonicity against each single-vertex deletion.
pub fn run_all(graph: &WeightedOrientedGraph, kmax: u32, opts: &Options) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    for k in 1..=kmax {
        out.push(check_lower_bound(graph, k, opts)?);
    }
    out.extend(check_symbolic_vs_ordinary(graph, kmax, opts)?);
    out.extend(check_second_power_bounds(graph, opts)?);
    for k in 2..=kmax.min(3) {
        out.extend(check_colon_lemmas(graph, k, opts)?);
    }
    for v in 0..graph.num_vertices() {
        let keep = graph.all_vertices().difference(VertexSet::singleton(v));
        out.push(check_betti_monotonicity(graph, keep, 2, opts)?);
    }
    out.extend(check_forest_bound_and_slopes(graph, kmax, opts)?);
    Ok(out)
}
