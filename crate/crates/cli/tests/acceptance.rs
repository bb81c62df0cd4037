//! Acceptance run: one line per criterion.
//!
//! A criterion reports FAIL when its stated target is not met. The process
//! exits nonzero only when an outcome differs from the recorded analysis,
//! so known failures are still checked precisely.

use std::process::ExitCode;
use std::time::Instant;

use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use woi_cli::corpus::{default_dir, Corpus};
use woi_core::complex::SimplicialComplex;
use woi_core::harness::{self, Claim, Options, Verdict};
use woi_core::invariants::{self as inv, Check};
use woi_core::linalg::DEFAULT_PRIME;
use woi_core::symbolic::{symbolic_power_by_sink_formula, symbolic_power};
use woi_core::{
    edge_ideal, random, regularity, Characteristic, Engine, Monomial, MonomialIdeal, Ring, SymbolicMethod,
    VertexSet, WeightedOrientedGraph,
};

const CHARS: [Characteristic; 2] = [Characteristic::Zero, Characteristic::Prime(DEFAULT_PRIME)];

struct Report {
    pass: bool,
    detail: String,
}

type Outcome = Result<Report, String>;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn pass(detail: impl Into<String>) -> Outcome {
    Ok(Report { pass: true, detail: detail.into() })
}

fn known_failure(detail: impl Into<String>) -> Outcome {
    Ok(Report { pass: false, detail: detail.into() })
}

fn corpus() -> Corpus {
    Corpus::load(&default_dir()).expect("bundled corpus loads")
}

fn graph(name: &str) -> WeightedOrientedGraph {
    corpus().get(name).expect("corpus entry").graph.clone()
}

fn reg(ideal: &MonomialIdeal, ch: Characteristic, engine: Engine) -> Result<i64, String> {
    regularity(ideal, ch, engine).map_err(|e| e.to_string())
}

fn sym(g: &WeightedOrientedGraph, k: u32, method: SymbolicMethod) -> Result<MonomialIdeal, String> {
    symbolic_power(g, k, method).map_err(|e| e.to_string())
}

/// `(reg I^2, reg I^3, reg I^(2), reg I^(3))` with both engines and both
/// characteristics; any disagreement is an error.
fn four_values(g: &WeightedOrientedGraph) -> Result<[i64; 4], String> {
    let ideal = edge_ideal(g);
    let targets = [ideal.power(2), ideal.power(3), sym(g, 2, SymbolicMethod::Primes)?, sym(g, 3, SymbolicMethod::Primes)?];
    let mut out = [0; 4];
    for (slot, t) in out.iter_mut().zip(&targets) {
        let values: Vec<i64> = CHARS.iter().map(|&ch| reg(t, ch, Engine::Both)).collect::<Result<_, _>>()?;
        if values.windows(2).any(|w| w[0] != w[1]) {
            return Err(format!("characteristics disagree on {}: {values:?}", g.name()));
        }
        *slot = values[0];
    }
    Ok(out)
}

fn figure(name: &str, expected: [i64; 4]) -> Outcome {
    let start = Instant::now();
    let got = four_values(&graph(name))?;
    let secs = start.elapsed().as_secs_f64();
    let detail = format!("{name} (reg I^2, reg I^3, reg I^(2), reg I^(3)) = {got:?}, both engines, char 0 and {DEFAULT_PRIME}");
    if got != expected {
        return Err(format!("{detail}; expected {expected:?}"));
    }
    if secs > 300.0 {
        return Err(format!("{detail}; over the 5 minute budget"));
    }
    pass(detail)
}

fn criterion_4() -> Outcome {
    let d = graph("fig4");
    let q = Characteristic::Zero;
    let r2 = reg(&sym(&d, 2, SymbolicMethod::Primes)?, q, Engine::Both)?;
    let r3 = reg(&sym(&d, 3, SymbolicMethod::Primes)?, q, Engine::Both)?;
    if (r2, r3) != (28, 38) {
        return Err(format!("fig4 symbolic regularities ({r2}, {r3}), expected (28, 38)"));
    }
    let y2 = d.vertex_set(&["y2"]).map_err(|e| e.to_string())?;
    let keep = d.all_vertices().difference(y2);
    let h = d.induced_subgraph(keep);
    let (hd, pd) = (h.to_document(), graph("fig4-prime").to_document());
    if (hd.vertices, hd.edges) != (pd.vertices, pd.edges) {
        return Err("corpus fig4-prime is not fig4 minus y2".into());
    }
    let minimal: Vec<i64> = (2..=3).map(|k| reg(&sym(&h, k, SymbolicMethod::Primes)?, q, Engine::Both)).collect::<Result<_, _>>()?;
    let associated: Vec<i64> = (2..=3).map(|k| reg(&sym(&h, k, SymbolicMethod::Associated)?, q, Engine::Both)).collect::<Result<_, _>>()?;
    let verdict = harness::check_betti_monotonicity(&d, keep, 2, &Options::default()).map_err(|e| e.to_string())?;
    if verdict.hypotheses_met {
        return Err("betti-monotonicity reported its hypotheses as met on fig4".into());
    }
    if minimal != [22, 33] || associated != [29, 40] {
        return Err(format!("D' symbolic regularities: minimal primes {minimal:?}, associated primes {associated:?}"));
    }
    known_failure(format!(
        "fig4 (28, 38) exact; hypotheses_met=false reported for D' = D minus y2. \
         With symbolic powers over minimal primes reg I(D')^(2), reg I(D')^(3) = {minimal:?}, not [29, 40]: \
         I(D') has the embedded prime (x1, x2). [29, 40] is reproduced only over all associated primes"
    ))
}

fn sink_corpus() -> Vec<WeightedOrientedGraph> {
    let mut rng = random::rng(5);
    (0..200).map(|_| random::sink_graph(&mut rng, 7, 4)).collect()
}

fn criterion_5(graphs: &[WeightedOrientedGraph]) -> Outcome {
    let start = Instant::now();
    let mut disagreements = 0;
    for g in graphs {
        for k in 2..=3 {
            let a = sym(g, k, SymbolicMethod::Primes)?;
            let b = symbolic_power_by_sink_formula(g, k).map_err(|e| e.to_string())?;
            disagreements += (a != b) as usize;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let detail = format!("{} sink graphs, k = 2, 3: {disagreements} disagreements", graphs.len());
    if disagreements > 0 || secs > 900.0 {
        return Err(detail);
    }
    pass(detail)
}

fn criterion_6() -> Outcome {
    let mut ideals = Vec::new();
    for e in &corpus().entries {
        let base = edge_ideal(&e.graph);
        ideals.extend([base.power(2), base.power(3), base.clone()]);
        for k in 2..=3 {
            ideals.push(sym(&e.graph, k, SymbolicMethod::Primes)?);
            ideals.push(sym(&e.graph, k, SymbolicMethod::Associated)?);
        }
    }
    let corpus_count = ideals.len();
    let mut rng = random::rng(6);
    ideals.extend((0..100).map(|_| random::ideal(&mut rng, 5, 6, 8)));
    let mut disagreements = Vec::new();
    for ideal in &ideals {
        let lcm = reg(ideal, Characteristic::Zero, Engine::Lcm)?;
        let tak = reg(ideal, Characteristic::Zero, Engine::Takayama)?;
        if lcm != tak {
            disagreements.push(format!("{ideal}: {lcm} vs {tak}"));
        }
    }
    let detail = format!("{corpus_count} corpus ideals and 100 random ideals: {} disagreements", disagreements.len());
    if !disagreements.is_empty() {
        return Err(format!("{detail}: {}", disagreements.join("; ")));
    }
    pass(detail)
}

fn suite(g: &WeightedOrientedGraph, opts: &Options) -> Result<Vec<Verdict>, String> {
    let run = || -> woi_core::Result<Vec<Verdict>> {
        let mut out = Vec::new();
        for k in 2..=3 {
            out.push(harness::check_lower_bound(g, k, opts)?);
        }
        out.extend(harness::check_symbolic_vs_ordinary(g, 3, opts)?);
        out.extend(harness::check_second_power_bounds(g, opts)?);
        for k in 2..=3 {
            out.extend(harness::check_colon_lemmas(g, k, opts)?);
        }
        Ok(out)
    };
    run().map_err(|e| format!("{}: {e}", g.name()))
}

fn criterion_7(random_graphs: &[WeightedOrientedGraph]) -> Outcome {
    let opts = Options::default();
    let fig1 = graph("fig1");
    let tight: Vec<(i64, i64)> = (2..=3)
        .map(|k| {
            let v = harness::check_lower_bound(&fig1, k, &opts).map_err(|e| e.to_string())?;
            Ok((v.quantity("bound_proof").unwrap_or(-1), v.quantity("reg_symbolic").unwrap_or(-1)))
        })
        .collect::<Result<_, String>>()?;
    if tight != [(22, 22), (33, 33)] {
        return Err(format!("fig1 lower bounds (bound, reg) = {tight:?}, expected tight at 22 and 33"));
    }

    let graphs: Vec<WeightedOrientedGraph> = corpus().entries.iter().map(|e| e.graph.clone()).chain(random_graphs.iter().cloned()).collect();
    let mut failures: Vec<Verdict> = Vec::new();
    let mut checked = 0;
    for g in &graphs {
        let verdicts = suite(g, &opts)?;
        checked += verdicts.iter().filter(|v| v.holds.is_some()).count();
        failures.extend(verdicts.into_iter().filter(Verdict::failed));
    }
    let only_support = failures.iter().all(|v| {
        v.claim == Claim::ColonRadicalCube
            && v.quantity("support_failures").unwrap_or(0) > 0
            && v.quantity("degree_failures") == Some(0)
            && v.quantity("divisor_failures") == Some(0)
    });
    if !only_support {
        let names: Vec<String> = failures.iter().map(|v| format!("{} on {}", v.claim, v.graph)).collect();
        return Err(format!("unexpected failures: {}", names.join(", ")));
    }
    let corpus_failures = failures.iter().filter(|v| v.graph.starts_with("fig")).count();
    if corpus_failures > 0 {
        return Err(format!("{corpus_failures} failures on the corpus"));
    }
    let detail = format!(
        "fig1 lower bounds tight (22, 33); {checked} asserted verdicts over {} graphs, {} failures",
        graphs.len(),
        failures.len()
    );
    if failures.is_empty() {
        return pass(detail);
    }
    let points: i64 = failures.iter().filter_map(|v| v.quantity("support_failures")).sum();
    known_failure(format!(
        "{detail}, all colon-radical-cube on random graphs ({points} exponents where a differing generator \
         of sqrt(I^(3) : x^a) has support inside supp a; degree-one and divisor conditions never fail). \
         reg I^(3) <= reg I^3 holds on every graph"
    ))
}

fn criterion_8() -> Outcome {
    let opts = Options::default();
    let dichotomy = |name: &str| -> Result<Verdict, String> {
        harness::check_second_power_bounds(&graph(name), &opts)
            .map_err(|e| e.to_string())?
            .into_iter()
            .find(|v| v.claim == Claim::SecondPowerDichotomy)
            .ok_or_else(|| "no dichotomy verdict".to_string())
    };
    let q = |name: &str| -> Result<Vec<i64>, String> {
        Ok(harness::triangle_quantities(&graph(name), &opts).map_err(|e| e.to_string())?.iter().map(|t| t.value).collect())
    };
    let (v1, v2) = (dichotomy("fig1")?, dichotomy("fig2")?);
    let (q1, q2) = (q("fig1")?, q("fig2")?);
    let get = |v: &Verdict, k: &str| v.quantity(k).unwrap_or(i64::MIN);
    let fig1_ok = q1 == [23] && get(&v1, "reg_square") == 23 && get(&v1, "branch") == 2 && v1.holds == Some(true);
    let fig2_shape = get(&v2, "reg_square") == 22 && get(&v2, "reg_symbolic_square") == 22 && get(&v2, "branch") == 1 && v2.holds == Some(true);
    if !fig1_ok || !fig2_shape {
        return Err(format!("fig1 Q={q1:?} {:?}; fig2 Q={q2:?} {:?}", v1.quantities, v2.quantities));
    }
    let detail = "fig1 Q = 23 = reg I^2 (branch reg I^2 = Q); fig2 reg I^2 = reg I^(2) = 22 (branch reg I^2 = reg I^(2))";
    match q2.as_slice() {
        [18] => pass(format!("{detail}, Q = 18")),
        [19] => known_failure(format!(
            "{detail}, but fig2 Q = 19, not 18: Q = reg I(D minus N[T]) + sum over N[T] of w - |N[T]| + sum over T of w \
             = 1 + 21 - 6 + 3 with w(y2) = 5 in the fig2 entry"
        )),
        other => Err(format!("fig2 Q = {other:?}")),
    }
}

/// `m ∈ (gens)^k`, by trying every product of `k` generators.
fn in_power(gens: &[Vec<u32>], m: &[u32], k: u32) -> bool {
    if k == 0 {
        return true;
    }
    gens.iter().any(|g| {
        g.iter().zip(m).all(|(a, b)| a <= b) && {
            let rest: Vec<u32> = m.iter().zip(g).map(|(b, a)| b - a).collect();
            in_power(gens, &rest, k - 1)
        }
    })
}

/// Membership in `I(D)^k` and `I(D)^(k)` from the edge list alone: the
/// symbolic power is tested prime by prime over brute-force minimal covers.
fn oracle_membership(g: &WeightedOrientedGraph, m: &[u32], k: u32) -> (bool, bool) {
    let n = g.num_vertices();
    let gens: Vec<Vec<u32>> = g
        .edges()
        .iter()
        .map(|&(t, h)| {
            let mut e = vec![0; n];
            e[t] = 1;
            e[h] = g.weight(h);
            e
        })
        .collect();
    let covers: Vec<u64> = (0..1u64 << n)
        .filter(|&c| g.edges().iter().all(|&(t, h)| c >> t & 1 == 1 || c >> h & 1 == 1))
        .collect();
    let minimal = covers.iter().filter(|&&c| !covers.iter().any(|&d| d != c && d & c == d));
    let in_symbolic = minimal.clone().all(|&c| {
        let local = |e: &[u32]| -> Vec<u32> { e.iter().enumerate().map(|(i, &x)| if c >> i & 1 == 1 { x } else { 0 }).collect() };
        let local_gens: Vec<Vec<u32>> = gens.iter().map(|e| local(e)).collect();
        in_power(&local_gens, &local(m), k)
    });
    (in_power(&gens, m, k), in_symbolic)
}

fn criterion_9() -> Outcome {
    let g = graph("fig3");
    let idx = |name: &str| g.index_of(name).map_err(|e| e.to_string());
    let (x1, x2, x3) = (idx("x1")?, idx("x2")?, idx("x3")?);
    let mut lines = Vec::new();
    for k in 2..=3u32 {
        let mut e = vec![0; g.num_vertices()];
        e[x1] = 1;
        e[x2] = g.weight(x2) + k - 2;
        e[x3] = 7 * (k - 1);
        let (oracle_ord, oracle_sym) = oracle_membership(&g, &e, k);
        let m = Monomial::new(e);
        let in_sym = sym(&g, k, SymbolicMethod::Primes)?.contains(&m);
        let in_ord = edge_ideal(&g).power(k).contains(&m);
        if (in_sym, in_ord) != (oracle_sym, oracle_ord) {
            return Err(format!("k={k}: library and oracle disagree on {m:?}"));
        }
        if !in_sym || in_ord {
            return Err(format!("k={k}: witness {m:?} in I^(k): {in_sym}, in I^k: {in_ord}"));
        }
        lines.push(format!("k={k}: {}", m.display(&g.vertex_names())));
    }
    pass(format!("{} lie in I^(k) and not in I^k (library and brute-force oracle)", lines.join(", ")))
}

fn build(n: usize, gens: Vec<Vec<u32>>) -> MonomialIdeal {
    let ring = Ring::new((1..=n).map(|i| format!("x{i}")));
    MonomialIdeal::new(ring, gens.into_iter().map(Monomial::new).collect()).unwrap()
}

fn ideal(max_n: usize, max_gens: usize, max_exp: u32) -> BoxedStrategy<MonomialIdeal> {
    (1..=max_n)
        .prop_flat_map(move |n| vec(vec(0..=max_exp, n), 1..=max_gens).prop_map(move |g| build(n, g)))
        .boxed()
}

fn with_exps(i: BoxedStrategy<MonomialIdeal>, count: usize, max: u32) -> BoxedStrategy<(MonomialIdeal, Vec<Vec<u32>>)> {
    i.prop_flat_map(move |i| {
        let n = i.num_vars();
        (Just(i), vec(vec(0..=max, n), count))
    })
    .boxed()
}

struct Suite {
    seed: u8,
    total: u32,
    failures: Vec<String>,
}

impl Suite {
    fn run<T: std::fmt::Debug>(&mut self, name: &str, cases: u32, strategy: BoxedStrategy<T>, check: impl Fn(T) -> Check) {
        self.seed = self.seed.wrapping_add(1);
        let config = Config { cases, failure_persistence: None, ..Config::default() };
        let mut runner = TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &[self.seed; 32]));
        match runner.run(&strategy, |v| check(v).map_err(TestCaseError::fail)) {
            Ok(()) => self.total += cases,
            Err(e) => self.failures.push(format!("{name}: {e}")),
        }
    }
}

fn seeded_graph(max_n: usize, gen: fn(&mut random::SeededRng, usize, u32) -> WeightedOrientedGraph) -> BoxedStrategy<WeightedOrientedGraph> {
    any::<u64>().prop_map(move |s| gen(&mut random::rng(s), max_n, 4)).boxed()
}

fn criterion_10() -> Outcome {
    let p = Characteristic::Prime(DEFAULT_PRIME);
    let mut s = Suite { seed: 0, total: 0, failures: Vec::new() };
    s.run("colon algebra", 1500, with_exps(ideal(4, 5, 3), 2, 3), |(i, a)| {
        inv::colon_algebra(&i, &Monomial::new(a[0].clone()), &Monomial::new(a[1].clone()))
    });
    s.run("saturation", 1500, ideal(5, 5, 3).prop_flat_map(|i| {
        let full = (1u64 << i.num_vars()) - 1;
        (Just(i), 0..=full, 0..=full)
    }).boxed(), |(i, x, y)| inv::saturation_composes(&i, x, y));
    s.run("intersection", 1000, (1usize..=3).prop_flat_map(|n| {
        let side = vec(vec(0u32..=2, n), 1..=4).prop_map(move |g| build(n, g));
        (side.clone(), side)
    }).boxed(), |(i, j)| inv::intersection_membership(&i, &j, &inv::box_monomials(i.num_vars(), 3)));
    s.run("power additivity", 500, (ideal(3, 3, 2), 1u32..=2, 1u32..=2).boxed(), |(i, a, b)| inv::power_additivity(&i, a, b));
    s.run("canonical form", 1000, vec(vec(0u32..=3, 3), 1..=6).prop_flat_map(|g| {
        let len = g.len();
        (Just(g), vec(0..len, 0..=len))
    }).boxed(), |(g, perm)| inv::canonical_form(&g.into_iter().map(Monomial::new).collect::<Vec<_>>(), &perm));
    s.run("radical colon", 1000, with_exps(ideal(5, 5, 4), 1, 4), |(i, a)| inv::sqrt_colon_consistent(&i, &a[0]));
    s.run("colon transfer", 1000, with_exps(ideal(4, 4, 3), 4, 3), |(j, a)| {
        let l = j.add(&build(j.num_vars(), a[1..].to_vec())).unwrap();
        inv::colon_transfer(&j, &l, &a[0])
    });
    s.run("threshold sweep", 500, ideal(4, 4, 4), |i| inv::threshold_sweep_complete(&i));
    s.run("homology conventions", 50, (0usize..=6).boxed(), |n| {
        inv::homology_conventions(n, Characteristic::Zero)?;
        inv::homology_conventions(n, Characteristic::Prime(2))
    });
    s.run("euler consistency", 1000, (1usize..=6).prop_flat_map(|n| (Just(n), vec(0u64..(1 << n), 0..=5))).boxed(), |(n, f)| {
        let c = SimplicialComplex::from_facets(n, &f);
        inv::euler_consistency(&c, Characteristic::Zero)?;
        inv::euler_consistency(&c, p)
    });
    s.run("koszul euler", 300, ideal(4, 4, 2), |i| inv::koszul_euler(&i, p));
    s.run("graph structure", 500, seeded_graph(9, random::oriented_graph), |g| {
        inv::graph_structure(&g)?;
        inv::covers_match_brute_force(&g)
    });
    s.run("neighbourhoods", 500, (seeded_graph(9, random::oriented_graph), any::<u64>(), any::<u64>()).boxed(), |(g, a, b)| {
        let full = g.all_vertices().0;
        inv::neighborhood_union(&g, VertexSet(a & full))?;
        inv::induced_composes(&g, VertexSet(a & full), VertexSet(b & full))
    });
    s.run("restriction monotonicity", 300, ideal(5, 5, 3).prop_flat_map(|i| {
        let full = (1u64 << i.num_vars()) - 1;
        (Just(i), 0..=full)
    }).boxed(), |(i, keep)| inv::restriction_monotone(&i, keep, p));
    s.run("extremal reduction", 300, ideal(5, 5, 3), |i| inv::extremal_reduction(&i, p));
    s.run("engine agreement", 200, ideal(4, 4, 2), |i| inv::engines_agree(&i));
    s.run("permutation invariance", 200, ideal(4, 4, 2).prop_flat_map(|i| {
        let n = i.num_vars();
        (Just(i), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    }).boxed(), |(i, perm)| inv::permutation_invariance(&i, &perm, p));
    s.run("symbolic containments", 200, seeded_graph(6, random::oriented_graph), |g| inv::symbolic_containments(&g, 3));
    s.run("route agreement", 200, seeded_graph(6, random::sink_graph), |g| inv::routes_agree(&g));
    s.run("degree complex comparison", 100, (seeded_graph(5, random::sink_graph), 2u32..=3).boxed(), |(g, k)| {
        let sym = symbolic_power(&g, k, SymbolicMethod::Primes).map_err(|e| e.to_string())?;
        inv::degree_complex_comparison(&sym, &edge_ideal(&g).power(k), p)
    });
    let detail = format!("{} seeded cases, {} failing suites", s.total, s.failures.len());
    if !s.failures.is_empty() {
        return Err(format!("{detail}: {}", s.failures.join("; ")));
    }
    if s.total < 10_000 {
        return Err(format!("{detail}: fewer than 10^4 cases"));
    }
    pass(detail)
}

fn main() -> ExitCode {
    let random_graphs = sink_corpus();
    let criteria: Vec<Criterion> = vec![
        ("fig1 regularities", Box::new(|| figure("fig1", [23, 34, 22, 33]))),
        ("fig2 regularities", Box::new(|| figure("fig2", [22, 33, 22, 33]))),
        ("fig3 regularities", Box::new(|| figure("fig3", [24, 32, 23, 30]))),
        ("fig4 and its induced subgraph", Box::new(criterion_4)),
        ("symbolic power routes agree", Box::new(|| criterion_5(&random_graphs))),
        ("regularity engines agree", Box::new(criterion_6)),
        ("claim suite", Box::new(|| criterion_7(&random_graphs))),
        ("triangle quantity", Box::new(criterion_8)),
        ("path witnesses", Box::new(criterion_9)),
        ("property suites", Box::new(criterion_10)),
    ];
    let mut unexpected = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let line = match run() {
            Ok(r) => format!("{} {}", if r.pass { "PASS" } else { "FAIL" }, r.detail),
            Err(e) => {
                unexpected += 1;
                format!("FAIL (unexpected) {e}")
            }
        };
        println!("criterion {:>2} [{name}] {line} ({:.1} s)", n + 1, start.elapsed().as_secs_f64());
    }
    if unexpected > 0 {
        println!("{unexpected} criterion outcome(s) differ from the recorded analysis");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
