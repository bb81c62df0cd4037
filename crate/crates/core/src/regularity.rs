//! Multigraded Betti numbers and Castelnuovo-Mumford regularity of monomial
//! ideals, by two independent routes.
//!
//! * The lcm-lattice engine computes `β_{i,b}(I) = dim H̃_{i-1}(K^b(I))`,
//!   where `K^b(I)` is the upper Koszul simplicial complex
//!   `{S : x^{b - e_S} ∈ I}`. Only multidegrees in the lcm lattice of the
//!   generators can carry nonzero Betti numbers.
//! * The degree-complex engine evaluates
//!   `reg(R/I) = max{|a| + i : H̃_{i-1}(lk_{Δ_a(I)} F) ≠ 0, F ∩ supp a = ∅}`.
//!
//! Conventions: the zero ideal has `reg = 1` (so `reg(R/0) = 0`), and the
//! unit ideal has `reg = 0`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{HomologyCache, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::Characteristic;
use crate::monomial::{Monomial, MonomialIdeal};

pub const DEFAULT_LATTICE_CAP: usize = 1_000_000;
pub const DEFAULT_SWEEP_CAP: usize = 20_000_000;
pub const MAX_TAKAYAMA_VARS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Lcm,
    Takayama,
    Both,
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lcm" => Ok(Engine::Lcm),
            "takayama" => Ok(Engine::Takayama),
            "both" => Ok(Engine::Both),
            other => Err(Error::Parse(format!("unknown engine `{other}`"))),
        }
    }
}

/// Size limits for the two engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub lattice_cap: usize,
    pub sweep_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { lattice_cap: DEFAULT_LATTICE_CAP, sweep_cap: DEFAULT_SWEEP_CAP }
    }
}

/// Join-closure of the minimal generators, sorted canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmLattice {
    pub elements: Vec<Monomial>,
}

pub fn lcm_lattice(ideal: &MonomialIdeal, cap: usize) -> Result<LcmLattice> {
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut elements: Vec<Monomial> = Vec::new();
    for g in ideal.gens() {
        // Joins of subsets containing g, built from the joins found so far.
        let mut fresh: Vec<Monomial> = Vec::new();
        if seen.insert(g.clone()) {
            fresh.push(g.clone());
        }
        for e in &elements {
            let j = e.lcm(g);
            if seen.insert(j.clone()) {
                fresh.push(j);
            }
        }
        elements.extend(fresh);
        if elements.len() > cap {
            return Err(Error::ResourceCap { what: "lcm lattice", cap });
        }
    }
    elements.sort_unstable();
    Ok(LcmLattice { elements })
}

/// Facets of `K^b(I)`: for each generator `g | x^b`, the coordinates where
/// `g_j < b_j`.
fn upper_koszul_facets(ideal: &MonomialIdeal, b: &Monomial) -> Vec<u64> {
    let mut facets: Vec<u64> = ideal
        .gens()
        .iter()
        .filter(|g| g.divides(b))
        .map(|g| {
            g.exps()
                .iter()
                .zip(b.exps())
                .enumerate()
                .filter(|(_, (ge, be))| ge < be)
                .fold(0u64, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    facets.sort_unstable();
    facets.dedup();
    // Keep maximal ones only.
    let all = facets.clone();
    facets.retain(|&f| !all.iter().any(|&h| h != f && f & !h == 0));
    facets
}

/// `K^b(I) = {S ⊆ [n] : b - e_S ≥ 0, x^{b - e_S} ∈ I}`.
pub fn upper_koszul(ideal: &MonomialIdeal, b: &Monomial) -> SimplicialComplex {
    SimplicialComplex::from_facets(ideal.num_vars(), &upper_koszul_facets(ideal, b))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub multidegree: Vec<u32>,
    pub total: u64,
    pub dim: usize,
}

/// Nonzero multigraded Betti numbers of an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub characteristic: Characteristic,
    entries: Vec<BettiEntry>,
}

impl BettiTable {
    /// Entries sorted by homological index, then canonical multidegree order.
    pub fn entries(&self) -> &[BettiEntry] {
        &self.entries
    }

    pub fn get(&self, i: usize, multidegree: &[u32]) -> usize {
        self.entries
            .iter()
            .find(|e| e.i == i && e.multidegree == multidegree)
            .map_or(0, |e| e.dim)
    }

    /// `β_{i,j}` summed over multidegrees of total degree `j`.
    pub fn coarse(&self) -> BTreeMap<(usize, u64), usize> {
        let mut out = BTreeMap::new();
        for e in &self.entries {
            *out.entry((e.i, e.total)).or_insert(0) += e.dim;
        }
        out
    }

    /// Total Betti numbers `β_i`.
    pub fn totals(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for e in &self.entries {
            if out.len() <= e.i {
                out.resize(e.i + 1, 0);
            }
            out[e.i] += e.dim;
        }
        out
    }

    /// `max{j - i : β_{i,j} ≠ 0}`; `None` for an empty table.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.iter().map(|e| e.total as i64 - e.i as i64).max()
    }
}

pub fn betti_table(ideal: &MonomialIdeal, ch: Characteristic) -> Result<BettiTable> {
    betti_table_with(ideal, ch, Limits::default())
}

pub fn betti_table_with(ideal: &MonomialIdeal, ch: Characteristic, limits: Limits) -> Result<BettiTable> {
    let lattice = lcm_lattice(ideal, limits.lattice_cap)?;
    let n = ideal.num_vars();
    // Chunks keep their own homology memo; collection preserves order.
    let chunks: Vec<Vec<BettiEntry>> = lattice
        .elements
        .par_chunks(512)
        .map(|chunk| {
            let mut cache = HomologyCache::new(ch);
            let mut out = Vec::new();
            for b in chunk {
                let facets = upper_koszul_facets(ideal, b);
                let h = cache.of_facets(n, &facets);
                for (d, dim) in h.nonzero() {
                    out.push(BettiEntry {
                        i: (d + 1) as usize,
                        multidegree: b.exps().to_vec(),
                        total: b.degree(),
                        dim,
                    });
                }
            }
            out
        })
        .collect();
    let mut entries: Vec<BettiEntry> = chunks.into_iter().flatten().collect();
    entries.sort_by(|a, b| {
        a.i.cmp(&b.i)
            .then(a.total.cmp(&b.total))
            .then_with(|| a.multidegree.cmp(&b.multidegree))
    });
    Ok(BettiTable { characteristic: ch, entries })
}

/// The pair `(a, i)` realizing `reg(R/I) = |a| + i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExtremalExponent {
    pub a: Vec<u32>,
    pub i: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TakayamaResult {
    /// `reg(R/I)`.
    pub reg_quotient: i64,
    pub extremal: Vec<ExtremalExponent>,
}

/// `Δ_a(I)` together with its exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeComplex {
    pub a: Vec<u32>,
    pub complex: SimplicialComplex,
}

/// The Stanley-Reisner complex of `sqrt(I : x^a)`; void iff `x^a ∈ I`.
pub fn degree_complex(ideal: &MonomialIdeal, a: &[u32]) -> DegreeComplex {
    let masks = ideal.sqrt_colon_masks(a);
    DegreeComplex { a: a.to_vec(), complex: SimplicialComplex::stanley_reisner(ideal.num_vars(), &masks) }
}

/// Pairs `(F, i)` with `H̃_{i-1}(lk F) ≠ 0` over the faces of a complex.
fn link_contributions(complex: &SimplicialComplex, cache: &mut HomologyCache) -> Vec<(u64, usize)> {
    let mut out = Vec::new();
    for &f in complex.faces() {
        let lk = complex.link(f).expect("f is a face");
        for (d, _) in cache.of(&lk).nonzero() {
            out.push((f, (d + 1) as usize));
        }
    }
    out
}

/// Candidate values of `a_j`: the complex `Δ_a` only depends on which
/// generator exponents `a_j` reaches, and `supp a`, so within each class the
/// largest value dominates. Values `a_j ≥ max exponent` make `j` a cone
/// point of every relevant link and never contribute.
fn takayama_candidates(ideal: &MonomialIdeal) -> Vec<Vec<u32>> {
    (0..ideal.num_vars())
        .map(|j| {
            let mut vals: Vec<u32> = vec![0];
            vals.extend(ideal.gens().iter().map(|g| g.exps()[j]).filter(|&e| e > 0).map(|e| e - 1));
            vals.sort_unstable();
            vals.dedup();
            vals
        })
        .collect()
}

pub fn takayama_regularity(ideal: &MonomialIdeal, ch: Characteristic) -> Result<TakayamaResult> {
    takayama_regularity_with(ideal, ch, Limits::default())
}

pub fn takayama_regularity_with(ideal: &MonomialIdeal, ch: Characteristic, limits: Limits) -> Result<TakayamaResult> {
    let n = ideal.num_vars();
    if ideal.gens().iter().any(Monomial::is_one) {
        return Ok(TakayamaResult { reg_quotient: -1, extremal: Vec::new() });
    }
    if n > MAX_TAKAYAMA_VARS {
        return Err(Error::ResourceCap { what: "degree-complex variables", cap: MAX_TAKAYAMA_VARS });
    }
    let candidates = takayama_candidates(ideal);
    let total = candidates.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()));
    match total {
        Some(t) if t <= limits.sweep_cap => {}
        _ => return Err(Error::ResourceCap { what: "degree-complex sweep", cap: limits.sweep_cap }),
    }
    let mut cache = HomologyCache::new(ch);
    let mut memo: HashMap<Vec<u64>, Vec<(u64, usize)>> = HashMap::new();
    let mut best: i64 = i64::MIN;
    let mut extremal: Vec<ExtremalExponent> = Vec::new();
    for_each_point(&candidates, |a| {
        let masks = ideal.sqrt_colon_masks(a);
        if masks.first() == Some(&0) {
            // x^a ∈ I: void complex.
            return;
        }
        let contributions = memo.entry(masks).or_insert_with_key(|masks| {
            link_contributions(&SimplicialComplex::stanley_reisner(n, masks), &mut cache)
        });
        let supp = a.iter().enumerate().filter(|(_, &x)| x > 0).fold(0u64, |acc, (j, _)| acc | 1 << j);
        let size: i64 = a.iter().map(|&x| x as i64).sum();
        let mut levels: Vec<usize> = contributions
            .iter()
            .filter(|(f, _)| f & supp == 0)
            .map(|&(_, i)| i)
            .collect();
        levels.sort_unstable();
        levels.dedup();
        for i in levels {
            let value = size + i as i64;
            if value > best {
                best = value;
                extremal.clear();
            }
            if value == best {
                extremal.push(ExtremalExponent { a: a.to_vec(), i });
            }
        }
    });
    if best == i64::MIN {
        return Err(Error::Inconsistent("no exponent carries link homology".into()));
    }
    extremal.sort();
    Ok(TakayamaResult { reg_quotient: best, extremal })
}

/// Visit every point of a product of finite value lists.
pub(crate) fn for_each_point(values: &[Vec<u32>], mut f: impl FnMut(&[u32])) {
    if values.iter().any(Vec::is_empty) {
        return;
    }
    let mut idx = vec![0usize; values.len()];
    let mut point: Vec<u32> = values.iter().map(|v| v[0]).collect();
    loop {
        f(&point);
        let mut j = 0;
        loop {
            if j == values.len() {
                return;
            }
            idx[j] += 1;
            if idx[j] < values[j].len() {
                point[j] = values[j][idx[j]];
                break;
            }
            idx[j] = 0;
            point[j] = values[j][0];
            j += 1;
        }
    }
}

/// Regularity of the ideal `I` (not of `R/I`).
pub fn regularity(ideal: &MonomialIdeal, ch: Characteristic, engine: Engine) -> Result<i64> {
    regularity_with(ideal, ch, engine, Limits::default())
}

pub fn regularity_with(ideal: &MonomialIdeal, ch: Characteristic, engine: Engine, limits: Limits) -> Result<i64> {
    if ideal.is_zero() {
        return Ok(1);
    }
    let lcm = || -> Result<i64> {
        Ok(betti_table_with(ideal, ch, limits)?.regularity().expect("nonzero ideal has β_0"))
    };
    let takayama = || -> Result<i64> { Ok(takayama_regularity_with(ideal, ch, limits)?.reg_quotient + 1) };
    match engine {
        Engine::Lcm => lcm(),
        Engine::Takayama => takayama(),
        Engine::Both => {
            let (l, t) = (lcm()?, takayama()?);
            if l != t {
                return Err(Error::EngineDisagreement { lcm: l, takayama: t });
            }
            Ok(l)
        }
    }
}
