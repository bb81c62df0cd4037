//! Monomials and monomial ideals over a fixed list of variables.
//!
//! Ideals are always stored by their minimal generating set, sorted by total
//! degree and then lexicographically by exponent vector, so two ideals are
//! equal exactly when their representations are.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x^a`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn var(i: usize, n: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m
    }

    /// `x^(e_S)` for a support mask `S`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        Monomial { exps: (0..n).map(|i| (mask >> i & 1) as u32).collect() }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices with a nonzero exponent, as a bit mask.
    pub fn support(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&a| a.checked_mul(k).expect("exponent overflow")).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect() }
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a.saturating_sub(*b)).collect() }
    }

    /// The squarefree part `sqrt(x^a)`.
    pub fn radical(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&e| e.min(1)).collect() }
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }

    pub fn display(&self, vars: &[String]) -> String {
        let mut out = String::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => out.push_str(&vars[i]),
                _ => out.push_str(&format!("{}^{}", vars[i], e)),
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?}", self.exps)
    }
}

/// Ordered variable names shared by every ideal of a computation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ring(Arc<[String]>);

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Ring(names.into_iter().map(Into::into).collect::<Vec<_>>().into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

/// A monomial ideal in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

/// Drop every monomial divisible by another one and sort canonically.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // Divisors of g have no larger degree, so they were seen already.
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

fn split_irreducible(gens: Vec<Monomial>, out: &mut Vec<Vec<u32>>) {
    let gens = minimalize(gens);
    if gens.iter().any(Monomial::is_one) {
        return;
    }
    let Some(mixed) = gens.iter().find(|g| g.support().count_ones() > 1) else {
        let n = gens.first().map_or(0, Monomial::num_vars);
        let mut c = vec![0; n];
        for g in &gens {
            let j = g.support().trailing_zeros() as usize;
            c[j] = g.exps[j];
        }
        out.push(c);
        return;
    };
    let j = mixed.support().trailing_zeros() as usize;
    let mut power = Monomial::one(mixed.num_vars());
    power.exps[j] = mixed.exps[j];
    let mut rest = mixed.clone();
    rest.exps[j] = 0;
    for extra in [power, rest] {
        let mut next = gens.clone();
        next.push(extra);
        split_irreducible(next, out);
    }
}

impl MonomialIdeal {
    pub fn new(ring: Ring, gens: Vec<Monomial>) -> Result<Self> {
        if ring.len() > 64 {
            return Err(Error::InvalidIdeal(format!("{} variables; at most 64 are supported", ring.len())));
        }
        if let Some(g) = gens.iter().find(|g| g.num_vars() != ring.len()) {
            return Err(Error::InvalidIdeal(format!(
                "generator with {} exponents in a ring of {} variables",
                g.num_vars(),
                ring.len()
            )));
        }
        Ok(Self::from_gens(ring, gens))
    }

    pub(crate) fn from_gens(ring: Ring, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { ring, gens: minimalize(gens) }
    }

    pub fn zero(ring: Ring) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn num_vars(&self) -> usize {
        self.ring.len()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn check_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_gens(self.ring.clone(), gens))
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.mul(h));
            }
        }
        Ok(Self::from_gens(self.ring.clone(), gens))
    }

    /// `I^k` for `k >= 1`; `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal { ring: self.ring.clone(), gens: vec![Monomial::one(self.num_vars())] };
        for _ in 0..k {
            acc = acc.multiply(self).expect("same ring");
        }
        acc
    }

    /// `(I : m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.quotient_by_gcd(m)).collect();
        Self::from_gens(self.ring.clone(), gens)
    }

    /// `sqrt(I : x^a)`, generated by the squarefree parts of `g / gcd(g, x^a)`.
    pub fn sqrt_colon(&self, a: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.quotient_by_gcd(a).radical()).collect();
        Self::from_gens(self.ring.clone(), gens)
    }

    /// Supports of the minimal generators of `sqrt(I : x^a)` as bit masks,
    /// in canonical order.
    pub fn sqrt_colon_masks(&self, a: &[u32]) -> Vec<u64> {
        minimal_masks(self.gens.iter().map(|g| {
            g.exps
                .iter()
                .zip(a)
                .enumerate()
                .filter(|(_, (&ge, &ae))| ge > ae)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        }))
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(Monomial::radical).collect();
        Self::from_gens(self.ring.clone(), gens)
    }

    /// `I : (prod_{x in S} x)^inf`, where `S` is a mask of variable indices.
    pub fn saturate(&self, vars: u64) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial {
                exps: g
                    .exps
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| if vars >> i & 1 == 1 { 0 } else { e })
                    .collect(),
            })
            .collect();
        Self::from_gens(self.ring.clone(), gens)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        Ok(Self::from_gens(self.ring.clone(), gens))
    }

    /// `I_U`: the generators supported inside the variable mask `U`.
    pub fn restrict(&self, vars: u64) -> MonomialIdeal {
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: self.gens.iter().filter(|g| g.support() & !vars == 0).cloned().collect(),
        }
    }

    /// Substitute `x_j -> x_j^{w(x_j)}` in every generator.
    pub fn phi(&self, weights: &BTreeMap<String, u32>) -> Result<MonomialIdeal> {
        let mut per_var = vec![1u32; self.num_vars()];
        let used = self.gens.iter().fold(0u64, |acc, g| acc | g.support());
        for (i, name) in self.ring.names().iter().enumerate() {
            match weights.get(name) {
                Some(&w) => per_var[i] = w,
                None if used >> i & 1 == 1 => return Err(Error::MissingWeight(name.clone())),
                None => {}
            }
        }
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial {
                exps: g
                    .exps
                    .iter()
                    .zip(&per_var)
                    .map(|(&e, &w)| e.checked_mul(w).expect("exponent overflow"))
                    .collect(),
            })
            .collect();
        Ok(Self::from_gens(self.ring.clone(), gens))
    }

    /// Irredundant irreducible decomposition. Each component is returned as
    /// an exponent vector `c` standing for `(x_j^{c_j} : c_j > 0)`; the zero
    /// ideal yields the all-zero vector and the unit ideal yields nothing.
    pub fn irreducible_components(&self) -> Vec<Vec<u32>> {
        if self.is_zero() {
            return vec![vec![0; self.num_vars()]];
        }
        let mut found = Vec::new();
        split_irreducible(self.gens.clone(), &mut found);
        found.sort_unstable();
        found.dedup();
        let contains = |q: &[u32], r: &[u32]| q.iter().zip(r).all(|(&a, &b)| b == 0 || (a > 0 && a <= b));
        let mut kept: Vec<Vec<u32>> = Vec::new();
        for q in &found {
            if !found.iter().any(|r| r != q && contains(q, r)) {
                kept.push(q.clone());
            }
        }
        kept
    }

    /// Associated primes as variable masks, ordered by size and then mask.
    pub fn associated_primes(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .irreducible_components()
            .iter()
            .map(|c| c.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |acc, (j, _)| acc | 1 << j))
            .collect();
        out.sort_unstable_by_key(|&m| (m.count_ones(), m));
        out.dedup();
        out
    }

    /// Per-variable maximum generator exponent.
    pub fn exponent_profile(&self) -> Vec<u32> {
        let mut rho = vec![0; self.num_vars()];
        for g in &self.gens {
            for (r, &e) in rho.iter_mut().zip(&g.exps) {
                *r = (*r).max(e);
            }
        }
        rho
    }

    /// Union of the generator supports.
    pub fn support(&self) -> u64 {
        self.gens.iter().fold(0, |acc, g| acc | g.support())
    }

    pub fn max_generator_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn to_document(&self) -> IdealDocument {
        IdealDocument {
            schema: Some(crate::SCHEMA.to_string()),
            variables: self.ring.names().to_vec(),
            generators: self.gens.iter().map(|g| g.exps.clone()).collect(),
        }
    }

    pub fn from_document(doc: &IdealDocument) -> Result<Self> {
        let ring = Ring::new(doc.variables.iter().cloned());
        let mut names = doc.variables.clone();
        names.sort();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidIdeal("duplicate variable name".into()));
        }
        let gens = doc.generators.iter().map(|g| Monomial::new(g.clone())).collect();
        Self::new(ring, gens)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.display(self.ring.names())).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Wire format of an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub variables: Vec<String>,
    pub generators: Vec<Vec<u32>>,
}

/// Inclusion-minimal masks, sorted by (popcount, value).
pub fn minimal_masks(masks: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut all: Vec<u64> = masks.into_iter().collect();
    all.sort_unstable_by_key(|&m| (m.count_ones(), m));
    all.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(all.len());
    for m in all {
        if !kept.iter().any(|&k| k & !m == 0) {
            kept.push(m);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Ring {
        Ring::new((1..=n).map(|i| format!("x{i}")))
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(ring(n), gens.iter().map(|g| Monomial::new(g.to_vec())).collect()).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(2, &[&[1, 1], &[2, 1]]).gens(), &[m(&[1, 1])]);
        assert!(ideal(2, &[]).is_zero());
        assert_eq!(ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 1, 1]]).gens(), &[m(&[0, 1, 1]), m(&[1, 1, 0])]);
    }

    #[test]
    fn irreducible_decomposition() {
        // (x1x2^10, x1^8y1) = (x1) ∩ (x2^10, y1) ∩ (x1^8, x2^10)
        let i = ideal(3, &[&[1, 10, 0], &[8, 0, 1]]);
        assert_eq!(i.irreducible_components(), vec![vec![0, 10, 1], vec![1, 0, 0], vec![8, 10, 0]]);
        assert_eq!(i.associated_primes(), vec![0b001, 0b011, 0b110]);
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(tri.associated_primes(), vec![0b011, 0b101, 0b110]);
        assert_eq!(ideal(2, &[&[0, 0]]).irreducible_components(), Vec::<Vec<u32>>::new());
        assert_eq!(ideal(2, &[]).associated_primes(), vec![0]);
    }

    #[test]
    fn contains_examples() {
        let i = ideal(2, &[&[1, 10]]);
        assert!(i.contains(&m(&[2, 10])));
        assert!(!i.contains(&m(&[1, 9])));
    }

    #[test]
    fn powers() {
        assert_eq!(ideal(2, &[&[1, 10]]).power(2), ideal(2, &[&[2, 20]]));
        assert_eq!(
            ideal(3, &[&[1, 1, 0], &[0, 1, 1]]).power(2),
            ideal(3, &[&[2, 2, 0], &[1, 2, 1], &[0, 2, 2]])
        );
        assert_eq!(ideal(3, &[&[1, 1, 0]]).power(0).gens(), &[Monomial::one(3)]);
    }

    #[test]
    fn colon_and_sqrt_colon() {
        let i = ideal(2, &[&[1, 3]]);
        assert_eq!(i.sqrt_colon(&m(&[0, 2])), ideal(2, &[&[1, 1]]));
        assert_eq!(i.sqrt_colon(&Monomial::one(2)), i.radical());
        let j = ideal(3, &[&[2, 1, 0], &[0, 1, 1]]);
        assert_eq!(j.colon(&m(&[1, 0, 0])), ideal(3, &[&[1, 1, 0], &[0, 1, 1]]));
        assert_eq!(i.sqrt_colon_masks(&[0, 2]), vec![0b11]);
    }

    #[test]
    fn radicals() {
        let fig4 = ideal(4, &[&[1, 10, 0, 0], &[8, 0, 1, 0], &[0, 10, 0, 1]]);
        assert_eq!(fig4.radical(), ideal(4, &[&[1, 1, 0, 0], &[1, 0, 1, 0], &[0, 1, 0, 1]]));
        let sq = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(sq.radical(), sq);
        assert!(ideal(3, &[]).radical().is_zero());
    }

    #[test]
    fn saturation() {
        let i = ideal(3, &[&[2, 1, 0], &[1, 0, 1]]);
        assert_eq!(i.saturate(0b001), ideal(3, &[&[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(i.saturate(0), i);
    }

    #[test]
    fn intersections() {
        let a = ideal(2, &[&[1, 0]]);
        let b = ideal(2, &[&[0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(2, &[&[1, 1]]));
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn triangle_symbolic_square_by_intersection() {
        let ab = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]).power(2);
        let bc = ideal(3, &[&[0, 1, 0], &[0, 0, 1]]).power(2);
        let ac = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]).power(2);
        let got = ab.intersect(&bc).unwrap().intersect(&ac).unwrap();
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let expected = tri.power(2).add(&ideal(3, &[&[1, 1, 1]])).unwrap();
        assert_eq!(got, expected);
        // Brute-force membership over every monomial of degree at most 4.
        for e0 in 0..=4u32 {
            for e1 in 0..=4 - e0 {
                for e2 in 0..=4 - e0 - e1 {
                    let mono = m(&[e0, e1, e2]);
                    let in_all = ab.contains(&mono) && bc.contains(&mono) && ac.contains(&mono);
                    assert_eq!(got.contains(&mono), in_all, "{mono:?}");
                }
            }
        }
    }

    #[test]
    fn restriction() {
        let fig4 = ideal(4, &[&[1, 10, 0, 0], &[8, 0, 1, 0], &[0, 10, 0, 1]]);
        assert_eq!(fig4.restrict(0b0111), ideal(4, &[&[1, 10, 0, 0], &[8, 0, 1, 0]]));
        assert_eq!(fig4.restrict(0b1111), fig4);
        assert!(fig4.restrict(0).is_zero());
    }

    #[test]
    fn phi_substitution() {
        let i = ideal(2, &[&[1, 1]]);
        let w: BTreeMap<String, u32> = [("x1".to_string(), 1), ("x2".to_string(), 10)].into();
        assert_eq!(i.phi(&w).unwrap(), ideal(2, &[&[1, 10]]));
        let ones: BTreeMap<String, u32> = [("x1".to_string(), 1), ("x2".to_string(), 1)].into();
        assert_eq!(i.phi(&ones).unwrap(), i);
        let missing: BTreeMap<String, u32> = [("x1".to_string(), 1)].into();
        assert_eq!(i.phi(&missing), Err(Error::MissingWeight("x2".into())));
    }

    #[test]
    fn profiles() {
        assert_eq!(ideal(2, &[&[3, 0]]).exponent_profile(), vec![3, 0]);
        assert_eq!(ideal(2, &[]).exponent_profile(), vec![0, 0]);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = ideal(2, &[&[1, 0]]);
        let b = MonomialIdeal::new(Ring::new(["p", "q"]), vec![m(&[1, 0])]).unwrap();
        assert_eq!(a.intersect(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn document_validation() {
        let bad = IdealDocument { schema: None, variables: vec!["a".into()], generators: vec![vec![1, 2]] };
        assert!(MonomialIdeal::from_document(&bad).is_err());
        let dup = IdealDocument { schema: None, variables: vec!["a".into(), "a".into()], generators: vec![] };
        assert!(MonomialIdeal::from_document(&dup).is_err());
    }
}
