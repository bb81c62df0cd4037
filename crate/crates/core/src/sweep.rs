//! Exponent sweeps over boxes `∏_j [0, ρ_j]`.
//!
//! A property of `a` that only depends on comparisons `a_j ≥ t` against a
//! known threshold set is constant between consecutive thresholds, so it
//! suffices to visit one representative per class.

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::regularity::for_each_point;

/// Per-variable value lists describing a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sweep {
    values: Vec<Vec<u32>>,
}

impl Sweep {
    /// Every point of the box `[0, ρ_j]`.
    pub fn full_box(rho: &[u32]) -> Self {
        Sweep { values: rho.iter().map(|&r| (0..=r).collect()).collect() }
    }

    /// One point per threshold class: the values `0`, `1` and every given
    /// threshold, clipped to `[0, ρ_j]`.
    pub fn threshold_classes(rho: &[u32], thresholds: &[Vec<u32>]) -> Self {
        let values = rho
            .iter()
            .enumerate()
            .map(|(j, &r)| {
                let mut v: Vec<u32> = [0, 1].into_iter().chain(thresholds[j].iter().copied()).filter(|&t| t <= r).collect();
                v.sort_unstable();
                v.dedup();
                v
            })
            .collect();
        Sweep { values }
    }

    /// Thresholds covering membership in and radical colons by each ideal,
    /// plus extra per-variable values.
    pub fn for_ideals(ideals: &[&MonomialIdeal], extra: &[Vec<u32>]) -> Self {
        let n = ideals.first().map_or(extra.len(), |i| i.num_vars());
        let mut thresholds: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut rho = vec![0u32; n];
        for ideal in ideals {
            for g in ideal.gens() {
                for (j, &e) in g.exps().iter().enumerate() {
                    thresholds[j].push(e);
                    rho[j] = rho[j].max(e);
                }
            }
        }
        for (j, t) in extra.iter().enumerate() {
            thresholds[j].extend(t);
        }
        Self::threshold_classes(&rho, &thresholds)
    }

    pub fn values(&self) -> &[Vec<u32>] {
        &self.values
    }

    /// Number of points, `None` on overflow.
    pub fn len(&self) -> Option<usize> {
        self.values.iter().try_fold(1usize, |acc, v| acc.checked_mul(v.len()))
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    /// Errors with a resource cap if the sweep exceeds `cap` points.
    pub fn check_cap(&self, cap: usize) -> Result<()> {
        match self.len() {
            Some(len) if len <= cap => Ok(()),
            _ => Err(Error::ResourceCap { what: "exponent sweep", cap }),
        }
    }

    pub fn for_each(&self, f: impl FnMut(&[u32])) {
        for_each_point(&self.values, f);
    }

    /// Stops at the first point where `f` returns `Some`.
    pub fn find_map<T>(&self, mut f: impl FnMut(&[u32]) -> Option<T>) -> Option<T> {
        let mut found = None;
        for_each_point(&self.values, |a| {
            if found.is_none() {
                found = f(a);
            }
        });
        found
    }
}
