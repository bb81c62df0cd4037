//! Finite simplicial complexes on at most 64 vertices and their reduced
//! homology over a field.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::linalg::{rank, Characteristic};

/// A downward-closed family of faces, each face a bit mask over `n`
/// vertices. Faces are kept sorted by (size, mask).
///
/// The void complex has no faces; the irrelevant complex has only `∅`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    faces: Vec<u64>,
}

fn face_order(faces: &mut [u64]) {
    faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
}

impl SimplicialComplex {
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, faces: Vec::new() }
    }

    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex { n, faces: vec![0] }
    }

    /// The full simplex on all `n` vertices.
    pub fn simplex(n: usize) -> Self {
        Self::from_facets(n, &[if n == 64 { u64::MAX } else { (1u64 << n) - 1 }])
    }

    /// The complex generated by the given facets (every subset of each).
    pub fn from_facets(n: usize, facets: &[u64]) -> Self {
        let mut all = HashSet::new();
        for &f in facets {
            // Enumerate submasks of f.
            let mut s = f;
            loop {
                all.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        let mut faces: Vec<u64> = all.into_iter().collect();
        face_order(&mut faces);
        SimplicialComplex { n, faces }
    }

    /// Validates downward closure.
    pub fn from_faces(n: usize, faces: &[u64]) -> Result<Self> {
        let set: HashSet<u64> = faces.iter().copied().collect();
        for &f in &set {
            if n < 64 && f >> n != 0 {
                return Err(Error::InvalidIdeal(format!("face {f:#b} uses a vertex outside 0..{n}")));
            }
            for v in 0..64 {
                if f >> v & 1 == 1 && !set.contains(&(f & !(1 << v))) {
                    return Err(Error::InvalidIdeal(format!("face {f:#b} is missing its subface")));
                }
            }
        }
        let mut faces: Vec<u64> = set.into_iter().collect();
        face_order(&mut faces);
        Ok(SimplicialComplex { n, faces })
    }

    /// The complex whose Stanley-Reisner ideal is generated by the squarefree
    /// monomials with the given supports: every set containing none of them.
    pub fn stanley_reisner(n: usize, nonfaces: &[u64]) -> Self {
        assert!(n <= 32, "Stanley-Reisner enumeration is limited to 32 vertices");
        let mut faces: Vec<u64> = (0..1u64 << n)
            .filter(|&f| nonfaces.iter().all(|&g| g & !f != 0))
            .collect();
        face_order(&mut faces);
        SimplicialComplex { n, faces }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[u64] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.faces == [0]
    }

    pub fn contains(&self, face: u64) -> bool {
        let key = (face.count_ones(), face);
        self.faces.binary_search_by_key(&key, |&f| (f.count_ones(), f)).is_ok()
    }

    /// `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.faces.last().map(|f| f.count_ones() as isize - 1)
    }

    pub fn facets(&self) -> Vec<u64> {
        let set: HashSet<u64> = self.faces.iter().copied().collect();
        self.faces
            .iter()
            .copied()
            .filter(|&f| (0..self.n).all(|v| f >> v & 1 == 1 || !set.contains(&(f | 1 << v))))
            .collect()
    }

    /// `lk F = {G : F ∪ G ∈ Δ, F ∩ G = ∅}`.
    pub fn link(&self, face: u64) -> Result<SimplicialComplex> {
        if !self.contains(face) {
            return Err(Error::InvalidIdeal(format!("{face:#b} is not a face")));
        }
        let faces = self
            .faces
            .iter()
            .filter(|&&g| g & face == face)
            .map(|&g| g & !face)
            .collect::<Vec<_>>();
        let mut faces = faces;
        face_order(&mut faces);
        Ok(SimplicialComplex { n: self.n, faces })
    }

    /// Reduced homology dimensions over a field of characteristic `ch`.
    pub fn homology(&self, ch: Characteristic) -> ReducedHomology {
        if self.is_void() {
            return ReducedHomology(Vec::new());
        }
        let top = self.faces.last().map_or(0, |f| f.count_ones() as usize);
        let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
        for &f in &self.faces {
            by_size[f.count_ones() as usize].push(f);
        }
        // ranks[s] = rank of the boundary from size-s chains to size-(s-1) chains.
        let mut ranks = vec![0usize; top + 2];
        for s in 1..=top {
            ranks[s] = boundary_rank(&by_size[s], &by_size[s - 1], ch);
        }
        ReducedHomology((0..=top).map(|s| by_size[s].len() - ranks[s] - ranks[s + 1]).collect())
    }

    /// Faces count by size: `counts[s]` faces with `s` vertices.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.faces.last().map_or(0, |f| f.count_ones() as usize + 1);
        let mut counts = vec![0; top];
        for f in &self.faces {
            counts[f.count_ones() as usize] += 1;
        }
        counts
    }

    /// True when some vertex lies in every facet (so the complex is a cone
    /// and has no reduced homology). The irrelevant complex is not a cone.
    pub fn is_cone(&self) -> bool {
        if self.faces.len() <= 1 {
            return false;
        }
        let facets = self.facets();
        facets.iter().fold(u64::MAX, |acc, &f| acc & f) != 0
    }
}

fn boundary_rank(upper: &[u64], lower: &[u64], ch: Characteristic) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let rows: Vec<Vec<i64>> = upper
        .iter()
        .map(|&f| {
            let mut row = vec![0i64; lower.len()];
            let mut bits = f;
            let mut j = 0;
            while bits != 0 {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                let sign = if j % 2 == 0 { 1 } else { -1 };
                row[index[&(f & !(1 << v))]] = sign;
                j += 1;
            }
            row
        })
        .collect();
    rank(&rows, ch)
}

/// `dims[s]` is `dim H̃_{s-1}`, so index 0 holds `H̃_{-1}`. The void complex
/// has an empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ReducedHomology(pub Vec<usize>);

impl ReducedHomology {
    /// `dim H̃_i`, zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1).ok().and_then(|s| self.0.get(s).copied()).unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    /// Pairs `(i, dim H̃_i)` with nonzero dimension.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(s, &d)| (s as isize - 1, d))
    }

    pub fn euler_characteristic(&self) -> i64 {
        // Alternating sum starting at H̃_{-1}, sign (-1)^i.
        self.0
            .iter()
            .enumerate()
            .map(|(s, &d)| if s % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Memoizes homology by complex. Not shared between threads.
#[derive(Debug)]
pub struct HomologyCache {
    ch: Characteristic,
    memo: HashMap<Vec<u64>, ReducedHomology>,
}

impl HomologyCache {
    pub fn new(ch: Characteristic) -> Self {
        HomologyCache { ch, memo: HashMap::new() }
    }

    pub fn characteristic(&self) -> Characteristic {
        self.ch
    }

    /// Homology of the complex generated by `facets` on `n` vertices.
    pub fn of_facets(&mut self, n: usize, facets: &[u64]) -> ReducedHomology {
        let mut key: Vec<u64> = facets.to_vec();
        key.sort_unstable();
        key.dedup();
        // Cones (including a single nonempty simplex) are acyclic.
        if key.iter().fold(u64::MAX, |acc, &f| acc & f) != 0 {
            return ReducedHomology(Vec::new());
        }
        if let Some(h) = self.memo.get(&key) {
            return h.clone();
        }
        let h = SimplicialComplex::from_facets(n, &key).homology(self.ch);
        self.memo.insert(key, h.clone());
        h
    }

    pub fn of(&mut self, complex: &SimplicialComplex) -> ReducedHomology {
        if complex.is_void() {
            return ReducedHomology(Vec::new());
        }
        self.of_facets(complex.num_vertices(), &complex.facets())
    }
}
