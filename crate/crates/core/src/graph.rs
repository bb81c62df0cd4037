//! Weighted oriented graphs and the combinatorial queries run against them.
//!
//! Vertices are addressed by their index in declaration order. Vertex sets
//! are bit masks, so a graph holds at most [`MAX_VERTICES`] vertices; the
//! exhaustive enumerations below are meant for graphs with a few dozen
//! vertices at most.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub name: String,
    pub weight: u32,
}

/// A simple directed graph with positive integer vertex weights.
///
/// Construction validates the document and sets the weight of every source
/// (including isolated vertices) to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedOrientedGraph {
    name: String,
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    out_adj: Vec<VertexSet>,
    in_adj: Vec<VertexSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Source,
    Sink,
    Internal,
    Isolated,
}

impl VertexKind {
    /// Isolated vertices count as sources.
    pub fn is_source(self) -> bool {
        matches!(self, VertexKind::Source | VertexKind::Isolated)
    }

    pub fn is_sink(self) -> bool {
        matches!(self, VertexKind::Sink | VertexKind::Isolated)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub kinds: Vec<VertexKind>,
    /// Vertices of weight at least 2.
    pub v_plus: VertexSet,
    /// Every vertex of `v_plus` has no out-neighbour.
    pub v_plus_all_sinks: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborhoodKind {
    Out,
    In,
    Open,
    Closed,
}

/// A directed path `tail -> middle -> head` whose middle vertex has weight at
/// least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedPath {
    pub tail: usize,
    pub middle: usize,
    pub head: usize,
    /// `tail` and `head` are not adjacent.
    pub induced: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathMode {
    /// Only the two directed edges and the weight condition are required.
    DirectedOnly,
    /// The three vertices must also induce a path in the underlying graph.
    Induced,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    Bipartite { left: VertexSet, right: VertexSet },
    /// An odd cycle as a closed vertex sequence (first vertex not repeated).
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Bipartite { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    #[serde(default)]
    pub name: String,
    pub vertices: Vec<VertexDocument>,
    #[serde(default)]
    pub edges: Vec<EdgeDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDocument {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDocument {
    pub from: String,
    pub to: String,
}

/// Parse and validate a graph document.
pub fn parse_graph(text: &str) -> Result<WeightedOrientedGraph> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    WeightedOrientedGraph::from_document(&doc)
}

impl WeightedOrientedGraph {
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<(String, i64)>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let n = vertices.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { max: MAX_VERTICES, got: n });
        }
        let mut seen = HashMap::new();
        let mut verts = Vec::with_capacity(n);
        for (i, (name, weight)) in vertices.into_iter().enumerate() {
            if seen.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(name));
            }
            if weight < 1 || weight > u32::MAX as i64 {
                return Err(Error::NonPositiveWeight { name, weight });
            }
            verts.push(Vertex { name, weight: weight as u32 });
        }
        let mut out_adj = vec![VertexSet::EMPTY; n];
        let mut in_adj = vec![VertexSet::EMPTY; n];
        for &(t, h) in &edges {
            if t >= n || h >= n {
                return Err(Error::Parse(format!("edge ({t}, {h}) references a missing vertex")));
            }
            if t == h {
                return Err(Error::LoopEdge(verts[t].name.clone()));
            }
            if out_adj[t].union(in_adj[t]).contains(h) {
                return Err(Error::DuplicateEdge(verts[t].name.clone(), verts[h].name.clone()));
            }
            out_adj[t].insert(h);
            in_adj[h].insert(t);
        }
        for (v, vertex) in verts.iter_mut().enumerate() {
            if in_adj[v].is_empty() {
                vertex.weight = 1;
            }
        }
        Ok(WeightedOrientedGraph {
            name: name.into(),
            vertices: verts,
            edges,
            out_adj,
            in_adj,
        })
    }

    pub fn from_document(doc: &GraphDocument) -> Result<Self> {
        let vertices: Vec<(String, i64)> = doc
            .vertices
            .iter()
            .map(|v| (v.id.clone(), v.weight.unwrap_or(1)))
            .collect();
        let index: HashMap<&str, usize> =
            doc.vertices.iter().enumerate().map(|(i, v)| (v.id.as_str(), i)).collect();
        let lookup = |name: &str| index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_string()));
        let mut edges = Vec::with_capacity(doc.edges.len());
        for e in &doc.edges {
            edges.push((lookup(&e.from)?, lookup(&e.to)?));
        }
        Self::new(doc.name.clone(), vertices, edges)
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            schema: Some(crate::SCHEMA.to_string()),
            name: self.name.clone(),
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexDocument { id: v.name.clone(), weight: Some(v.weight as i64) })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(t, h)| EdgeDocument {
                    from: self.vertices[t].name.clone(),
                    to: self.vertices[h].name.clone(),
                })
                .collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_names(&self) -> Vec<String> {
        self.vertices.iter().map(|v| v.name.clone()).collect()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v].name
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.vertices[v].weight
    }

    pub fn weights(&self) -> Vec<u32> {
        self.vertices.iter().map(|v| v.weight).collect()
    }

    pub fn max_weight(&self) -> u32 {
        self.vertices.iter().map(|v| v.weight).max().unwrap_or(1)
    }

    /// Directed edges as `(tail, head)` in declaration order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.num_vertices())
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v.name == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names.iter().map(|n| self.index_of(n.as_ref())).collect()
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.in_adj[v]
    }

    /// Neighbours in the underlying simple graph.
    pub fn adjacent(&self, v: usize) -> VertexSet {
        self.out_adj[v].union(self.in_adj[v])
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacent(u).contains(v)
    }

    pub fn has_edge(&self, tail: usize, head: usize) -> bool {
        self.out_adj[tail].contains(head)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacent(v).len()
    }

    /// Edges of the underlying graph as `(min, max)` pairs, sorted.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self.edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        out.sort_unstable();
        out
    }

    pub fn classify(&self) -> Classification {
        let kinds: Vec<VertexKind> = (0..self.num_vertices())
            .map(|v| match (self.in_adj[v].is_empty(), self.out_adj[v].is_empty()) {
                (true, true) => VertexKind::Isolated,
                (true, false) => VertexKind::Source,
                (false, true) => VertexKind::Sink,
                (false, false) => VertexKind::Internal,
            })
            .collect();
        let v_plus: VertexSet = (0..self.num_vertices()).filter(|&v| self.weight(v) >= 2).collect();
        let v_plus_all_sinks = v_plus.iter().all(|v| self.out_adj[v].is_empty());
        Classification { kinds, v_plus, v_plus_all_sinks }
    }

    pub fn v_plus_all_sinks(&self) -> bool {
        self.classify().v_plus_all_sinks
    }

    pub fn neighborhood(&self, set: VertexSet, kind: NeighborhoodKind) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in set.iter() {
            out = out.union(match kind {
                NeighborhoodKind::Out => self.out_adj[v],
                NeighborhoodKind::In => self.in_adj[v],
                NeighborhoodKind::Open | NeighborhoodKind::Closed => self.adjacent(v),
            });
        }
        if kind == NeighborhoodKind::Closed {
            out = out.union(set);
        }
        out
    }

    /// The subgraph induced on `keep`, vertices kept in declaration order.
    pub fn induced_subgraph(&self, keep: VertexSet) -> WeightedOrientedGraph {
        let keep = keep.intersection(self.all_vertices());
        let mut new_index = vec![usize::MAX; self.num_vertices()];
        let mut vertices = Vec::with_capacity(keep.len());
        for (i, v) in keep.iter().enumerate() {
            new_index[v] = i;
            vertices.push((self.vertices[v].name.clone(), self.vertices[v].weight as i64));
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(t, h)| keep.contains(t) && keep.contains(h))
            .map(|&(t, h)| (new_index[t], new_index[h]))
            .collect();
        WeightedOrientedGraph::new(self.name.clone(), vertices, edges)
            .expect("an induced subgraph of a valid graph is valid")
    }

    /// `D \ S`.
    pub fn remove_vertices(&self, set: VertexSet) -> WeightedOrientedGraph {
        self.induced_subgraph(self.all_vertices().difference(set))
    }

    /// Vertex sets of all triangles of the underlying graph.
    pub fn triangles(&self) -> Vec<VertexSet> {
        let n = self.num_vertices();
        let mut out = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                if !self.is_adjacent(a, b) {
                    continue;
                }
                let common = self.adjacent(a).intersection(self.adjacent(b));
                for c in common.iter().filter(|&c| c > b) {
                    out.push(VertexSet::from_iter([a, b, c]));
                }
            }
        }
        out
    }

    pub fn cliques4(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for t in self.triangles() {
            let max = t.iter().max().unwrap_or(0);
            let common = t
                .iter()
                .fold(self.all_vertices(), |acc, v| acc.intersection(self.adjacent(v)));
            for d in common.iter().filter(|&d| d > max) {
                out.push(t.with(d));
            }
        }
        out
    }

    /// All 5-cycles (induced or not) as vertex sequences, one per cycle: the
    /// sequence starts at its smallest vertex and its second entry is smaller
    /// than its last.
    pub fn cycles5(&self) -> Vec<[usize; 5]> {
        let n = self.num_vertices();
        let mut out = Vec::new();
        for s in 0..n {
            let allowed = VertexSet::full(n).difference(VertexSet::full(s + 1));
            let mut path = [s, 0, 0, 0, 0];
            self.extend_cycle(&mut path, 1, allowed, &mut out);
        }
        out
    }

    fn extend_cycle(&self, path: &mut [usize; 5], len: usize, allowed: VertexSet, out: &mut Vec<[usize; 5]>) {
        if len == 5 {
            if self.is_adjacent(path[4], path[0]) && path[1] < path[4] {
                out.push(*path);
            }
            return;
        }
        let candidates = self.adjacent(path[len - 1]).intersection(allowed);
        for v in candidates.iter() {
            path[len] = v;
            let mut rest = allowed;
            rest.remove(v);
            self.extend_cycle(path, len + 1, rest, out);
        }
    }

    /// Induced matchings with `r` edges, each given as indices into
    /// [`Self::edges`] in increasing order.
    pub fn induced_matchings(&self, r: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if r == 0 {
            return out;
        }
        let mut current = Vec::with_capacity(r);
        self.extend_matching(r, 0, VertexSet::EMPTY, &mut current, &mut out);
        out
    }

    fn extend_matching(
        &self,
        r: usize,
        start: usize,
        closed: VertexSet,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == r {
            out.push(current.clone());
            return;
        }
        for e in start..self.edges.len() {
            let (t, h) = self.edges[e];
            // `closed` is the closed neighbourhood of the matched vertices: a new
            // edge must avoid it entirely to stay disjoint and unjoined.
            if closed.contains(t) || closed.contains(h) {
                continue;
            }
            let pair = VertexSet::from_iter([t, h]);
            current.push(e);
            self.extend_matching(
                r,
                e + 1,
                closed.union(self.neighborhood(pair, NeighborhoodKind::Closed)),
                current,
                out,
            );
            current.pop();
        }
    }

    /// Every induced matching of every size.
    pub fn all_induced_matchings(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for r in 1..=self.num_vertices() / 2 {
            let level = self.induced_matchings(r);
            if level.is_empty() {
                break;
            }
            out.extend(level);
        }
        out
    }

    /// Induced `2K2` subgraphs; empty exactly when the graph is gap-free.
    pub fn gaps(&self) -> Vec<[usize; 2]> {
        self.induced_matchings(2).into_iter().map(|m| [m[0], m[1]]).collect()
    }

    pub fn is_gap_free(&self) -> bool {
        self.gaps().is_empty()
    }

    pub fn weighted_paths(&self, mode: PathMode) -> Vec<WeightedPath> {
        let mut out = Vec::new();
        for &(tail, middle) in &self.edges {
            if self.weight(middle) < 2 {
                continue;
            }
            for head in self.out_adj[middle].iter() {
                let induced = !self.is_adjacent(tail, head);
                if mode == PathMode::DirectedOnly || induced {
                    out.push(WeightedPath { tail, middle, head, induced });
                }
            }
        }
        out.sort();
        out
    }

    pub fn bipartition(&self) -> Bipartition {
        let n = self.num_vertices();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("queued vertices are colored");
                for v in self.adjacent(u).iter() {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            parent[v] = u;
                            depth[v] = depth[u] + 1;
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => {
                            return Bipartition::OddCycle(odd_cycle(u, v, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let left: VertexSet = (0..n).filter(|&v| color[v] == Some(false)).collect();
        Bipartition::Bipartite { left, right: self.all_vertices().difference(left) }
    }

    pub fn is_forest(&self) -> bool {
        // A simple graph is a forest iff |E| = |V| - #components.
        let n = self.num_vertices();
        let mut seen = VertexSet::EMPTY;
        let mut components = 0;
        for v in 0..n {
            if seen.contains(v) {
                continue;
            }
            components += 1;
            let mut frontier = VertexSet::singleton(v);
            while !frontier.is_empty() {
                seen = seen.union(frontier);
                frontier = self.neighborhood(frontier, NeighborhoodKind::Open).difference(seen);
            }
        }
        self.edges.len() + components == n
    }
}

fn odd_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    // Walk both endpoints of the offending edge up the BFS tree to their
    // lowest common ancestor.
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}
