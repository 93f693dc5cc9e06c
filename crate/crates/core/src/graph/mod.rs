//! Immutable simple graphs with bitset adjacency, plus the zero-divisor graph
//! builders.

mod build;

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

pub use build::{build_gamma, build_gamma0};

/// Which construction produced a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Gamma0,
    Gamma,
    Complement(Box<Provenance>),
    Induced(Box<Provenance>),
    Synthetic,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Gamma0 => f.write_str("gamma0"),
            Provenance::Gamma => f.write_str("gamma"),
            Provenance::Complement(inner) => write!(f, "complement_{inner}"),
            Provenance::Induced(inner) => write!(f, "induced_{inner}"),
            Provenance::Synthetic => f.write_str("synthetic"),
        }
    }
}

/// A set of vertex positions `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet(FixedBitSet);

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.ones()).finish()
    }
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet(FixedBitSet::with_capacity(n))
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        for i in indices {
            assert!(i < n, "vertex {i} out of range 0..{n}");
            bits.insert(i);
        }
        VertexSet(bits)
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, v: usize) {
        self.0.insert(v);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(v)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.ones().collect()
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.0
    }
}

/// Total map from vertices to colors `0..color_count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub color_count: usize,
}

impl Coloring {
    /// Builds a coloring whose count is the number of distinct colors used,
    /// relabeling colors densely in order of first appearance.
    pub fn from_assignment(raw: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let assignment = raw
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Coloring { assignment, color_count: map.len() }
    }
}

/// Simple undirected graph: symmetric bit matrix, no self-loops.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<u64>,
    adj: Vec<FixedBitSet>,
    provenance: Provenance,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("provenance", &self.provenance)
            .field("vertices", &self.labels.len())
            .field("edges", &self.edge_count())
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SetMode {
    Clique,
    Independent,
}

impl Graph {
    /// Graph on `n` synthetic vertices labeled `0..n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::edgeless((0..n as u64).collect(), Provenance::Synthetic);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub(crate) fn edgeless(labels: Vec<u64>, provenance: Provenance) -> Self {
        let n = labels.len();
        Graph { labels, adj: vec![FixedBitSet::with_capacity(n); n], provenance }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loops are not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Vertex labels: canonical ring indices, or synthetic ids.
    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn position_of(&self, label: u64) -> Option<usize> {
        self.labels.binary_search(&label).ok().or_else(|| self.labels.iter().position(|&l| l == label))
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn all_vertices(&self) -> VertexSet {
        let mut bits = FixedBitSet::with_capacity(self.vertex_count());
        bits.insert_range(..);
        VertexSet(bits)
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let adj = (0..n)
            .map(|v| {
                let mut row = self.adj[v].clone();
                row.toggle_range(..);
                row.remove(v);
                row
            })
            .collect();
        let provenance = match &self.provenance {
            Provenance::Complement(inner) => (**inner).clone(),
            other => Provenance::Complement(Box::new(other.clone())),
        };
        Graph { labels: self.labels.clone(), adj, provenance }
    }

    /// Induced subgraph on the given vertex positions (kept in increasing order).
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let kept: Vec<usize> = keep.iter().collect();
        let labels = kept.iter().map(|&v| self.labels[v]).collect();
        let mut g = Graph::edgeless(labels, Provenance::Induced(Box::new(self.provenance.clone())));
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// `G - S`.
    pub fn delete_vertices(&self, s: &VertexSet) -> Graph {
        let mut keep = self.all_vertices();
        keep.0.difference_with(&s.0);
        self.induced(&keep)
    }

    pub fn check(&self, s: &VertexSet, mode: SetMode) -> bool {
        let members = s.to_vec();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                let adjacent = self.has_edge(u, v);
                match mode {
                    SetMode::Clique if !adjacent => return false,
                    SetMode::Independent if adjacent => return false,
                    _ => {}
                }
            }
        }
        true
    }

    pub fn is_clique(&self, members: &[usize]) -> bool {
        self.check(&VertexSet::from_indices(self.vertex_count(), members.iter().copied()), SetMode::Clique)
    }

    pub fn verify_coloring(&self, coloring: &Coloring) -> bool {
        if coloring.assignment.len() != self.vertex_count() {
            return false;
        }
        if coloring.assignment.iter().any(|&c| c >= coloring.color_count) {
            return false;
        }
        self.edges().all(|(u, v)| coloring.assignment[u] != coloring.assignment[v])
    }

    /// Symmetric and loop-free.
    pub fn is_well_formed(&self) -> bool {
        let n = self.vertex_count();
        self.adj.len() == n
            && (0..n).all(|u| {
                self.adj[u].len() == n
                    && !self.adj[u].contains(u)
                    && self.adj[u].ones().all(|v| self.adj[v].contains(u))
            })
    }
}
