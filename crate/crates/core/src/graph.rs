//! Immutable small graphs stored as one neighbor mask per vertex.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Largest supported vertex count; neighbor sets fit in one `u32`.
pub const MAX_VERTICES: usize = 32;

/// A set of vertex indices, packed into one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_mask(mask: u32) -> Self {
        VertexSet(mask)
    }

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u32 << v)
    }

    #[inline]
    pub const fn mask(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 32 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u32 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u32 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u32 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u32 << v))
    }

    /// Lowest vertex in the set.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u32);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An unordered vertex pair, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the edge `{a, b}`, ordering the endpoints.
    ///
    /// # Panics
    /// Panics if `a == b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Minimum degree, maximum degree and the full degree sequence (by vertex).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub sequence: Vec<usize>,
}

/// An undirected simple graph on `1..=32` labeled vertices.
///
/// Values are immutable: every modifying operation returns a new graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        Ok(Graph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).mask();
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    /// The cycle `0-1-...-(n-1)-0`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Complete multipartite graph with the given part sizes, parts laid out in order.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self, GraphError> {
        let n: usize = parts.iter().sum();
        let mut g = Graph::complete(n)?;
        let mut start = 0;
        for &p in parts {
            let part = VertexSet::full(start + p) - VertexSet::full(start);
            for v in part {
                g.adj[v] &= !part.mask();
            }
            start += p;
        }
        Ok(g)
    }

    /// Builds a graph from an edge list. Duplicate edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.validate_pair(a, b)?;
            if g.has_edge(a, b) {
                return Err(GraphError::EdgePresent(Edge::new(a, b)));
            }
            g.link(a, b);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor masks, checking symmetry and range.
    pub fn from_adjacency(masks: &[u32]) -> Result<Self, GraphError> {
        let n = masks.len();
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).mask();
        for (v, &m) in masks.iter().enumerate() {
            if m & !all != 0 {
                return Err(GraphError::Malformed(format!("vertex {v} has neighbors outside 0..{n}")));
            }
            if m & (1 << v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
            g.adj[v] = m;
        }
        for v in 0..n {
            for u in VertexSet::from_mask(g.adj[v]) {
                if g.adj[u] & (1 << v) == 0 {
                    return Err(GraphError::Malformed(format!("adjacency not symmetric at {u}-{v}")));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Raw neighbor masks, one per vertex.
    #[inline]
    pub fn adjacency(&self) -> &[u32] {
        &self.adj[..self.n()]
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && b < self.n() && self.adj[a] & (1 << b) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency().iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// True when every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        (0..n).all(|v| self.degree(v) == n - 1)
    }

    /// Edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in VertexSet(self.adj[u] & !((2u32 << u) - 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Non-edges (edges of the complement) in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        self.complement().edges()
    }

    /// `G + e`. Fails if `e` is already an edge or out of range.
    pub fn add_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.validate_pair(e.u, e.v)?;
        if self.has_edge(e.u, e.v) {
            return Err(GraphError::EdgePresent(e));
        }
        let mut g = *self;
        g.link(e.u, e.v);
        Ok(g)
    }

    /// `G - e`. Fails if `e` is not an edge.
    pub fn remove_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.validate_pair(e.u, e.v)?;
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::EdgeMissing(e));
        }
        let mut g = *self;
        g.adj[e.u] &= !(1 << e.v);
        g.adj[e.v] &= !(1 << e.u);
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mut g = *self;
        let all = self.vertices().mask();
        for v in 0..self.n() {
            g.adj[v] = all & !self.adj[v] & !(1 << v);
        }
        g
    }

    /// The join `G + H`: disjoint union plus every edge between the two sides.
    /// Vertices of `self` keep their labels; those of `other` are shifted by `|G|`.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let (a, b) = (self.n(), other.n());
        check_order(a + b)?;
        let mut g = Graph::empty(a + b)?;
        let left = VertexSet::full(a).mask();
        let right = VertexSet::full(a + b).mask() & !left;
        for v in 0..a {
            g.adj[v] = self.adj[v] | right;
        }
        for v in 0..b {
            g.adj[a + v] = (other.adj[v] << a) | left;
        }
        Ok(g)
    }

    /// The subgraph induced by `keep`, relabeled `0..|keep|` in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph, GraphError> {
        let keep = keep & self.vertices();
        let order: Vec<usize> = keep.iter().collect();
        let mut g = Graph::empty(order.len())?;
        for (i, &v) in order.iter().enumerate() {
            for (j, &u) in order.iter().enumerate() {
                if self.adj[v] & (1 << u) != 0 {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        Ok(g)
    }

    /// `G \ v`, with the remaining vertices relabeled in order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n() {
            return Err(GraphError::VertexOutOfRange { v, n: self.n() });
        }
        self.induced(self.vertices().without(v))
    }

    /// Applies `perm`: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.n();
        if perm.len() != n || perm.iter().copied().collect::<VertexSet>() != self.vertices() {
            return Err(GraphError::InvalidParameter("relabeling is not a permutation".into()));
        }
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            let mut m = 0u32;
            for u in self.neighbors(v) {
                m |= 1 << perm[u];
            }
            g.adj[perm[v]] = m;
        }
        Ok(g)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let sequence: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        DegreeStats {
            min: sequence.iter().copied().min().unwrap_or(0),
            max: sequence.iter().copied().max().unwrap_or(0),
            sequence,
        }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Tests whether the complement is a disjoint union of cliques.
    /// Returns the verdict and, when it holds, the number of parts.
    pub fn is_complete_multipartite(&self) -> (bool, usize) {
        let all = self.vertices();
        let mut seen = VertexSet::EMPTY;
        let mut parts = 0;
        for v in 0..self.n() {
            if seen.contains(v) {
                continue;
            }
            let class = all - self.neighbors(v);
            for u in class {
                if all - self.neighbors(u) != class {
                    return (false, 0);
                }
            }
            seen = seen | class;
            parts += 1;
        }
        (true, parts)
    }

    fn validate_pair(&self, a: usize, b: usize) -> Result<(), GraphError> {
        let n = self.n();
        for v in [a, b] {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        Ok(())
    }

    #[inline]
    fn link(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n == 0 {
        Err(GraphError::NoVertices)
    } else if n > MAX_VERTICES {
        Err(GraphError::TooManyVertices { n, max: MAX_VERTICES })
    } else {
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_edge_completes_path() {
        let p3 = Graph::path(3).unwrap();
        let k3 = p3.add_edge(Edge::new(0, 2)).unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        assert_eq!(p3.edge_count(), 2);
    }

    #[test]
    fn add_edge_on_two_isolated_vertices() {
        let g = Graph::empty(2).unwrap().add_edge(Edge::new(0, 1)).unwrap();
        assert_eq!(g, Graph::complete(2).unwrap());
    }

    #[test]
    fn add_edge_restores_k6() {
        let k6 = Graph::complete(6).unwrap();
        let minus = k6.remove_edge(Edge::new(0, 1)).unwrap();
        assert_eq!(minus.add_edge(Edge::new(0, 1)).unwrap(), k6);
    }

    #[test]
    fn add_edge_rejects_present_and_out_of_range() {
        let k3 = Graph::complete(3).unwrap();
        assert!(matches!(k3.add_edge(Edge::new(0, 1)), Err(GraphError::EdgePresent(_))));
        assert!(matches!(
            k3.add_edge(Edge::new(0, 5)),
            Err(GraphError::VertexOutOfRange { v: 5, n: 3 })
        ));
    }

    #[test]
    fn complement_of_complete_is_empty() {
        for n in 1..=8 {
            assert_eq!(Graph::complete(n).unwrap().complement(), Graph::empty(n).unwrap());
        }
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5).unwrap();
        let comp = c5.complement();
        // 0-2-4-1-3-0 is the complement cycle; map it onto 0-1-2-3-4-0.
        let perm = [0, 3, 1, 4, 2];
        assert_eq!(comp.relabel(&perm).unwrap(), c5);
    }

    #[test]
    fn join_counts() {
        let g = Graph::complete(4).unwrap().join(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 14);

        let k2 = Graph::empty(1).unwrap().join(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());

        let ht = Graph::complete(7).unwrap().join(&Graph::empty(2).unwrap()).unwrap();
        let stats = ht.degree_stats();
        assert_eq!((stats.min, stats.max), (7, 8));
    }

    #[test]
    fn join_rejects_overflow() {
        let a = Graph::empty(20).unwrap();
        assert!(matches!(a.join(&a), Err(GraphError::TooManyVertices { n: 40, .. })));
    }

    #[test]
    fn degree_stats_examples() {
        let s = Graph::empty(3).unwrap().degree_stats();
        assert_eq!((s.min, s.max), (0, 0));
        let ht = Graph::complete(4).unwrap().join(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!(ht.degree_stats().min, 4);
    }

    #[test]
    fn multipartite_examples() {
        let ht = Graph::complete(4).unwrap().join(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!(ht.is_complete_multipartite(), (true, 5));
        assert!(!Graph::cycle(5).unwrap().is_complete_multipartite().0);
        let k33 = Graph::complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(k33.edge_count(), 9);
        assert_eq!(k33.is_complete_multipartite(), (true, 2));
        assert_eq!(Graph::empty(4).unwrap().is_complete_multipartite(), (true, 1));
    }

    #[test]
    fn induced_and_delete_vertex() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.delete_vertex(0).unwrap(), Graph::path(4).unwrap());
        assert_eq!(c5.delete_vertex(2).unwrap().edge_count(), 3);
        assert!(c5.delete_vertex(7).is_err());
    }

    #[test]
    fn from_adjacency_validates() {
        assert!(Graph::from_adjacency(&[0b10, 0b01]).is_ok());
        assert!(matches!(Graph::from_adjacency(&[0b10, 0b00]), Err(GraphError::Malformed(_))));
        assert!(matches!(Graph::from_adjacency(&[0b01]), Err(GraphError::SelfLoop(0))));
        assert!(matches!(Graph::empty(0), Err(GraphError::NoVertices)));
        assert!(Graph::empty(32).is_ok());
        assert!(Graph::empty(33).is_err());
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::complete(4).unwrap();
        let e: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(e, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(Graph::complete(32).unwrap().edge_count(), 496);
    }
}
