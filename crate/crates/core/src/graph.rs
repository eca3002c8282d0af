use std::collections::BTreeSet;

use crate::error::GraphError;
use crate::vertex::VertexId;

/// Undirected simple graph over a subset of a dense id space.
///
/// Equality is labeled equality: same vertex set, same edge set.
#[derive(Debug, Clone, Default)]
pub struct SimpleGraph {
    adj: Vec<Option<BTreeSet<VertexId>>>,
    edges: usize,
}

impl SimpleGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v);
        }
        g
    }

    /// Builds a graph from an edge list over vertices `0..n`.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut g = Self::with_vertices((0..n).map(VertexId::from));
        for &(u, v) in edges {
            g.add_edge(VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        if self.adj.len() <= v.index() {
            self.adj.resize(v.index() + 1, None);
        }
        self.adj[v.index()].get_or_insert_with(BTreeSet::new);
    }

    pub fn contains(&self, v: VertexId) -> bool {
        matches!(self.adj.get(v.index()), Some(Some(_)))
    }

    fn slot(&self, v: VertexId) -> Result<&BTreeSet<VertexId>, GraphError> {
        self.adj
            .get(v.index())
            .and_then(Option::as_ref)
            .ok_or(GraphError::UnknownVertex(v))
    }

    fn slot_mut(&mut self, v: VertexId) -> Result<&mut BTreeSet<VertexId>, GraphError> {
        self.adj
            .get_mut(v.index())
            .and_then(Option::as_mut)
            .ok_or(GraphError::UnknownVertex(v))
    }

    /// Adds `uv`; returns false if it was already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.slot(v)?;
        let fresh = self.slot_mut(u)?.insert(v);
        if fresh {
            self.slot_mut(v)?.insert(u);
            self.edges += 1;
        }
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if !self.slot_mut(u)?.remove(&v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        self.slot_mut(v)?.remove(&u);
        self.edges -= 1;
        Ok(())
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        let nbrs = self
            .adj
            .get_mut(v.index())
            .and_then(Option::take)
            .ok_or(GraphError::UnknownVertex(v))?;
        for u in &nbrs {
            self.slot_mut(*u)?.remove(&v);
        }
        self.edges -= nbrs.len();
        Ok(())
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.slot(u).is_ok_and(|s| s.contains(&v))
    }

    /// Neighbours of `v` in increasing id order; empty for unknown vertices.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.slot(v)
            .ok()
            .into_iter()
            .flat_map(|s| s.iter().copied())
    }

    pub fn neighbor_set(&self, v: VertexId) -> Option<&BTreeSet<VertexId>> {
        self.slot(v).ok()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.slot(v).map_or(0, BTreeSet::len)
    }

    pub fn common_neighbors(&self, u: VertexId, v: VertexId) -> Vec<VertexId> {
        match (self.slot(u), self.slot(v)) {
            (Ok(a), Ok(b)) => a.intersection(b).copied().collect(),
            _ => Vec::new(),
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_some())
            .map(|(i, _)| VertexId::from(i))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.iter().filter(|s| s.is_some()).count()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// All edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edges);
        for u in self.vertices() {
            for v in self.neighbors(u).filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// One past the largest vertex index present.
    pub fn capacity(&self) -> usize {
        self.vertices().last().map_or(0, |v| v.index() + 1)
    }

    /// Smallest vertex not reachable from the smallest vertex; `None` when
    /// the graph is connected.
    pub fn first_unreachable(&self) -> Option<VertexId> {
        let start = self.vertices().next()?;
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![start];
        seen[start.index()] = true;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v.index()] {
                    seen[v.index()] = true;
                    stack.push(v);
                }
            }
        }
        self.vertices().find(|v| !seen[v.index()])
    }
}

impl PartialEq for SimpleGraph {
    fn eq(&self, other: &Self) -> bool {
        self.edges == other.edges
            && self.vertices().eq(other.vertices())
            && self
                .vertices()
                .all(|v| self.slot(v).ok() == other.slot(v).ok())
    }
}

impl Eq for SimpleGraph {}

/// Unordered vertex triple, stored sorted.
pub type Triple = [VertexId; 3];

pub fn triple(a: VertexId, b: VertexId, c: VertexId) -> Triple {
    let mut t = [a, b, c];
    t.sort();
    t
}

/// Set of unordered triples of distinct vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TripleSet(BTreeSet<Triple>);

impl TripleSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `{a, b, c}`; panics if the vertices are not distinct.
    pub fn insert(&mut self, a: VertexId, b: VertexId, c: VertexId) -> bool {
        assert!(a != b && b != c && a != c, "triple with repeated vertex");
        self.0.insert(triple(a, b, c))
    }

    pub fn remove(&mut self, a: VertexId, b: VertexId, c: VertexId) -> bool {
        self.0.remove(&triple(a, b, c))
    }

    pub fn contains(&self, a: VertexId, b: VertexId, c: VertexId) -> bool {
        self.0.contains(&triple(a, b, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.0.iter()
    }
}

impl FromIterator<Triple> for TripleSet {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        let mut set = Self::new();
        for [a, b, c] in iter {
            set.insert(a, b, c);
        }
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_adjacency() {
        let mut g = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(g.has_edge(VertexId(1), VertexId(0)));
        assert!(!g.add_edge(VertexId(1), VertexId(0)).unwrap());
        assert_eq!(g.edge_count(), 2);
        assert_eq!(
            g.add_edge(VertexId(2), VertexId(2)),
            Err(GraphError::Loop(VertexId(2)))
        );
        assert_eq!(
            g.add_edge(VertexId(2), VertexId(5)),
            Err(GraphError::UnknownVertex(VertexId(5)))
        );
        g.remove_vertex(VertexId(1)).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.first_unreachable(), Some(VertexId(2)));
    }

    #[test]
    fn labeled_equality_ignores_capacity() {
        let mut a = SimpleGraph::from_edges(4, &[(0, 1)]).unwrap();
        a.remove_vertex(VertexId(3)).unwrap();
        let b = SimpleGraph::from_edges(3, &[(1, 0)]).unwrap();
        assert_eq!(a, b);
        let c = SimpleGraph::from_edges(3, &[(1, 2)]).unwrap();
        assert_ne!(a, c);
    }
}
