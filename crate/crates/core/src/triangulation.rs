//! Planar triangulations with a rotation system and a designated outer
//! triangle `a1 a2 a3`.
//!
//! Orientation convention: see [`RotationSystem`]. The outer face traces as
//! `a1 -> a2 -> a3`, which puts `a3` directly after `a2` in the list at `a1`;
//! reading that list from `a3` gives the neighbours of `a1` from `a3` round
//! to `a2`.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{GraphError, TriangulationError};
use crate::graph::SimpleGraph;
use crate::hamiltonian::count_cycles;
use crate::rotation::{rotate_to, RotationSystem};
use crate::vertex::VertexId;

/// A validated planar triangulation. Immutable; operations return new values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    graph: SimpleGraph,
    rotation: RotationSystem,
    outer: [VertexId; 3],
}

/// Checks everything that makes `(graph, rotation, outer)` a planar
/// triangulation with outer face `outer`, reporting the first failure.
pub fn validate_triangulation(
    graph: SimpleGraph,
    rotation: RotationSystem,
    outer: [VertexId; 3],
) -> Result<Triangulation, TriangulationError> {
    let n = graph.vertex_count();
    if n < 3 {
        return Err(TriangulationError::TooSmall { n });
    }
    for v in graph.vertices() {
        let list = rotation.get(v);
        let set: BTreeSet<VertexId> = list.iter().copied().collect();
        if set.len() != list.len() || Some(&set) != graph.neighbor_set(v) {
            return Err(TriangulationError::RotationMismatch { vertex: v });
        }
    }
    if let Some(v) = rotation.vertices().find(|&v| !graph.contains(v)) {
        return Err(TriangulationError::RotationMismatch { vertex: v });
    }
    if let Some(v) = graph.first_unreachable() {
        return Err(TriangulationError::NotConnected { unreached: v });
    }
    let expected = 3 * n - 6;
    if graph.edge_count() != expected {
        return Err(TriangulationError::EdgeCount {
            expected,
            found: graph.edge_count(),
        });
    }
    let [a1, a2, a3] = outer;
    if !(graph.has_edge(a1, a2) && graph.has_edge(a2, a3) && graph.has_edge(a1, a3)) {
        return Err(TriangulationError::OuterNotTriangle(outer));
    }
    let faces = rotation.trace_faces();
    if let Some(walk) = faces.iter().find(|w| w.len() != 3) {
        return Err(TriangulationError::FaceNotTriangle { walk: walk.clone() });
    }
    let chi = n as i64 - graph.edge_count() as i64 + faces.len() as i64;
    if chi != 2 {
        return Err(TriangulationError::Euler { chi });
    }
    if rotation.next_dart(a1, a2) != Some((a2, a3)) || rotation.next_dart(a2, a3) != Some((a3, a1))
    {
        return Err(TriangulationError::OuterNotFace(outer));
    }
    Ok(Triangulation {
        graph,
        rotation,
        outer,
    })
}

/// Reconstructs the rotation system of a maximal planar graph from its
/// neighbourhoods: the list at each vertex is the unique Hamiltonian cycle of
/// the subgraph induced by its neighbours. Lists are then oriented so that
/// `outer` traces as `a1 -> a2 -> a3`.
pub fn recover_rotation(
    graph: &SimpleGraph,
    outer: [VertexId; 3],
) -> Result<RotationSystem, TriangulationError> {
    let n = graph.vertex_count();
    if n < 3 {
        return Err(TriangulationError::TooSmall { n });
    }
    check_outer_triangle(graph, outer)?;
    let mut cycles = RotationSystem::new();
    for v in graph.vertices() {
        let nbrs: Vec<VertexId> = graph.neighbors(v).collect();
        if nbrs.len() == 2 && graph.has_edge(nbrs[0], nbrs[1]) {
            cycles.set(v, nbrs);
            continue;
        }
        let adj: Vec<Vec<bool>> = nbrs
            .iter()
            .map(|&x| nbrs.iter().map(|&y| graph.has_edge(x, y)).collect())
            .collect();
        let found = count_cycles(&adj, 2);
        match (found.count, found.first) {
            (1, Some(cycle)) => cycles.set(v, cycle.into_iter().map(|k| nbrs[k]).collect()),
            (count, _) => return Err(TriangulationError::NeighborhoodCycles { vertex: v, count }),
        }
    }
    orient(graph, cycles, outer)
}

/// Builds the rotation system from an unoriented list of faces.
pub fn rotation_from_faces(
    graph: &SimpleGraph,
    faces: &[[VertexId; 3]],
    outer: [VertexId; 3],
) -> Result<RotationSystem, TriangulationError> {
    let n = graph.vertex_count();
    if n < 3 {
        return Err(TriangulationError::TooSmall { n });
    }
    check_outer_triangle(graph, outer)?;
    let mut links: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new(); graph.capacity()];
    for &[x, y, z] in faces {
        for (v, p, q) in [(x, y, z), (y, z, x), (z, x, y)] {
            if !graph.has_edge(v, p) || !graph.has_edge(v, q) || !graph.has_edge(p, q) {
                return Err(GraphError::NotAnEdge(p, q).into());
            }
            links[v.index()].push((p, q));
        }
    }
    let mut cycles = RotationSystem::new();
    for v in graph.vertices() {
        let link = &links[v.index()];
        let deg = graph.degree(v);
        let mismatch = TriangulationError::RotationMismatch { vertex: v };
        if link.len() != deg || deg < 2 {
            return Err(mismatch);
        }
        let start = link[0].0;
        let mut cycle = vec![start];
        let (mut prev, mut cur) = (start, link[0].1);
        while cur != start {
            if cycle.len() >= deg {
                return Err(mismatch);
            }
            cycle.push(cur);
            let next = link
                .iter()
                .find_map(|&(p, q)| {
                    if p == cur && q != prev {
                        Some(q)
                    } else if q == cur && p != prev {
                        Some(p)
                    } else {
                        None
                    }
                })
                .ok_or_else(|| mismatch.clone())?;
            (prev, cur) = (cur, next);
        }
        if cycle.len() != deg {
            return Err(mismatch);
        }
        cycles.set(v, cycle);
    }
    orient(graph, cycles, outer)
}

fn check_outer_triangle(
    graph: &SimpleGraph,
    outer: [VertexId; 3],
) -> Result<(), TriangulationError> {
    let [a1, a2, a3] = outer;
    let distinct = a1 != a2 && a2 != a3 && a1 != a3;
    if !distinct || !(graph.has_edge(a1, a2) && graph.has_edge(a2, a3) && graph.has_edge(a1, a3)) {
        return Err(TriangulationError::OuterNotTriangle(outer));
    }
    Ok(())
}

/// Orients unoriented neighbour cycles consistently, starting from `a1`.
///
/// A consistent orientation satisfies `succ_v(succ_u(v)) = u` on every dart
/// `u -> v`.
fn orient(
    graph: &SimpleGraph,
    mut cycles: RotationSystem,
    outer: [VertexId; 3],
) -> Result<RotationSystem, TriangulationError> {
    let [a1, a2, a3] = outer;
    if cycles.succ(a1, a2) != Some(a3) {
        if cycles.pred(a1, a2) == Some(a3) {
            let rev: Vec<VertexId> = cycles.get(a1).iter().rev().copied().collect();
            cycles.set(a1, rev);
        } else {
            return Err(TriangulationError::OuterNotFace(outer));
        }
    }
    let mut oriented = vec![false; graph.capacity()];
    oriented[a1.index()] = true;
    let mut queue = VecDeque::from([a1]);
    while let Some(u) = queue.pop_front() {
        for &v in cycles.get(u).to_vec().iter() {
            let x = cycles.succ(u, v).expect("v in list at u");
            if cycles.succ(v, x) == Some(u) {
                // already consistent
            } else if !oriented[v.index()] && cycles.pred(v, x) == Some(u) {
                let rev: Vec<VertexId> = cycles.get(v).iter().rev().copied().collect();
                cycles.set(v, rev);
            } else {
                return Err(TriangulationError::OrientationConflict { u, v });
            }
            if !oriented[v.index()] {
                oriented[v.index()] = true;
                queue.push_back(v);
            }
        }
    }
    if let Some(v) = graph.vertices().find(|v| !oriented[v.index()]) {
        return Err(TriangulationError::NotConnected { unreached: v });
    }
    Ok(cycles)
}

/// A neighbour `w_i` of `a1` sharing exactly the two neighbours
/// `w_{i-1}, w_{i+1}` with it, where `w_0 .. w_{m+1}` is the neighbour
/// cycle of `a1` from `a3` to `a2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Contractible {
    pub vertex: VertexId,
    pub index: usize,
    pub left: VertexId,
    pub right: VertexId,
}

impl Triangulation {
    /// Recovers the rotation system and validates.
    pub fn from_graph(
        graph: SimpleGraph,
        outer: [VertexId; 3],
    ) -> Result<Self, TriangulationError> {
        let rotation = recover_rotation(&graph, outer)?;
        validate_triangulation(graph, rotation, outer)
    }

    pub fn from_faces(
        graph: SimpleGraph,
        faces: &[[VertexId; 3]],
        outer: [VertexId; 3],
    ) -> Result<Self, TriangulationError> {
        let rotation = rotation_from_faces(&graph, faces, outer)?;
        validate_triangulation(graph, rotation, outer)
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rotation
    }

    pub fn outer(&self) -> [VertexId; 3] {
        self.outer
    }

    pub fn a1(&self) -> VertexId {
        self.outer[0]
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn into_parts(self) -> (SimpleGraph, RotationSystem, [VertexId; 3]) {
        (self.graph, self.rotation, self.outer)
    }

    /// Same graph and outer triangle, rotations equal up to a global mirror.
    pub fn equal_up_to_reflection(&self, other: &Self) -> bool {
        let mut a = self.outer;
        let mut b = other.outer;
        a.sort();
        b.sort();
        a == b && self.graph == other.graph && self.rotation.equal_up_to_reflection(&other.rotation)
    }

    /// The rotation at `v` as a list. For `a1` it starts at `a3` and ends at
    /// `a2`; for any other vertex it starts at its smallest neighbour.
    pub fn neighbor_cycle(&self, v: VertexId) -> Vec<VertexId> {
        let list = self.rotation.get(v);
        let first = if v == self.a1() {
            self.outer[2]
        } else {
            match list.iter().min() {
                Some(&m) => m,
                None => return Vec::new(),
            }
        };
        rotate_to(list, first).unwrap_or_default()
    }

    /// Picks the vertex to contract into `a1`.
    ///
    /// With `C0 = w_0 .. w_{m+1}` the neighbour cycle of `a1`, a chord is an
    /// edge `w_p w_q` with `q - p >= 2` other than `w_0 w_{m+1}`. Without
    /// chords the choice is `w_1`; otherwise it is `w_{p+1}` for the chord
    /// minimising `q - p`, smallest `p` first.
    pub fn select_contractible(&self) -> Result<Contractible, TriangulationError> {
        let n = self.vertex_count();
        if n < 5 {
            return Err(TriangulationError::NeedVertices { need: 5, n });
        }
        let a1 = self.a1();
        let c0 = self.neighbor_cycle(a1);
        let len = c0.len();
        let mut pos = vec![usize::MAX; self.graph.capacity()];
        for (k, &w) in c0.iter().enumerate() {
            pos[w.index()] = k;
        }
        let mut best: Option<(usize, usize)> = None;
        for (p, &w) in c0.iter().enumerate() {
            for u in self.graph.neighbors(w) {
                let q = pos[u.index()];
                if q == usize::MAX || q < p + 2 || (p == 0 && q == len - 1) {
                    continue;
                }
                let gap = q - p;
                if best.is_none_or(|(g, bp)| gap < g || (gap == g && p < bp)) {
                    best = Some((gap, p));
                }
            }
        }
        let index = best.map_or(1, |(_, p)| p + 1);
        let (vertex, left, right) = (c0[index], c0[index - 1], c0[index + 1]);
        let mut common = self.graph.common_neighbors(a1, vertex);
        common.sort();
        let mut expected = vec![left, right];
        expected.sort();
        if common != expected {
            return Err(TriangulationError::NoContractible);
        }
        Ok(Contractible {
            vertex,
            index,
            left,
            right,
        })
    }

    /// Contracts the edge `a1 w` into `a1` and validates the result.
    pub fn contract(&self, w: VertexId) -> Result<Triangulation, TriangulationError> {
        let mut t = self.clone();
        t.contract_in_place(w)?;
        let (graph, rotation, outer) = t.into_parts();
        validate_triangulation(graph, rotation, outer)
    }

    /// Splices the fan of `w` into the rotation at `a1`.
    ///
    /// The list at `w` read from `a1` is `a1, z_0, .., z_{d+1}` with
    /// `z_0 = w_{i-1}` and `z_{d+1} = w_{i+1}`; `z_1 .. z_d` replace `w` at
    /// `a1` and `a1` replaces `w` at each of them.
    pub(crate) fn contract_in_place(&mut self, w: VertexId) -> Result<(), TriangulationError> {
        let a1 = self.a1();
        if self.outer.contains(&w) {
            return Err(TriangulationError::OuterVertex(w));
        }
        if !self.graph.has_edge(a1, w) {
            return Err(GraphError::NotAnEdge(a1, w).into());
        }
        let fan = rotate_to(self.rotation.get(w), a1).expect("a1 adjacent to w");
        let (first, last) = (fan[1], fan[fan.len() - 1]);
        if self.rotation.pred(a1, w) != Some(first) || self.rotation.succ(a1, w) != Some(last) {
            return Err(TriangulationError::OrientationConflict { u: a1, v: w });
        }
        let inner = &fan[2..fan.len() - 1];
        if let Some(&z) = inner.iter().find(|&&z| self.graph.has_edge(a1, z)) {
            return Err(TriangulationError::ParallelEdge { vertex: w, via: z });
        }
        let at = self.rotation.position(a1, w).expect("w in list at a1");
        self.rotation
            .list_mut(a1)
            .splice(at..=at, inner.iter().copied());
        for &z in inner {
            self.rotation.replace(z, w, a1);
        }
        self.rotation.remove(first, w);
        self.rotation.remove(last, w);
        self.rotation.clear(w);
        self.graph.remove_vertex(w)?;
        for &z in inner {
            self.graph.add_edge(a1, z)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn k4_validates() {
        let t = corpus::k4();
        assert_eq!(t.edge_count(), 6);
        assert_eq!(t.rotation().trace_faces().len(), 4);
        assert_eq!(t.neighbor_cycle(v(0)), vec![v(2), v(3), v(1)]);
    }

    #[test]
    fn k4_minus_edge_fails_on_edge_count() {
        let t = corpus::k4();
        let (mut g, mut r, outer) = t.into_parts();
        g.remove_edge(v(0), v(3)).unwrap();
        r.remove(v(0), v(3));
        r.remove(v(3), v(0));
        assert_eq!(
            validate_triangulation(g, r, outer),
            Err(TriangulationError::EdgeCount {
                expected: 6,
                found: 5
            })
        );
    }

    #[test]
    fn octahedron_from_any_outer_face() {
        let t = corpus::octahedron();
        assert_eq!(t.vertex_count(), 6);
        assert_eq!(t.edge_count(), 12);
        for face in t.rotation().trace_faces() {
            let outer = [face[0], face[1], face[2]];
            let s = Triangulation::from_graph(t.graph().clone(), outer).unwrap();
            for u in s.graph().vertices() {
                assert_eq!(s.neighbor_cycle(u).len(), 4);
            }
        }
    }

    #[test]
    fn reversed_outer_is_a_different_orientation() {
        let t = corpus::octahedron();
        let [a1, a2, a3] = t.outer();
        let s = Triangulation::from_graph(t.graph().clone(), [a1, a3, a2]).unwrap();
        assert!(s.rotation().cyclically_equal(&t.rotation().reversed()));
        let (g, r, _) = t.into_parts();
        assert_eq!(
            validate_triangulation(g, r, [a1, a3, a2]),
            Err(TriangulationError::OuterNotFace([a1, a3, a2]))
        );
    }

    #[test]
    fn icosahedron_recovers() {
        let t = corpus::icosahedron();
        assert_eq!(t.rotation().trace_faces().len(), 20);
        assert_eq!(t.edge_count(), 30);
    }

    #[test]
    fn k33_has_no_triangle() {
        let g = SimpleGraph::from_edges(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_eq!(
            recover_rotation(&g, [v(0), v(1), v(3)]),
            Err(TriangulationError::OuterNotTriangle([v(0), v(1), v(3)]))
        );
    }

    #[test]
    fn k5_neighbourhoods_are_ambiguous() {
        let edges: Vec<_> = (0..5u32)
            .flat_map(|u| (u + 1..5).map(move |w| (u, w)))
            .collect();
        let g = SimpleGraph::from_edges(5, &edges).unwrap();
        assert!(matches!(
            recover_rotation(&g, [v(0), v(1), v(2)]),
            Err(TriangulationError::NeighborhoodCycles { count: 2, .. })
        ));
    }

    #[test]
    fn faces_route_matches_recovery() {
        let t = corpus::icosahedron();
        let faces: Vec<[VertexId; 3]> = t
            .rotation()
            .trace_faces()
            .into_iter()
            .map(|f| [f[0], f[2], f[1]])
            .collect();
        let s = Triangulation::from_faces(t.graph().clone(), &faces, t.outer()).unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn octahedron_is_chordless() {
        let t = corpus::octahedron();
        let c = t.select_contractible().unwrap();
        assert_eq!(c.index, 1);
        let c0 = t.neighbor_cycle(t.a1());
        assert_eq!(c.vertex, c0[1]);
        let s = t.contract(c.vertex).unwrap();
        assert_eq!(s.vertex_count(), 5);
        assert_eq!(s.edge_count(), 9);
        assert_eq!(s.rotation().trace_faces().len(), 6);
    }

    #[test]
    fn select_prefers_shortest_chord() {
        // K4 on 0,1,2,3 with 4 stacked into face (0,2,3): the cycle at a1 = 0
        // is 2,4,3,1 with chord 2-3 of gap 2, so w_1 = 4 is chosen.
        let t = corpus::stacked_k4_plus_one();
        let c0 = t.neighbor_cycle(v(0));
        assert_eq!(c0, vec![v(2), v(4), v(3), v(1)]);
        let c = t.select_contractible().unwrap();
        assert_eq!(
            c,
            Contractible {
                vertex: v(4),
                index: 1,
                left: v(2),
                right: v(3)
            }
        );
        assert_eq!(t.graph().common_neighbors(v(0), v(4)), vec![v(2), v(3)]);
        let s = t.contract(v(4)).unwrap();
        assert!(s.equal_up_to_reflection(&corpus::k4()));
        assert_eq!(s, corpus::k4());
    }

    #[test]
    fn contract_rejects_bad_vertices() {
        let t = corpus::octahedron();
        assert_eq!(t.contract(v(1)), Err(TriangulationError::OuterVertex(v(1))));
        assert_eq!(
            t.contract(v(5)),
            Err(GraphError::NotAnEdge(v(0), v(5)).into())
        );
        // Contracting the inner vertex of K4 leaves the outer triangle.
        let k3 = corpus::k4().contract(v(3)).unwrap();
        assert_eq!(k3.vertex_count(), 3);
        assert_eq!(k3.rotation().trace_faces().len(), 2);
    }
}
