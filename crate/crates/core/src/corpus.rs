//! Hand-coded triangulations used throughout the tests. All have outer
//! triangle `(0, 1, 2)`.

use crate::graph::SimpleGraph;
use crate::triangulation::Triangulation;
use crate::vertex::VertexId;

const OUTER: [VertexId; 3] = [VertexId(0), VertexId(1), VertexId(2)];

fn build(n: usize, edges: &[(u32, u32)]) -> Triangulation {
    let g = SimpleGraph::from_edges(n, edges).expect("well-formed corpus edges");
    Triangulation::from_graph(g, OUTER).expect("corpus graph is a triangulation")
}

pub fn k3() -> Triangulation {
    build(3, &[(0, 1), (1, 2), (0, 2)])
}

/// K4 with inner vertex 3.
pub fn k4() -> Triangulation {
    build(4, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)])
}

/// K4 with vertex 4 stacked into the face `0 2 3`.
pub fn stacked_k4_plus_one() -> Triangulation {
    build(
        5,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (0, 3),
            (1, 3),
            (2, 3),
            (0, 4),
            (2, 4),
            (3, 4),
        ],
    )
}

/// Octahedron with antipodal pairs `{0, 5}`, `{1, 3}`, `{2, 4}`.
pub fn octahedron() -> Triangulation {
    build(
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (5, 1),
            (5, 2),
            (5, 3),
            (5, 4),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
        ],
    )
}

/// Icosahedron: pole 0, upper ring 1..=5, lower ring 6..=10, pole 11.
pub fn icosahedron() -> Triangulation {
    let mut edges = Vec::new();
    for i in 0..5u32 {
        let (up, up_next) = (1 + i, 1 + (i + 1) % 5);
        let (lo, lo_next) = (6 + i, 6 + (i + 1) % 5);
        edges.extend([
            (0, up),
            (up, up_next),
            (lo, lo_next),
            (11, lo),
            (up, lo),
            (up, lo_next),
        ]);
    }
    build(12, &edges)
}

/// K5 minus the edge `2 4`: the unique triangulation on five vertices up to
/// relabeling.
pub fn k5_minus_edge() -> Triangulation {
    build(
        5,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (3, 4),
        ],
    )
}
