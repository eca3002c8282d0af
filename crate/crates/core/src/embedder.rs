//! Standard representation to planar triangulation.
//!
//! Vertices are added in order-1 rank order. Each new vertex `b` is the
//! second-largest element of order 1 among the vertices present so far, so
//! the embedding built so far is that of the representation with `b`
//! suppressed. `b` goes inside the region bounded by `a1 z_0 .. z_{d+1}`,
//! taking over the edges `a1 z_j` for `1 <= j <= d`.

use crate::error::Error;
use crate::graph::{triple, SimpleGraph, Triple, TripleSet};
use crate::orders::StandardRepresentation;
use crate::rotation::{rotate_to, RotationSystem};
use crate::triangulation::{validate_triangulation, Triangulation};
use crate::vertex::VertexId;

struct Growing {
    graph: SimpleGraph,
    rotation: RotationSystem,
}

pub fn embed(rep: &StandardRepresentation) -> Result<Triangulation, Error> {
    let [a1, a2, a3] = rep.apexes();
    let seq = rep.order(0).as_slice();
    let n = seq.len();
    let mut state = if n == 3 {
        base_triangle(a1, a2, a3)
    } else {
        base_k4(a1, a2, a3, seq[2])
    };
    for &b in &seq[3.min(n - 1)..n - 1] {
        state.insert(rep, b)?;
    }
    Ok(validate_triangulation(
        state.graph,
        state.rotation,
        [a1, a2, a3],
    )?)
}

fn base_triangle(a1: VertexId, a2: VertexId, a3: VertexId) -> Growing {
    let mut graph = SimpleGraph::with_vertices([a1, a2, a3]);
    for (x, y) in [(a1, a2), (a2, a3), (a1, a3)] {
        graph.add_edge(x, y).expect("distinct apexes");
    }
    let mut rotation = RotationSystem::new();
    rotation.set(a1, vec![a2, a3]);
    rotation.set(a2, vec![a3, a1]);
    rotation.set(a3, vec![a1, a2]);
    Growing { graph, rotation }
}

fn base_k4(a1: VertexId, a2: VertexId, a3: VertexId, v: VertexId) -> Growing {
    let mut g = base_triangle(a1, a2, a3);
    g.graph.add_vertex(v);
    for x in [a1, a2, a3] {
        g.graph.add_edge(v, x).expect("fresh vertex");
    }
    g.rotation.set(a1, vec![a2, a3, v]);
    g.rotation.set(a2, vec![a3, a1, v]);
    g.rotation.set(a3, vec![v, a1, a2]);
    g.rotation.set(v, vec![a1, a3, a2]);
    g
}

impl Growing {
    fn insert(&mut self, rep: &StandardRepresentation, b: VertexId) -> Result<(), Error> {
        let [a1, _, a3] = rep.apexes();
        let (o2, o3) = (rep.order(1), rep.order(2));
        let fan = rotate_to(self.rotation.get(a1), a3).expect("a3 adjacent to a1");
        // The fan is increasing in order 2 and decreasing in order 3.
        let left_at = fan
            .iter()
            .rposition(|&w| o2.lt(w, b))
            .ok_or_else(|| Error::Invariant(format!("no fan vertex below {b} in order 2")))?;
        let right_at = (left_at + 1..fan.len())
            .find(|&k| o3.lt(fan[k], b))
            .ok_or_else(|| Error::Invariant(format!("no fan vertex below {b} in order 3")))?;
        let (left, right) = (fan[left_at], fan[right_at]);
        let inner = &fan[left_at + 1..right_at];

        let mut at_a1 = fan[..=left_at].to_vec();
        at_a1.push(b);
        at_a1.extend_from_slice(&fan[right_at..]);
        self.rotation.set(a1, at_a1);
        self.rotation.insert_before(left, a1, b);
        self.rotation.insert_after(right, a1, b);
        let mut at_b = vec![a1, left];
        at_b.extend_from_slice(inner);
        at_b.push(right);
        self.rotation.set(b, at_b);

        self.graph.add_vertex(b);
        for &z in inner {
            self.rotation.replace(z, a1, b);
            self.graph.remove_edge(a1, z)?;
            self.graph.add_edge(b, z)?;
        }
        for x in [a1, left, right] {
            self.graph.add_edge(b, x)?;
        }
        Ok(())
    }
}

/// All faces of a triangulation in tracing order, with the outer one marked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceList {
    /// Each face as traced: `u -> v -> w -> u`.
    pub faces: Vec<[VertexId; 3]>,
    pub outer: usize,
}

impl FaceList {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn triples(&self) -> TripleSet {
        self.faces
            .iter()
            .map(|&[a, b, c]| triple(a, b, c))
            .collect()
    }

    /// Face triples other than the outer triple. For K3 both faces share
    /// the outer vertex set, so this is empty.
    pub fn bounded(&self) -> TripleSet {
        let mut set = self.triples();
        let [a, b, c] = self.faces[self.outer];
        set.remove(a, b, c);
        set
    }

    pub fn outer_triple(&self) -> Triple {
        let [a, b, c] = self.faces[self.outer];
        triple(a, b, c)
    }
}

pub fn faces(t: &Triangulation) -> FaceList {
    let outer_set = {
        let [a, b, c] = t.outer();
        triple(a, b, c)
    };
    let faces: Vec<[VertexId; 3]> = t
        .rotation()
        .trace_faces()
        .into_iter()
        .map(|w| [w[0], w[1], w[2]])
        .collect();
    let [a1, a2, a3] = t.outer();
    let outer = faces
        .iter()
        .position(|f| {
            triple(f[0], f[1], f[2]) == outer_set && crate::rotation::cyclic_eq(f, &[a1, a2, a3])
        })
        .expect("validated triangulation traces its outer face");
    FaceList { faces, outer }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::orders::LinearOrder;
    use crate::realizer::realize;
    use crate::sigma::{sigma2, sigma3};

    fn rep(orders: [&[u32]; 3]) -> StandardRepresentation {
        StandardRepresentation::validate(
            orders.map(|o| LinearOrder::new(o.iter().map(|&i| VertexId(i)).collect()).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn triangle_embeds_with_two_faces() {
        let r = rep([&[1, 2, 0], &[2, 0, 1], &[0, 1, 2]]);
        let t = embed(&r).unwrap();
        assert_eq!(t, corpus::k3());
        let f = faces(&t);
        assert_eq!(f.len(), 2);
        assert_eq!(f.faces[f.outer], [VertexId(0), VertexId(1), VertexId(2)]);
        assert!(f.bounded().is_empty());
        assert_eq!(f.bounded(), sigma3(&r));
    }

    #[test]
    fn k4_base_matches_one_insertion_step() {
        let r = rep([&[1, 2, 3, 0], &[2, 0, 3, 1], &[0, 1, 3, 2]]);
        let mut grown = base_triangle(VertexId(0), VertexId(1), VertexId(2));
        grown.insert(&r, VertexId(3)).unwrap();
        let hand = base_k4(VertexId(0), VertexId(1), VertexId(2), VertexId(3));
        assert_eq!(grown.rotation, hand.rotation);
        assert_eq!(grown.graph, hand.graph);

        let t = embed(&r).unwrap();
        assert_eq!(t, corpus::k4());
        let f = faces(&t);
        assert_eq!(f.len(), 4);
        assert_eq!(4 - t.edge_count() as i64 + f.len() as i64, 2);
    }

    #[test]
    fn octahedron_faces() {
        let oct = corpus::octahedron();
        let r = realize(&oct).unwrap();
        let t = embed(&r).unwrap();
        assert_eq!(*t.graph(), sigma2(&r));
        assert_eq!(t, oct);
        let f = faces(&t);
        assert_eq!(f.len(), 8);
        for (x, y) in [(0, 5), (1, 3), (2, 4)] {
            assert!(f
                .faces
                .iter()
                .all(|face| !(face.contains(&VertexId(x)) && face.contains(&VertexId(y)))));
        }
        assert_eq!(f.bounded(), sigma3(&r));
    }
}
