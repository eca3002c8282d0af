#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schnyder::oracle::random_stacked_triangulation;
use schnyder::{Triangulation, VertexId};

/// A stacked triangulation followed by `flips` random edge flips, so that
/// degree-3 vertices are no longer guaranteed. The rotation of the result is
/// recovered from its graph.
pub fn flipped_triangulation(n: usize, seed: u64, flips: usize) -> Triangulation {
    let t = random_stacked_triangulation(n, seed).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let outer = t.outer();
    let mut cur = t;
    for _ in 0..flips {
        let edges = cur.graph().edges();
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        if outer.contains(&u) && outer.contains(&v) {
            continue;
        }
        let rot = cur.rotation();
        let x = rot.pred(v, u).unwrap();
        let y = rot.pred(u, v).unwrap();
        if x == y || cur.graph().has_edge(x, y) {
            continue;
        }
        // Keep every vertex at degree 3 or more.
        if cur.graph().degree(u) <= 3 || cur.graph().degree(v) <= 3 {
            continue;
        }
        let mut g = cur.graph().clone();
        g.remove_edge(u, v).unwrap();
        g.add_edge(x, y).unwrap();
        cur = Triangulation::from_graph(g, outer).expect("a flip keeps a triangulation");
    }
    cur
}

pub fn vid(i: u32) -> VertexId {
    VertexId(i)
}
