//! Brute-force machinery for small instances, independent of the realizer
//! and embedder: exhaustive representation search, exhaustive rotation
//! search, and a seeded generator of stacked triangulations.
//!
//! The generator uses ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`),
//! which is portable and reproducible across platforms for a given seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, TriangulationError};
use crate::graph::SimpleGraph;
use crate::orders::{LinearOrder, StandardRepresentation};
use crate::rotation::RotationSystem;
use crate::triangulation::{validate_triangulation, Triangulation};
use crate::vertex::VertexId;

pub const DEFAULT_CAP: usize = 7;

/// All permutations of `items` in lexicographic order of the input order.
fn permutations(items: &[VertexId]) -> Vec<Vec<VertexId>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (k, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Every sequence for order `i` that can be part of a standard
/// representation with apexes `outer`: the other two apexes first, then the
/// remaining vertices, then `outer[i]`. Lexicographic in vertex ids.
fn standard_candidates(
    vertices: &[VertexId],
    outer: [VertexId; 3],
    i: usize,
) -> Vec<Vec<VertexId>> {
    let mut others: Vec<VertexId> = (0..3).filter(|&j| j != i).map(|j| outer[j]).collect();
    others.sort();
    let mut inner: Vec<VertexId> = vertices
        .iter()
        .copied()
        .filter(|v| !outer.contains(v))
        .collect();
    inner.sort();
    let inner_perms = permutations(&inner);
    let mut out = Vec::new();
    for (x, y) in [(others[0], others[1]), (others[1], others[0])] {
        for p in &inner_perms {
            let mut seq = vec![x, y];
            seq.extend_from_slice(p);
            seq.push(outer[i]);
            out.push(seq);
        }
    }
    out
}

fn rank_table(seq: &[VertexId], cap: usize) -> Vec<usize> {
    let mut r = vec![usize::MAX; cap];
    for (k, v) in seq.iter().enumerate() {
        r[v.index()] = k;
    }
    r
}

/// Extends `prefix` of order 3 one position at a time, rejecting any vertex
/// that would lie above an earlier one in all three orders. Calls `visit`
/// on each complete order in lexicographic order; stops when it returns
/// `true`.
fn extend_third(
    prefix: &mut Vec<VertexId>,
    pool: &mut Vec<VertexId>,
    last: VertexId,
    r1: &[usize],
    r2: &[usize],
    visit: &mut dyn FnMut(&[VertexId]) -> bool,
) -> bool {
    let dominated = |y: VertexId, prefix: &[VertexId]| {
        prefix
            .iter()
            .any(|&x| r1[x.index()] < r1[y.index()] && r2[x.index()] < r2[y.index()])
    };
    if pool.is_empty() {
        if dominated(last, prefix) {
            return false;
        }
        prefix.push(last);
        let stop = visit(prefix);
        prefix.pop();
        return stop;
    }
    for k in 0..pool.len() {
        let y = pool[k];
        if dominated(y, prefix) {
            continue;
        }
        pool.remove(k);
        prefix.push(y);
        let stop = extend_third(prefix, pool, last, r1, r2, visit);
        prefix.pop();
        pool.insert(k, y);
        if stop {
            return true;
        }
    }
    false
}

/// Literal check that `xy` spans iff it is an edge of `g`, for all pairs.
fn spans_exactly(g: &SimpleGraph, vertices: &[VertexId], ranks: [&[usize]; 3]) -> bool {
    for (i, &x) in vertices.iter().enumerate() {
        for &y in &vertices[i + 1..] {
            let spans = vertices.iter().all(|&z| {
                z == x
                    || z == y
                    || ranks
                        .iter()
                        .any(|r| r[z.index()] > r[x.index()] && r[z.index()] > r[y.index()])
            });
            if spans != g.has_edge(x, y) {
                return false;
            }
        }
    }
    true
}

fn build_rep(seqs: [&[VertexId]; 3]) -> StandardRepresentation {
    let orders = seqs.map(|s| LinearOrder::new(s.to_vec()).expect("permutation"));
    StandardRepresentation::validate(orders).expect("search only yields valid triples")
}

/// Walks all valid standard triples with apexes `outer` over `vertices`,
/// for a fixed first order, in lexicographic order of `(order 2, order 3)`.
fn scan_with_first(
    vertices: &[VertexId],
    outer: [VertexId; 3],
    o1: &[VertexId],
    cands2: &[Vec<VertexId>],
    visit: &mut dyn FnMut(&[VertexId], &[VertexId]) -> bool,
) -> bool {
    let cap = vertices.iter().map(|v| v.index() + 1).max().unwrap_or(0);
    let r1 = rank_table(o1, cap);
    let mut others = [outer[0], outer[1]];
    others.sort();
    let mut inner: Vec<VertexId> = vertices
        .iter()
        .copied()
        .filter(|v| !outer.contains(v))
        .collect();
    inner.sort();
    for o2 in cands2 {
        let r2 = rank_table(o2, cap);
        for (x, y) in [(others[0], others[1]), (others[1], others[0])] {
            let mut prefix = vec![x, y];
            if r1[x.index()] < r1[y.index()] && r2[x.index()] < r2[y.index()] {
                continue;
            }
            let mut pool = inner.clone();
            let stop = extend_third(&mut prefix, &mut pool, outer[2], &r1, &r2, &mut |o3| {
                visit(o2, o3)
            });
            if stop {
                return true;
            }
        }
    }
    false
}

/// Lexicographically first standard representation with apexes `outer`
/// whose graph is exactly `g`, or `None` if there is none.
///
/// Order-1 candidates are searched in parallel; the result is the first in
/// enumeration order regardless of scheduling.
pub fn search_representation(
    g: &SimpleGraph,
    outer: [VertexId; 3],
    cap: usize,
) -> Result<Option<StandardRepresentation>, Error> {
    let vertices: Vec<VertexId> = g.vertices().collect();
    let n = vertices.len();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let [a1, a2, a3] = outer;
    if n < 3 || a1 == a2 || a2 == a3 || a1 == a3 || !outer.iter().all(|&a| g.contains(a)) {
        return Ok(None);
    }
    let cands1 = standard_candidates(&vertices, outer, 0);
    let cands2 = standard_candidates(&vertices, outer, 1);
    let cap_ids = g.capacity();
    let found = cands1.par_iter().find_map_first(|o1| {
        let r1 = rank_table(o1, cap_ids);
        let mut hit = None;
        scan_with_first(&vertices, outer, o1, &cands2, &mut |o2, o3| {
            let r2 = rank_table(o2, cap_ids);
            let r3 = rank_table(o3, cap_ids);
            if spans_exactly(g, &vertices, [&r1, &r2, &r3]) {
                hit = Some(build_rep([o1, o2, o3]));
                true
            } else {
                false
            }
        });
        hit
    });
    Ok(found)
}

/// Every standard representation of `vertices` with apexes `outer`, in
/// lexicographic order.
pub fn all_standard_representations(
    vertices: &[VertexId],
    outer: [VertexId; 3],
) -> Vec<StandardRepresentation> {
    let cands1 = standard_candidates(vertices, outer, 0);
    let cands2 = standard_candidates(vertices, outer, 1);
    let mut out = Vec::new();
    for o1 in &cands1 {
        scan_with_first(vertices, outer, o1, &cands2, &mut |o2, o3| {
            out.push(build_rep([o1, o2, o3]));
            false
        });
    }
    out
}

/// Decides whether `g` has a planar triangular embedding with `outer` as a
/// face by trying every rotation system. Exponential; small graphs only.
pub fn embeds_as_triangulation(g: &SimpleGraph, outer: [VertexId; 3]) -> bool {
    let n = g.vertex_count();
    if n < 3 || g.edge_count() != 3 * n - 6 || g.first_unreachable().is_some() {
        return false;
    }
    let [a1, a2, a3] = outer;
    let outer_ok = a1 != a2 && a2 != a3 && a1 != a3;
    if !outer_ok || !(g.has_edge(a1, a2) && g.has_edge(a2, a3) && g.has_edge(a1, a3)) {
        return false;
    }
    let vertices: Vec<VertexId> = g.vertices().collect();
    // Cyclic orders at each vertex: fix the smallest neighbour first.
    let choices: Vec<Vec<Vec<VertexId>>> = vertices
        .iter()
        .map(|&v| {
            let nbrs: Vec<VertexId> = g.neighbors(v).collect();
            match nbrs.split_first() {
                Some((&first, rest)) => permutations(rest)
                    .into_iter()
                    .map(|mut p| {
                        p.insert(0, first);
                        p
                    })
                    .collect(),
                None => vec![Vec::new()],
            }
        })
        .collect();
    let mut pick = vec![0usize; vertices.len()];
    loop {
        let mut rot = RotationSystem::new();
        for (k, &v) in vertices.iter().enumerate() {
            rot.set(v, choices[k][pick[k]].clone());
        }
        let faces = rot.trace_faces();
        let chi = n as i64 - g.edge_count() as i64 + faces.len() as i64;
        if chi == 2 && faces.iter().all(|f| f.len() == 3) {
            let has_outer = faces.iter().any(|f| {
                let mut s = f.clone();
                s.sort();
                let mut o = outer.to_vec();
                o.sort();
                s == o
            });
            if has_outer {
                return true;
            }
        }
        // odometer
        let mut k = 0;
        loop {
            if k == pick.len() {
                return false;
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

/// Stacked triangulation on `n` vertices labeled `0..n` with outer triangle
/// `(0, 1, 2)`: start from K4 and repeatedly place a new vertex inside a
/// uniformly chosen bounded face.
pub fn random_stacked_triangulation(n: usize, seed: u64) -> Result<Triangulation, Error> {
    if n < 4 {
        return Err(TriangulationError::NeedVertices { need: 4, n }.into());
    }
    let v = VertexId;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graph = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)])?;
    let mut rotation = RotationSystem::new();
    rotation.set(v(0), vec![v(1), v(2), v(3)]);
    rotation.set(v(1), vec![v(2), v(0), v(3)]);
    rotation.set(v(2), vec![v(3), v(0), v(1)]);
    rotation.set(v(3), vec![v(0), v(2), v(1)]);
    // Bounded faces of K4 as traced walks.
    let mut faces: Vec<[VertexId; 3]> =
        vec![[v(0), v(2), v(3)], [v(0), v(3), v(1)], [v(1), v(3), v(2)]];
    for k in 4..n {
        let new = VertexId::from(k);
        let idx = rng.gen_range(0..faces.len());
        let [x, y, z] = faces[idx];
        rotation.insert_after(y, z, new);
        rotation.insert_after(z, x, new);
        rotation.insert_after(x, y, new);
        rotation.set(new, vec![x, y, z]);
        graph.add_vertex(new);
        for u in [x, y, z] {
            graph.add_edge(new, u)?;
        }
        faces[idx] = [x, y, new];
        faces.push([y, z, new]);
        faces.push([z, x, new]);
    }
    Ok(validate_triangulation(graph, rotation, [v(0), v(1), v(2)])?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::sigma::sigma2;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    const OUTER: [VertexId; 3] = [VertexId(0), VertexId(1), VertexId(2)];

    #[test]
    fn permutations_are_lexicographic() {
        let p = permutations(&[v(1), v(2), v(3)]);
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], vec![v(1), v(2), v(3)]);
        assert_eq!(p[1], vec![v(1), v(3), v(2)]);
        assert_eq!(p[5], vec![v(3), v(2), v(1)]);
    }

    #[test]
    fn search_finds_k4() {
        let t = corpus::k4();
        let r = search_representation(t.graph(), OUTER, DEFAULT_CAP)
            .unwrap()
            .unwrap();
        assert_eq!(sigma2(&r), *t.graph());
        assert_eq!(r.apexes(), OUTER);
    }

    #[test]
    fn k5_and_four_cycle_have_none() {
        let edges: Vec<_> = (0..5u32)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .collect();
        let k5 = SimpleGraph::from_edges(5, &edges).unwrap();
        assert!(search_representation(&k5, OUTER, DEFAULT_CAP)
            .unwrap()
            .is_none());
        let c4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(search_representation(&c4, [v(0), v(1), v(2)], DEFAULT_CAP)
            .unwrap()
            .is_none());
    }

    #[test]
    fn cap_is_enforced() {
        let t = random_stacked_triangulation(8, 1).unwrap();
        assert!(matches!(
            search_representation(t.graph(), OUTER, DEFAULT_CAP),
            Err(Error::CapExceeded { n: 8, cap: 7 })
        ));
    }

    #[test]
    fn enumeration_counts_small_universes() {
        // Three vertices: only the two leading apexes of each order can
        // swap, and each apex beats the others in its own order.
        let reps = all_standard_representations(&[v(0), v(1), v(2)], OUTER);
        assert_eq!(reps.len(), 8);
        assert!(reps.iter().all(|r| sigma2(r) == *corpus::k3().graph()));
        let reps = all_standard_representations(&[v(0), v(1), v(2), v(3)], OUTER);
        assert!(!reps.is_empty());
        assert!(reps.iter().all(|r| sigma2(r) == *corpus::k4().graph()));
    }

    #[test]
    fn stacked_generator_is_deterministic() {
        assert_eq!(random_stacked_triangulation(4, 9).unwrap(), corpus::k4());
        let t = random_stacked_triangulation(10, 7).unwrap();
        assert_eq!(t.edge_count(), 24);
        assert_eq!(t, random_stacked_triangulation(10, 7).unwrap());
        assert!(random_stacked_triangulation(3, 0).is_err());
    }

    #[test]
    fn brute_force_embedding_on_known_graphs() {
        assert!(embeds_as_triangulation(corpus::octahedron().graph(), OUTER));
        assert!(embeds_as_triangulation(
            corpus::k5_minus_edge().graph(),
            OUTER
        ));
        // In K5 minus 3-4 the triangle 012 separates 3 from 4.
        let sep = SimpleGraph::from_edges(
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
                (2, 4),
            ],
        )
        .unwrap();
        assert!(!embeds_as_triangulation(&sep, OUTER));
        assert!(embeds_as_triangulation(&sep, [v(0), v(1), v(3)]));
    }
}
