//! The graph and triple system spanned by a standard representation, and an
//! executable check of the structure of the neighbourhood of `a1`.

use rayon::prelude::*;

use crate::error::{Error, GraphError};
use crate::graph::{SimpleGraph, TripleSet};
use crate::orders::StandardRepresentation;
use crate::vertex::VertexId;

/// `xy` is an edge iff every other vertex lies above both `x` and `y` in at
/// least one order. Literal cubic scan, partitioned across threads by the
/// first vertex of the pair.
pub fn sigma2(rep: &StandardRepresentation) -> SimpleGraph {
    let mut vs: Vec<VertexId> = rep.vertices().collect();
    vs.sort();
    let edges: Vec<(VertexId, VertexId)> = (0..vs.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let vs = &vs;
            (i + 1..vs.len()).filter_map(move |j| {
                let (x, y) = (vs[i], vs[j]);
                let spans = vs
                    .iter()
                    .all(|&z| z == x || z == y || rep.above_all_in_some(z, &[x, y]));
                spans.then_some((x, y))
            })
        })
        .collect();
    let mut g = SimpleGraph::with_vertices(vs.iter().copied());
    for (x, y) in edges {
        g.add_edge(x, y).expect("distinct vertices of the universe");
    }
    g
}

/// Raw membership predicate for the triple system: every vertex `z`,
/// including `x`, `y`, `w` themselves, lies at or above all three in some
/// order.
pub fn in_sigma3(rep: &StandardRepresentation, x: VertexId, y: VertexId, w: VertexId) -> bool {
    rep.vertices()
        .all(|z| rep.at_or_above_all_in_some(z, &[x, y, w]))
}

/// Triples satisfying [`in_sigma3`], excluding the apex triple.
///
/// Candidates are the triangles of [`sigma2`]: every qualifying triple has
/// all three of its pairs in the graph (take `z` to be the third vertex).
pub fn sigma3(rep: &StandardRepresentation) -> TripleSet {
    sigma3_over(rep, &sigma2(rep))
}

/// [`sigma3`] with a precomputed `sigma2(rep)`.
pub fn sigma3_over(rep: &StandardRepresentation, g: &SimpleGraph) -> TripleSet {
    let [a1, a2, a3] = rep.apexes();
    let mut out = TripleSet::new();
    for (x, y) in g.edges() {
        for w in g.common_neighbors(x, y).into_iter().filter(|&w| w > y) {
            if in_sigma3(rep, x, y, w) {
                out.insert(x, y, w);
            }
        }
    }
    out.remove(a1, a2, a3);
    out
}

/// Contracts the edge `keep`–`remove`; the merged vertex keeps the label
/// `keep`.
pub fn contract_vertex(
    g: &SimpleGraph,
    keep: VertexId,
    remove: VertexId,
) -> Result<SimpleGraph, GraphError> {
    if !g.has_edge(keep, remove) {
        return Err(GraphError::NotAnEdge(keep, remove));
    }
    let mut h = g.clone();
    let moved: Vec<VertexId> = g.neighbors(remove).filter(|&u| u != keep).collect();
    h.remove_vertex(remove)?;
    for u in moved {
        h.add_edge(keep, u)?;
    }
    Ok(h)
}

/// Outcome of one part of the neighbourhood check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartStatus {
    Holds,
    /// The part only applies from four vertices on.
    Vacuous,
    Fails(FanViolation),
}

impl PartStatus {
    pub fn passes(&self) -> bool {
        !matches!(self, PartStatus::Fails(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FanViolation {
    /// `later` follows `earlier` in the fan but is not below it in order 3.
    NotReversedInOrder3 {
        earlier: VertexId,
        later: VertexId,
    },
    WrongEnds {
        first: VertexId,
        last: VertexId,
    },
    /// The gap set between fan positions `index` and `index + 1` contains `z`.
    GapNonEmpty {
        index: usize,
        z: VertexId,
    },
    ConsecutiveNotAdjacent {
        left: VertexId,
        right: VertexId,
    },
    BNotInFan {
        b: VertexId,
    },
    BAtFanEnd {
        b: VertexId,
    },
    CommonNeighbors {
        found: Vec<VertexId>,
    },
    /// `z` is a neighbour of `b` outside the wedge between its fan neighbours.
    OutsideWedge {
        z: VertexId,
    },
    /// Part 6 needs `b` at an interior fan position.
    Unevaluable,
}

/// The neighbours `w0 .. w_{m+1}` of `a1` sorted by order 2, `b` the
/// second-largest element of order 1, and the status of the six checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanReport {
    pub fan: Vec<VertexId>,
    pub b: VertexId,
    pub b_index: Option<usize>,
    pub parts: [PartStatus; 6],
}

impl FanReport {
    pub fn all_pass(&self) -> bool {
        self.parts.iter().all(PartStatus::passes)
    }

    /// First failing part as `(1-based part number, violation)`.
    pub fn first_failure(&self) -> Option<(usize, &FanViolation)> {
        self.parts.iter().enumerate().find_map(|(i, p)| match p {
            PartStatus::Fails(v) => Some((i + 1, v)),
            _ => None,
        })
    }
}

/// Checks the six neighbourhood facts on `g`, which must equal `sigma2(rep)`.
pub fn fan_of_apex(rep: &StandardRepresentation, g: &SimpleGraph) -> Result<FanReport, Error> {
    if *g != sigma2(rep) {
        return Err(Error::NotSigma2);
    }
    Ok(fan_report(rep, g))
}

/// [`fan_of_apex`] without the `sigma2` equality check.
pub(crate) fn fan_report(rep: &StandardRepresentation, g: &SimpleGraph) -> FanReport {
    let [a1, a2, a3] = rep.apexes();
    let (o2, o3) = (rep.order(1), rep.order(2));
    let mut fan: Vec<VertexId> = g.neighbors(a1).collect();
    fan.sort_by_key(|&v| o2.rank_of(v));
    let b = rep.second_max();
    let b_index = fan.iter().position(|&w| w == b);
    let large = rep.len() >= 4;

    let part1 = fan
        .windows(2)
        .find(|p| !o3.lt(p[1], p[0]))
        .map_or(PartStatus::Holds, |p| {
            PartStatus::Fails(FanViolation::NotReversedInOrder3 {
                earlier: p[0],
                later: p[1],
            })
        });

    let (first, last) = (fan[0], fan[fan.len() - 1]);
    let part2 = if first == a3 && last == a2 {
        PartStatus::Holds
    } else {
        PartStatus::Fails(FanViolation::WrongEnds { first, last })
    };

    let mut part3 = PartStatus::Holds;
    'gaps: for (index, p) in fan.windows(2).enumerate() {
        let (lo, hi) = (p[0], p[1]);
        // a1 can sit in the gap of a triangle; the gap ranges over V - a1.
        let mut gap: Vec<VertexId> = rep
            .vertices()
            .filter(|&z| z != a1)
            .filter(|&z| o2.lt(lo, z) && o2.lt(z, hi) && o3.lt(hi, z) && o3.lt(z, lo))
            .collect();
        gap.sort_by_key(|&z| o2.rank_of(z));
        if let Some(&z) = gap.first() {
            part3 = PartStatus::Fails(FanViolation::GapNonEmpty { index, z });
            break 'gaps;
        }
    }

    let part4 = fan
        .windows(2)
        .find(|p| !g.has_edge(p[0], p[1]))
        .map_or(PartStatus::Holds, |p| {
            PartStatus::Fails(FanViolation::ConsecutiveNotAdjacent {
                left: p[0],
                right: p[1],
            })
        });

    let interior = b_index.filter(|&i| i > 0 && i + 1 < fan.len());
    let part5 = match b_index {
        None => PartStatus::Fails(FanViolation::BNotInFan { b }),
        Some(_) if !large => PartStatus::Vacuous,
        Some(_) => match interior {
            None => PartStatus::Fails(FanViolation::BAtFanEnd { b }),
            Some(i) => {
                let found = g.common_neighbors(a1, b);
                let mut expected = vec![fan[i - 1], fan[i + 1]];
                expected.sort();
                if found == expected {
                    PartStatus::Holds
                } else {
                    PartStatus::Fails(FanViolation::CommonNeighbors { found })
                }
            }
        },
    };

    let part6 = if !large {
        PartStatus::Vacuous
    } else if let Some(i) = interior {
        let (prev, next) = (fan[i - 1], fan[i + 1]);
        g.neighbors(b)
            .filter(|&z| z != a1 && z != prev && z != next)
            .find(|&z| !(o2.lt(b, z) && o2.lt(z, next) && o3.lt(b, z) && o3.lt(z, prev)))
            .map_or(PartStatus::Holds, |z| {
                PartStatus::Fails(FanViolation::OutsideWedge { z })
            })
    } else {
        PartStatus::Fails(FanViolation::Unevaluable)
    };

    FanReport {
        fan,
        b,
        b_index,
        parts: [part1, part2, part3, part4, part5, part6],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::LinearOrder;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn rep(orders: [&[u32]; 3]) -> StandardRepresentation {
        StandardRepresentation::validate(
            orders.map(|o| LinearOrder::new(o.iter().map(|&i| v(i)).collect()).unwrap()),
        )
        .unwrap()
    }

    fn triangle() -> StandardRepresentation {
        rep([&[1, 2, 0], &[2, 0, 1], &[0, 1, 2]])
    }

    fn k4() -> StandardRepresentation {
        rep([&[1, 2, 3, 0], &[2, 0, 3, 1], &[0, 1, 3, 2]])
    }

    #[test]
    fn sigma2_of_bases_is_complete() {
        let k3 = SimpleGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(sigma2(&triangle()), k3);
        let k4g =
            SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(sigma2(&k4()), k4g);
    }

    #[test]
    fn sigma3_predicate_is_non_strict_over_all_of_v() {
        // On three vertices every z is an apex and so is at or above the
        // apex triple in its own order; from four vertices on it fails.
        assert!(in_sigma3(&triangle(), v(0), v(1), v(2)));
        assert!(!in_sigma3(&k4(), v(0), v(1), v(2)));
        assert!(sigma3(&triangle()).is_empty());

        let s = sigma3(&k4());
        let expected: TripleSet = [[v(0), v(1), v(3)], [v(0), v(2), v(3)], [v(1), v(2), v(3)]]
            .into_iter()
            .collect();
        assert_eq!(s, expected);
    }

    #[test]
    fn fan_of_k4() {
        let r = k4();
        let report = fan_of_apex(&r, &sigma2(&r)).unwrap();
        assert_eq!(report.fan, vec![v(2), v(3), v(1)]);
        assert_eq!(report.b, v(3));
        assert!(report.parts.iter().all(|p| *p == PartStatus::Holds));
    }

    #[test]
    fn fan_of_triangle_has_vacuous_tail() {
        let r = triangle();
        let report = fan_of_apex(&r, &sigma2(&r)).unwrap();
        assert_eq!(report.fan, vec![v(2), v(1)]);
        assert_eq!(report.parts[0], PartStatus::Holds);
        assert_eq!(report.parts[1], PartStatus::Holds);
        assert_eq!(report.parts[3], PartStatus::Holds);
        assert_eq!(report.parts[4], PartStatus::Vacuous);
        assert_eq!(report.parts[5], PartStatus::Vacuous);
        assert!(report.all_pass());
    }

    #[test]
    fn fan_rejects_foreign_graph() {
        let r = k4();
        let mut g = sigma2(&r);
        g.remove_edge(v(1), v(3)).unwrap();
        assert!(matches!(fan_of_apex(&r, &g), Err(Error::NotSigma2)));
    }

    #[test]
    fn contraction_merges_parallel_edges() {
        let k4g =
            SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let k3 = SimpleGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(contract_vertex(&k4g, v(0), v(3)).unwrap(), k3);

        // Octahedron: poles 0 and 5, equator 1-2-3-4.
        let oct = SimpleGraph::from_edges(
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
        .unwrap();
        let h = contract_vertex(&oct, v(0), v(1)).unwrap();
        assert_eq!(h.vertex_count(), 5);
        // 12 edges, drop the four at 1, gain 0-5; 1-2 and 1-4 merge into
        // existing edges. K5 minus the edge 2-4.
        assert_eq!(h.edge_count(), 9);
        assert!(!h.has_edge(v(2), v(4)));
        assert!(h.has_edge(v(0), v(5)));
        assert_eq!(
            contract_vertex(&oct, v(0), v(5)),
            Err(GraphError::NotAnEdge(v(0), v(5)))
        );
    }
}
