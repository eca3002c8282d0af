//! Triangulation to standard representation.
//!
//! Repeatedly contract a neighbour `w_i` of `a1` that shares exactly two
//! neighbours with it, down to four vertices; start from a fixed
//! representation of K4 (or K3) and undo the contractions, placing each
//! `w_i` directly below `a1` in order 1, directly above `w_{i-1}` in order 2
//! and directly above `w_{i+1}` in order 3.

use crate::error::Error;
use crate::orders::{LinearOrder, StandardRepresentation};
use crate::sigma::sigma2;
use crate::triangulation::{Contractible, Triangulation};
use crate::vertex::VertexId;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RealizeOptions {
    /// Compare `sigma2` of the result against the input graph.
    pub verify: bool,
}

/// Representations of K3 and K4 on the outer triangle of `t`.
///
/// With `(a1, a2, a3)` the outer triangle and `v` the inner vertex of K4:
///
/// ```text
/// K3:  a2 a3 a1  |  a3 a1 a2  |  a1 a2 a3
/// K4:  a2 a3 v a1  |  a3 a1 v a2  |  a1 a2 v a3
/// ```
pub fn base_representation(t: &Triangulation) -> Result<StandardRepresentation, Error> {
    let [a1, a2, a3] = t.outer();
    let orders: [Vec<VertexId>; 3] = match t.vertex_count() {
        3 => [vec![a2, a3, a1], vec![a3, a1, a2], vec![a1, a2, a3]],
        4 => {
            let v = t
                .graph()
                .vertices()
                .find(|v| !t.outer().contains(v))
                .expect("four vertices");
            [
                vec![a2, a3, v, a1],
                vec![a3, a1, v, a2],
                vec![a1, a2, v, a3],
            ]
        }
        n => return Err(Error::BaseSize { n }),
    };
    let orders = orders.map(|seq| LinearOrder::new(seq).expect("distinct outer vertices"));
    Ok(StandardRepresentation::validate(orders)?)
}

pub fn realize(t: &Triangulation) -> Result<StandardRepresentation, Error> {
    realize_with(t, RealizeOptions::default())
}

pub fn realize_with(
    t: &Triangulation,
    opts: RealizeOptions,
) -> Result<StandardRepresentation, Error> {
    let (base, steps) = contraction_sequence(t)?;
    let a1 = t.a1();
    let mut rep = base_representation(&base)?;
    for step in steps.iter().rev() {
        rep = rep.insert_for_contraction(step.vertex, a1, step.left, step.right)?;
    }
    if opts.verify && sigma2(&rep) != *t.graph() {
        return Err(Error::Invariant(
            "sigma2 of the realized representation differs from the input".into(),
        ));
    }
    Ok(rep)
}

/// Contracts selected vertices until at most four remain. Returns the base
/// triangulation and the contractions in the order performed.
pub fn contraction_sequence(
    t: &Triangulation,
) -> Result<(Triangulation, Vec<Contractible>), Error> {
    let mut cur = t.clone();
    let mut steps = Vec::with_capacity(t.vertex_count().saturating_sub(4));
    while cur.vertex_count() >= 5 {
        let step = cur.select_contractible()?;
        cur.contract_in_place(step.vertex)?;
        steps.push(step);
    }
    Ok((cur, steps))
}
