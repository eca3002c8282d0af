//! Linear orders on a vertex set and standard representations built from
//! three of them.
//!
//! A triple of orders *represents* its vertex set when no vertex lies below
//! another in all three orders, and it is *standard* when the maximum of each
//! order sits at rank 0 or 1 in both other orders. Those maxima are the
//! apexes `a1, a2, a3`.

use crate::error::{OrderError, RepresentationError, ValidationError};
use crate::vertex::VertexId;

const ABSENT: u32 = u32::MAX;

/// A total order, stored as the sequence from smallest to largest together
/// with the inverse rank table.
#[derive(Debug, Clone)]
pub struct LinearOrder {
    seq: Vec<VertexId>,
    rank: Vec<u32>,
}

impl PartialEq for LinearOrder {
    fn eq(&self, other: &Self) -> bool {
        self.seq == other.seq
    }
}

impl Eq for LinearOrder {}

impl LinearOrder {
    /// Builds the order `seq[0] < seq[1] < ...`.
    pub fn new(seq: Vec<VertexId>) -> Result<Self, OrderError> {
        let cap = seq.iter().map(|v| v.index() + 1).max().unwrap_or(0);
        let mut rank = vec![ABSENT; cap];
        for (pos, &v) in seq.iter().enumerate() {
            if rank[v.index()] != ABSENT {
                return Err(OrderError::Duplicate(v));
            }
            rank[v.index()] = pos as u32;
        }
        Ok(Self { seq, rank })
    }

    /// Like [`LinearOrder::new`], additionally requiring `seq` to be a
    /// permutation of `0..n`.
    pub fn over_universe(n: usize, seq: Vec<VertexId>) -> Result<Self, OrderError> {
        let order = Self::new(seq)?;
        if let Some(&v) = order.seq.iter().find(|v| v.index() >= n) {
            return Err(OrderError::UnknownVertex(v));
        }
        if let Some(v) = (0..n).map(VertexId::from).find(|&v| !order.contains(v)) {
            return Err(OrderError::Missing { vertex: v });
        }
        Ok(order)
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Elements from smallest to largest.
    pub fn as_slice(&self) -> &[VertexId] {
        &self.seq
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = VertexId> + ExactSizeIterator + '_ {
        self.seq.iter().copied()
    }

    #[inline]
    pub fn rank(&self, v: VertexId) -> Option<usize> {
        match self.rank.get(v.index()) {
            Some(&r) if r != ABSENT => Some(r as usize),
            _ => None,
        }
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.rank(v).is_some()
    }

    /// Rank of a vertex known to be present. Panics otherwise.
    #[inline]
    pub(crate) fn rank_of(&self, v: VertexId) -> usize {
        self.rank(v).expect("vertex not in order")
    }

    /// `x < y` in this order.
    pub fn less(&self, x: VertexId, y: VertexId) -> Result<bool, OrderError> {
        let rx = self.rank(x).ok_or(OrderError::UnknownVertex(x))?;
        let ry = self.rank(y).ok_or(OrderError::UnknownVertex(y))?;
        Ok(rx < ry)
    }

    #[inline]
    pub(crate) fn lt(&self, x: VertexId, y: VertexId) -> bool {
        self.rank_of(x) < self.rank_of(y)
    }

    pub fn max(&self) -> Option<VertexId> {
        self.seq.last().copied()
    }

    /// The element of rank `n - 2`.
    pub fn second_max(&self) -> Result<VertexId, OrderError> {
        if self.seq.len() < 2 {
            return Err(OrderError::TooShort {
                len: self.seq.len(),
                need: 2,
            });
        }
        Ok(self.seq[self.seq.len() - 2])
    }

    /// The restriction of this order to everything except `v`.
    pub fn without(&self, v: VertexId) -> Result<Self, OrderError> {
        let pos = self.rank(v).ok_or(OrderError::UnknownVertex(v))?;
        let mut seq = self.seq.clone();
        seq.remove(pos);
        let mut rank = self.rank.clone();
        rank[v.index()] = ABSENT;
        for (k, &u) in seq.iter().enumerate().skip(pos) {
            rank[u.index()] = k as u32;
        }
        Ok(Self { seq, rank })
    }

    /// The order with `v` inserted at rank `pos`, shifting everything from
    /// `pos` upward by one.
    pub fn inserted(&self, v: VertexId, pos: usize) -> Result<Self, OrderError> {
        if self.contains(v) {
            return Err(OrderError::AlreadyPresent(v));
        }
        if pos > self.seq.len() {
            return Err(OrderError::Position {
                pos,
                len: self.seq.len(),
            });
        }
        let mut seq = self.seq.clone();
        seq.insert(pos, v);
        let mut rank = self.rank.clone();
        if rank.len() <= v.index() {
            rank.resize(v.index() + 1, ABSENT);
        }
        for (k, &u) in seq.iter().enumerate().skip(pos) {
            rank[u.index()] = k as u32;
        }
        Ok(Self { seq, rank })
    }
}

/// Three linear orders on one vertex set that represent it and are standard.
///
/// Only constructible through [`StandardRepresentation::validate`] or the
/// structure-preserving operations below, so every value satisfies both
/// conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardRepresentation {
    orders: [LinearOrder; 3],
    apexes: [VertexId; 3],
}

impl StandardRepresentation {
    /// Checks the triple and returns the first violation found.
    ///
    /// Pairs are scanned as `(o1[i], o1[j])` with `i < j` in lexicographic
    /// order, and the representation condition is checked before the
    /// standard one. Apexes are the maxima of the three orders.
    pub fn validate(orders: [LinearOrder; 3]) -> Result<Self, ValidationError> {
        let n = orders[0].len();
        if n < 3 {
            return Err(ValidationError::TooSmall { n });
        }
        for (j, order) in orders.iter().enumerate().skip(1) {
            if let Some(v) = orders[0].iter().find(|&v| !order.contains(v)) {
                return Err(ValidationError::UniverseMismatch {
                    order: j,
                    vertex: v,
                });
            }
            if let Some(v) = order.iter().find(|&v| !orders[0].contains(v)) {
                return Err(ValidationError::UniverseMismatch {
                    order: j,
                    vertex: v,
                });
            }
        }
        let seq = orders[0].as_slice();
        for (i, &x) in seq.iter().enumerate() {
            for &y in &seq[i + 1..] {
                if orders[1].lt(x, y) && orders[2].lt(x, y) {
                    return Err(ValidationError::NotRepresentation { below: x, above: y });
                }
            }
        }
        let apexes = Self::maxima(&orders);
        check_standard(&orders, &apexes)?;
        Ok(Self { orders, apexes })
    }

    fn maxima(orders: &[LinearOrder; 3]) -> [VertexId; 3] {
        [0, 1, 2].map(|i| orders[i].max().expect("non-empty order"))
    }

    pub fn orders(&self) -> &[LinearOrder; 3] {
        &self.orders
    }

    /// Order `i` for `i` in `0..3`.
    pub fn order(&self, i: usize) -> &LinearOrder {
        &self.orders[i]
    }

    pub fn apexes(&self) -> [VertexId; 3] {
        self.apexes
    }

    pub fn a1(&self) -> VertexId {
        self.apexes[0]
    }

    pub fn len(&self) -> usize {
        self.orders[0].len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vertices in order-1 sequence.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.orders[0].iter()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.orders[0].contains(v)
    }

    /// One past the largest vertex index present.
    pub fn capacity(&self) -> usize {
        self.vertices().map(|v| v.index() + 1).max().unwrap_or(0)
    }

    pub fn is_apex(&self, v: VertexId) -> bool {
        self.apexes.contains(&v)
    }

    /// The vertex directly below `a1` in order 1.
    pub fn second_max(&self) -> VertexId {
        self.orders[0]
            .second_max()
            .expect("at least three vertices")
    }

    /// True if `z` lies strictly above every vertex of `xs` in some order.
    #[inline]
    pub fn above_all_in_some(&self, z: VertexId, xs: &[VertexId]) -> bool {
        self.orders.iter().any(|o| {
            let rz = o.rank_of(z);
            xs.iter().all(|&x| o.rank_of(x) < rz)
        })
    }

    /// True if `z` lies at or above every vertex of `xs` in some order.
    #[inline]
    pub fn at_or_above_all_in_some(&self, z: VertexId, xs: &[VertexId]) -> bool {
        self.orders.iter().any(|o| {
            let rz = o.rank_of(z);
            xs.iter().all(|&x| o.rank_of(x) <= rz)
        })
    }

    /// Restriction of all three orders to `V \ {b}`.
    pub fn suppress(&self, b: VertexId) -> Result<Self, RepresentationError> {
        if !self.contains(b) {
            return Err(OrderError::UnknownVertex(b).into());
        }
        if self.is_apex(b) {
            return Err(RepresentationError::SuppressApex(b));
        }
        if self.len() <= 3 {
            return Err(RepresentationError::SuppressTooSmall);
        }
        let orders = [
            self.orders[0].without(b)?,
            self.orders[1].without(b)?,
            self.orders[2].without(b)?,
        ];
        Ok(Self {
            orders,
            apexes: self.apexes,
        })
    }

    /// Adds `w` directly below `a1` in order 1, directly above `above_in_2`
    /// in order 2 and directly above `above_in_3` in order 3. If `a1` lies
    /// directly above `above_in_2`, `w` goes directly above `a1` instead.
    ///
    /// Only pairs involving `w` and the apex ranks are rechecked; the rest of
    /// the triple is valid already.
    pub fn insert_for_contraction(
        &self,
        w: VertexId,
        below_in_1: VertexId,
        above_in_2: VertexId,
        above_in_3: VertexId,
    ) -> Result<Self, RepresentationError> {
        if self.contains(w) {
            return Err(OrderError::AlreadyPresent(w).into());
        }
        if below_in_1 != self.a1() {
            return Err(RepresentationError::WrongAnchor {
                a1: self.a1(),
                got: below_in_1,
            });
        }
        let r2 = self.orders[1]
            .rank(above_in_2)
            .ok_or(OrderError::UnknownVertex(above_in_2))?;
        let r3 = self.orders[2]
            .rank(above_in_3)
            .ok_or(OrderError::UnknownVertex(above_in_3))?;
        // Directly above a3 in order 2 is a1; w goes past it so a1 keeps rank 1.
        let p2 = if self.orders[1].rank(self.a1()) == Some(r2 + 1) {
            r2 + 2
        } else {
            r2 + 1
        };
        let orders = [
            self.orders[0].inserted(w, self.orders[0].len() - 1)?,
            self.orders[1].inserted(w, p2)?,
            self.orders[2].inserted(w, r3 + 1)?,
        ];
        for y in orders[0].iter().filter(|&y| y != w) {
            let w_below = orders.iter().all(|o| o.lt(w, y));
            let y_below = orders.iter().all(|o| o.lt(y, w));
            if w_below || y_below {
                let (below, above) = if w_below { (w, y) } else { (y, w) };
                return Err(ValidationError::NotRepresentation { below, above }.into());
            }
        }
        let apexes = Self::maxima(&orders);
        check_standard(&orders, &apexes)?;
        Ok(Self { orders, apexes })
    }
}

fn check_standard(
    orders: &[LinearOrder; 3],
    apexes: &[VertexId; 3],
) -> Result<(), ValidationError> {
    for (i, &a) in apexes.iter().enumerate() {
        for (j, order) in orders.iter().enumerate() {
            if i == j {
                continue;
            }
            let rank = order.rank_of(a);
            if rank > 1 {
                return Err(ValidationError::NotStandard {
                    apex: i,
                    order: j,
                    rank,
                });
            }
        }
    }
    Ok(())
}
