use crate::vertex::VertexId;

/// Cyclic neighbour order at each vertex.
///
/// Faces are traced with `next(u -> v) = v -> pred_v(u)`, where `pred_v(u)`
/// is the neighbour just before `u` in the cyclic list at `v`. With this rule
/// the lists read counterclockwise and bounded faces are traced
/// counterclockwise; the outer face `a1 a2 a3` comes out as the walk
/// `a1 -> a2 -> a3`, i.e. clockwise in the plane.
///
/// Equality compares each list up to a cyclic shift.
#[derive(Debug, Clone, Default)]
pub struct RotationSystem {
    rot: Vec<Vec<VertexId>>,
}

impl PartialEq for RotationSystem {
    fn eq(&self, other: &Self) -> bool {
        self.cyclically_equal(other)
    }
}

impl Eq for RotationSystem {}

impl RotationSystem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, v: VertexId, cycle: Vec<VertexId>) {
        if self.rot.len() <= v.index() {
            self.rot.resize(v.index() + 1, Vec::new());
        }
        self.rot[v.index()] = cycle;
    }

    /// Cyclic list at `v`; empty if `v` has none.
    pub fn get(&self, v: VertexId) -> &[VertexId] {
        self.rot.get(v.index()).map_or(&[], Vec::as_slice)
    }

    /// Vertices carrying a non-empty list.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.rot
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_empty())
            .map(|(i, _)| VertexId::from(i))
    }

    pub fn position(&self, v: VertexId, u: VertexId) -> Option<usize> {
        self.get(v).iter().position(|&x| x == u)
    }

    pub fn succ(&self, v: VertexId, u: VertexId) -> Option<VertexId> {
        let c = self.get(v);
        self.position(v, u).map(|p| c[(p + 1) % c.len()])
    }

    pub fn pred(&self, v: VertexId, u: VertexId) -> Option<VertexId> {
        let c = self.get(v);
        self.position(v, u).map(|p| c[(p + c.len() - 1) % c.len()])
    }

    /// The dart following `u -> v` on the face to its left.
    pub fn next_dart(&self, u: VertexId, v: VertexId) -> Option<(VertexId, VertexId)> {
        self.pred(v, u).map(|w| (v, w))
    }

    /// Traces every face. Each walk lists the tails of its darts, starting
    /// from the smallest unvisited dart in (vertex id, rotation position)
    /// order.
    ///
    /// Darts `u -> v` whose reverse is missing end their walk early; callers
    /// check list/adjacency consistency first.
    pub fn trace_faces(&self) -> Vec<Vec<VertexId>> {
        let mut seen: Vec<Vec<bool>> = self.rot.iter().map(|c| vec![false; c.len()]).collect();
        let mut faces = Vec::new();
        for u in 0..self.rot.len() {
            for k in 0..self.rot[u].len() {
                if seen[u][k] {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut a, mut pos) = (VertexId::from(u), k);
                loop {
                    seen[a.index()][pos] = true;
                    walk.push(a);
                    let b = self.rot[a.index()][pos];
                    let Some((_, c)) = self.next_dart(a, b) else {
                        break;
                    };
                    let Some(p) = self.position(b, c) else { break };
                    if seen[b.index()][p] {
                        break;
                    }
                    (a, pos) = (b, p);
                }
                faces.push(walk);
            }
        }
        faces
    }

    /// Every list reversed.
    pub fn reversed(&self) -> Self {
        Self {
            rot: self
                .rot
                .iter()
                .map(|c| c.iter().rev().copied().collect())
                .collect(),
        }
    }

    /// Same lists up to a cyclic shift at each vertex.
    pub fn cyclically_equal(&self, other: &Self) -> bool {
        let len = self.rot.len().max(other.rot.len());
        (0..len).all(|i| {
            let v = VertexId::from(i);
            cyclic_eq(self.get(v), other.get(v))
        })
    }

    /// Equal to `other` or to its mirror image.
    pub fn equal_up_to_reflection(&self, other: &Self) -> bool {
        self.cyclically_equal(other) || self.cyclically_equal(&other.reversed())
    }

    pub(crate) fn list_mut(&mut self, v: VertexId) -> &mut Vec<VertexId> {
        if self.rot.len() <= v.index() {
            self.rot.resize(v.index() + 1, Vec::new());
        }
        &mut self.rot[v.index()]
    }

    /// Inserts `new` just before `anchor` in the list at `v`.
    pub(crate) fn insert_before(&mut self, v: VertexId, anchor: VertexId, new: VertexId) -> bool {
        match self.position(v, anchor) {
            Some(p) => {
                self.list_mut(v).insert(p, new);
                true
            }
            None => false,
        }
    }

    /// Inserts `new` just after `anchor` in the list at `v`.
    pub(crate) fn insert_after(&mut self, v: VertexId, anchor: VertexId, new: VertexId) -> bool {
        match self.position(v, anchor) {
            Some(p) => {
                self.list_mut(v).insert(p + 1, new);
                true
            }
            None => false,
        }
    }

    pub(crate) fn replace(&mut self, v: VertexId, old: VertexId, new: VertexId) -> bool {
        match self.position(v, old) {
            Some(p) => {
                self.list_mut(v)[p] = new;
                true
            }
            None => false,
        }
    }

    pub(crate) fn remove(&mut self, v: VertexId, u: VertexId) -> bool {
        match self.position(v, u) {
            Some(p) => {
                self.list_mut(v).remove(p);
                true
            }
            None => false,
        }
    }

    pub(crate) fn clear(&mut self, v: VertexId) {
        if let Some(c) = self.rot.get_mut(v.index()) {
            c.clear();
        }
    }
}

/// `a` and `b` are the same cyclic sequence.
pub fn cyclic_eq(a: &[VertexId], b: &[VertexId]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    match b.iter().position(|&x| x == a[0]) {
        Some(shift) => (0..a.len()).all(|k| a[k] == b[(k + shift) % b.len()]),
        None => false,
    }
}

/// Rotates `cycle` so that it starts at `first`.
pub fn rotate_to(cycle: &[VertexId], first: VertexId) -> Option<Vec<VertexId>> {
    let p = cycle.iter().position(|&x| x == first)?;
    Some(cycle[p..].iter().chain(&cycle[..p]).copied().collect())
}
