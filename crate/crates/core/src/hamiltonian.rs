//! Backtracking Hamiltonian-cycle search for small graphs, used on vertex
//! neighbourhoods.

/// Result of a bounded cycle count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCount {
    /// Number of distinct cycles found, up to rotation and reflection,
    /// stopping at the requested limit.
    pub count: usize,
    /// The first cycle found, starting at vertex 0.
    pub first: Option<Vec<usize>>,
}

/// Counts Hamiltonian cycles of the graph on `0..adj.len()` given by a
/// symmetric adjacency matrix, stopping once `limit` are found.
///
/// Graphs with fewer than 3 vertices have no cycles.
pub fn count_cycles(adj: &[Vec<bool>], limit: usize) -> CycleCount {
    let k = adj.len();
    let mut out = CycleCount {
        count: 0,
        first: None,
    };
    if k < 3 || limit == 0 {
        return out;
    }
    let nbrs: Vec<Vec<usize>> = (0..k)
        .map(|u| (0..k).filter(|&v| v != u && adj[u][v]).collect())
        .collect();
    if nbrs.iter().any(|n| n.len() < 2) {
        return out;
    }
    let mut search = Search {
        adj,
        nbrs: &nbrs,
        visited: vec![false; k],
        path: Vec::with_capacity(k),
        limit,
        out: &mut out,
    };
    search.visited[0] = true;
    search.path.push(0);
    search.extend();
    out
}

struct Search<'a> {
    adj: &'a [Vec<bool>],
    nbrs: &'a [Vec<usize>],
    visited: Vec<bool>,
    path: Vec<usize>,
    limit: usize,
    out: &'a mut CycleCount,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.out.count >= self.limit
    }

    fn extend(&mut self) {
        let k = self.adj.len();
        let end = *self.path.last().expect("path starts at 0");
        if self.path.len() == k {
            if self.adj[end][0] && self.path[1] < self.path[k - 1] {
                self.out.count += 1;
                if self.out.first.is_none() {
                    self.out.first = Some(self.path.clone());
                }
            }
            return;
        }
        let Some(candidates) = self.feasible_moves(end) else {
            return;
        };
        for next in candidates {
            self.visited[next] = true;
            self.path.push(next);
            self.extend();
            self.path.pop();
            self.visited[next] = false;
            if self.done() {
                return;
            }
        }
    }

    /// Moves from `end` that survive the degree prune, or `None` if the
    /// current path cannot be completed.
    ///
    /// Every unvisited vertex needs two usable neighbours (unvisited, the
    /// path end, or the start). An unvisited vertex whose only usable
    /// neighbours include `end` forces the next move.
    fn feasible_moves(&self, end: usize) -> Option<Vec<usize>> {
        let mut forced: Option<usize> = None;
        for y in (0..self.adj.len()).filter(|&y| !self.visited[y]) {
            let mut usable = 0;
            let mut touches_end = false;
            for &z in &self.nbrs[y] {
                if !self.visited[z] || z == end || z == 0 {
                    usable += 1;
                    touches_end |= z == end;
                }
            }
            if usable < 2 {
                return None;
            }
            if usable == 2 && touches_end && end != 0 {
                if forced.is_some_and(|f| f != y) {
                    return None;
                }
                forced = Some(y);
            }
        }
        Some(match forced {
            Some(y) => vec![y],
            None => self.nbrs[end]
                .iter()
                .copied()
                .filter(|&v| !self.visited[v])
                .collect(),
        })
    }
}
