//! Higher-order common neighbours, support, and the bucketed support index.

use crate::graph::{EdgeId, Graph, GraphError, Traversal, VertexId};
use crate::result::RunStats;

/// `Delta_tau(e)` for `e = (u, v)`: vertices other than `u`, `v` within `tau`
/// hops of both endpoints. Sorted by vertex id.
pub fn common_neighbors_tau(g: &Graph, e: EdgeId, tau: u32) -> Result<Vec<VertexId>, GraphError> {
    g.check_edge(e)?;
    let (u, v) = g.endpoints(e);
    let mut hood = Neighborhoods::new(g.vertex_count());
    let mut out = hood.common(g, u, v, tau).to_vec();
    out.sort_unstable();
    Ok(out)
}

/// `sup_tau(e) = |Delta_tau(e)|`.
pub fn support_tau(g: &Graph, e: EdgeId, tau: u32) -> Result<usize, GraphError> {
    g.check_edge(e)?;
    let (u, v) = g.endpoints(e);
    Ok(Neighborhoods::new(g.vertex_count()).common(g, u, v, tau).len())
}

/// Two BFS scratches for one edge's neighbourhoods. After [`common`] the
/// traversals still hold the truncated distances from each endpoint.
///
/// [`common`]: Neighborhoods::common
#[derive(Debug, Clone)]
pub struct Neighborhoods {
    from_u: Traversal,
    from_v: Traversal,
    common: Vec<VertexId>,
}

impl Neighborhoods {
    pub fn new(n: usize) -> Self {
        Neighborhoods {
            from_u: Traversal::new(n),
            from_v: Traversal::new(n),
            common: Vec::new(),
        }
    }

    pub fn common(&mut self, g: &Graph, u: VertexId, v: VertexId, tau: u32) -> &[VertexId] {
        self.from_u.run(g, u, tau);
        self.from_v.run(g, v, tau);
        self.common.clear();
        for &w in self.from_v.visited() {
            if w != u && w != v && self.from_u.contains(w) {
                self.common.push(w);
            }
        }
        &self.common
    }

    /// Support of `(u, v)`; counts two traversals and one support computation.
    pub(crate) fn support(&mut self, g: &Graph, e: EdgeId, tau: u32, stats: &mut RunStats) -> u32 {
        let (u, v) = g.endpoints(e);
        stats.support_recomputations += 1;
        stats.bfs_traversals += 2;
        self.common(g, u, v, tau).len() as u32
    }

    pub fn from_u(&self) -> &Traversal {
        &self.from_u
    }

    pub fn from_v(&self) -> &Traversal {
        &self.from_v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportStatus {
    /// Never computed, or the edge left the index.
    Unknown,
    /// Equals the support in the current graph.
    Exact,
    /// A deletion may have lowered the true value; the stored value is an upper bound.
    Stale,
}

const NIL: u32 = u32::MAX;

/// Stored supports plus buckets keyed by support value. Buckets are intrusive
/// doubly linked FIFO lists, so moving an edge is O(1) and iteration order is
/// insertion order.
#[derive(Debug, Clone)]
pub struct SupportState {
    support: Vec<u32>,
    status: Vec<SupportStatus>,
    head: Vec<u32>,
    tail: Vec<u32>,
    next: Vec<u32>,
    prev: Vec<u32>,
    floor: usize,
    len: usize,
}

impl SupportState {
    pub fn new(edge_capacity: usize) -> Self {
        SupportState {
            support: vec![0; edge_capacity],
            status: vec![SupportStatus::Unknown; edge_capacity],
            head: Vec::new(),
            tail: Vec::new(),
            next: vec![NIL; edge_capacity],
            prev: vec![NIL; edge_capacity],
            floor: 0,
            len: 0,
        }
    }

    pub fn get(&self, e: EdgeId) -> Option<u32> {
        (self.status[e.index()] != SupportStatus::Unknown).then(|| self.support[e.index()])
    }

    pub fn status(&self, e: EdgeId) -> SupportStatus {
        self.status[e.index()]
    }

    pub fn is_stale(&self, e: EdgeId) -> bool {
        self.status[e.index()] == SupportStatus::Stale
    }

    /// Number of indexed edges.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Stores an exact support, inserting or moving the edge's bucket entry.
    pub fn set_exact(&mut self, e: EdgeId, value: u32) {
        let i = e.index();
        if self.status[i] != SupportStatus::Unknown {
            if self.support[i] == value {
                self.status[i] = SupportStatus::Exact;
                return;
            }
            self.unlink(e);
        }
        self.support[i] = value;
        self.status[i] = SupportStatus::Exact;
        self.link(e);
    }

    pub fn mark_stale(&mut self, e: EdgeId) {
        if self.status[e.index()] == SupportStatus::Exact {
            self.status[e.index()] = SupportStatus::Stale;
        }
    }

    /// Drops the edge from the index.
    pub fn remove(&mut self, e: EdgeId) {
        if self.status[e.index()] != SupportStatus::Unknown {
            self.unlink(e);
            self.status[e.index()] = SupportStatus::Unknown;
        }
    }

    fn link(&mut self, e: EdgeId) {
        let b = self.support[e.index()] as usize;
        if b >= self.head.len() {
            self.head.resize(b + 1, NIL);
            self.tail.resize(b + 1, NIL);
        }
        let id = e.index() as u32;
        let t = self.tail[b];
        self.prev[e.index()] = t;
        self.next[e.index()] = NIL;
        if t == NIL {
            self.head[b] = id;
        } else {
            self.next[t as usize] = id;
        }
        self.tail[b] = id;
        self.floor = self.floor.min(b);
        self.len += 1;
    }

    fn unlink(&mut self, e: EdgeId) {
        let b = self.support[e.index()] as usize;
        let (p, n) = (self.prev[e.index()], self.next[e.index()]);
        if p == NIL {
            self.head[b] = n;
        } else {
            self.next[p as usize] = n;
        }
        if n == NIL {
            self.tail[b] = p;
        } else {
            self.prev[n as usize] = p;
        }
        self.prev[e.index()] = NIL;
        self.next[e.index()] = NIL;
        self.len -= 1;
    }

    /// Smallest stored support. The scan starts at a floor pointer that only
    /// moves down when an edge is inserted below it.
    pub fn min_support(&mut self) -> Option<u32> {
        while self.floor < self.head.len() && self.head[self.floor] == NIL {
            self.floor += 1;
        }
        (self.floor < self.head.len()).then_some(self.floor as u32)
    }

    /// `min sup + 2`, the next peeling level; `None` once the index is empty.
    pub fn min_support_k(&mut self) -> Option<u32> {
        self.min_support().map(|s| s + 2)
    }

    /// Edges in bucket `value`, FIFO order.
    pub fn bucket(&self, value: u32) -> Vec<EdgeId> {
        let mut out = Vec::new();
        let mut cur = self.head.get(value as usize).copied().unwrap_or(NIL);
        while cur != NIL {
            out.push(EdgeId::from_index(cur as usize));
            cur = self.next[cur as usize];
        }
        out
    }

    /// Edges with stored support `<= threshold`, lowest bucket first.
    pub fn at_most(&mut self, threshold: u32) -> Vec<EdgeId> {
        let Some(lo) = self.min_support() else {
            return Vec::new();
        };
        (lo..=threshold).flat_map(|b| self.bucket(b)).collect()
    }
}

/// Exact support for every alive edge, all indexed.
pub fn compute_all_supports(g: &Graph, tau: u32, stats: &mut RunStats) -> SupportState {
    let mut state = SupportState::new(g.edge_capacity());
    let mut hood = Neighborhoods::new(g.vertex_count());
    for e in g.edges() {
        let s = hood.support(g, e, tau, stats);
        state.set_exact(e, s);
    }
    state
}
