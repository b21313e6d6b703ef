//! Lower and upper bounds on the higher-order truss number of an edge.
//!
//! The lower bound takes the largest vertex set of diameter at most `tau`
//! that is cheap to find around the edge: a `floor(tau/2)`-ball around an
//! endpoint or a half-hop common neighbour, and for odd `tau` the union of the
//! balls around both endpoints. Such a set induces a subgraph where every edge
//! sees every other vertex within `tau` hops, so its size bounds `phi` from
//! below.
//!
//! The upper bound is the size of the largest connected subgraph around the
//! edge, inside `{u, v} ∪ Delta_tau(e)`, whose edges all have support at least
//! `|V| - 2`. It is found by binary search on the target size.

use crate::graph::{EdgeId, Graph, GraphError, Marker, Traversal, VertexId};
use crate::result::RunStats;
use crate::support::{Neighborhoods, SupportState};

/// Per-edge bounds, indexed by edge id (0 = no value).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundsTable {
    pub lower: Vec<u32>,
    pub upper: Option<Vec<u32>>,
}

impl BoundsTable {
    pub fn lower(&self, e: EdgeId) -> u32 {
        self.lower[e.index()]
    }

    pub fn upper(&self, e: EdgeId) -> Option<u32> {
        self.upper.as_ref().map(|u| u[e.index()])
    }
}

/// `|V(Omega(v))| = 1 + d_{floor(tau/2)}(v)`.
pub fn vertex_centric_size(g: &Graph, v: VertexId, tau: u32) -> Result<usize, GraphError> {
    Ok(1 + g.degree_tau(v, tau / 2)?)
}

/// `|{u, v} ∪ N_{floor(tau/2)}(u) ∪ N_{floor(tau/2)}(v)|`.
pub fn edge_centric_size(g: &Graph, e: EdgeId, tau: u32) -> Result<usize, GraphError> {
    g.check_edge(e)?;
    let (u, v) = g.endpoints(e);
    let mut t = Traversal::new(g.vertex_count());
    Ok(t.run_filtered(g, &[u, v], tau / 2, |_| true, |_| true).len())
}

/// Lower bound for a single edge.
pub fn lower_bound(g: &Graph, e: EdgeId, tau: u32) -> Result<u32, GraphError> {
    g.check_edge(e)?;
    let mut lb = LowerBounder::new(g, tau);
    let (u, v) = g.endpoints(e);
    let mut omega = |w: VertexId| 1 + g.degree_tau(w, tau / 2).expect("alive vertex") as u32;
    Ok(lb.bound(g, u, v, &mut omega, &mut RunStats::default()))
}

/// Lower bounds for every alive edge. Ball sizes are computed once per vertex.
pub fn lower_bounds(g: &Graph, tau: u32, stats: &mut RunStats) -> Vec<u32> {
    assert!(tau >= 1, "tau must be at least 1");
    let half = tau / 2;
    let mut t = Traversal::new(g.vertex_count());
    let mut omega = vec![1u32; g.vertex_count()];
    if half > 0 {
        for v in g.vertices() {
            if g.degree(v) > 0 {
                stats.bfs_traversals += 1;
                omega[v as usize] = t.run(g, v, half).len() as u32;
            }
        }
    }
    let mut lb = LowerBounder::new(g, tau);
    let mut out = vec![0u32; g.edge_capacity()];
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        out[e.index()] = lb.bound(g, u, v, &mut |w| omega[w as usize], stats);
    }
    out
}

struct LowerBounder {
    tau: u32,
    hood: Neighborhoods,
    union: Traversal,
}

impl LowerBounder {
    fn new(g: &Graph, tau: u32) -> Self {
        LowerBounder {
            tau,
            hood: Neighborhoods::new(g.vertex_count()),
            union: Traversal::new(g.vertex_count()),
        }
    }

    fn bound(
        &mut self,
        g: &Graph,
        u: VertexId,
        v: VertexId,
        omega: &mut dyn FnMut(VertexId) -> u32,
        stats: &mut RunStats,
    ) -> u32 {
        let half = self.tau / 2;
        let mut best = 2;
        if half > 0 {
            stats.bfs_traversals += 2;
            for &w in self.hood.common(g, u, v, half) {
                best = best.max(omega(w));
            }
        }
        if self.tau.is_multiple_of(2) {
            best = best.max(omega(u)).max(omega(v));
        } else {
            stats.bfs_traversals += 1;
            let size = self.union.run_filtered(g, &[u, v], half, |_| true, |_| true).len() as u32;
            best = best.max(size);
        }
        best
    }
}

/// Upper bound for one edge from the supports of the current graph.
///
/// Binary search over `mid` in `[2, sup(e) + 2]`: `mid` is feasible when a
/// `tau`-hop BFS from `u` and `v`, restricted to `{u, v} ∪ Delta_tau(e)` and to
/// edges with support `>= mid - 2`, reaches at least `mid` vertices.
pub fn compute_ub(g: &Graph, e: EdgeId, tau: u32, supports: &SupportState) -> Result<u32, GraphError> {
    g.check_edge(e)?;
    let mut ub = UpperBounder::new(g);
    Ok(ub.bound(g, e, tau, supports, &mut RunStats::default()))
}

/// Upper bounds for every alive edge. `supports` must hold every alive edge.
pub fn upper_bounds(g: &Graph, tau: u32, supports: &SupportState, stats: &mut RunStats) -> Vec<u32> {
    let mut ub = UpperBounder::new(g);
    let mut out = vec![0u32; g.edge_capacity()];
    for e in g.edges() {
        out[e.index()] = ub.bound(g, e, tau, supports, stats);
    }
    out
}

struct UpperBounder {
    hood: Neighborhoods,
    grow: Traversal,
    members: Marker,
}

impl UpperBounder {
    fn new(g: &Graph) -> Self {
        UpperBounder {
            hood: Neighborhoods::new(g.vertex_count()),
            grow: Traversal::new(g.vertex_count()),
            members: Marker::new(g.vertex_count()),
        }
    }

    fn bound(&mut self, g: &Graph, e: EdgeId, tau: u32, supports: &SupportState, stats: &mut RunStats) -> u32 {
        let (u, v) = g.endpoints(e);
        let own = supports.get(e).expect("support of every alive edge is known");
        stats.bfs_traversals += 2;
        self.members.clear(g.vertex_count());
        self.members.insert(u);
        self.members.insert(v);
        for &w in self.hood.common(g, u, v, tau) {
            self.members.insert(w);
        }
        let (mut lo, mut hi) = (2u32, own + 2);
        let mut best = 2;
        while lo <= hi {
            let mid = lo + (hi - lo) / 2;
            let threshold = mid - 2;
            let members = &self.members;
            stats.bfs_traversals += 1;
            let reached = self
                .grow
                .run_filtered(
                    g,
                    &[u, v],
                    tau,
                    |x| members.contains(x),
                    |f| supports.get(f).is_some_and(|s| s >= threshold),
                )
                .len() as u32;
            if reached >= mid {
                best = mid;
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
        best
    }
}
