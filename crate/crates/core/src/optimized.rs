//! Peeling with three ways of skipping support recomputation.
//!
//! * Delayed update: an edge whose lower bound exceeds the current level `k`
//!   cannot be peeled at `k`, so its support is not computed until level
//!   reaches its lower bound.
//! * Early pruning: a vertex with `tau`-hop degree `<= k - 1` cannot be in the
//!   `(k + 1, tau)`-truss, so all its edges get `k` at once and the vertex is
//!   removed, possibly cascading. The test runs on the endpoints of every
//!   edge about to be updated or about to get its first support.
//! * Unchanged support: after removing `(u, v)`, an edge `(a, b)` keeps its
//!   support if the truncated distances from `u` and `v` to both `a` and `b`
//!   are the same before and after the removal.

use std::collections::VecDeque;

use crate::bounds::lower_bounds;
use crate::graph::{edges_within, EdgeId, Graph, Marker, Traversal, VertexId};
use crate::result::{RunStats, TrussResult};
use crate::support::{Neighborhoods, SupportState, SupportStatus};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PeelOptions {
    /// Recompute the support whenever the unchanged-distance skip fires and
    /// count mismatches in [`RunStats::self_check_failures`].
    pub self_check: bool,
}

/// Full decomposition with the optimized peeling.
pub fn hot_decompose_plus(g: &Graph, tau: u32) -> (TrussResult, RunStats) {
    hot_decompose_plus_with(g, tau, PeelOptions::default())
}

pub fn hot_decompose_plus_with(g: &Graph, tau: u32, options: PeelOptions) -> (TrussResult, RunStats) {
    assert!(tau >= 1, "tau must be at least 1");
    let mut stats = RunStats::default();
    let lower = lower_bounds(g, tau, &mut stats);
    let start = g.edges().map(|e| lower[e.index()]).min().unwrap_or(2);
    let mut state = PeelState::new(g.clone(), tau, &lower).with_self_check(options.self_check);
    state.run(start);
    let (phi, order, peel_stats) = state.into_parts();
    stats.absorb(&peel_stats);
    (TrussResult::new(tau, phi, order), stats)
}

/// For each target `w`, whether `dist(u, w)` or `dist(v, w)` (truncated at
/// `tau`, with "beyond tau" as its own value) differs between `before` and
/// `after`.
pub fn distances_changed(
    before: &Graph,
    after: &Graph,
    u: VertexId,
    v: VertexId,
    targets: &[VertexId],
    tau: u32,
) -> Vec<bool> {
    let n = before.vertex_count().max(after.vertex_count());
    let mut bu = Traversal::new(n);
    let mut bv = Traversal::new(n);
    let mut au = Traversal::new(n);
    let mut av = Traversal::new(n);
    bu.run(before, u, tau);
    bv.run(before, v, tau);
    au.run(after, u, tau);
    av.run(after, v, tau);
    targets
        .iter()
        .map(|&w| !same_distances(&bu, &bv, &au, &av, w))
        .collect()
}

fn same_distances(pre_u: &Traversal, pre_v: &Traversal, post_u: &Traversal, post_v: &Traversal, w: VertexId) -> bool {
    pre_u.distance(w) == post_u.distance(w) && pre_v.distance(w) == post_v.distance(w)
}

/// Peeling state: the working graph, stored supports, the lower bounds that
/// gate support computation, and the level-`k` candidate queue.
///
/// Edges may be given a fixed truss number up front; they keep support
/// `phi - 2`, are never recomputed, and leave at level `phi`.
pub struct PeelState<'a> {
    g: Graph,
    tau: u32,
    lower: &'a [u32],
    fixed: Option<&'a [u32]>,
    self_check: bool,
    supports: SupportState,
    phi: Vec<u32>,
    order: Vec<EdgeId>,
    stats: RunStats,
    queue: VecDeque<EdgeId>,
    by_lower: Vec<Vec<EdgeId>>,
    refreshed_through: u32,
    pre: Neighborhoods,
    post_u: Traversal,
    post_v: Traversal,
    scratch: Neighborhoods,
    reach: Traversal,
    members: Marker,
    survivors: Marker,
    doomed: Marker,
    degree_memo: Vec<(u64, u32)>,
    version: u64,
}

impl<'a> PeelState<'a> {
    /// `lower` is indexed by edge id and must cover every alive edge.
    pub fn new(g: Graph, tau: u32, lower: &'a [u32]) -> Self {
        let n = g.vertex_count();
        let mut by_lower: Vec<Vec<EdgeId>> = Vec::new();
        for e in g.edges() {
            let lb = lower[e.index()] as usize;
            if lb >= by_lower.len() {
                by_lower.resize_with(lb + 1, Vec::new);
            }
            by_lower[lb].push(e);
        }
        PeelState {
            supports: SupportState::new(g.edge_capacity()),
            phi: vec![0; g.edge_capacity()],
            order: Vec::with_capacity(g.edge_count()),
            stats: RunStats::default(),
            queue: VecDeque::new(),
            by_lower,
            refreshed_through: 0,
            pre: Neighborhoods::new(n),
            post_u: Traversal::new(n),
            post_v: Traversal::new(n),
            scratch: Neighborhoods::new(n),
            reach: Traversal::new(n),
            members: Marker::new(n),
            survivors: Marker::new(n),
            doomed: Marker::new(n),
            degree_memo: vec![(0, 0); n],
            version: 0,
            fixed: None,
            self_check: false,
            tau,
            lower,
            g,
        }
    }

    /// Edges with a non-zero entry in `fixed` keep that truss number.
    pub fn with_fixed(mut self, fixed: &'a [u32]) -> Self {
        for e in self.g.edges() {
            let k = fixed[e.index()];
            if k > 0 {
                self.supports.set_exact(e, k.saturating_sub(2));
            }
        }
        self.fixed = Some(fixed);
        self
    }

    pub fn with_self_check(mut self, on: bool) -> Self {
        self.self_check = on;
        self
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn stats(&self) -> &RunStats {
        &self.stats
    }

    pub fn phi(&self, e: EdgeId) -> Option<u32> {
        Some(self.phi[e.index()]).filter(|&k| k > 0)
    }

    pub fn supports(&self) -> &SupportState {
        &self.supports
    }

    pub fn into_parts(self) -> (Vec<u32>, Vec<EdgeId>, RunStats) {
        (self.phi, self.order, self.stats)
    }

    fn is_fixed(&self, e: EdgeId) -> bool {
        self.fixed.is_some_and(|f| f[e.index()] > 0)
    }

    /// Peels levels `start_k, start_k + 1, ...` until the graph is empty.
    pub fn run(&mut self, start_k: u32) {
        let mut k = start_k.max(1);
        while !self.g.is_empty() {
            self.refresh(k);
            if k >= 2 {
                let ready = self.supports.at_most(k - 2);
                self.queue.extend(ready);
            }
            while let Some(e) = self.queue.pop_front() {
                if self.g.is_edge_alive(e) {
                    self.peel_edge(e, k);
                }
            }
            k += 1;
        }
    }

    /// Computes supports of edges whose lower bound has been reached.
    fn refresh(&mut self, k: u32) {
        while self.refreshed_through < k {
            self.refreshed_through += 1;
            let Some(bucket) = self.by_lower.get_mut(self.refreshed_through as usize) else {
                continue;
            };
            for e in std::mem::take(bucket) {
                if !self.g.is_edge_alive(e) || self.is_fixed(e) || self.supports.status(e) != SupportStatus::Unknown {
                    continue;
                }
                // the remaining graph is the k-truss, so pruning is sound
                // before any support is known
                let (a, b) = self.g.endpoints(e);
                if k >= 2 && (self.prune_vertex(a, k) || self.prune_vertex(b, k)) {
                    continue;
                }
                self.recompute(e);
            }
        }
    }

    fn recompute(&mut self, e: EdgeId) -> u32 {
        let s = self.scratch.support(&self.g, e, self.tau, &mut self.stats);
        self.supports.set_exact(e, s);
        s
    }

    /// Recomputes a stored support above `k - 2`; queues the edge if it drops.
    fn update(&mut self, e: EdgeId, k: u32) {
        // not computed yet: the refresh in progress will compute it on the
        // current graph
        let Some(stored) = self.supports.get(e) else {
            return;
        };
        if stored + 2 > k {
            if self.recompute(e) + 2 <= k {
                self.queue.push_back(e);
            }
        } else {
            self.supports.mark_stale(e);
        }
    }

    fn assign(&mut self, e: EdgeId, k: u32) {
        debug_assert!(
            self.fixed.map_or(0, |f| f[e.index()]) == 0 || self.fixed.unwrap()[e.index()] == k,
            "fixed edge {e} peeled at {k}"
        );
        debug_assert!(
            self.is_fixed(e) || self.lower[e.index()] <= k,
            "edge {e} peeled below its lower bound"
        );
        self.phi[e.index()] = k;
        self.order.push(e);
        self.stats.record_peel(k);
        self.supports.remove(e);
    }

    fn tau_degree(&mut self, v: VertexId) -> u32 {
        let (seen, d) = self.degree_memo[v as usize];
        if seen == self.version + 1 {
            return d;
        }
        self.stats.bfs_traversals += 1;
        let d = self.reach.run(&self.g, v, self.tau).len() as u32 - 1;
        self.degree_memo[v as usize] = (self.version + 1, d);
        d
    }

    fn peel_edge(&mut self, e: EdgeId, k: u32) {
        self.assign(e, k);
        let (u, v) = self.g.endpoints(e);
        self.stats.bfs_traversals += 2;
        let n = self.g.vertex_count();
        self.members.clear(n);
        let mut hood = vec![u, v];
        hood.extend_from_slice(self.pre.common(&self.g, u, v, self.tau));
        for &w in &hood {
            self.members.insert(w);
        }
        self.g.remove_edge(e).expect("queued edge is alive");
        self.version += 1;

        let mut post_ready = false;
        for e2 in edges_within(&self.g, &hood, &self.members) {
            if !self.g.is_edge_alive(e2) || self.is_fixed(e2) {
                continue;
            }
            if self.lower[e2.index()] > k {
                self.stats.delayed_skips += 1;
                continue;
            }
            let (a, b) = self.g.endpoints(e2);
            if self.prune_vertex(a, k) || self.prune_vertex(b, k) {
                continue;
            }
            if !post_ready {
                // Distances can only grow under deletion, so a late snapshot
                // that still matches the pre-removal one proves equality.
                self.post_u.run(&self.g, u, self.tau);
                self.post_v.run(&self.g, v, self.tau);
                self.stats.bfs_traversals += 2;
                post_ready = true;
            }
            let (pu, pv) = (self.pre.from_u(), self.pre.from_v());
            if same_distances(pu, pv, &self.post_u, &self.post_v, a)
                && same_distances(pu, pv, &self.post_u, &self.post_v, b)
            {
                self.stats.unchanged_skips += 1;
                if self.self_check {
                    self.verify_unchanged(e2);
                }
                continue;
            }
            self.update(e2, k);
        }
    }

    fn verify_unchanged(&mut self, e: EdgeId) {
        let (a, b) = self.g.endpoints(e);
        let truth = self.scratch.common(&self.g, a, b, self.tau).len() as u32;
        let stored = self.supports.get(e).expect("checked edges have supports");
        self.stats.self_checks += 1;
        let ok = match self.supports.status(e) {
            SupportStatus::Exact => truth == stored,
            _ => truth <= stored,
        };
        if !ok {
            self.stats.self_check_failures += 1;
        }
    }

    /// If `d_tau(v) <= k - 1`, removes `v` and cascades: every removed
    /// vertex's edges get `k`, its `tau`-hop neighbours are re-tested, and
    /// surviving edges inside that neighbourhood with lower bound `<= k` have
    /// their supports recomputed. Returns whether anything was removed.
    pub fn prune_vertex(&mut self, v: VertexId, k: u32) -> bool {
        if !self.g.is_vertex_alive(v) || self.tau_degree(v) + 1 > k {
            return false;
        }
        let n = self.g.vertex_count();
        self.doomed.clear(n);
        self.doomed.insert(v);
        let mut worklist = VecDeque::from([v]);
        while let Some(x) = worklist.pop_front() {
            if !self.g.is_vertex_alive(x) {
                continue;
            }
            let incident: Vec<EdgeId> = self.g.neighbors(x).map(|(_, e)| e).collect();
            for e in incident {
                self.assign(e, k);
            }
            self.stats.bfs_traversals += 1;
            let hood: Vec<VertexId> = self.reach.run(&self.g, x, self.tau)[1..].to_vec();
            self.g.remove_vertex(x).expect("pruned vertex is alive");
            self.version += 1;
            self.stats.vertices_pruned += 1;

            self.survivors.clear(n);
            let mut kept = Vec::with_capacity(hood.len());
            for w in hood {
                if self.doomed.contains(w) {
                    continue;
                }
                if self.tau_degree(w) < k {
                    self.doomed.insert(w);
                    worklist.push_back(w);
                } else {
                    self.survivors.insert(w);
                    kept.push(w);
                }
            }
            for e2 in edges_within(&self.g, &kept, &self.survivors) {
                if self.is_fixed(e2) {
                    continue;
                }
                if self.lower[e2.index()] > k {
                    self.stats.delayed_skips += 1;
                    continue;
                }
                self.update(e2, k);
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baseline::hot_decompose;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn k4_matches_baseline_with_no_more_work() {
        let g = k4();
        let (opt, os) = hot_decompose_plus(&g, 1);
        let (base, bs) = hot_decompose(&g, 1);
        assert_eq!(opt.phi_table(), base.phi_table());
        assert!(opt.iter().all(|(_, k)| k == 4));
        assert!(os.support_recomputations <= bs.support_recomputations);
    }

    #[test]
    fn star_cascades_under_pruning() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let lower = vec![2; 3];
        let mut state = PeelState::new(g, 1, &lower);
        assert!(state.prune_vertex(1, 4));
        assert_eq!(state.graph().edge_count(), 0);
        for i in 0..3 {
            assert_eq!(state.phi(EdgeId::from_index(i)), Some(4));
        }
        assert_eq!(state.stats().vertices_pruned, 4);
    }

    #[test]
    fn k4_vertex_is_not_pruned_at_three() {
        let g = k4();
        let lower = vec![2; 6];
        let mut state = PeelState::new(g, 1, &lower);
        assert!(!state.prune_vertex(0, 3));
        assert_eq!(state.graph().edge_count(), 6);
        assert!((0..6).all(|i| state.phi(EdgeId::from_index(i)).is_none()));
    }

    #[test]
    fn bridge_removal_changes_distance() {
        // 0-1-2-3 path: removing (1, 2) cuts 3 off from 1
        let before = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let mut after = before.clone();
        after.remove_edge(after.find_edge(1, 2).unwrap()).unwrap();
        assert_eq!(distances_changed(&before, &after, 1, 2, &[0, 3], 3), vec![true, true]);
    }

    #[test]
    fn parallel_path_keeps_distance() {
        // square 0-1-2-3: the other way round keeps every distance within 2
        let before = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let mut after = before.clone();
        after.remove_edge(after.find_edge(0, 1).unwrap()).unwrap();
        assert_eq!(distances_changed(&before, &after, 0, 1, &[2, 3], 2), vec![false, false]);
        // with tau = 1, dist(0, 2) was 2 (beyond the horizon) and stays so,
        // but 1 falls out of range of 0
        assert_eq!(distances_changed(&before, &after, 0, 1, &[1, 2], 1), vec![true, false]);
    }

    #[test]
    fn self_check_passes_on_small_graph() {
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 3),
                (5, 6),
                (6, 7),
                (7, 4),
                (1, 4),
            ],
        );
        for tau in 1..=4 {
            let (r, s) = hot_decompose_plus_with(&g, tau, PeelOptions { self_check: true });
            let (b, _) = hot_decompose(&g, tau);
            assert_eq!(r.phi_table(), b.phi_table(), "tau={tau}");
            assert_eq!(s.self_check_failures, 0);
            assert_eq!(s.self_checks, s.unchanged_skips);
        }
    }

    #[test]
    fn fixed_edges_leave_at_their_level() {
        let g = k4();
        let lower = vec![2; 6];
        let mut fixed = vec![0; 6];
        fixed[0] = 4;
        let mut state = PeelState::new(g, 1, &lower).with_fixed(&fixed);
        state.run(2);
        let (phi, _, stats) = state.into_parts();
        assert_eq!(phi, vec![4; 6]);
        assert!(stats.support_recomputations >= 5);
    }
}
