//! Bottom-up peeling with immediate support updates.
//!
//! After removing `e = (u, v)` at level `k`, every alive edge with both
//! endpoints in `{u, v} ∪ Delta_tau(e)` (taken before the removal) whose stored
//! support is still above `k - 2` gets its support recomputed from scratch.

use std::collections::VecDeque;

use crate::graph::{edges_within, Graph, Marker};
use crate::result::{RunStats, TrussResult};
use crate::support::{compute_all_supports, Neighborhoods};

/// Full decomposition. The input is copied; the copy is peeled to empty.
pub fn hot_decompose(g: &Graph, tau: u32) -> (TrussResult, RunStats) {
    match hot_decompose_budgeted(g, tau, None) {
        Ok(out) => out,
        Err(_) => unreachable!("no budget"),
    }
}

/// Returned when a budgeted run stops early.
#[derive(Debug, Clone)]
pub struct BudgetExceeded {
    pub stats: RunStats,
    pub edges_assigned: usize,
}

/// Like [`hot_decompose`] but gives up once `max_support_recomputations`
/// support computations have been spent.
pub fn hot_decompose_budgeted(
    g: &Graph,
    tau: u32,
    max_support_recomputations: Option<u64>,
) -> Result<(TrussResult, RunStats), BudgetExceeded> {
    assert!(tau >= 1, "tau must be at least 1");
    let mut g = g.clone();
    let mut stats = RunStats::default();
    let mut supports = compute_all_supports(&g, tau, &mut stats);
    let mut phi = vec![0u32; g.edge_capacity()];
    let mut order = Vec::with_capacity(g.edge_count());
    let mut hood = Neighborhoods::new(g.vertex_count());
    let mut recompute = Neighborhoods::new(g.vertex_count());
    let mut marker = Marker::new(g.vertex_count());
    let mut members = Vec::new();
    let mut queue = VecDeque::new();
    let over_budget =
        |stats: &RunStats| max_support_recomputations.is_some_and(|cap| stats.support_recomputations > cap);

    while let Some(k) = supports.min_support_k() {
        queue.extend(supports.at_most(k - 2));
        while let Some(e) = queue.pop_front() {
            if !g.is_edge_alive(e) {
                continue;
            }
            if over_budget(&stats) {
                return Err(BudgetExceeded {
                    stats,
                    edges_assigned: order.len(),
                });
            }
            phi[e.index()] = k;
            order.push(e);
            stats.record_peel(k);

            let (u, v) = g.endpoints(e);
            stats.bfs_traversals += 2;
            marker.clear(g.vertex_count());
            members.clear();
            members.extend([u, v]);
            members.extend_from_slice(hood.common(&g, u, v, tau));
            for &w in &members {
                marker.insert(w);
            }
            g.remove_edge(e).expect("queued edge is alive");
            supports.remove(e);

            for e2 in edges_within(&g, &members, &marker) {
                let stored = supports.get(e2).expect("every alive edge is indexed");
                if stored + 2 > k {
                    let s = recompute.support(&g, e2, tau, &mut stats);
                    supports.set_exact(e2, s);
                    if s + 2 <= k {
                        queue.push_back(e2);
                    }
                } else {
                    supports.mark_stale(e2);
                }
            }
        }
    }
    Ok((TrussResult::new(tau, phi, order), stats))
}
