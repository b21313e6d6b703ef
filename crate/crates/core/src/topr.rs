//! The `r` highest truss levels without a full decomposition.
//!
//! Upper bounds give a guess `K` for the top level. Only edges with upper
//! bound above `K - r` can have a truss number above `K - r`, and on that
//! subgraph every such truss number is the same as in the whole graph. The
//! subgraph is peeled from level `K - r`; labels above `K - r` are final. If
//! the top level found is below `K`, the guess is lowered and the range
//! extended downwards, keeping the labels already known.

use std::collections::BTreeMap;

use crate::bounds::{lower_bounds, upper_bounds};
use crate::graph::{EdgeId, Graph};
use crate::optimized::PeelState;
use crate::result::RunStats;
use crate::support::compute_all_supports;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopRResult {
    pub tau: u32,
    /// Largest truss number in the graph; `None` for a graph without edges.
    pub k_max: Option<u32>,
    /// For each distinct level `k` in `(k_max - r, k_max]`, the edges of the
    /// `(k, tau)`-truss.
    pub trusses: BTreeMap<u32, Vec<EdgeId>>,
    /// Truss numbers that were determined, indexed by edge id (0 = unknown).
    known: Vec<u32>,
}

impl TopRResult {
    pub fn phi(&self, e: EdgeId) -> Option<u32> {
        self.known.get(e.index()).copied().filter(|&k| k > 0)
    }

    /// Edges of the lowest returned truss, which contains all the others.
    pub fn edges(&self) -> &[EdgeId] {
        self.trusses.values().next().map_or(&[], Vec::as_slice)
    }
}

pub fn hot_top_r(g: &Graph, tau: u32, r: u32) -> (TopRResult, RunStats) {
    assert!(tau >= 1, "tau must be at least 1");
    assert!(r >= 1, "r must be at least 1");
    let mut stats = RunStats::default();
    let supports = compute_all_supports(g, tau, &mut stats);
    let upper = upper_bounds(g, tau, &supports, &mut stats);
    let lower = lower_bounds(g, tau, &mut stats);
    let mut known = vec![0u32; g.edge_capacity()];

    let mut top = g.edges().map(|e| upper[e.index()]).max().unwrap_or(0);
    let mut k_max = None;
    while top >= 2 {
        let floor = top.saturating_sub(r);
        let sub = g.edge_subgraph(|e| upper[e.index()] > floor);
        let start = if floor >= 2 {
            floor
        } else {
            sub.edges().map(|e| lower[e.index()]).min().unwrap_or(2)
        };
        let mut state = PeelState::new(sub, tau, &lower).with_fixed(&known);
        state.run(start);
        let (phi, _, peel_stats) = state.into_parts();
        stats.absorb(&peel_stats);

        for (slot, &k) in known.iter_mut().zip(&phi) {
            if *slot == 0 && k > floor.max(1) {
                *slot = k;
            }
        }
        let found = known.iter().copied().max().filter(|&k| k > 0);
        match found {
            Some(k) if k == top || floor < 2 => {
                k_max = Some(k);
                break;
            }
            Some(k) => top = k,
            None => top = floor,
        }
    }

    let mut trusses = BTreeMap::new();
    if let Some(k_max) = k_max {
        let floor = k_max.saturating_sub(r);
        let mut levels: Vec<u32> = known.iter().copied().filter(|&k| k > floor).collect();
        levels.sort_unstable();
        levels.dedup();
        for k in levels {
            let edges = (0..known.len())
                .filter(|&i| known[i] >= k)
                .map(EdgeId::from_index)
                .collect();
            trusses.insert(k, edges);
        }
    }
    (
        TopRResult {
            tau,
            k_max,
            trusses,
            known,
        },
        stats,
    )
}
