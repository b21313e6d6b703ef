use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::graph::{EdgeId, Graph};

/// Per-edge higher-order truss numbers for one `tau`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrussResult {
    pub tau: u32,
    /// Indexed by edge id; 0 for edges that were not part of the input.
    phi: Vec<u32>,
    /// Edges in the order they were assigned.
    pub order: Vec<EdgeId>,
}

impl TrussResult {
    pub(crate) fn new(tau: u32, phi: Vec<u32>, order: Vec<EdgeId>) -> Self {
        TrussResult { tau, phi, order }
    }

    pub fn phi(&self, e: EdgeId) -> Option<u32> {
        self.phi.get(e.index()).copied().filter(|&k| k > 0)
    }

    /// Raw table indexed by edge id, 0 meaning "no value".
    pub fn phi_table(&self) -> &[u32] {
        &self.phi
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, u32)> + '_ {
        self.phi
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| (EdgeId::from_index(i), k))
    }

    pub fn edge_count(&self) -> usize {
        self.iter().count()
    }

    pub fn k_max(&self) -> Option<u32> {
        self.phi.iter().copied().max().filter(|&k| k > 0)
    }

    /// Edge set of the `(k, tau)`-truss: every edge with `phi >= k`.
    pub fn truss(&self, k: u32) -> Vec<EdgeId> {
        self.iter().filter(|&(_, p)| p >= k).map(|(e, _)| e).collect()
    }

    /// Edges grouped by exact truss number.
    pub fn levels(&self) -> BTreeMap<u32, Vec<EdgeId>> {
        let mut out: BTreeMap<u32, Vec<EdgeId>> = BTreeMap::new();
        for (e, k) in self.iter() {
            out.entry(k).or_default().push(e);
        }
        out
    }

    /// The trusses for the distinct levels `k` in `(k_max - r, k_max]`.
    pub fn top_levels(&self, r: u32) -> BTreeMap<u32, Vec<EdgeId>> {
        let Some(k_max) = self.k_max() else {
            return BTreeMap::new();
        };
        let floor = k_max.saturating_sub(r);
        self.levels()
            .keys()
            .filter(|&&k| k > floor)
            .map(|&k| (k, self.truss(k)))
            .collect()
    }

    /// `label_u<TAB>label_v<TAB>phi` lines sorted by `(label_u, label_v)`,
    /// where `label_u < label_v`.
    pub fn to_tsv(&self, g: &Graph) -> String {
        let mut rows: Vec<(u64, u64, u32)> = self
            .iter()
            .map(|(e, k)| {
                let (a, b) = g.endpoints(e);
                let (la, lb) = (g.label(a), g.label(b));
                (la.min(lb), la.max(lb), k)
            })
            .collect();
        rows.sort_unstable();
        let mut out = String::with_capacity(rows.len() * 12);
        for (a, b, k) in rows {
            let _ = writeln!(out, "{a}\t{b}\t{k}");
        }
        out
    }
}

/// Work counters for one run. `support_recomputations` is the figure the
/// baseline and optimized decomposers are compared on.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunStats {
    pub support_recomputations: u64,
    pub bfs_traversals: u64,
    pub edges_peeled: u64,
    pub vertices_pruned: u64,
    pub delayed_skips: u64,
    pub unchanged_skips: u64,
    pub self_checks: u64,
    pub self_check_failures: u64,
    /// Edges assigned at each k.
    pub per_k_iterations: BTreeMap<u32, u64>,
}

impl RunStats {
    pub(crate) fn record_peel(&mut self, k: u32) {
        self.edges_peeled += 1;
        *self.per_k_iterations.entry(k).or_insert(0) += 1;
    }

    pub fn absorb(&mut self, other: &RunStats) {
        self.support_recomputations += other.support_recomputations;
        self.bfs_traversals += other.bfs_traversals;
        self.edges_peeled += other.edges_peeled;
        self.vertices_pruned += other.vertices_pruned;
        self.delayed_skips += other.delayed_skips;
        self.unchanged_skips += other.unchanged_skips;
        self.self_checks += other.self_checks;
        self.self_check_failures += other.self_check_failures;
        for (&k, &c) in &other.per_k_iterations {
            *self.per_k_iterations.entry(k).or_insert(0) += c;
        }
    }

    /// Flat `key<TAB>value` lines.
    pub fn to_kv(&self) -> Vec<(String, String)> {
        let mut kv = vec![
            (
                "support_recomputations".to_string(),
                self.support_recomputations.to_string(),
            ),
            ("bfs_traversals".to_string(), self.bfs_traversals.to_string()),
            ("edges_peeled".to_string(), self.edges_peeled.to_string()),
            ("vertices_pruned".to_string(), self.vertices_pruned.to_string()),
            ("delayed_skips".to_string(), self.delayed_skips.to_string()),
            ("unchanged_skips".to_string(), self.unchanged_skips.to_string()),
            ("self_checks".to_string(), self.self_checks.to_string()),
            ("self_check_failures".to_string(), self.self_check_failures.to_string()),
        ];
        for (k, c) in &self.per_k_iterations {
            kv.push((format!("peeled_at_k.{k}"), c.to_string()));
        }
        kv
    }
}
