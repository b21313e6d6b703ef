//! Undirected simple graph with tombstone deletion and bounded-depth BFS.
//!
//! Vertices get dense ids `0..n` in first-seen order of the input, so every
//! downstream tie-break is reproducible. Edges get dense ids in insertion
//! order and keep them for the whole run; removal only flips an alive flag.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::io::BufRead;

use thiserror::Error;

/// Dense internal vertex id.
pub type VertexId = u32;

/// Dense edge id, stable across mutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(u32);

impl EdgeId {
    pub fn from_index(index: usize) -> Self {
        EdgeId(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {0} is not alive")]
    DeadVertex(VertexId),
    #[error("edge {0} is not alive")]
    DeadEdge(EdgeId),
    #[error("vertex {0} out of range")]
    UnknownVertex(VertexId),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// What the loader dropped while building a simple graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub self_loops: usize,
    pub duplicates: usize,
}

#[derive(Debug, Clone, Default)]
pub struct Graph {
    labels: Vec<u64>,
    label_index: HashMap<u64, VertexId>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    endpoints: Vec<(VertexId, VertexId)>,
    edge_alive: Vec<bool>,
    vertex_alive: Vec<bool>,
    live_degree: Vec<u32>,
    live_edges: usize,
    live_vertices: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph over internal ids `0..n`, labelling each vertex with its id.
    /// Self-loops and repeated pairs are dropped.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut g = Graph::new();
        for v in 0..n {
            g.intern(v as u64);
        }
        let mut seen = HashSet::new();
        for &(a, b) in edges {
            assert!((a as usize) < n && (b as usize) < n, "edge ({a}, {b}) outside 0..{n}");
            if a == b {
                continue;
            }
            let key = (a.min(b), a.max(b));
            if seen.insert(key) {
                g.push_edge(key.0, key.1);
            }
        }
        g
    }

    /// Builds a graph from labelled pairs; vertices appear in first-seen order.
    pub fn from_labeled_edges<I>(pairs: I) -> (Self, LoadReport)
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut g = Graph::new();
        let mut report = LoadReport::default();
        let mut seen = HashSet::new();
        for (la, lb) in pairs {
            if la == lb {
                report.self_loops += 1;
                continue;
            }
            let a = g.intern(la);
            let b = g.intern(lb);
            let key = (a.min(b), a.max(b));
            if seen.insert(key) {
                g.push_edge(key.0, key.1);
            } else {
                report.duplicates += 1;
            }
        }
        (g, report)
    }

    fn intern(&mut self, label: u64) -> VertexId {
        if let Some(&id) = self.label_index.get(&label) {
            return id;
        }
        let id = self.labels.len() as VertexId;
        self.labels.push(label);
        self.label_index.insert(label, id);
        self.adjacency.push(Vec::new());
        self.vertex_alive.push(true);
        self.live_degree.push(0);
        self.live_vertices += 1;
        id
    }

    fn push_edge(&mut self, a: VertexId, b: VertexId) -> EdgeId {
        let e = EdgeId::from_index(self.endpoints.len());
        self.endpoints.push((a, b));
        self.edge_alive.push(true);
        self.adjacency[a as usize].push((b, e));
        self.adjacency[b as usize].push((a, e));
        self.live_degree[a as usize] += 1;
        self.live_degree[b as usize] += 1;
        self.live_edges += 1;
        e
    }

    /// Number of vertex slots, dead ones included.
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn alive_vertex_count(&self) -> usize {
        self.live_vertices
    }

    /// Number of alive edges.
    pub fn edge_count(&self) -> usize {
        self.live_edges
    }

    /// Number of edge slots, dead ones included. Per-edge tables are sized by this.
    pub fn edge_capacity(&self) -> usize {
        self.endpoints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.live_edges == 0
    }

    pub fn label(&self, v: VertexId) -> u64 {
        self.labels[v as usize]
    }

    pub fn vertex_by_label(&self, label: u64) -> Option<VertexId> {
        self.label_index.get(&label).copied()
    }

    /// Canonical endpoints `(min id, max id)`.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.endpoints[e.index()]
    }

    pub fn is_edge_alive(&self, e: EdgeId) -> bool {
        self.edge_alive[e.index()]
    }

    pub fn is_vertex_alive(&self, v: VertexId) -> bool {
        self.vertex_alive[v as usize]
    }

    /// Alive degree of `v`.
    pub fn degree(&self, v: VertexId) -> usize {
        self.live_degree[v as usize] as usize
    }

    /// Alive neighbours of `v` with the connecting edge.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        self.adjacency[v as usize]
            .iter()
            .copied()
            .filter(move |&(_, e)| self.edge_alive[e.index()])
    }

    /// Alive edges in id order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.endpoints.len())
            .map(EdgeId::from_index)
            .filter(move |&e| self.edge_alive[e.index()])
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.labels.len() as VertexId).filter(move |&v| self.vertex_alive[v as usize])
    }

    pub fn find_edge(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        let (x, y) = if self.degree(a) <= self.degree(b) {
            (a, b)
        } else {
            (b, a)
        };
        self.neighbors(x).find(|&(w, _)| w == y).map(|(_, e)| e)
    }

    pub fn find_edge_by_labels(&self, a: u64, b: u64) -> Option<EdgeId> {
        self.find_edge(self.vertex_by_label(a)?, self.vertex_by_label(b)?)
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Result<(), GraphError> {
        if e.index() >= self.endpoints.len() || !self.edge_alive[e.index()] {
            return Err(GraphError::DeadEdge(e));
        }
        self.edge_alive[e.index()] = false;
        let (a, b) = self.endpoints[e.index()];
        self.live_degree[a as usize] -= 1;
        self.live_degree[b as usize] -= 1;
        self.live_edges -= 1;
        Ok(())
    }

    /// Removes `v` and every alive incident edge; returns the edges killed.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<Vec<EdgeId>, GraphError> {
        if v as usize >= self.labels.len() {
            return Err(GraphError::UnknownVertex(v));
        }
        if !self.vertex_alive[v as usize] {
            return Err(GraphError::DeadVertex(v));
        }
        let incident: Vec<EdgeId> = self.neighbors(v).map(|(_, e)| e).collect();
        for &e in &incident {
            self.remove_edge(e)?;
        }
        self.vertex_alive[v as usize] = false;
        self.live_vertices -= 1;
        Ok(incident)
    }

    /// Copy of this graph in which only the alive edges accepted by `keep`
    /// remain alive. Ids and labels are unchanged.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(EdgeId) -> bool) -> Graph {
        let mut sub = self.clone();
        for e in self.edges() {
            if !keep(e) {
                sub.remove_edge(e).expect("edge alive in source graph");
            }
        }
        sub
    }

    /// Alive edges as endpoint pairs, in id order.
    pub fn edge_list(&self) -> Vec<(EdgeId, VertexId, VertexId)> {
        self.edges()
            .map(|e| {
                let (a, b) = self.endpoints(e);
                (e, a, b)
            })
            .collect()
    }

    /// Exact shortest-path distances from `source`, truncated at `horizon` hops.
    pub fn bounded_bfs(&self, source: VertexId, horizon: u32) -> Result<DistanceMap, GraphError> {
        self.check_vertex(source)?;
        let mut t = Traversal::new(self.vertex_count());
        t.run(self, source, horizon);
        Ok(DistanceMap {
            source,
            horizon,
            entries: t.visited().iter().map(|&w| (w, t.dist[w as usize])).collect(),
        })
    }

    /// `|N_tau(v)|`: vertices other than `v` within `tau` hops.
    pub fn degree_tau(&self, v: VertexId, tau: u32) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        let mut t = Traversal::new(self.vertex_count());
        Ok(t.run(self, v, tau).len() - 1)
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v as usize >= self.labels.len() {
            Err(GraphError::UnknownVertex(v))
        } else if !self.vertex_alive[v as usize] {
            Err(GraphError::DeadVertex(v))
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_edge(&self, e: EdgeId) -> Result<(), GraphError> {
        if e.index() < self.endpoints.len() && self.edge_alive[e.index()] {
            Ok(())
        } else {
            Err(GraphError::DeadEdge(e))
        }
    }
}

/// Parses a whitespace-separated edge list. Lines starting with `#` and blank
/// lines are skipped; tokens past the second on a line are ignored.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<(Graph, LoadReport), GraphError> {
    let mut pairs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let label = |tokens: &mut std::str::SplitWhitespace<'_>| -> Result<u64, GraphError> {
            let tok = tokens.next().ok_or_else(|| GraphError::Parse {
                line: i + 1,
                message: "expected two vertex labels".into(),
            })?;
            tok.parse::<u64>().map_err(|_| GraphError::Parse {
                line: i + 1,
                message: format!("vertex label {tok:?} is not a non-negative integer"),
            })
        };
        let a = label(&mut tokens)?;
        let b = label(&mut tokens)?;
        pairs.push((a, b));
    }
    Ok(Graph::from_labeled_edges(pairs))
}

pub fn parse_edge_list(text: &str) -> Result<(Graph, LoadReport), GraphError> {
    load_edge_list(text.as_bytes())
}

/// Truncated distances from one source. Vertices further than `horizon` are absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMap {
    pub source: VertexId,
    pub horizon: u32,
    entries: BTreeMap<VertexId, u32>,
}

impl DistanceMap {
    pub fn get(&self, v: VertexId) -> Option<u32> {
        self.entries.get(&v).copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.entries.contains_key(&v)
    }

    /// Number of entries, source included.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.entries.iter().map(|(&v, &d)| (v, d))
    }

    /// `N_horizon(source)`: every entry except the source.
    pub fn neighbor_set(&self) -> Vec<VertexId> {
        self.entries.keys().copied().filter(|&v| v != self.source).collect()
    }
}

/// Reusable BFS scratch. Membership and distances are stamped with an epoch,
/// so a new run costs only the vertices it touches.
#[derive(Debug, Clone)]
pub struct Traversal {
    stamp: Vec<u32>,
    dist: Vec<u32>,
    epoch: u32,
    order: Vec<VertexId>,
}

impl Traversal {
    pub fn new(n: usize) -> Self {
        Traversal {
            stamp: vec![0; n],
            dist: vec![0; n],
            epoch: 0,
            order: Vec::new(),
        }
    }

    fn reset(&mut self, n: usize) {
        if self.stamp.len() < n {
            self.stamp.resize(n, 0);
            self.dist.resize(n, 0);
        }
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        self.order.clear();
    }

    /// BFS over alive edges from `source` up to `horizon` hops. Returns the
    /// visited vertices in BFS order, `source` first.
    pub fn run(&mut self, g: &Graph, source: VertexId, horizon: u32) -> &[VertexId] {
        self.run_filtered(g, &[source], horizon, |_| true, |_| true)
    }

    /// Multi-source BFS restricted to vertices accepted by `vertex_ok` and
    /// edges accepted by `edge_ok`. Sources are always visited.
    pub fn run_filtered(
        &mut self,
        g: &Graph,
        sources: &[VertexId],
        horizon: u32,
        mut vertex_ok: impl FnMut(VertexId) -> bool,
        mut edge_ok: impl FnMut(EdgeId) -> bool,
    ) -> &[VertexId] {
        self.reset(g.vertex_count());
        for &s in sources {
            if self.stamp[s as usize] != self.epoch {
                self.stamp[s as usize] = self.epoch;
                self.dist[s as usize] = 0;
                self.order.push(s);
            }
        }
        let mut head = 0;
        while head < self.order.len() {
            let x = self.order[head];
            head += 1;
            let d = self.dist[x as usize];
            if d >= horizon {
                continue;
            }
            for &(y, e) in &g.adjacency[x as usize] {
                if !g.edge_alive[e.index()] || self.stamp[y as usize] == self.epoch {
                    continue;
                }
                if !vertex_ok(y) || !edge_ok(e) {
                    continue;
                }
                self.stamp[y as usize] = self.epoch;
                self.dist[y as usize] = d + 1;
                self.order.push(y);
            }
        }
        &self.order
    }

    pub fn visited(&self) -> &[VertexId] {
        &self.order
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.stamp.get(v as usize).is_some_and(|&s| s == self.epoch) && self.epoch != 0
    }

    pub fn distance(&self, v: VertexId) -> Option<u32> {
        self.contains(v).then(|| self.dist[v as usize])
    }
}

/// Epoch-stamped vertex set used for membership tests inside neighbourhoods.
#[derive(Debug, Clone)]
pub(crate) struct Marker {
    stamp: Vec<u32>,
    epoch: u32,
}

impl Marker {
    pub(crate) fn new(n: usize) -> Self {
        Marker {
            stamp: vec![0; n],
            epoch: 1,
        }
    }

    pub(crate) fn clear(&mut self, n: usize) {
        if self.stamp.len() < n {
            self.stamp.resize(n, 0);
        }
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
    }

    pub(crate) fn insert(&mut self, v: VertexId) -> bool {
        let slot = &mut self.stamp[v as usize];
        let fresh = *slot != self.epoch;
        *slot = self.epoch;
        fresh
    }

    pub(crate) fn contains(&self, v: VertexId) -> bool {
        self.stamp[v as usize] == self.epoch
    }
}

/// Alive edges whose both endpoints are marked, each reported once.
pub(crate) fn edges_within(g: &Graph, members: &[VertexId], marker: &Marker) -> Vec<EdgeId> {
    let mut out = Vec::new();
    for &x in members {
        for (y, e) in g.neighbors(x) {
            if x < y && marker.contains(y) {
                out.push(e);
            }
        }
    }
    out
}
