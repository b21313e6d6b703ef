//! Brute-force reference implementations and structural checkers.
//!
//! Nothing here shares code with the peeling engines beyond reading the edge
//! list of a [`Graph`]. Every round recomputes every support from scratch.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::graph::{EdgeId, Graph, VertexId};
use crate::result::TrussResult;

/// Plain bitset over vertex ids.
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and_count(&self, other: &Bits) -> u32 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones()).sum()
    }
}

/// A fixed edge list with a subset marked present.
struct EdgeSet {
    n: usize,
    edges: Vec<(EdgeId, usize, usize)>,
}

impl EdgeSet {
    fn of(g: &Graph) -> Self {
        let edges = g
            .edge_list()
            .into_iter()
            .map(|(e, a, b)| (e, a as usize, b as usize))
            .collect();
        EdgeSet {
            n: g.vertex_count(),
            edges,
        }
    }

    fn adjacency(&self, present: &[bool]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(_, a, b)) in self.edges.iter().enumerate() {
            if present[i] {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        adj
    }

    /// Vertices within `tau` hops of each vertex, the vertex itself included.
    fn balls(&self, present: &[bool], tau: u32) -> Vec<Option<Bits>> {
        let adj = self.adjacency(present);
        let mut dist = vec![u32::MAX; self.n];
        (0..self.n)
            .map(|s| {
                if adj[s].is_empty() {
                    return None;
                }
                let mut ball = Bits::new(self.n);
                let mut seen = vec![s];
                let mut queue = VecDeque::from([s]);
                dist[s] = 0;
                while let Some(x) = queue.pop_front() {
                    ball.set(x);
                    if dist[x] == tau {
                        continue;
                    }
                    for &y in &adj[x] {
                        if dist[y] == u32::MAX {
                            dist[y] = dist[x] + 1;
                            seen.push(y);
                            queue.push_back(y);
                        }
                    }
                }
                for x in seen {
                    dist[x] = u32::MAX;
                }
                Some(ball)
            })
            .collect()
    }

    /// Deletes every present edge with support below `k - 2` until none is.
    fn shrink_to_truss(&self, present: &mut [bool], k: u32, tau: u32) {
        loop {
            let balls = self.balls(present, tau);
            let mut removed = false;
            for (i, &(_, a, b)) in self.edges.iter().enumerate() {
                if !present[i] {
                    continue;
                }
                let (ba, bb) = (balls[a].as_ref().unwrap(), balls[b].as_ref().unwrap());
                // both balls contain a and b
                let support = ba.and_count(bb) - 2;
                if support + 2 < k {
                    present[i] = false;
                    removed = true;
                }
            }
            if !removed {
                return;
            }
        }
    }
}

/// Edges of the `(k, tau)`-truss, sorted by id.
pub fn ktruss_naive(g: &Graph, k: u32, tau: u32) -> Vec<EdgeId> {
    assert!(k >= 2 && tau >= 1);
    let set = EdgeSet::of(g);
    let mut present = vec![true; set.edges.len()];
    set.shrink_to_truss(&mut present, k, tau);
    set.edges
        .iter()
        .zip(&present)
        .filter(|(_, &p)| p)
        .map(|(&(e, _, _), _)| e)
        .collect()
}

/// Truss numbers by evaluating the trusses for `k = 2, 3, ...` in turn.
pub fn decompose_naive(g: &Graph, tau: u32) -> TrussResult {
    assert!(tau >= 1);
    let set = EdgeSet::of(g);
    let mut present = vec![true; set.edges.len()];
    let mut phi = vec![0u32; g.edge_capacity()];
    let mut order = Vec::new();
    let mut k = 2;
    while present.iter().any(|&p| p) {
        let before = present.clone();
        set.shrink_to_truss(&mut present, k + 1, tau);
        for (i, &(e, _, _)) in set.edges.iter().enumerate() {
            if before[i] && !present[i] {
                phi[e.index()] = k;
                order.push(e);
            }
        }
        k += 1;
    }
    TrussResult::new(tau, phi, order)
}

/// Triangle-support peeling for `tau = 1`.
pub fn classic_truss_decompose(g: &Graph) -> TrussResult {
    let mut nbrs: HashMap<VertexId, HashSet<VertexId>> = HashMap::new();
    let mut id: HashMap<(VertexId, VertexId), EdgeId> = HashMap::new();
    for (e, a, b) in g.edge_list() {
        nbrs.entry(a).or_default().insert(b);
        nbrs.entry(b).or_default().insert(a);
        id.insert((a.min(b), a.max(b)), e);
    }
    let key = |a: VertexId, b: VertexId| (a.min(b), a.max(b));
    let mut support: HashMap<(VertexId, VertexId), u32> = id
        .keys()
        .map(|&(a, b)| ((a, b), nbrs[&a].intersection(&nbrs[&b]).count() as u32))
        .collect();
    let mut phi = vec![0u32; g.edge_capacity()];
    let mut order = Vec::new();
    let mut k = 2;
    while !support.is_empty() {
        loop {
            let mut low: Vec<_> = support.iter().filter(|(_, &s)| s + 2 <= k).map(|(&p, _)| p).collect();
            if low.is_empty() {
                break;
            }
            low.sort_unstable();
            let (a, b) = low[0];
            support.remove(&(a, b));
            let third: Vec<VertexId> = nbrs[&a].intersection(&nbrs[&b]).copied().collect();
            for w in third {
                for p in [key(a, w), key(b, w)] {
                    if let Some(s) = support.get_mut(&p) {
                        *s -= 1;
                    }
                }
            }
            nbrs.get_mut(&a).unwrap().remove(&b);
            nbrs.get_mut(&b).unwrap().remove(&a);
            let e = id[&(a, b)];
            phi[e.index()] = k;
            order.push(e);
        }
        k += 1;
    }
    TrussResult::new(1, phi, order)
}

/// The subgraph formed by `edges`, as adjacency lists over the original
/// vertex ids.
fn sub_adjacency(g: &Graph, edges: &[EdgeId]) -> HashMap<VertexId, Vec<VertexId>> {
    let mut adj: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
    for &e in edges {
        let (a, b) = g.endpoints(e);
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    adj
}

fn distances(adj: &HashMap<VertexId, Vec<VertexId>>, s: VertexId) -> HashMap<VertexId, u32> {
    let mut dist = HashMap::from([(s, 0)]);
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        for &y in &adj[&x] {
            dist.entry(y).or_insert_with(|| {
                queue.push_back(y);
                d + 1
            });
        }
    }
    dist
}

/// A vertex whose `tau`-hop degree inside the subgraph is below `k - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeWitness {
    pub vertex: VertexId,
    pub degree: usize,
}

/// Every vertex of the subgraph formed by `edges` has at least `k - 1`
/// vertices within `tau` hops inside that subgraph.
pub fn check_min_degree(g: &Graph, edges: &[EdgeId], tau: u32, k: u32) -> Result<(), Vec<DegreeWitness>> {
    let adj = sub_adjacency(g, edges);
    let mut bad: Vec<DegreeWitness> = adj
        .keys()
        .map(|&v| DegreeWitness {
            vertex: v,
            degree: distances(&adj, v).values().filter(|&&d| d >= 1 && d <= tau).count(),
        })
        .filter(|w| (w.degree as u64) + 1 < k as u64)
        .collect();
    bad.sort_by_key(|w| w.vertex);
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

/// A connected component whose diameter exceeds `2 tau (|V| - 1) / k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiameterWitness {
    pub vertices: usize,
    pub diameter: u32,
}

/// Each connected component of the subgraph formed by `edges` has diameter
/// at most `2 tau (|V| - 1) / k`.
pub fn check_diameter(g: &Graph, edges: &[EdgeId], tau: u32, k: u32) -> Result<(), Vec<DiameterWitness>> {
    let adj = sub_adjacency(g, edges);
    let mut vertices: Vec<VertexId> = adj.keys().copied().collect();
    vertices.sort_unstable();
    let mut placed: HashSet<VertexId> = HashSet::new();
    let mut bad = Vec::new();
    for &s in &vertices {
        if placed.contains(&s) {
            continue;
        }
        let component: Vec<VertexId> = distances(&adj, s).into_keys().collect();
        placed.extend(&component);
        let diameter = component
            .iter()
            .map(|&x| distances(&adj, x).into_values().max().unwrap_or(0))
            .max()
            .unwrap_or(0);
        let n = component.len() as u64;
        if diameter as u64 * k as u64 > 2 * tau as u64 * (n - 1) {
            bad.push(DiameterWitness {
                vertices: component.len(),
                diameter,
            });
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

/// Mean of `|phi - bound| / phi` over the edges with a truss number.
/// `bound` is indexed by edge id. Returns 0 for an empty result.
pub fn approximation_error(exact: &TrussResult, bound: &[u32]) -> f64 {
    let (mut sum, mut count) = (0.0, 0usize);
    for (e, phi) in exact.iter() {
        let b = bound[e.index()];
        sum += (phi as f64 - b as f64).abs() / phi as f64;
        count += 1;
    }
    if count == 0 {
        0.0
    } else {
        sum / count as f64
    }
}
