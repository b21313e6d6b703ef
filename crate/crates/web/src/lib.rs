//! WebAssembly bindings for the browser demo. Every operation takes and
//! returns plain strings: edge-list text in, JSON out.

use hotruss::generate::{generate, GeneratorKind};
use hotruss::oracle::approximation_error;
use hotruss::{hot_decompose, hot_decompose_plus, hot_top_r, lower_bounds, parse_edge_list, Graph, RunStats};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest graph the page accepts, to keep the tab responsive.
pub const MAX_EDGES: usize = 20_000;

fn load(text: &str) -> Result<Graph, String> {
    let (g, _) = parse_edge_list(text).map_err(|e| e.to_string())?;
    if g.edge_count() > MAX_EDGES {
        return Err(format!(
            "{} edges; the demo accepts at most {MAX_EDGES}",
            g.edge_count()
        ));
    }
    Ok(g)
}

fn check_tau(tau: u32) -> Result<(), String> {
    if tau == 0 {
        return Err("tau must be at least 1".into());
    }
    Ok(())
}

fn stats_json(s: &RunStats) -> Value {
    json!({
        "support_recomputations": s.support_recomputations,
        "bfs_traversals": s.bfs_traversals,
        "edges_peeled": s.edges_peeled,
        "vertices_pruned": s.vertices_pruned,
        "delayed_skips": s.delayed_skips,
        "unchanged_skips": s.unchanged_skips,
    })
}

/// Seeded synthetic edge list.
pub fn generate_text(kind: &str, n: u32, m: u32, seed: u64) -> Result<String, String> {
    let kind: GeneratorKind = kind.parse().map_err(|e: hotruss::GenerateError| e.to_string())?;
    generate(kind, n as u64, m as u64, seed).map_err(|e| e.to_string())
}

/// Full decomposition with both engines.
///
/// `{"vertices": [label], "edges": [{"u", "v", "phi", "lower"}], "k_max",
/// "baseline": stats, "optimized": stats, "lower_bound_error", "agree"}`
/// where `u` and `v` index into `vertices`.
pub fn decompose_json(text: &str, tau: u32) -> Result<String, String> {
    check_tau(tau)?;
    let g = load(text)?;
    let (base, base_stats) = hot_decompose(&g, tau);
    let (opt, opt_stats) = hot_decompose_plus(&g, tau);
    let lower = lower_bounds(&g, tau, &mut RunStats::default());
    let edges: Vec<Value> = g
        .edges()
        .map(|e| {
            let (u, v) = g.endpoints(e);
            json!({ "u": u, "v": v, "phi": opt.phi(e), "lower": lower[e.index()] })
        })
        .collect();
    let vertices: Vec<u64> = (0..g.vertex_count() as u32).map(|v| g.label(v)).collect();
    Ok(json!({
        "tau": tau,
        "vertices": vertices,
        "edges": edges,
        "k_max": opt.k_max(),
        "baseline": stats_json(&base_stats),
        "optimized": stats_json(&opt_stats),
        "lower_bound_error": approximation_error(&opt, &lower),
        "agree": base.phi_table() == opt.phi_table(),
    })
    .to_string())
}

/// The `r` highest levels: `{"k_max", "levels": [{"k", "edges": [[u, v]]}],
/// "stats"}` with vertex indices as in [`decompose_json`].
pub fn top_r_json(text: &str, tau: u32, r: u32) -> Result<String, String> {
    check_tau(tau)?;
    if r == 0 {
        return Err("r must be at least 1".into());
    }
    let g = load(text)?;
    let (top, stats) = hot_top_r(&g, tau, r);
    let levels: Vec<Value> = top
        .trusses
        .iter()
        .rev()
        .map(|(k, edges)| {
            let pairs: Vec<[u32; 2]> = edges
                .iter()
                .map(|&e| {
                    let (u, v) = g.endpoints(e);
                    [u, v]
                })
                .collect();
            json!({ "k": k, "edges": pairs })
        })
        .collect();
    Ok(json!({ "tau": tau, "r": r, "k_max": top.k_max, "levels": levels, "stats": stats_json(&stats) }).to_string())
}

#[wasm_bindgen(js_name = generateGraph)]
pub fn generate_graph(kind: &str, n: u32, m: u32, seed: u32) -> Result<String, JsValue> {
    generate_text(kind, n, m, seed as u64).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn decompose(text: &str, tau: u32) -> Result<String, JsValue> {
    decompose_json(text, tau).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = topR)]
pub fn top_r(text: &str, tau: u32, r: u32) -> Result<String, JsValue> {
    top_r_json(text, tau, r).map_err(|e| JsValue::from_str(&e))
}
