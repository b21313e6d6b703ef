#![allow(dead_code)]

use hotruss::generate::generate_edges;
use hotruss::{GeneratorKind, Graph};

pub struct Case {
    pub name: String,
    pub n: usize,
    pub graph: Graph,
}

const DENSITIES: [f64; 7] = [0.8, 1.2, 1.6, 2.0, 2.5, 3.0, 4.0];

/// Fixed random graphs with `n` in `[5, 50]` and varied density, a quarter
/// of them preferential-attachment.
pub fn suite(count: usize) -> Vec<Case> {
    (0..count)
        .map(|i| {
            let n = 5 + (i * 37 + i / 46) % 46;
            let density = DENSITIES[i % DENSITIES.len()];
            let max = n * (n - 1) / 2;
            let m = ((n as f64 * density).round() as usize).clamp(1, max);
            let kind = if i % 4 == 3 {
                GeneratorKind::PreferentialAttachment
            } else {
                GeneratorKind::UniformRandom
            };
            let seed = 1000 + i as u64;
            let pairs: Vec<(u32, u32)> = generate_edges(kind, n as u64, m as u64, seed)
                .unwrap()
                .into_iter()
                .map(|(a, b)| (a as u32, b as u32))
                .collect();
            Case {
                name: format!("{kind:?}(n={n}, m={m}, seed={seed})"),
                n,
                graph: Graph::from_edges(n, &pairs),
            }
        })
        .collect()
}

pub fn clique(n: u32) -> Vec<(u32, u32)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}
