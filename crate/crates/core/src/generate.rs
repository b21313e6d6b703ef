//! Seeded synthetic graphs written as edge-list text.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    /// `m` distinct pairs drawn uniformly from all `n (n - 1) / 2`.
    UniformRandom,
    /// Vertices arrive one at a time and attach to earlier vertices with
    /// probability proportional to degree + 1.
    PreferentialAttachment,
}

impl FromStr for GeneratorKind {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform-random" | "uniform" => Ok(GeneratorKind::UniformRandom),
            "preferential-attachment" | "pa" => Ok(GeneratorKind::PreferentialAttachment),
            other => Err(GenerateError::UnknownKind(other.to_string())),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("unknown generator kind `{0}` (expected uniform-random or preferential-attachment)")]
    UnknownKind(String),
    #[error("{m} edges requested but a simple graph on {n} vertices has at most {max}")]
    TooManyEdges { n: u64, m: u64, max: u64 },
    #[error("bad generator spec `{0}` (expected kind:n:m)")]
    BadSpec(String),
}

/// Parses `kind:n:m`.
pub fn parse_spec(spec: &str) -> Result<(GeneratorKind, u64, u64), GenerateError> {
    let bad = || GenerateError::BadSpec(spec.to_string());
    let mut parts = spec.split(':');
    let (Some(kind), Some(n), Some(m), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
        return Err(bad());
    };
    let kind = kind.parse()?;
    let n = n.trim().parse().map_err(|_| bad())?;
    let m = m.trim().parse().map_err(|_| bad())?;
    Ok((kind, n, m))
}

/// Edge pairs over vertices `0..n`, each with `a < b`, no duplicates.
pub fn generate_edges(kind: GeneratorKind, n: u64, m: u64, seed: u64) -> Result<Vec<(u64, u64)>, GenerateError> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(GenerateError::TooManyEdges { n, m, max });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match kind {
        GeneratorKind::UniformRandom => uniform(n, m, max, &mut rng),
        GeneratorKind::PreferentialAttachment => preferential(n, m, &mut rng),
    })
}

/// Edge-list text with a `#` header line.
pub fn generate(kind: GeneratorKind, n: u64, m: u64, seed: u64) -> Result<String, GenerateError> {
    let edges = generate_edges(kind, n, m, seed)?;
    let name = match kind {
        GeneratorKind::UniformRandom => "uniform-random",
        GeneratorKind::PreferentialAttachment => "preferential-attachment",
    };
    let mut out = format!("# {name} n={n} m={m} seed={seed}\n");
    for (a, b) in edges {
        let _ = writeln!(out, "{a}\t{b}");
    }
    Ok(out)
}

fn ordered(a: u64, b: u64) -> (u64, u64) {
    (a.min(b), a.max(b))
}

fn uniform(n: u64, m: u64, max: u64, rng: &mut ChaCha8Rng) -> Vec<(u64, u64)> {
    if m * 2 > max {
        // dense: shuffle all pairs and keep a prefix
        let mut all: Vec<(u64, u64)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let (chosen, _) = all.partial_shuffle(rng, m as usize);
        return chosen.to_vec();
    }
    let mut seen = HashSet::with_capacity(m as usize);
    let mut out = Vec::with_capacity(m as usize);
    while (out.len() as u64) < m {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a != b && seen.insert(ordered(a, b)) {
            out.push(ordered(a, b));
        }
    }
    out
}

fn preferential(n: u64, m: u64, rng: &mut ChaCha8Rng) -> Vec<(u64, u64)> {
    let mut seen = HashSet::with_capacity(m as usize);
    let mut out = Vec::with_capacity(m as usize);
    // every edge endpoint, so a uniform pick from it is degree-proportional
    let mut ends: Vec<u64> = Vec::with_capacity(2 * m as usize);
    let per_vertex = if n > 1 { m.div_ceil(n - 1) } else { 0 };

    // degree + 1 weighting: index into ends, or past it for a uniform vertex
    let pick = |rng: &mut ChaCha8Rng, ends: &[u64], t: u64| {
        let i = rng.random_range(0..ends.len() as u64 + t);
        if i < ends.len() as u64 {
            ends[i as usize]
        } else {
            i - ends.len() as u64
        }
    };

    for t in 1..n {
        let quota = per_vertex.min(t).min(m - out.len() as u64);
        let mut added = 0;
        while added < quota {
            let target = pick(rng, &ends, t);
            if target < t && seen.insert((target, t)) {
                out.push((target, t));
                ends.extend([target, t]);
                added += 1;
            }
        }
    }
    // top up with degree-biased pairs if the quotas fell short
    while (out.len() as u64) < m {
        let a = pick(rng, &ends, n);
        let b = pick(rng, &ends, n);
        if a != b && seen.insert(ordered(a, b)) {
            out.push(ordered(a, b));
            ends.extend([a, b]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = generate(GeneratorKind::UniformRandom, 10, 15, 1).unwrap();
        let b = generate(GeneratorKind::UniformRandom, 10, 15, 1).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, generate(GeneratorKind::UniformRandom, 10, 15, 2).unwrap());
    }

    #[test]
    fn complete_graph_when_m_is_max() {
        let edges = generate_edges(GeneratorKind::UniformRandom, 5, 10, 3).unwrap();
        let set: HashSet<_> = edges.iter().copied().collect();
        assert_eq!(set.len(), 10);
        assert!(edges.iter().all(|&(a, b)| a < b && b < 5));
    }

    #[test]
    fn too_many_edges() {
        assert_eq!(
            generate_edges(GeneratorKind::UniformRandom, 4, 7, 0),
            Err(GenerateError::TooManyEdges { n: 4, m: 7, max: 6 })
        );
    }

    #[test]
    fn preferential_is_simple_and_exact() {
        let edges = generate_edges(GeneratorKind::PreferentialAttachment, 50, 200, 9).unwrap();
        let set: HashSet<_> = edges.iter().copied().collect();
        assert_eq!(edges.len(), 200);
        assert_eq!(set.len(), 200);
        assert!(edges.iter().all(|&(a, b)| a < b && b < 50));
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(
            parse_spec("uniform-random:10:15").unwrap(),
            (GeneratorKind::UniformRandom, 10, 15)
        );
        assert!(parse_spec("uniform-random:10").is_err());
        assert!(matches!(parse_spec("ring:3:3"), Err(GenerateError::UnknownKind(_))));
    }
}
