//! Seeded graph generators.
//!
//! Random generators draw from `ChaCha8Rng::seed_from_u64(seed)` (crate
//! `rand_chacha` 0.9) with `rand` 0.9 uniform range sampling, so a given
//! `(parameters, seed)` produces the same graph on every platform.
//!
//! `G(n, m)` picks `m` distinct indices from the `C(n, 2)` pair space: a
//! partial Fisher-Yates shuffle when `m` exceeds half the space, hash-set
//! rejection otherwise.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};

pub type Seed = u64;

fn rng(seed: Seed) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `m` distinct values from `0..space`, in draw order.
fn sample_indices(space: u64, m: u64, rng: &mut ChaCha8Rng) -> Vec<u64> {
    if m == 0 {
        return Vec::new();
    }
    if m > space / 2 {
        let mut all: Vec<u64> = (0..space).collect();
        for i in 0..m as usize {
            let j = rng.random_range(i as u64..space) as usize;
            all.swap(i, j);
        }
        all.truncate(m as usize);
        all
    } else {
        let mut seen = HashSet::with_capacity(m as usize);
        let mut out = Vec::with_capacity(m as usize);
        while out.len() < m as usize {
            let k = rng.random_range(0..space);
            if seen.insert(k) {
                out.push(k);
            }
        }
        out
    }
}

/// Maps `k` in `0..C(n,2)` to the pair `(u, v)`, `u < v`, with
/// `k = v (v - 1) / 2 + u`.
pub fn pair_from_index(k: u64) -> (usize, usize) {
    let mut v = ((1.0 + (1.0 + 8.0 * k as f64).sqrt()) / 2.0) as u64;
    while v * (v - 1) / 2 > k {
        v -= 1;
    }
    while (v + 1) * v / 2 <= k {
        v += 1;
    }
    let u = k - v * (v - 1) / 2;
    (u as usize, v as usize)
}

fn pair_space(n: usize) -> u64 {
    (n as u64) * (n as u64).saturating_sub(1) / 2
}

/// Uniform random graph with exactly `m` edges.
pub fn gnm(n: usize, m: usize, seed: Seed) -> Result<Graph> {
    let space = pair_space(n);
    if m as u64 > space {
        return Err(Error::InvalidCounts(format!("m = {m} exceeds {space} pairs on {n} vertices")));
    }
    let mut g = Graph::empty(n);
    for k in sample_indices(space, m as u64, &mut rng(seed)) {
        let (u, v) = pair_from_index(k);
        g.add_edge(u, v).expect("sampled pairs are distinct");
    }
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("distinct pair");
        }
    }
    g
}

/// `K_{s,t}` as a general graph: vertices `0..s` on one side, `s..s+t` on the other.
pub fn complete_bipartite_general(s: usize, t: usize) -> Result<Graph> {
    let mut g = Graph::empty(s.checked_add(t).ok_or_else(|| Error::InvalidCounts("s + t overflows".into()))?);
    for u in 0..s {
        for v in s..s + t {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn complete_bipartite(a: usize, b: usize) -> BipartiteGraph {
    let mut g = BipartiteGraph::empty(a, b);
    for x in 0..a {
        for y in 0..b {
            g.add_edge_original(x, y).expect("distinct pair");
        }
    }
    g
}

/// Uniform random bipartite graph with exactly `m` edges; pair index
/// `k` maps to `(k / b, k % b)` in the caller's orientation.
pub fn bipartite_gnm(a: usize, b: usize, m: usize, seed: Seed) -> Result<BipartiteGraph> {
    let space = a as u64 * b as u64;
    if m as u64 > space {
        return Err(Error::InvalidCounts(format!("m = {m} exceeds a*b = {space}")));
    }
    let mut g = BipartiteGraph::empty(a, b);
    for k in sample_indices(space, m as u64, &mut rng(seed)) {
        let (x, y) = ((k / b as u64) as usize, (k % b as u64) as usize);
        g.add_edge_original(x, y).expect("sampled pairs are distinct");
    }
    Ok(g)
}

/// `k` disjoint edges `(i, i)` between two sides of size `k`.
pub fn matching_bipartite(k: usize) -> BipartiteGraph {
    let mut g = BipartiteGraph::empty(k, k);
    for i in 0..k {
        g.add_edge_original(i, i).expect("distinct pair");
    }
    g
}
