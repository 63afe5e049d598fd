//! Balanced biclique search over the highest-degree vertices.
//!
//! The candidate pool `R` is the `r` highest-degree vertices. Every `q`-subset
//! `C` of `R` is tried in lexicographic order; the first whose common
//! neighborhood outside `R` has at least `q` vertices yields the biclique
//! `(C, first q common neighbors)`.
//!
//! Subsets are enumerated depth-first with the running intersection kept per
//! depth, so a prefix whose intersection already has fewer than `q` vertices
//! discards its whole subtree. `subsets_scanned` counts the subtree sizes as
//! well, so it always equals the lexicographic rank of the hit (or `C(r, q)`).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset;
use crate::combin::binomial;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};
use crate::params::{self, Regime};

/// Two disjoint vertex sets with every cross pair adjacent.
///
/// For bipartite inputs `left` holds B-side ids and `right` A-side ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Biclique {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Biclique {
    /// Half-size of a balanced biclique.
    pub fn size(&self) -> usize {
        self.left.len()
    }

    pub fn edge_count(&self) -> usize {
        self.left.len() * self.right.len()
    }

    fn check_shape(&self) -> std::result::Result<(), String> {
        if self.left.is_empty() || self.left.len() != self.right.len() {
            return Err(format!(
                "unbalanced or empty sides: {} vs {}",
                self.left.len(),
                self.right.len()
            ));
        }
        for side in [&self.left, &self.right] {
            if side.windows(2).any(|w| w[0] >= w[1]) {
                return Err("side not strictly ascending".into());
            }
        }
        Ok(())
    }

    /// Checks every biclique invariant against a general graph.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        self.check_shape()?;
        if let Some(v) = self.left.iter().find(|v| self.right.binary_search(v).is_ok()) {
            return Err(format!("vertex {v} on both sides"));
        }
        for &u in &self.left {
            for &v in &self.right {
                if !g.has_edge(u, v) {
                    return Err(format!("missing edge ({u}, {v})"));
                }
            }
        }
        Ok(())
    }

    /// Checks the invariants with `left` on side B and `right` on side A.
    pub fn validate_bipartite(&self, g: &BipartiteGraph) -> std::result::Result<(), String> {
        self.check_shape()?;
        for &v in &self.left {
            for &u in &self.right {
                if !g.has_edge(u, v) {
                    return Err(format!("missing edge (B {v}, A {u})"));
                }
            }
        }
        Ok(())
    }
}

/// Outcome of [`find_biclique`] and [`find_biclique_bipartite`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindReport {
    #[serde(flatten)]
    pub biclique: Biclique,
    pub q_target: usize,
    pub r: usize,
    pub q_achieved: usize,
    pub fallback_used: bool,
    /// Summed over every rung of the fallback ladder that ran.
    pub subsets_scanned: u64,
    pub regime: Regime,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FinderConfig {
    /// Split the subset scan by first element across the rayon pool.
    pub parallel: bool,
}

impl FinderConfig {
    pub fn parallel() -> Self {
        FinderConfig { parallel: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanResult {
    pub biclique: Option<Biclique>,
    pub subsets_scanned: u64,
}

/// Scan events, in the order they happen. Indices are positions in the pool.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanEvent<'a> {
    /// A full `q`-subset whose intersection was computed.
    Evaluated(&'a [usize]),
    /// A prefix whose intersection was too small; all its completions are skipped.
    Pruned(&'a [usize]),
}

struct Scan<'a, F> {
    row: F,
    base: &'a [u64],
    pool: &'a [usize],
    q: usize,
    words: usize,
}

impl<'a, F> Scan<'a, F>
where
    F: Fn(usize) -> &'a [u64] + Sync,
{
    /// All subsets starting with pool index `first`. Returns the chosen
    /// indices of the hit and the number of subsets disposed of.
    fn subtree(&self, first: usize, visit: &mut dyn FnMut(ScanEvent<'_>)) -> (Option<(Vec<usize>, Vec<u64>)>, u64) {
        let mut stack = vec![vec![0u64; self.words]; self.q];
        let mut chosen = Vec::with_capacity(self.q);
        let mut scanned = 0u64;
        let hit = self.descend(0, first, first + 1, &mut stack, &mut chosen, &mut scanned, visit);
        (hit.then(|| (chosen, stack.pop().unwrap())), scanned)
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        depth: usize,
        from: usize,
        to: usize,
        stack: &mut [Vec<u64>],
        chosen: &mut Vec<usize>,
        scanned: &mut u64,
        visit: &mut dyn FnMut(ScanEvent<'_>),
    ) -> bool {
        let r = self.pool.len();
        let remaining = self.q - depth - 1;
        for i in from..to {
            let (done, rest) = stack.split_at_mut(depth);
            let prev: &[u64] = if depth == 0 { self.base } else { &done[depth - 1] };
            let cnt = bitset::and_into(&mut rest[0], prev, (self.row)(self.pool[i]));
            chosen.push(i);
            if cnt < self.q {
                visit(if remaining == 0 {
                    ScanEvent::Evaluated(&chosen[..])
                } else {
                    ScanEvent::Pruned(&chosen[..])
                });
                *scanned = scanned.saturating_add(binomial(r - i - 1, remaining));
                chosen.pop();
                continue;
            }
            if remaining == 0 {
                visit(ScanEvent::Evaluated(&chosen[..]));
                *scanned = scanned.saturating_add(1);
                return true;
            }
            if self.descend(depth + 1, i + 1, r - remaining + 1, stack, chosen, scanned, visit) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    fn run(&self, parallel: bool, visit: &mut dyn FnMut(ScanEvent<'_>)) -> ScanResult {
        let r = self.pool.len();
        let firsts = r + 1 - self.q;
        let found = if parallel {
            (0..firsts)
                .into_par_iter()
                .find_map_first(|first| {
                    let (hit, local) = self.subtree(first, &mut |_| {});
                    hit.map(|h| (first, h, local))
                })
        } else {
            let mut found = None;
            for first in 0..firsts {
                let (hit, local) = self.subtree(first, visit);
                if let Some(h) = hit {
                    found = Some((first, h, local));
                    break;
                }
            }
            found
        };
        match found {
            Some((first, (chosen, inter), local)) => {
                let before: u64 = (0..first)
                    .map(|i| binomial(r - i - 1, self.q - 1))
                    .fold(0u64, |a, b| a.saturating_add(b));
                let left = chosen.iter().map(|&i| self.pool[i]).collect();
                let right = bitset::ones(&inter).take(self.q).collect();
                ScanResult {
                    biclique: Some(Biclique { left, right }),
                    subsets_scanned: before.saturating_add(local),
                }
            }
            None => ScanResult {
                biclique: None,
                subsets_scanned: binomial(r, self.q),
            },
        }
    }
}

fn check_general_params(n: usize, q: usize, r: usize) -> Result<()> {
    if q == 0 || q > r || r > n {
        return Err(Error::InvalidParams(format!(
            "need 1 <= q <= r <= n, got q = {q}, r = {r}, n = {n}"
        )));
    }
    Ok(())
}

/// Scan with explicit `(q, r)`, reporting observer events in sequential mode.
pub fn scan_general_traced(
    g: &Graph,
    q: usize,
    r: usize,
    config: FinderConfig,
    visit: &mut dyn FnMut(ScanEvent<'_>),
) -> Result<ScanResult> {
    check_general_params(g.n(), q, r)?;
    let pool = g.top_degree_vertices(r);
    let mut base = bitset::full(g.n());
    for &v in &pool {
        bitset::clear(&mut base, v);
    }
    let scan = Scan {
        row: |v| g.row(v),
        base: &base,
        pool: &pool,
        q,
        words: base.len(),
    };
    Ok(scan.run(config.parallel, visit))
}

pub fn scan_general(g: &Graph, q: usize, r: usize, config: FinderConfig) -> Result<ScanResult> {
    scan_general_traced(g, q, r, config, &mut |_| {})
}

/// One pass of the search at fixed `(q, r)`.
pub fn find_biclique_with_params(g: &Graph, q: usize, r: usize) -> Result<Option<Biclique>> {
    Ok(scan_general(g, q, r, FinderConfig::default())?.biclique)
}

pub fn scan_bipartite(g: &BipartiteGraph, q: usize, r: usize, config: FinderConfig) -> Result<ScanResult> {
    if q == 0 || q > r || r > g.b() || q > g.a() {
        return Err(Error::InvalidParams(format!(
            "need 1 <= q <= r <= b and q <= a, got q = {q}, r = {r}, a = {}, b = {}",
            g.a(),
            g.b()
        )));
    }
    let pool = g.top_degree_b(r);
    let base = bitset::full(g.a());
    let scan = Scan {
        row: |v| g.row_b(v),
        base: &base,
        pool: &pool,
        q,
        words: base.len(),
    };
    Ok(scan.run(config.parallel, &mut |_| {}))
}

/// Bipartite search at fixed `(q, r)`: pool drawn from side B, common
/// neighborhoods taken in side A.
pub fn find_biclique_bipartite_with_params(g: &BipartiteGraph, q: usize, r: usize) -> Result<Option<Biclique>> {
    Ok(scan_bipartite(g, q, r, FinderConfig::default())?.biclique)
}

fn report(
    biclique: Biclique,
    target: params::ParamSet,
    scanned: u64,
    terminal: bool,
) -> FindReport {
    let q_achieved = biclique.size();
    FindReport {
        biclique,
        q_target: target.q,
        r: target.r,
        q_achieved,
        fallback_used: terminal || q_achieved < target.q || target.regime == Regime::BelowThreshold,
        subsets_scanned: scanned,
        regime: target.regime,
    }
}

/// Runs the search at the computed `(q, r)`, then at `q - 1, ..., 1` with
/// matching pool sizes, and finally returns the smallest edge as a `K_{1,1}`.
pub fn find_biclique(g: &Graph, config: FinderConfig) -> Result<FindReport> {
    if g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (n, m) = (g.n(), g.m());
    let target = params::general_params(n, m)?;
    let mut scanned = 0u64;
    for q in (1..=target.q).rev() {
        let r = if q == target.q { target.r } else { params::general_pool(n, m, q) };
        let res = scan_general(g, q, r, config)?;
        scanned = scanned.saturating_add(res.subsets_scanned);
        if let Some(b) = res.biclique {
            return Ok(report(b, target, scanned, false));
        }
    }
    let (u, v) = g.edges().next().ok_or(Error::EmptyGraph)?;
    Ok(report(Biclique { left: vec![u], right: vec![v] }, target, scanned, true))
}

/// Bipartite counterpart of [`find_biclique`].
pub fn find_biclique_bipartite(g: &BipartiteGraph, config: FinderConfig) -> Result<FindReport> {
    if g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (a, b, m) = (g.a(), g.b(), g.m());
    let target = params::bipartite_params(a, b, m)?;
    let mut scanned = 0u64;
    for q in (1..=target.q).rev() {
        let r = if q == target.q { target.r } else { params::bipartite_pool(a, b, m, q) };
        let res = scan_bipartite(g, q, r, config)?;
        scanned = scanned.saturating_add(res.subsets_scanned);
        if let Some(bc) = res.biclique {
            return Ok(report(bc, target, scanned, false));
        }
    }
    let (v, u) = (0..b)
        .find_map(|v| bitset::ones(g.row_b(v)).next().map(|u| (v, u)))
        .ok_or(Error::EmptyGraph)?;
    Ok(report(Biclique { left: vec![v], right: vec![u] }, target, scanned, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::LexSubsets;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn bip(a: usize, b: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::from_edge_list(a, b, edges).unwrap()
    }

    #[test]
    fn complete_graph_first_subset() {
        let g = complete(64);
        let b = find_biclique_with_params(&g, 2, 4).unwrap().unwrap();
        assert_eq!(b, Biclique { left: vec![0, 1], right: vec![4, 5] });
        b.validate(&g).unwrap();
    }

    #[test]
    fn five_cycle_has_no_k22() {
        // R = V leaves nothing outside the pool
        let res = scan_general(&cycle(5), 2, 5, FinderConfig::default()).unwrap();
        assert_eq!(res, ScanResult { biclique: None, subsets_scanned: 10 });
        assert_eq!(find_biclique_with_params(&cycle(5), 2, 3).unwrap(), None);
        assert!(find_biclique_with_params(&cycle(5), 2, 6).is_err());
        assert!(find_biclique_with_params(&cycle(5), 0, 2).is_err());
        let res = scan_general(&cycle(5), 2, 3, FinderConfig::default()).unwrap();
        assert_eq!(res.subsets_scanned, 3);
    }

    #[test]
    fn path_single_edge_pick() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        // R = {0, 1}; N(0) - R is empty, N(1) - R = {2}
        let b = find_biclique_with_params(&g, 1, 2).unwrap().unwrap();
        assert_eq!(b, Biclique { left: vec![1], right: vec![2] });
        let b = find_biclique_with_params(&g, 1, 1).unwrap().unwrap();
        assert_eq!(b, Biclique { left: vec![1], right: vec![0] });
    }

    #[test]
    fn find_on_complete_64() {
        let rep = find_biclique(&complete(64), FinderConfig::default()).unwrap();
        assert_eq!((rep.q_target, rep.r), (1, 2));
        assert_eq!(rep.regime, Regime::GuaranteedQ1);
        assert_eq!(rep.biclique, Biclique { left: vec![0], right: vec![2] });
        assert!(!rep.fallback_used);
        assert_eq!(rep.subsets_scanned, 1);
    }

    #[test]
    fn find_on_k32_32_flags_fallback() {
        let mut g = Graph::empty(64);
        for u in 0..32 {
            for v in 32..64 {
                g.add_edge(u, v).unwrap();
            }
        }
        let rep = find_biclique(&g, FinderConfig::default()).unwrap();
        assert_eq!(rep.regime, Regime::BelowThreshold);
        assert!(rep.fallback_used);
        assert!(rep.q_achieved >= 1);
        rep.biclique.validate(&g).unwrap();
    }

    #[test]
    fn find_single_edge_and_empty() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let rep = find_biclique(&g, FinderConfig::default()).unwrap();
        assert_eq!(rep.biclique, Biclique { left: vec![0], right: vec![1] });
        assert_eq!(rep.q_achieved, 1);
        assert_eq!(find_biclique(&Graph::empty(5), FinderConfig::default()), Err(Error::EmptyGraph));
    }

    #[test]
    fn terminal_edge_when_pool_absorbs_neighbors() {
        // triangle plus isolated vertex: n = 4, m = 3, r = floor(16/3) clamped to 3,
        // so R = {0, 1, 2} and nothing remains outside it
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let rep = find_biclique(&g, FinderConfig::default()).unwrap();
        assert_eq!(rep.biclique, Biclique { left: vec![0], right: vec![1] });
        assert!(rep.fallback_used);
    }

    #[test]
    fn bipartite_complete_and_matching() {
        let mut edges = Vec::new();
        for x in 0..8 {
            for y in 0..8 {
                edges.push((x, y));
            }
        }
        let g = bip(8, 8, &edges);
        let rep = find_biclique_bipartite(&g, FinderConfig::default()).unwrap();
        let q = rep.q_achieved;
        assert_eq!(rep.biclique.left, (0..q).collect::<Vec<_>>());
        assert_eq!(rep.biclique.right, (0..q).collect::<Vec<_>>());
        rep.biclique.validate_bipartite(&g).unwrap();

        let g = bip(16, 16, &(0..16).map(|i| (i, i)).collect::<Vec<_>>());
        let rep = find_biclique_bipartite(&g, FinderConfig::default()).unwrap();
        assert_eq!(rep.q_achieved, 1);
        assert!(rep.fallback_used);

        let g = bip(3, 2, &[(0, 0)]);
        let rep = find_biclique_bipartite(&g, FinderConfig::default()).unwrap();
        assert_eq!(rep.biclique, Biclique { left: vec![0], right: vec![0] });
    }

    #[test]
    fn bipartite_explicit_params() {
        let mut edges = Vec::new();
        for x in 0..6 {
            for y in 0..4 {
                if (x + y) % 5 != 0 {
                    edges.push((x, y));
                }
            }
        }
        let g = bip(6, 4, &edges);
        let b = find_biclique_bipartite_with_params(&g, 2, 4).unwrap().unwrap();
        b.validate_bipartite(&g).unwrap();
        assert!(find_biclique_bipartite_with_params(&g, 5, 4).is_err());
    }

    /// Expands the trace into the concrete subsets it accounts for and checks
    /// they are exactly the lexicographic prefix ending at the hit.
    #[test]
    fn trace_covers_lexicographic_prefix() {
        let mut rng_state = 0x9e37_79b9_u64;
        let mut next = || {
            rng_state ^= rng_state << 13;
            rng_state ^= rng_state >> 7;
            rng_state ^= rng_state << 17;
            rng_state
        };
        for _ in 0..200 {
            let n = 10 + (next() % 12) as usize;
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if next() % 100 < 45 {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let q = 1 + (next() % 3) as usize;
            let r = q + (next() % (n - 2 * q + 1) as u64) as usize;
            let mut covered: Vec<Vec<usize>> = Vec::new();
            let res = scan_general_traced(&g, q, r, FinderConfig::default(), &mut |ev| match ev {
                ScanEvent::Evaluated(s) => covered.push(s.to_vec()),
                ScanEvent::Pruned(prefix) => {
                    let last = *prefix.last().unwrap();
                    let k = q - prefix.len();
                    for tail in LexSubsets::new(r - last - 1, k) {
                        let mut s = prefix.to_vec();
                        s.extend(tail.iter().map(|t| t + last + 1));
                        covered.push(s);
                    }
                }
            })
            .unwrap();
            let reference: Vec<_> = LexSubsets::new(r, q).take(covered.len()).collect();
            assert_eq!(covered, reference);
            assert_eq!(covered.len() as u64, res.subsets_scanned);
            assert!(res.subsets_scanned <= binomial(r, q));
            if res.biclique.is_none() {
                assert_eq!(res.subsets_scanned, binomial(r, q));
            }
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let mut g = Graph::empty(40);
        let mut s = 12345u64;
        for u in 0..40 {
            for v in u + 1..40 {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if (s >> 33) % 10 < 4 {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        for q in 1..4 {
            for r in q..=(40 - q).min(20) {
                let a = scan_general(&g, q, r, FinderConfig::default()).unwrap();
                let b = scan_general(&g, q, r, FinderConfig::parallel()).unwrap();
                assert_eq!(a, b, "q={q} r={r}");
            }
        }
    }
}
