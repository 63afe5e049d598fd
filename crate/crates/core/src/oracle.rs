//! Exhaustive reference procedures for small graphs, used for cross-checking.

use crate::error::{Error, Result};
use crate::finder::Biclique;
use crate::graph::{BipartiteGraph, Graph};

pub const DEFAULT_LIMIT: usize = 24;
/// Vertex sets are `u64` masks.
const HARD_LIMIT: usize = 64;

struct Masks {
    adj: Vec<u64>,
}

impl Masks {
    fn new(g: &Graph) -> Self {
        let adj = (0..g.n())
            .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
            .collect();
        Masks { adj }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    /// Largest `min(|L|, |N(L)|)` over left sets extending `left` with
    /// vertices from `next` on, given `common = N(left)`.
    fn best_from(&self, next: usize, size: usize, common: u64, best: &mut usize) {
        let here = size.min(common.count_ones() as usize);
        *best = (*best).max(here);
        if common.count_ones() as usize <= *best {
            return;
        }
        let need = *best + 1;
        // left vertices must each see at least `need` of the common set
        let usable = (next..self.n())
            .filter(|&w| (self.adj[w] & common).count_ones() as usize >= need)
            .count();
        if size + usable < need {
            return;
        }
        for w in next..self.n() {
            let c = common & self.adj[w];
            if c.count_ones() as usize > *best {
                self.best_from(w + 1, size + 1, c, best);
            }
        }
    }

    /// First `q`-subset in lexicographic order whose common neighborhood has
    /// at least `q` vertices.
    fn first_with(&self, q: usize, next: usize, left: &mut Vec<usize>, common: u64) -> Option<u64> {
        if left.len() == q {
            return Some(common);
        }
        for w in next..self.n() {
            let c = common & self.adj[w];
            if (c.count_ones() as usize) < q {
                continue;
            }
            left.push(w);
            if let Some(found) = self.first_with(q, w + 1, left, c) {
                return Some(found);
            }
            left.pop();
        }
        None
    }
}

/// Size of the largest balanced biclique and the lexicographically smallest
/// `(left, right)` witness of that size.
pub fn max_balanced_biclique(g: &Graph, size_limit: usize) -> Result<(usize, Option<Biclique>)> {
    let limit = size_limit.min(HARD_LIMIT);
    if g.n() > limit {
        return Err(Error::TooLarge { n: g.n(), limit });
    }
    if g.m() == 0 {
        return Ok((0, None));
    }
    let masks = Masks::new(g);
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best = 0;
    masks.best_from(0, 0, all, &mut best);
    let mut left = Vec::new();
    let common = masks
        .first_with(best, 0, &mut left, all)
        .expect("a set of the optimal size exists");
    let right = (0..g.n()).filter(|&v| common >> v & 1 == 1).take(best).collect();
    Ok((best, Some(Biclique { left, right })))
}

fn choose(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if acc.len() == k {
        out.push(acc.clone());
        return;
    }
    for i in start..n {
        acc.push(i);
        choose(n, k, i + 1, acc, out);
        acc.pop();
    }
}

fn naive_top(degrees: Vec<usize>, r: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..degrees.len()).collect();
    order.sort_by(|&x, &y| degrees[y].cmp(&degrees[x]).then(x.cmp(&y)));
    let mut pool = order[..r].to_vec();
    pool.sort();
    pool
}

/// Straightforward re-implementation of the fixed-parameter search, without
/// bit rows or pruning.
pub fn reference_find(g: &Graph, q: usize, r: usize) -> Result<Option<Biclique>> {
    let n = g.n();
    if q == 0 || q > r || r > n {
        return Err(Error::InvalidParams(format!("q = {q}, r = {r}, n = {n}")));
    }
    let degrees = (0..n)
        .map(|v| (0..n).filter(|&u| g.has_edge(u, v)).count())
        .collect();
    let pool = naive_top(degrees, r);
    let mut subsets = Vec::new();
    choose(r, q, 0, &mut Vec::new(), &mut subsets);
    for idx in subsets {
        let c: Vec<usize> = idx.iter().map(|&i| pool[i]).collect();
        let d: Vec<usize> = (0..n)
            .filter(|w| !pool.contains(w))
            .filter(|&w| c.iter().all(|&v| g.has_edge(v, w)))
            .collect();
        if d.len() >= q {
            return Ok(Some(Biclique {
                left: c,
                right: d[..q].to_vec(),
            }));
        }
    }
    Ok(None)
}

/// Bipartite counterpart: pool from side B, neighborhoods in side A.
pub fn reference_find_bipartite(g: &BipartiteGraph, q: usize, r: usize) -> Result<Option<Biclique>> {
    let (a, b) = (g.a(), g.b());
    if q == 0 || q > r || r > b || q > a {
        return Err(Error::InvalidParams(format!("q = {q}, r = {r}, a = {a}, b = {b}")));
    }
    let degrees = (0..b).map(|v| (0..a).filter(|&u| g.has_edge(u, v)).count()).collect();
    let pool = naive_top(degrees, r);
    let mut subsets = Vec::new();
    choose(r, q, 0, &mut Vec::new(), &mut subsets);
    for idx in subsets {
        let c: Vec<usize> = idx.iter().map(|&i| pool[i]).collect();
        let d: Vec<usize> = (0..a).filter(|&u| c.iter().all(|&v| g.has_edge(u, v))).collect();
        if d.len() >= q {
            return Ok(Some(Biclique {
                left: c,
                right: d[..q].to_vec(),
            }));
        }
    }
    Ok(None)
}
