//! Edge partitions into balanced complete bipartite graphs.
//!
//! While the current edge count exceeds `n^2 / ln n` (with `n` the original
//! vertex count), a biclique is found and its edges deleted. Remaining edges
//! are emitted one by one as `K_{1,1}` parts. The bipartite variant uses the
//! threshold `a b / ln(a + b)`.
//!
//! Iterations are grouped into phases: an extraction made while the current
//! edge count `m` satisfies `n^2/(l+1) < m <= n^2/l` belongs to phase `l`,
//! i.e. `l = floor(n^2 / m)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset;
use crate::error::{Error, Result};
use crate::exact;
use crate::finder::{find_biclique, find_biclique_bipartite, FinderConfig};
use crate::graph::{BipartiteGraph, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    General,
    Bipartite,
}

/// One complete bipartite part with vertex sides `A` and `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Part {
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<usize>,
}

impl Part {
    pub fn complexity(&self) -> usize {
        self.a.len() + self.b.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseStat {
    pub ell: u64,
    pub iterations: usize,
    pub edges_removed: usize,
    pub q_min: usize,
    pub q_max: usize,
}

/// A decomposition document. General graphs carry `n`; bipartite graphs carry
/// `a` and `b` (normalized so that `a >= b`), and each part's `A` side holds
/// B-side ids while its `B` side holds A-side ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    pub parts: Vec<Part>,
    pub complexity: usize,
    pub phases: Vec<PhaseStat>,
}

/// Sum of side sizes over all parts.
pub fn complexity(parts: &[Part]) -> usize {
    parts.iter().map(Part::complexity).sum()
}

impl Decomposition {
    pub fn recomputed_complexity(&self) -> usize {
        complexity(&self.parts)
    }

    /// Parts produced by the extraction loop, before the trailing single edges.
    pub fn loop_parts(&self) -> usize {
        self.phases.iter().map(|p| p.iterations).sum()
    }

    /// `complexity * ln n / n^2`, or `complexity * ln(a+b) / (a b)` for
    /// bipartite inputs. Zero for degenerate dimensions.
    pub fn ratio(&self) -> f64 {
        let (log_arg, area) = match self.kind {
            Kind::General => {
                let n = self.n.unwrap_or(0) as f64;
                (n, n * n)
            }
            Kind::Bipartite => {
                let (a, b) = (self.a.unwrap_or(0) as f64, self.b.unwrap_or(0) as f64);
                (a + b, a * b)
            }
        };
        if log_arg < 2.0 || area == 0.0 {
            return 0.0;
        }
        self.complexity as f64 * log_arg.ln() / area
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("decomposition serializes")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Default)]
struct Phases(Vec<PhaseStat>);

impl Phases {
    fn record(&mut self, ell: u64, q: usize, edges: usize) {
        match self.0.last_mut() {
            Some(p) if p.ell == ell => {
                p.iterations += 1;
                p.edges_removed += edges;
                p.q_min = p.q_min.min(q);
                p.q_max = p.q_max.max(q);
            }
            _ => self.0.push(PhaseStat {
                ell,
                iterations: 1,
                edges_removed: edges,
                q_min: q,
                q_max: q,
            }),
        }
    }
}

/// `m > n^2 / ln n`, decided exactly.
pub fn general_threshold_exceeded(n: usize, m: usize) -> bool {
    m > 0 && exact::ln_threshold_exceeded(m as u128, n as u128, (n as u128).pow(2))
}

/// `m > a b / ln(a + b)`, decided exactly.
pub fn bipartite_threshold_exceeded(a: usize, b: usize, m: usize) -> bool {
    m > 0 && exact::ln_threshold_exceeded(m as u128, (a + b) as u128, a as u128 * b as u128)
}

fn inconsistency(e: Error) -> Error {
    match e {
        Error::MissingEdge(u, v) => {
            Error::InternalInconsistency(format!("finder returned a biclique with missing edge ({u}, {v})"))
        }
        other => other,
    }
}

pub fn decompose(g: &Graph, config: FinderConfig) -> Result<Decomposition> {
    let n = g.n();
    let area = (n as u128).pow(2);
    let mut cur = g.clone();
    let mut parts = Vec::new();
    let mut phases = Phases::default();
    while general_threshold_exceeded(n, cur.m()) {
        let ell = (area / cur.m() as u128) as u64;
        let found = find_biclique(&cur, config)?.biclique;
        cur.delete_biclique_edges(&found.left, &found.right)
            .map_err(inconsistency)?;
        phases.record(ell, found.size(), found.edge_count());
        parts.push(Part {
            a: found.left,
            b: found.right,
        });
    }
    parts.extend(cur.edges().map(|(u, v)| Part { a: vec![u], b: vec![v] }));
    let complexity = complexity(&parts);
    Ok(Decomposition {
        kind: Kind::General,
        n: Some(n),
        a: None,
        b: None,
        parts,
        complexity,
        phases: phases.0,
    })
}

pub fn decompose_bipartite(g: &BipartiteGraph, config: FinderConfig) -> Result<Decomposition> {
    let (a, b) = (g.a(), g.b());
    let area = a as u128 * b as u128;
    let mut cur = g.clone();
    let mut parts = Vec::new();
    let mut phases = Phases::default();
    while bipartite_threshold_exceeded(a, b, cur.m()) {
        let ell = (area / cur.m() as u128) as u64;
        let found = find_biclique_bipartite(&cur, config)?.biclique;
        cur.delete_biclique_edges(&found.left, &found.right)
            .map_err(inconsistency)?;
        phases.record(ell, found.size(), found.edge_count());
        parts.push(Part {
            a: found.left,
            b: found.right,
        });
    }
    for v in 0..b {
        parts.extend(bitset::ones(cur.row_b(v)).map(|u| Part { a: vec![v], b: vec![u] }));
    }
    let complexity = complexity(&parts);
    Ok(Decomposition {
        kind: Kind::Bipartite,
        n: None,
        a: Some(a),
        b: Some(b),
        parts,
        complexity,
        phases: phases.0,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    EdgeNotInGraph { u: usize, v: usize, part: usize },
    EdgeCoveredTwice { u: usize, v: usize, first: usize, second: usize },
    EdgeUncovered { u: usize, v: usize },
    NonDisjointSides { part: usize },
    ComplexityMismatch { stored: usize, recomputed: usize },
    ShapeMismatch { expected: String, found: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeNotInGraph { u, v, part } => write!(f, "EdgeNotInGraph({u},{v},{part})"),
            Violation::EdgeCoveredTwice { u, v, first, second } => {
                write!(f, "EdgeCoveredTwice({u},{v},{first},{second})")
            }
            Violation::EdgeUncovered { u, v } => write!(f, "EdgeUncovered({u},{v})"),
            Violation::NonDisjointSides { part } => write!(f, "NonDisjointSides({part})"),
            Violation::ComplexityMismatch { stored, recomputed } => {
                write!(f, "ComplexityMismatch({stored},{recomputed})")
            }
            Violation::ShapeMismatch { expected, found } => write!(f, "ShapeMismatch({expected},{found})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub violations: Vec<Violation>,
    pub complexity: usize,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

const UNCOVERED: u32 = u32::MAX;

/// Tracks which part covers each cell of a `rows x cols` pair grid.
struct Cover {
    cols: usize,
    owner: Vec<u32>,
}

impl Cover {
    fn new(rows: usize, cols: usize) -> Self {
        Cover {
            cols,
            owner: vec![UNCOVERED; rows * cols],
        }
    }

    fn claim(&mut self, row: usize, col: usize, part: usize) -> Option<usize> {
        let cell = &mut self.owner[row * self.cols + col];
        if *cell == UNCOVERED {
            *cell = part as u32;
            None
        } else {
            Some(*cell as usize)
        }
    }

    fn covered(&self, row: usize, col: usize) -> bool {
        self.owner[row * self.cols + col] != UNCOVERED
    }
}

fn finish(mut violations: Vec<Violation>, d: &Decomposition) -> VerifyReport {
    let recomputed = d.recomputed_complexity();
    if recomputed != d.complexity {
        violations.push(Violation::ComplexityMismatch {
            stored: d.complexity,
            recomputed,
        });
    }
    VerifyReport {
        violations,
        complexity: recomputed,
    }
}

/// Checks that the parts' edge sets exactly partition the edges of `g`.
pub fn verify_decomposition(g: &Graph, d: &Decomposition) -> VerifyReport {
    let n = g.n();
    let mut violations = Vec::new();
    if d.kind != Kind::General || d.n != Some(n) {
        violations.push(Violation::ShapeMismatch {
            expected: format!("general n={n}"),
            found: format!("{:?} n={:?} a={:?} b={:?}", d.kind, d.n, d.a, d.b),
        });
    }
    let mut cover = Cover::new(n, n);
    for (i, part) in d.parts.iter().enumerate() {
        if part.a.iter().any(|x| part.b.contains(x)) {
            violations.push(Violation::NonDisjointSides { part: i });
        }
        for &x in &part.a {
            for &y in &part.b {
                let (u, v) = (x.min(y), x.max(y));
                if !g.has_edge(u, v) {
                    violations.push(Violation::EdgeNotInGraph { u, v, part: i });
                } else if let Some(first) = cover.claim(u, v, i) {
                    violations.push(Violation::EdgeCoveredTwice { u, v, first, second: i });
                }
            }
        }
    }
    for (u, v) in g.edges() {
        if !cover.covered(u, v) {
            violations.push(Violation::EdgeUncovered { u, v });
        }
    }
    finish(violations, d)
}

/// Bipartite counterpart of [`verify_decomposition`]: each part's `A` side
/// must hold B-side ids and its `B` side A-side ids. Reported edges are
/// `(A id, B id)`.
pub fn verify_bipartite_decomposition(g: &BipartiteGraph, d: &Decomposition) -> VerifyReport {
    let (a, b) = (g.a(), g.b());
    let mut violations = Vec::new();
    if d.kind != Kind::Bipartite || d.a != Some(a) || d.b != Some(b) {
        violations.push(Violation::ShapeMismatch {
            expected: format!("bipartite a={a} b={b}"),
            found: format!("{:?} n={:?} a={:?} b={:?}", d.kind, d.n, d.a, d.b),
        });
    }
    let mut cover = Cover::new(a, b);
    for (i, part) in d.parts.iter().enumerate() {
        for &v in &part.a {
            for &u in &part.b {
                if !g.has_edge(u, v) {
                    violations.push(Violation::EdgeNotInGraph { u, v, part: i });
                } else if let Some(first) = cover.claim(u, v, i) {
                    violations.push(Violation::EdgeCoveredTwice { u, v, first, second: i });
                }
            }
        }
    }
    for (u, v) in g.edges() {
        if !cover.covered(u, v) {
            violations.push(Violation::EdgeUncovered { u, v });
        }
    }
    finish(violations, d)
}
