//! Timing harness writing one CSV row per (input, operation).

use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use crate::decomposer::{decompose, decompose_bipartite};
use crate::error::{Error, Result};
use crate::finder::{find_biclique, find_biclique_bipartite, FindReport, FinderConfig};
use crate::gen;

pub const CSV_HEADER: [&str; 11] = [
    "n",
    "m",
    "seed",
    "q_target",
    "r",
    "q_achieved",
    "fallback_used",
    "subsets_scanned",
    "runtime_ms",
    "complexity",
    "ratio",
];

/// Edge count as a function of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeExpr {
    /// Least `m` with `m >= 3 n^{3/2}`.
    ThreeN15,
    /// Least `m` with `m > 8 n^{3/2}`.
    EightN15,
    /// `floor(n^2 / 4)`.
    QuarterSquare,
    Fixed(usize),
}

impl FromStr for EdgeExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "3n^1.5" => Ok(EdgeExpr::ThreeN15),
            "8n^1.5" => Ok(EdgeExpr::EightN15),
            "n^2/4" => Ok(EdgeExpr::QuarterSquare),
            other => other
                .parse()
                .map(EdgeExpr::Fixed)
                .map_err(|_| Error::InvalidCounts(format!("unknown edge expression {other:?}"))),
        }
    }
}

fn isqrt(x: u128) -> u128 {
    let mut r = (x as f64).sqrt() as u128;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

impl EdgeExpr {
    pub fn edges(self, n: usize) -> usize {
        let n3 = (n as u128).pow(3);
        match self {
            EdgeExpr::ThreeN15 => {
                let s = isqrt(9 * n3);
                (if s * s == 9 * n3 { s } else { s + 1 }) as usize
            }
            EdgeExpr::EightN15 => (isqrt(64 * n3) + 1) as usize,
            EdgeExpr::QuarterSquare => n * n / 4,
            EdgeExpr::Fixed(m) => m,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Find,
    Decompose,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "find" => Ok(Suite::Find),
            "decompose" => Ok(Suite::Decompose),
            other => Err(Error::InvalidParams(format!("unknown suite {other:?}"))),
        }
    }
}

/// Parses `s1..s2` (inclusive), `s1,s2,...`, or a single seed.
pub fn parse_seeds(list: &str) -> Result<Vec<u64>> {
    let bad = || Error::InvalidParams(format!("bad seed list {list:?}"));
    if let Some((lo, hi)) = list.split_once("..") {
        let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        return Ok((lo..=hi).collect());
    }
    list.split(',').map(|s| s.trim().parse().map_err(|_| bad())).collect()
}

pub fn parse_sizes(list: &str) -> Result<Vec<usize>> {
    list.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::InvalidParams(format!("bad size list {list:?}")))
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub suite: Suite,
    pub sizes: Vec<usize>,
    pub edges: EdgeExpr,
    pub seeds: Vec<u64>,
    /// Square bipartite inputs with `a = b = n`.
    pub bipartite: bool,
    pub finder: FinderConfig,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub q_target: Option<usize>,
    pub r: Option<usize>,
    pub q_achieved: Option<usize>,
    pub fallback_used: Option<bool>,
    pub subsets_scanned: Option<u64>,
    pub runtime_ms: f64,
    pub complexity: Option<usize>,
    pub ratio: Option<f64>,
}

impl BenchRecord {
    fn new(n: usize, m: usize, seed: u64, runtime_ms: f64) -> Self {
        BenchRecord {
            n,
            m,
            seed,
            q_target: None,
            r: None,
            q_achieved: None,
            fallback_used: None,
            subsets_scanned: None,
            runtime_ms,
            complexity: None,
            ratio: None,
        }
    }

    fn with_find(mut self, rep: &FindReport) -> Self {
        self.q_target = Some(rep.q_target);
        self.r = Some(rep.r);
        self.q_achieved = Some(rep.q_achieved);
        self.fallback_used = Some(rep.fallback_used);
        self.subsets_scanned = Some(rep.subsets_scanned);
        self
    }

    /// CSV fields in header order. Inapplicable fields are empty.
    pub fn fields(&self) -> [String; 11] {
        fn opt<T: ToString>(x: &Option<T>) -> String {
            x.as_ref().map(ToString::to_string).unwrap_or_default()
        }
        [
            self.n.to_string(),
            self.m.to_string(),
            self.seed.to_string(),
            opt(&self.q_target),
            opt(&self.r),
            opt(&self.q_achieved),
            opt(&self.fallback_used),
            opt(&self.subsets_scanned),
            format!("{:.3}", self.runtime_ms),
            opt(&self.complexity),
            self.ratio.map(|x| format!("{x:.6}")).unwrap_or_default(),
        ]
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn run_one(cfg: &BenchConfig, n: usize, m: usize, seed: u64) -> Result<BenchRecord> {
    if cfg.bipartite {
        let g = gen::bipartite_gnm(n, n, m, seed)?;
        match cfg.suite {
            Suite::Find => {
                let start = Instant::now();
                let rep = find_biclique_bipartite(&g, cfg.finder)?;
                Ok(BenchRecord::new(n, m, seed, elapsed_ms(start)).with_find(&rep))
            }
            Suite::Decompose => {
                let start = Instant::now();
                let d = decompose_bipartite(&g, cfg.finder)?;
                let mut rec = BenchRecord::new(n, m, seed, elapsed_ms(start));
                rec.complexity = Some(d.complexity);
                rec.ratio = Some(d.ratio());
                Ok(rec)
            }
        }
    } else {
        let g = gen::gnm(n, m, seed)?;
        match cfg.suite {
            Suite::Find => {
                let start = Instant::now();
                let rep = find_biclique(&g, cfg.finder)?;
                Ok(BenchRecord::new(n, m, seed, elapsed_ms(start)).with_find(&rep))
            }
            Suite::Decompose => {
                let start = Instant::now();
                let d = decompose(&g, cfg.finder)?;
                let mut rec = BenchRecord::new(n, m, seed, elapsed_ms(start));
                rec.complexity = Some(d.complexity);
                rec.ratio = Some(d.ratio());
                Ok(rec)
            }
        }
    }
}

/// Runs every `(n, seed)` cell sequentially; records come back sorted by
/// `(n, m, seed)`.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    let mut cells: Vec<(usize, usize, u64)> = Vec::new();
    for &n in &cfg.sizes {
        let m = cfg.edges.edges(n);
        for &seed in &cfg.seeds {
            cells.push((n, m, seed));
        }
    }
    cells.sort_unstable();
    cells.dedup();
    cells
        .into_iter()
        .map(|(n, m, seed)| run_one(cfg, n, m, seed))
        .collect()
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for rec in records {
        w.write_record(rec.fields())?;
    }
    w.flush()
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}
