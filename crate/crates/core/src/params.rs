//! Target biclique size `q` and candidate pool size `r` for a given density.
//!
//! For an `n`-vertex graph with `m` edges,
//!
//! ```text
//! q = floor( ln(n/2) / ln(2e n^2 / m) ),   r = floor( q n^2 / m )
//! ```
//!
//! Bipartite graphs with sides `a >= b` use `a * b` in place of `n^2` and
//! `a / 2` in place of `n / 2`.
//!
//! `q` is computed as the largest integer with `n/2 >= (2e n^2/m)^q`. The
//! floating-point quotient is only a first guess: whenever it lies near an
//! integer the inequality is decided exactly.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact;

/// Which density guarantee applies to an input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// `m > 8 n^{3/2}`: a `K_{q,q}` with `q >= 2` is guaranteed for large `n`.
    GuaranteedQ2Plus,
    /// `3 n^{3/2} <= m <= 8 n^{3/2}`.
    GuaranteedQ1,
    /// `m < 3 n^{3/2}`: the formulas still produce values, with no guarantee.
    BelowThreshold,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::GuaranteedQ2Plus => "GuaranteedQ2Plus",
            Regime::GuaranteedQ1 => "GuaranteedQ1",
            Regime::BelowThreshold => "BelowThreshold",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSet {
    pub q: usize,
    pub r: usize,
    pub regime: Regime,
}

/// Regime from `m^2` against `9 n^3` and `64 n^3`, in integers.
pub fn density_precondition(n: usize, m: usize) -> Regime {
    let n3 = (n as u128).pow(3);
    classify((m as u128).pow(2), n3)
}

/// Bipartite analogue with `a * sqrt(b)` in place of `n^{3/2}`.
pub fn bipartite_density(a: usize, b: usize, m: usize) -> Regime {
    let scale = (a as u128).pow(2) * b as u128;
    classify((m as u128).pow(2), scale)
}

fn classify(m2: u128, scale: u128) -> Regime {
    if m2 < 9 * scale {
        Regime::BelowThreshold
    } else if m2 > 64 * scale {
        Regime::GuaranteedQ2Plus
    } else {
        Regime::GuaranteedQ1
    }
}

/// Exact test of `centers / 2 >= (2e * area / m)^q`.
///
/// Rearranged as `centers * m^q / (2 (2 area)^q) >= e^q`.
pub fn size_condition_holds(centers: usize, area: u128, m: usize, q: u32) -> bool {
    let m_big = BigUint::from(m);
    let num = BigUint::from(centers) * m_big.pow(q);
    let den = BigUint::from(2u32) * (BigUint::from(area) * 2u32).pow(q);
    exact::ratio_at_least_exp(&num, &den, q)
}

/// Largest `q >= 0` with `centers / 2 >= (2e area / m)^q`, or 0 if even
/// `q = 0` fails. Requires `1 <= m <= area`.
pub fn largest_q(centers: usize, area: u128, m: usize) -> usize {
    debug_assert!(m >= 1 && m as u128 <= area);
    if centers < 2 {
        return 0;
    }
    let guess = ((centers as f64) / 2.0).ln() / (2.0 * std::f64::consts::E * area as f64 / m as f64).ln();
    let mut q = guess.floor().max(0.0) as usize;
    let frac = guess - guess.floor();
    if frac > 1e-9 && frac < 1.0 - 1e-9 {
        return q;
    }
    while size_condition_holds(centers, area, m, (q + 1) as u32) {
        q += 1;
    }
    while q >= 1 && !size_condition_holds(centers, area, m, q as u32) {
        q -= 1;
    }
    q
}

/// `floor(q * area / m)` clamped into `[q, upper]`.
fn pool_size(q: usize, area: u128, m: usize, upper: usize) -> usize {
    let raw = (q as u128 * area) / m as u128;
    (raw.min(upper as u128) as usize).max(q)
}

/// Parameters for a general graph with `n` vertices and `m` edges.
pub fn general_params(n: usize, m: usize) -> Result<ParamSet> {
    if n < 2 {
        return Err(Error::InvalidCounts(format!("need at least 2 vertices, got {n}")));
    }
    let max_m = n * (n - 1) / 2;
    if m == 0 || m > max_m {
        return Err(Error::InvalidCounts(format!("m = {m} outside 1..={max_m} for n = {n}")));
    }
    let area = (n as u128).pow(2);
    let q = largest_q(n, area, m).clamp(1, n / 2);
    Ok(ParamSet {
        q,
        r: pool_size(q, area, m, n - q),
        regime: density_precondition(n, m),
    })
}

/// Pool size for a reduced `q` on a general graph.
pub fn general_pool(n: usize, m: usize, q: usize) -> usize {
    pool_size(q, (n as u128).pow(2), m, n - q)
}

/// Parameters for a bipartite graph with sides `a >= b`.
pub fn bipartite_params(a: usize, b: usize, m: usize) -> Result<ParamSet> {
    if b == 0 || a < b {
        return Err(Error::InvalidCounts(format!("sides must satisfy a >= b >= 1, got a = {a}, b = {b}")));
    }
    let area = a as u128 * b as u128;
    if m == 0 || m as u128 > area {
        return Err(Error::InvalidCounts(format!("m = {m} outside 1..={area}")));
    }
    // no K_{q,q} with q > b can exist
    let q = largest_q(a, area, m).clamp(1, b);
    Ok(ParamSet {
        q,
        r: pool_size(q, area, m, b),
        regime: bipartite_density(a, b, m),
    })
}

pub fn bipartite_pool(a: usize, b: usize, m: usize, q: usize) -> usize {
    pool_size(q, a as u128 * b as u128, m, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn general_examples() {
        let p = general_params(1024, 262_144).unwrap();
        assert_eq!((p.q, p.r), (2, 8));
        let p = general_params(1_000_000, 9_000_000_000).unwrap();
        assert_eq!((p.q, p.r), (2, 222));
        assert_eq!(p.regime, Regime::GuaranteedQ2Plus);
        let p = general_params(1_000_000, 3_000_000_000).unwrap();
        assert_eq!((p.q, p.r), (1, 333));
        assert_eq!(p.regime, Regime::GuaranteedQ1);
        // K_64: ln 32 / ln(2e * 4096 / 2016) = 1.443
        let p = general_params(64, 2016).unwrap();
        assert_eq!((p.q, p.r), (1, 2));
        let p = general_params(2, 1).unwrap();
        assert_eq!((p.q, p.r), (1, 1));
    }

    #[test]
    fn density_examples() {
        assert_eq!(density_precondition(1_000_000, 3_000_000_000), Regime::GuaranteedQ1);
        assert_eq!(density_precondition(64, 1024), Regime::BelowThreshold);
        assert_eq!(density_precondition(2000, 800_000), Regime::GuaranteedQ2Plus);
        // 8 * 500^1.5 = 89442.7
        assert_eq!(density_precondition(500, 89_442), Regime::GuaranteedQ1);
        assert_eq!(density_precondition(500, 89_443), Regime::GuaranteedQ2Plus);
        // m^2 = 64 n^3 exactly at n = 4, m = 64 is not strictly greater
        assert_eq!(density_precondition(16, 512), Regime::GuaranteedQ1);
        assert_eq!(density_precondition(16, 513), Regime::GuaranteedQ2Plus);
    }

    #[test]
    fn bipartite_examples() {
        let p = bipartite_params(1024, 1024, 262_144).unwrap();
        assert_eq!((p.q, p.r), (2, 8));
        // ln 2048 / ln(4e) = 3.196
        let p = bipartite_params(4096, 64, 131_072).unwrap();
        assert_eq!((p.q, p.r), (3, 6));
        let p = bipartite_params(2, 2, 4).unwrap();
        assert_eq!(p.q, 1);
        let p = bipartite_params(16, 16, 16).unwrap();
        assert_eq!((p.q, p.r, p.regime), (1, 16, Regime::BelowThreshold));
        // q capped by the smaller side
        let p = bipartite_params(4096, 1, 4096).unwrap();
        assert_eq!((p.q, p.r), (1, 1));
    }

    #[test]
    fn invalid_counts() {
        assert!(matches!(general_params(1, 0), Err(Error::InvalidCounts(_))));
        assert!(matches!(general_params(4, 0), Err(Error::InvalidCounts(_))));
        assert!(matches!(general_params(4, 7), Err(Error::InvalidCounts(_))));
        assert!(matches!(bipartite_params(2, 3, 1), Err(Error::InvalidCounts(_))));
        assert!(matches!(bipartite_params(3, 3, 10), Err(Error::InvalidCounts(_))));
    }

    #[test]
    fn floor_definition_of_r() {
        for &(n, m) in &[(100usize, 2000usize), (300, 40_000), (1000, 100_000), (37, 600)] {
            let area = (n * n) as u128;
            let q = largest_q(n, area, m);
            let raw = q as u128 * area / m as u128;
            assert!(raw * m as u128 <= q as u128 * area);
            assert!(q as u128 * area < (raw + 1) * m as u128);
        }
    }
}
