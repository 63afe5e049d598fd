//! Rigorous comparisons involving `e` and natural logarithms.
//!
//! Values are bracketed in fixed point with scale `2^bits` using integer
//! series; precision doubles until the bracket excludes the comparand. Every
//! comparison here is against a transcendental quantity, so ties cannot occur
//! and the refinement always terminates.

use num_bigint::BigUint;
use num_traits::{One, Zero};

const START_BITS: u64 = 96;

/// `[lo, hi]` with `lo <= e * 2^bits <= hi`.
fn e_bracket(bits: u64) -> (BigUint, BigUint) {
    let scale = BigUint::one() << bits;
    let mut term = scale.clone();
    let mut sum = scale.clone();
    let mut j: u32 = 1;
    // floor(floor(x / a) / b) == floor(x / (a b)), so term == floor(2^bits / j!)
    loop {
        term /= j;
        if term.is_zero() {
            break;
        }
        sum += &term;
        j += 1;
    }
    // j terms truncated by at most 1 each; the omitted tail is below 1 once
    // floor(2^bits / j!) reaches 0 (tail < 2 / (j+1)! * 2^bits < 1).
    let hi = &sum + BigUint::from(j + 2);
    (sum, hi)
}

/// Decides `num / den >= e^k` for `k >= 1`.
pub fn ratio_at_least_exp(num: &BigUint, den: &BigUint, k: u32) -> bool {
    if k == 0 {
        return num >= den;
    }
    let mut bits = START_BITS;
    loop {
        let (lo, hi) = e_bracket(bits);
        // e^k * 2^(bits k) in [lo^k, hi^k]
        let lhs = num << (bits * k as u64);
        if lhs >= hi.pow(k) * den {
            return true;
        }
        if lhs < lo.pow(k) * den {
            return false;
        }
        bits *= 2;
    }
}

/// `[lo, hi]` bracketing `atanh(p / q) * 2^bits` for `0 <= p/q <= 1/3`.
fn atanh_bracket(p: &BigUint, q: &BigUint, bits: u64) -> (BigUint, BigUint) {
    let scale = BigUint::one() << bits;
    let p2 = p * p;
    let q2 = q * q;
    let mut pw = p.clone();
    let mut qw = q.clone();
    let mut sum = BigUint::zero();
    let mut terms: u64 = 0;
    let mut k: u64 = 0;
    loop {
        let t = (&scale * &pw) / (&qw * BigUint::from(2 * k + 1));
        if t.is_zero() {
            break;
        }
        sum += t;
        terms += 1;
        pw *= &p2;
        qw *= &q2;
        k += 1;
    }
    // Remaining tail is a geometric series with ratio <= 1/9 whose first term
    // already floors to 0, so it is below 9/8.
    let hi = &sum + BigUint::from(terms + 2);
    (sum, hi)
}

/// `[lo, hi]` bracketing `ln(x) * 2^bits` for an integer `x >= 1`.
fn ln_bracket(x: u128, bits: u64) -> (BigUint, BigUint) {
    if x == 1 {
        return (BigUint::zero(), BigUint::zero());
    }
    // x = 2^j * y with y in [1, 2); ln x = j ln 2 + 2 atanh((x - 2^j) / (x + 2^j))
    let j = 127 - x.leading_zeros() as u64;
    let pow = 1u128 << j;
    let (l2_lo, l2_hi) = atanh_bracket(&BigUint::one(), &BigUint::from(3u32), bits);
    let (y_lo, y_hi) = atanh_bracket(&BigUint::from(x - pow), &(BigUint::from(x) + BigUint::from(pow)), bits);
    let lo = (l2_lo * j + y_lo) * 2u32;
    let hi = (l2_hi * j + y_hi) * 2u32;
    (lo, hi)
}

/// Decides `m * ln(x) > rhs` for integer `x >= 2`.
pub fn scaled_ln_exceeds(m: u128, x: u128, rhs: u128) -> bool {
    assert!(x >= 2, "logarithm argument must be at least 2");
    let mut bits = START_BITS;
    loop {
        let (lo, hi) = ln_bracket(x, bits);
        let target = BigUint::from(rhs) << bits;
        if BigUint::from(m) * lo > target {
            return true;
        }
        if BigUint::from(m) * hi <= target {
            return false;
        }
        bits *= 2;
    }
}

/// `m * ln(x) > rhs`, using `f64` when the margin is unambiguous.
pub fn ln_threshold_exceeded(m: u128, x: u128, rhs: u128) -> bool {
    if m == 0 {
        return false;
    }
    let lhs = m as f64 * (x as f64).ln();
    let r = rhs as f64;
    let margin = 1e-9 * r.max(1.0);
    if lhs > r + margin {
        true
    } else if lhs < r - margin {
        false
    } else {
        scaled_ln_exceeds(m, x, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_bracket_contains_e() {
        let (lo, hi) = e_bracket(64);
        let scale = 2f64.powi(64);
        let lo = lo.to_string().parse::<f64>().unwrap() / scale;
        let hi = hi.to_string().parse::<f64>().unwrap() / scale;
        assert!(lo <= std::f64::consts::E && std::f64::consts::E <= hi);
        assert!(hi - lo < 1e-15);
    }

    #[test]
    fn exp_comparisons() {
        // e^2 = 7.389056...
        let big = |x: u64| BigUint::from(x);
        assert!(ratio_at_least_exp(&big(7390), &big(1000), 2));
        assert!(!ratio_at_least_exp(&big(7389), &big(1000), 2));
        assert!(ratio_at_least_exp(&big(3), &big(1), 1));
        assert!(!ratio_at_least_exp(&big(2718281), &big(1000000), 1));
        assert!(ratio_at_least_exp(&big(2718282), &big(1000000), 1));
    }

    #[test]
    fn ln_comparisons() {
        // ln 10 = 2.302585093...
        assert!(scaled_ln_exceeds(1000, 10, 2302));
        assert!(!scaled_ln_exceeds(1000, 10, 2303));
        assert!(scaled_ln_exceeds(1_000_000_000, 10, 2_302_585_092));
        assert!(!scaled_ln_exceeds(1_000_000_000, 10, 2_302_585_094));
        // ln 2 = 0.693147180559945...
        assert!(scaled_ln_exceeds(10u128.pow(15), 2, 693_147_180_559_945));
        assert!(!scaled_ln_exceeds(10u128.pow(15), 2, 693_147_180_559_946));
        assert!(scaled_ln_exceeds(1, 3, 1));
    }

    #[test]
    fn ln_bracket_matches_float() {
        for x in [2u128, 3, 7, 64, 1000, 4096, 123_456_789] {
            let (lo, hi) = ln_bracket(x, 80);
            let s = 2f64.powi(80);
            let lo = lo.to_string().parse::<f64>().unwrap() / s;
            let hi = hi.to_string().parse::<f64>().unwrap() / s;
            let want = (x as f64).ln();
            assert!(lo <= want + 1e-12 && want - 1e-12 <= hi, "x = {x}");
        }
    }

    #[test]
    fn threshold_agrees_with_exact_path() {
        for n in 2u128..200 {
            let rhs = n * n;
            let pivot = (rhs as f64 / (n as f64).ln()) as u128;
            for m in pivot.saturating_sub(2)..pivot + 3 {
                assert_eq!(ln_threshold_exceeded(m, n, rhs), scaled_ln_exceeds(m, n, rhs), "n={n} m={m}");
            }
        }
    }
}
