//! Positivity check for the cleared denominator.
//!
//! Multiplying the blend form's denominator by
//! `(-1)^(n-d+e) (x - x_0)^(e+1) (x - x_1) ... (x - x_{n-1}) (x - x_n)^(e+1)`
//! gives `s(x) = Σ_{i=-e..=n-d+e} μ_i(x)` with ghost nodes `x_{-e..-1} = x_0`
//! and `x_{n+1..n+e} = x_n`, and
//!
//! ```text
//!   μ_i(x) = Π_{j=-e..i-1} (x - x_j) · Π_{k=i+d+1..n+e} (x_k - x).
//! ```
//!
//! There is one `μ_i` per blended local interpolant. The terms are kept as
//! sign and log-magnitude so large node counts do not overflow.

use crate::error::Result;
use crate::nodes::NodeSet;
use crate::params::ExtParams;

/// One `μ_i(x)` as `sign · exp(ln_abs)`; `sign` is 0 for a vanishing term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuTerm {
    pub index: isize,
    pub sign: f64,
    pub ln_abs: f64,
}

impl MuTerm {
    pub fn is_zero(&self) -> bool {
        self.sign == 0.0
    }
}

/// All terms `μ_{-e} ... μ_{n-d+e}` at `x`.
pub fn mu_terms(nodes: &NodeSet, params: ExtParams, x: f64) -> Result<Vec<MuTerm>> {
    params.validate_for(nodes)?;
    let xs = nodes.xs();
    let n = nodes.n() as isize;
    let ExtParams { d, e } = params;
    let (d, e) = (d as isize, e as isize);
    let ghost = |j: isize| xs[j.clamp(0, n) as usize];
    let unit = nodes.mean_spacing();

    // Each μ_i is a prefix of left factors times a suffix of right factors,
    // so log-magnitudes, sign flips and zero counts are accumulated once.
    let m = (n + 2 * e + 1) as usize;
    let at = |j: isize| (j + e) as usize;
    let mut left = vec![(0.0, 0usize, 0usize); m + 1];
    let mut right = vec![(0.0, 0usize, 0usize); m + 1];
    let tally = |acc: (f64, usize, usize), f: f64| {
        if f == 0.0 {
            (acc.0, acc.1, acc.2 + 1)
        } else {
            (acc.0 + (f.abs() / unit).ln(), acc.1 + usize::from(f < 0.0), acc.2)
        }
    };
    for j in -e..=n + e {
        left[at(j) + 1] = tally(left[at(j)], x - ghost(j));
    }
    for k in (-e..=n + e).rev() {
        right[at(k)] = tally(right[at(k) + 1], ghost(k) - x);
    }

    let mut out = Vec::with_capacity((n - d + 2 * e + 1) as usize);
    for i in -e..=n - d + e {
        let (l, r) = (left[at(i)], right[at(i + d + 1)]);
        let term = if l.2 + r.2 > 0 {
            MuTerm { index: i, sign: 0.0, ln_abs: f64::NEG_INFINITY }
        } else {
            let sign = if (l.1 + r.1) % 2 == 0 { 1.0 } else { -1.0 };
            MuTerm { index: i, sign, ln_abs: l.0 + r.0 }
        };
        out.push(term);
    }
    Ok(out)
}

/// `s(x) / Σ_i |μ_i(x)|`, in `[-1, 1]`; positive exactly when `s(x) > 0`.
pub fn normalized_denominator(nodes: &NodeSet, params: ExtParams, x: f64) -> Result<f64> {
    let terms = mu_terms(nodes, params, x)?;
    let peak = terms
        .iter()
        .filter(|t| !t.is_zero())
        .map(|t| t.ln_abs)
        .fold(f64::NEG_INFINITY, f64::max);
    if peak == f64::NEG_INFINITY {
        return Ok(0.0);
    }
    let (mut signed, mut total) = (0.0, 0.0);
    for t in terms.iter().filter(|t| !t.is_zero()) {
        let m = (t.ln_abs - peak).exp();
        signed += t.sign * m;
        total += m;
    }
    Ok(signed / total)
}

/// Outcome of scanning `s(x)` over a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SignScan {
    /// Smallest normalized value `s(x) / Σ|μ_i(x)|` seen.
    pub min_normalized: f64,
    pub argmin: f64,
    /// Grid points where `s(x) <= 0`. Nonempty means a pole was found.
    pub nonpositive: Vec<f64>,
}

impl SignScan {
    pub fn all_positive(&self) -> bool {
        self.nonpositive.is_empty() && self.min_normalized > 0.0
    }
}

/// Evaluates the normalized denominator on every grid point.
pub fn denominator_sign_scan(nodes: &NodeSet, params: ExtParams, grid: &[f64]) -> Result<SignScan> {
    params.validate_for(nodes)?;
    let mut scan = SignScan {
        min_normalized: f64::INFINITY,
        argmin: f64::NAN,
        nonpositive: Vec::new(),
    };
    for &x in grid {
        let v = normalized_denominator(nodes, params, x)?;
        if v < scan.min_normalized {
            scan.min_normalized = v;
            scan.argmin = x;
        }
        if v <= 0.0 || v.is_nan() {
            scan.nonpositive.push(x);
        }
    }
    Ok(scan)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_term_at_lower_endpoint() {
        let nodes = NodeSet::equispaced(-1.0, 1.0, 12).unwrap();
        for (d, e) in [(0, 0), (3, 0), (4, 2), (6, 6), (12, 5)] {
            let terms = mu_terms(&nodes, ExtParams::new(d, e), -1.0).unwrap();
            let live: Vec<_> = terms.iter().filter(|t| !t.is_zero()).collect();
            assert_eq!(live.len(), 1, "d={d} e={e}");
            assert_eq!(live[0].index, -(e as isize));
            assert_eq!(live[0].sign, 1.0);
        }
    }

    #[test]
    fn single_term_at_upper_endpoint() {
        let nodes = NodeSet::equispaced(-1.0, 1.0, 12).unwrap();
        for (d, e) in [(0, 0), (3, 0), (4, 2), (6, 6)] {
            let terms = mu_terms(&nodes, ExtParams::new(d, e), 1.0).unwrap();
            let live: Vec<_> = terms.iter().filter(|t| !t.is_zero()).collect();
            assert_eq!(live.len(), 1);
            assert_eq!(live[0].index, 12 - d as isize + e as isize);
            assert_eq!(live[0].sign, 1.0);
        }
    }

    #[test]
    fn terms_match_direct_products() {
        let nodes = NodeSet::new(vec![-1.0, -0.7, -0.1, 0.2, 0.25, 0.9, 1.3]).unwrap();
        let (d, e) = (3isize, 2isize);
        let xs = nodes.xs();
        let ghost = |j: isize| xs[j.clamp(0, 6) as usize];
        let unit = nodes.mean_spacing();
        for x in [-1.2, -0.93, 0.21, 1.1, 2.0] {
            let terms = mu_terms(&nodes, ExtParams::new(3, 2), x).unwrap();
            for t in terms {
                let i = t.index;
                let direct: f64 = (-e..i)
                    .map(|j| (x - ghost(j)) / unit)
                    .chain((i + d + 1..=6 + e).map(|k| (ghost(k) - x) / unit))
                    .product();
                let fast = t.sign * t.ln_abs.exp();
                assert!((fast - direct).abs() <= 1e-13 * direct.abs(), "x={x} i={i}");
            }
        }
    }

    #[test]
    fn dense_scan_positive() {
        let nodes = NodeSet::equispaced(-1.0, 1.0, 16).unwrap();
        let grid: Vec<f64> = (0..10_000).map(|k| -1.0 + 2.0 * k as f64 / 9_999.0).collect();
        let scan = denominator_sign_scan(&nodes, ExtParams::new(8, 4), &grid).unwrap();
        assert!(scan.all_positive(), "{scan:?}");
    }

    #[test]
    fn fh_denominator_positive() {
        let nodes = NodeSet::equispaced(-1.0, 1.0, 16).unwrap();
        let grid: Vec<f64> = (0..2_001).map(|k| -1.5 + 3.0 * k as f64 / 2_000.0).collect();
        for d in 0..=16 {
            let scan = denominator_sign_scan(&nodes, ExtParams::fh(d), &grid).unwrap();
            assert!(scan.all_positive(), "d={d}");
        }
    }
}
