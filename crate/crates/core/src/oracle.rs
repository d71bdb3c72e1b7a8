//! Literal blend-form evaluation, used as a reference for the fast path.
//!
//! Every local interpolant `p_{i,j}` is evaluated in Lagrange form and
//! weighted by explicit products for `χ`, `φ` and `ψ`. Cost is `O(n d^2)` per
//! point, so this is only meant for small node counts.

use crate::error::{InterpError, Result};
use crate::nodes::{NodeSet, Samples};
use crate::params::ExtParams;
use crate::weights::sign;

/// Local polynomial through nodes `i..=j`, Lagrange form.
fn lagrange(xs: &[f64], ys: &[f64], i: usize, j: usize, x: f64) -> f64 {
    (i..=j)
        .map(|k| {
            let basis: f64 = (i..=j)
                .filter(|&l| l != k)
                .map(|l| (x - xs[l]) / (xs[k] - xs[l]))
                .product();
            basis * ys[k]
        })
        .sum()
}

/// `χ_{i,j}(x) = (-1)^i Π_{k=i..=j} 1 / (x - x_k)`, lengths in units of `unit`.
fn chi(xs: &[f64], i: usize, j: usize, x: f64, unit: f64) -> f64 {
    sign(i) / (i..=j).map(|k| (x - xs[k]) / unit).product::<f64>()
}

/// The blending weights `φ_i` (`i ∈ I1`), `χ_{i,i+d}` (`i ∈ I2`) and `ψ_i`
/// (`i ∈ I3`) at `x`, each paired with the node range of its local
/// interpolant. All carry the same factor `unit^(d+1)`.
pub fn blending_functions(nodes: &NodeSet, params: ExtParams, x: f64) -> Result<Vec<((usize, usize), f64)>> {
    params.validate_for(nodes)?;
    if let Some(index) = nodes.xs().iter().position(|&v| v == x) {
        return Err(InterpError::SingularAtNode { index, x });
    }
    let xs = nodes.xs();
    let n = nodes.n();
    let ExtParams { d, e } = params;
    let unit = nodes.mean_spacing();
    let mut out = Vec::with_capacity(n - d + 1 + 2 * e);
    let t0 = (x - xs[0]) / unit;
    for i in d - e..d {
        let phi = sign(d - i) / t0.powi((d - i) as i32) * chi(xs, 0, i, x, unit);
        out.push(((0, i), phi));
    }
    for i in 0..=n - d {
        out.push(((i, i + d), chi(xs, i, i + d, x, unit)));
    }
    let tn = (x - xs[n]) / unit;
    for i in n - d + 1..=n - d + e {
        let psi = chi(xs, i, n, x, unit) / tn.powi((i + d - n) as i32);
        out.push(((i, n), psi));
    }
    Ok(out)
}

/// Blend-form value of the extended interpolant at an off-node `x`.
pub fn eval_blend_oracle(nodes: &NodeSet, samples: &Samples, params: ExtParams, x: f64) -> Result<f64> {
    if samples.len() != nodes.len() {
        return Err(InterpError::LengthMismatch {
            nodes: nodes.len(),
            samples: samples.len(),
        });
    }
    let blends = blending_functions(nodes, params, x)?;
    let xs = nodes.xs();
    let ys = samples.ys();
    let (mut num, mut den) = (0.0, 0.0);
    for ((lo, hi), w) in blends {
        num += w * lagrange(xs, ys, lo, hi, x);
        den += w;
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fh_blends_partition_unity_at_midpoint() {
        let nodes = NodeSet::equispaced(-1.0, 1.0, 16).unwrap();
        let x = 0.0625; // midpoint between nodes 8 and 9
        let blends = blending_functions(&nodes, ExtParams::new(4, 0), x).unwrap();
        let total: f64 = blends.iter().map(|(_, w)| w).sum();
        let normalized: f64 = blends.iter().map(|(_, w)| w / total).sum();
        assert!((normalized - 1.0).abs() < 1e-15);
        assert!(blends.iter().all(|(_, w)| w.is_finite()));
    }

    #[test]
    fn reproduces_quadratic() {
        let nodes = NodeSet::equispaced(-1.0, 1.0, 12).unwrap();
        let samples = Samples::from_fn(&nodes, |x| x * x).unwrap();
        for (d, e) in [(2, 0), (4, 2), (6, 3), (5, 3)] {
            for k in 0..37 {
                let x = -1.2 + 0.0671 * k as f64;
                let v = eval_blend_oracle(&nodes, &samples, ExtParams::new(d, e), x).unwrap();
                assert!((v - x * x).abs() <= 1e-12 * (x * x).max(1e-3), "d={d} e={e} x={x}");
            }
        }
    }

    #[test]
    fn singular_at_node() {
        let nodes = NodeSet::equispaced(-1.0, 1.0, 4).unwrap();
        let samples = Samples::from_fn(&nodes, |x| x).unwrap();
        assert!(matches!(
            eval_blend_oracle(&nodes, &samples, ExtParams::new(2, 1), 0.5),
            Err(InterpError::SingularAtNode { index: 3, .. })
        ));
    }

    #[test]
    fn blend_count() {
        let nodes = NodeSet::equispaced(-1.0, 1.0, 16).unwrap();
        let b = blending_functions(&nodes, ExtParams::new(8, 4), 0.01).unwrap();
        assert_eq!(b.len(), 16 - 8 + 1 + 2 * 4);
    }
}
