//! C² cubic spline with not-a-knot end conditions.
//!
//! Solves for the node slopes. Not-a-knot (third derivative continuous
//! across `x_1` and `x_{n-1}`) keeps the slope system tridiagonal.

use super::metrics::Approximant;
use crate::error::{InterpError, Result};
use crate::nodes::{NodeSet, Samples};

#[derive(Debug, Clone, PartialEq)]
pub struct CubicSpline {
    nodes: NodeSet,
    ys: Vec<f64>,
    slopes: Vec<f64>,
}

impl CubicSpline {
    pub fn new(nodes: NodeSet, samples: &Samples) -> Result<Self> {
        let m = nodes.len();
        if m < 4 {
            return Err(InterpError::TooFewSplineNodes(m));
        }
        if samples.len() != m {
            return Err(InterpError::LengthMismatch {
                nodes: m,
                samples: samples.len(),
            });
        }
        let x = nodes.xs();
        let y = samples.ys();
        let dx: Vec<f64> = x.windows(2).map(|w| w[1] - w[0]).collect();
        let secant: Vec<f64> = (0..m - 1).map(|i| (y[i + 1] - y[i]) / dx[i]).collect();

        // Row i: sub[i] s_{i-1} + diag[i] s_i + sup[i] s_{i+1} = rhs[i].
        let mut sub = vec![0.0; m];
        let mut diag = vec![0.0; m];
        let mut sup = vec![0.0; m];
        let mut rhs = vec![0.0; m];

        let span = x[2] - x[0];
        diag[0] = dx[1];
        sup[0] = span;
        rhs[0] = ((dx[0] + 2.0 * span) * dx[1] * secant[0] + dx[0] * dx[0] * secant[1]) / span;

        for i in 1..m - 1 {
            sub[i] = dx[i];
            diag[i] = 2.0 * (dx[i - 1] + dx[i]);
            sup[i] = dx[i - 1];
            rhs[i] = 3.0 * (dx[i] * secant[i - 1] + dx[i - 1] * secant[i]);
        }

        let last = m - 1;
        let span = x[last] - x[last - 2];
        sub[last] = span;
        diag[last] = dx[last - 2];
        rhs[last] = (dx[last - 1] * dx[last - 1] * secant[last - 2]
            + (2.0 * span + dx[last - 1]) * dx[last - 2] * secant[last - 1])
            / span;

        let slopes = solve_tridiagonal(&sub, &diag, &sup, &rhs);
        Ok(Self {
            nodes,
            ys: y.to_vec(),
            slopes,
        })
    }

    pub fn from_fn(nodes: NodeSet, f: impl Fn(f64) -> f64) -> Result<Self> {
        let samples = Samples::from_fn(&nodes, f)?;
        Self::new(nodes, &samples)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let xs = self.nodes.xs();
        let i = xs
            .partition_point(|&v| v <= x)
            .saturating_sub(1)
            .min(xs.len() - 2);
        let h = xs[i + 1] - xs[i];
        let t = (x - xs[i]) / h;
        let (y0, y1) = (self.ys[i], self.ys[i + 1]);
        let (m0, m1) = (self.slopes[i] * h, self.slopes[i + 1] * h);
        let t2 = t * t;
        let t3 = t2 * t;
        (2.0 * t3 - 3.0 * t2 + 1.0) * y0
            + (t3 - 2.0 * t2 + t) * m0
            + (-2.0 * t3 + 3.0 * t2) * y1
            + (t3 - t2) * m1
    }
}

impl Approximant for CubicSpline {
    fn value_at(&self, x: f64) -> f64 {
        self.eval(x)
    }

    fn nodes(&self) -> Option<&NodeSet> {
        Some(&self.nodes)
    }
}

/// Thomas algorithm, no pivoting.
fn solve_tridiagonal(sub: &[f64], diag: &[f64], sup: &[f64], rhs: &[f64]) -> Vec<f64> {
    let m = diag.len();
    let mut c = vec![0.0; m];
    let mut d = vec![0.0; m];
    c[0] = sup[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for i in 1..m {
        let denom = diag[i] - sub[i] * c[i - 1];
        c[i] = if i + 1 < m { sup[i] / denom } else { 0.0 };
        d[i] = (rhs[i] - sub[i] * d[i - 1]) / denom;
    }
    let mut out = vec![0.0; m];
    out[m - 1] = d[m - 1];
    for i in (0..m - 1).rev() {
        out[i] = d[i] - c[i] * out[i + 1];
    }
    out
}
