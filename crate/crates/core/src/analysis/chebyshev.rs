//! Polynomial interpolation at Chebyshev points of the second kind,
//! evaluated with the barycentric formula.

use super::metrics::Approximant;
use crate::nodes::NodeSet;

#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevInterpolant {
    xs: Vec<f64>,
    ys: Vec<f64>,
    weights: Vec<f64>,
}

impl ChebyshevInterpolant {
    /// Points `cos(kπ/n)` mapped to `[a, b]`, in increasing order.
    pub fn points(a: f64, b: f64, n: usize) -> Vec<f64> {
        let n = n.max(1);
        let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
        let mut xs: Vec<f64> = (0..=n)
            .map(|k| {
                let t = -(std::f64::consts::PI * k as f64 / n as f64).cos();
                mid + half * t
            })
            .collect();
        xs[0] = a;
        xs[n] = b;
        xs
    }

    /// Interpolates `f` at `n + 1` Chebyshev points of `[a, b]`.
    pub fn new(a: f64, b: f64, n: usize, f: impl Fn(f64) -> f64) -> Self {
        let xs = Self::points(a, b, n);
        let ys = xs.iter().map(|&x| f(x)).collect();
        Self::from_samples(xs, ys)
    }

    /// Uses given samples at [`ChebyshevInterpolant::points`].
    pub fn from_samples(xs: Vec<f64>, ys: Vec<f64>) -> Self {
        let n = xs.len() - 1;
        let weights = (0..=n)
            .map(|k| {
                let w = if k % 2 == 0 { 1.0 } else { -1.0 };
                if k == 0 || k == n {
                    0.5 * w
                } else {
                    w
                }
            })
            .collect();
        Self { xs, ys, weights }
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    pub fn eval(&self, x: f64) -> f64 {
        let (mut num, mut den) = (0.0, 0.0);
        for ((&xk, &yk), &wk) in self.xs.iter().zip(&self.ys).zip(&self.weights) {
            let diff = x - xk;
            if diff == 0.0 {
                return yk;
            }
            let t = wk / diff;
            num += t * yk;
            den += t;
        }
        num / den
    }
}

impl Approximant for ChebyshevInterpolant {
    fn value_at(&self, x: f64) -> f64 {
        self.eval(x)
    }

    fn nodes(&self) -> Option<&NodeSet> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_exact_with_one_interval() {
        let c = ChebyshevInterpolant::new(-3.0, 7.0, 1, |x| x);
        for k in 0..50 {
            let x = -3.0 + 0.2 * k as f64;
            assert!((c.eval(x) - x).abs() < 1e-14);
        }
    }

    #[test]
    fn interpolates_at_points() {
        let f = |x: f64| 1.0 / (1.0 + x * x);
        let c = ChebyshevInterpolant::new(-5.0, 5.0, 33, f);
        for &x in c.xs() {
            assert_eq!(c.eval(x), f(x));
        }
    }

    #[test]
    fn reproduces_polynomial() {
        let f = |x: f64| 2.0 - x + 0.25 * x.powi(4);
        let c = ChebyshevInterpolant::new(-2.0, 1.0, 6, f);
        for k in 0..31 {
            let x = -2.0 + 0.1 * k as f64 + 0.013;
            assert!((c.eval(x) - f(x)).abs() < 1e-12);
        }
    }

    #[test]
    fn points_sorted_with_exact_ends() {
        let p = ChebyshevInterpolant::points(-5.0, 5.0, 20);
        assert_eq!(p[0], -5.0);
        assert_eq!(p[20], 5.0);
        assert!(p.windows(2).all(|w| w[0] < w[1]));
    }
}
