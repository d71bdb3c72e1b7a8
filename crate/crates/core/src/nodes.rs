//! Interpolation abscissae and ordinates.

use crate::error::{InterpError, Result};

/// Strictly increasing, finite abscissae `x_0 < x_1 < ... < x_n`.
///
/// A node set that is bit-identical to [`NodeSet::equispaced`] for its own
/// endpoints and length is flagged as equispaced; weight construction then
/// uses exact integer node differences.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet {
    xs: Vec<f64>,
    spacing: Option<f64>,
}

impl NodeSet {
    /// `n + 1` equispaced nodes `a + i·h`, `h = (b - a) / n`, with the last
    /// node pinned to `b`.
    pub fn equispaced(a: f64, b: f64, n: usize) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) || a >= b || n == 0 {
            return Err(InterpError::InvalidInterval { a, b, n });
        }
        let xs = equispaced_values(a, b, n);
        check_increasing(&xs)?;
        Ok(Self {
            xs,
            spacing: Some((b - a) / n as f64),
        })
    }

    pub fn new(xs: Vec<f64>) -> Result<Self> {
        if xs.len() < 2 {
            return Err(InterpError::TooFewNodes(xs.len()));
        }
        check_increasing(&xs)?;
        let n = xs.len() - 1;
        let (a, b) = (xs[0], xs[n]);
        let spacing = (equispaced_values(a, b, n) == xs).then(|| (b - a) / n as f64);
        Ok(Self { xs, spacing })
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    /// Index of the last node, so there are `n() + 1` nodes.
    pub fn n(&self) -> usize {
        self.xs.len() - 1
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn a(&self) -> f64 {
        self.xs[0]
    }

    pub fn b(&self) -> f64 {
        self.xs[self.n()]
    }

    /// Spacing `h` when the nodes are equispaced.
    pub fn spacing(&self) -> Option<f64> {
        self.spacing
    }

    pub fn is_equispaced(&self) -> bool {
        self.spacing.is_some()
    }

    /// Mean node spacing `(b - a) / n`; equals `h` for equispaced nodes.
    pub fn mean_spacing(&self) -> f64 {
        self.spacing
            .unwrap_or_else(|| (self.b() - self.a()) / self.n() as f64)
    }

    /// Node difference `x_j - x_l` in units of the mean spacing. Exact
    /// integers for equispaced nodes.
    pub(crate) fn scaled_diff(&self, j: usize, l: usize) -> f64 {
        match self.spacing {
            Some(_) => j as f64 - l as f64,
            None => (self.xs[j] - self.xs[l]) / self.mean_spacing(),
        }
    }

    /// Node index `j` with `|x - x_j| <= 4·eps·max(|x_j|, h_j)`, where `h_j`
    /// is the smaller gap adjacent to `x_j`.
    pub fn snap(&self, x: f64) -> Option<usize> {
        let xs = &self.xs;
        let idx = xs.partition_point(|&v| v < x);
        let lo = idx.saturating_sub(1);
        let hi = idx.min(self.n());
        (lo..=hi).find(|&j| (x - xs[j]).abs() <= self.snap_tolerance(j))
    }

    fn snap_tolerance(&self, j: usize) -> f64 {
        let xs = &self.xs;
        let left = if j > 0 { xs[j] - xs[j - 1] } else { f64::INFINITY };
        let right = if j < self.n() {
            xs[j + 1] - xs[j]
        } else {
            f64::INFINITY
        };
        4.0 * f64::EPSILON * xs[j].abs().max(left.min(right))
    }
}

fn equispaced_values(a: f64, b: f64, n: usize) -> Vec<f64> {
    let h = (b - a) / n as f64;
    let mut xs: Vec<f64> = (0..=n).map(|i| a + i as f64 * h).collect();
    xs[n] = b;
    xs
}

fn check_increasing(xs: &[f64]) -> Result<()> {
    if let Some(index) = xs.iter().position(|v| !v.is_finite()) {
        return Err(InterpError::NodesNotIncreasing { index });
    }
    match xs.windows(2).position(|w| w[0] >= w[1]) {
        Some(i) => Err(InterpError::NodesNotIncreasing { index: i + 1 }),
        None => Ok(()),
    }
}

/// Finite ordinates `y_0 ... y_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Samples {
    ys: Vec<f64>,
}

impl Samples {
    pub fn new(ys: Vec<f64>) -> Result<Self> {
        if let Some(index) = ys.iter().position(|v| !v.is_finite()) {
            return Err(InterpError::NonFiniteSample { index });
        }
        Ok(Self { ys })
    }

    /// Samples `f(x_i)` at every node.
    pub fn from_fn(nodes: &NodeSet, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(nodes.xs().iter().map(|&x| f(x)).collect())
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    pub fn len(&self) -> usize {
        self.ys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ys.is_empty()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.ys
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equispaced_examples() {
        let nodes = NodeSet::equispaced(-1.0, 1.0, 2).unwrap();
        assert_eq!(nodes.xs(), &[-1.0, 0.0, 1.0]);

        let nodes = NodeSet::equispaced(-5.0, 5.0, 10).unwrap();
        assert_eq!(nodes.len(), 11);
        assert_eq!(nodes.spacing(), Some(1.0));
        for w in nodes.xs().windows(2) {
            assert_eq!(w[1] - w[0], 1.0);
        }

        let nodes = NodeSet::equispaced(-3.0, 7.0, 4).unwrap();
        assert_eq!(nodes.xs(), &[-3.0, -0.5, 2.0, 4.5, 7.0]);
    }

    #[test]
    fn equispaced_endpoints_exact() {
        for n in [3, 7, 10, 33, 160, 1000] {
            let nodes = NodeSet::equispaced(-0.3, 1.7, n).unwrap();
            assert_eq!(nodes.a(), -0.3);
            assert_eq!(nodes.b(), 1.7);
        }
    }

    #[test]
    fn invalid_intervals() {
        assert!(matches!(
            NodeSet::equispaced(1.0, 1.0, 4),
            Err(InterpError::InvalidInterval { .. })
        ));
        assert!(matches!(
            NodeSet::equispaced(2.0, 1.0, 4),
            Err(InterpError::InvalidInterval { .. })
        ));
        assert!(matches!(
            NodeSet::equispaced(0.0, 1.0, 0),
            Err(InterpError::InvalidInterval { .. })
        ));
    }

    #[test]
    fn general_nodes_validated() {
        assert!(NodeSet::new(vec![0.0, 0.5, 0.5]).is_err());
        assert!(NodeSet::new(vec![0.0, f64::NAN]).is_err());
        assert!(NodeSet::new(vec![0.0]).is_err());
        let nodes = NodeSet::new(vec![0.0, 0.1, 1.0]).unwrap();
        assert!(!nodes.is_equispaced());
    }

    #[test]
    fn equispaced_detected_from_values() {
        let eq = NodeSet::equispaced(-5.0, 5.0, 40).unwrap();
        let again = NodeSet::new(eq.xs().to_vec()).unwrap();
        assert_eq!(again, eq);
    }

    #[test]
    fn snapping() {
        let nodes = NodeSet::equispaced(-1.0, 1.0, 4).unwrap();
        assert_eq!(nodes.snap(0.5), Some(3));
        assert_eq!(nodes.snap(0.5 + 1e-17), Some(3));
        assert_eq!(nodes.snap(-1.0), Some(0));
        assert_eq!(nodes.snap(1.0), Some(4));
        assert_eq!(nodes.snap(0.25), None);
        assert_eq!(nodes.snap(0.5 + 1e-12), None);
        assert_eq!(nodes.snap(3.0), None);
        assert_eq!(nodes.snap(-3.0), None);
    }

    #[test]
    fn samples_reject_nan() {
        assert!(Samples::new(vec![1.0, f64::INFINITY]).is_err());
    }
}
