use crate::nodes::NodeSet;

/// Uniform sampling grid over `[a, b]`, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    /// Number of uniform points, at least 2.
    pub count: usize,
    /// Each uniform subinterval is split into this many pieces.
    pub refinement: usize,
    /// Move interior points that land on a node to the midpoint between
    /// them and the next grid point.
    pub avoid_nodes: bool,
}

impl GridSpec {
    /// Error-measurement default: 10^5 points.
    pub const DEFAULT_ERROR_COUNT: usize = 100_000;

    pub const fn uniform(count: usize) -> Self {
        Self {
            count,
            refinement: 1,
            avoid_nodes: false,
        }
    }

    pub fn error_default() -> Self {
        Self::uniform(Self::DEFAULT_ERROR_COUNT)
    }

    /// Coarse Lebesgue search grid: `10 n (d + 1)` points.
    pub fn lebesgue_default(n: usize, d: usize) -> Self {
        Self::uniform((10 * n * (d + 1)).max(2))
    }

    pub fn refined(self, factor: usize) -> Self {
        Self {
            refinement: self.refinement * factor.max(1),
            ..self
        }
    }

    pub fn avoiding_nodes(self) -> Self {
        Self {
            avoid_nodes: true,
            ..self
        }
    }

    /// Total number of points produced.
    pub fn len(&self) -> usize {
        (self.count.max(2) - 1) * self.refinement.max(1) + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self, a: f64, b: f64, nodes: Option<&NodeSet>) -> Vec<f64> {
        let m = self.len() - 1;
        let step = (b - a) / m as f64;
        let mut pts: Vec<f64> = (0..=m).map(|k| a + k as f64 * step).collect();
        pts[m] = b;
        if let (true, Some(nodes)) = (self.avoid_nodes, nodes) {
            for p in &mut pts[1..m] {
                if nodes.snap(*p).is_some() {
                    *p += 0.5 * step;
                }
            }
        }
        pts
    }
}
