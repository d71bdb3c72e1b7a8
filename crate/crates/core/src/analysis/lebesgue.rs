use super::grid::GridSpec;
use crate::error::Result;
use crate::eval::Scheme;
use crate::nodes::NodeSet;
use crate::params::ExtParams;

/// Estimated Lebesgue constant.
#[derive(Debug, Clone, PartialEq)]
pub struct LebesgueReport {
    pub lambda_max: f64,
    pub argmax_x: f64,
    pub grid: GridSpec,
}

/// `λ(x) = Σ_j |β_j(x)|`; exactly 1 at the nodes.
pub fn lebesgue_function(nodes: &NodeSet, params: ExtParams, x: f64) -> Result<f64> {
    Scheme::new(nodes.clone(), params)?.lebesgue(x)
}

const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Maximizes `λ` on the grid, then refines the best point by golden-section
/// search over its two neighbouring grid cells until the bracket is below
/// `1e-6 (b - a)`.
pub fn lebesgue_constant(scheme: &Scheme, grid: GridSpec) -> Result<LebesgueReport> {
    let nodes = scheme.nodes();
    let (a, b) = (nodes.a(), nodes.b());
    let pts = grid.points(a, b, None);
    let mut best = (1.0, a);
    for &x in &pts {
        let v = scheme.lebesgue(x)?;
        if v > best.0 {
            best = (v, x);
        }
    }
    let k = pts.partition_point(|&p| p < best.1);
    let mut lo = pts[k.saturating_sub(1)];
    let mut hi = pts[(k + 1).min(pts.len() - 1)];
    let tol = 1e-6 * (b - a);

    let mut x1 = hi - GOLDEN * (hi - lo);
    let mut x2 = lo + GOLDEN * (hi - lo);
    let mut f1 = scheme.lebesgue(x1)?;
    let mut f2 = scheme.lebesgue(x2)?;
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + GOLDEN * (hi - lo);
            f2 = scheme.lebesgue(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - GOLDEN * (hi - lo);
            f1 = scheme.lebesgue(x1)?;
        }
    }
    for (v, x) in [(f1, x1), (f2, x2)] {
        if v > best.0 {
            best = (v, x);
        }
    }
    Ok(LebesgueReport {
        lambda_max: best.0,
        argmax_x: best.1,
        grid,
    })
}

/// Builds the scheme and estimates `Λ` on the default `10 n (d + 1)` grid.
pub fn lebesgue_constant_for(nodes: &NodeSet, params: ExtParams) -> Result<LebesgueReport> {
    let scheme = Scheme::new(nodes.clone(), params)?;
    lebesgue_constant(&scheme, GridSpec::lebesgue_default(nodes.n(), params.d))
}
