use std::fmt;

use super::grid::GridSpec;
use super::reference::ReferenceFunction;
use crate::eval::Interpolant;
use crate::nodes::NodeSet;
use crate::params::ExtParams;

/// Anything that can be evaluated pointwise.
pub trait Approximant: Sync {
    fn value_at(&self, x: f64) -> f64;

    /// Nodes used for grid snapping, when there are any.
    fn nodes(&self) -> Option<&NodeSet> {
        None
    }
}

impl Approximant for Interpolant {
    fn value_at(&self, x: f64) -> f64 {
        self.value(x).unwrap_or(f64::NAN)
    }

    fn nodes(&self) -> Option<&NodeSet> {
        Some(Interpolant::nodes(self))
    }
}

/// Which approximant a result belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Floater-Hormann, `e = 0`.
    Fh { d: usize },
    Extended { d: usize, e: usize },
    Chebyshev,
    Spline,
}

impl Method {
    pub fn from_params(p: ExtParams) -> Self {
        if p.e == 0 {
            Method::Fh { d: p.d }
        } else {
            Method::Extended { d: p.d, e: p.e }
        }
    }

    pub fn params(&self) -> Option<ExtParams> {
        match *self {
            Method::Fh { d } => Some(ExtParams::fh(d)),
            Method::Extended { d, e } => Some(ExtParams::new(d, e)),
            Method::Chebyshev | Method::Spline => None,
        }
    }

    /// Short tag used in CSV output.
    pub fn tag(&self) -> &'static str {
        match self {
            Method::Fh { .. } => "fh",
            Method::Extended { .. } => "ext",
            Method::Chebyshev => "cheb",
            Method::Spline => "spline",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Fh { d } => write!(f, "fh:{d}"),
            Method::Extended { d, e } => write!(f, "ext:{d},{e}"),
            Method::Chebyshev => f.write_str("cheb"),
            Method::Spline => f.write_str("spline"),
        }
    }
}

/// Sup-norm and L1 error of an approximant against a reference function.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    pub linf: f64,
    pub l1: f64,
    pub grid: GridSpec,
    pub n: usize,
    pub method: Method,
    pub interval: (f64, f64),
}

/// Measures `max |r - f|` and the trapezoid-rule `∫ |r - f|` on the grid.
pub fn error_report(
    approx: &dyn Approximant,
    f: &ReferenceFunction,
    grid: GridSpec,
    n: usize,
    method: Method,
) -> ErrorReport {
    let (a, b) = f.interval;
    let pts = grid.points(a, b, approx.nodes());
    let errs: Vec<f64> = pts.iter().map(|&x| (approx.value_at(x) - f.eval(x)).abs()).collect();
    let linf = errs.iter().copied().fold(0.0, |m: f64, v| if v.is_nan() { f64::NAN } else { m.max(v) });
    let l1 = pts
        .windows(2)
        .zip(errs.windows(2))
        .map(|(x, e)| 0.5 * (x[1] - x[0]) * (e[0] + e[1]))
        .sum();
    ErrorReport {
        linf,
        l1,
        grid,
        n,
        method,
        interval: (a, b),
    }
}
