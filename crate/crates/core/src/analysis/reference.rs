//! Closed-form test functions.

use std::fmt;

/// Piecewise polynomial: piece `k` is `Σ_m coeffs[k][m] (x - breaks[k])^m`
/// for `breaks[k] <= x < breaks[k + 1]`. The first piece extends to the left
/// and the last to the right.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewisePolynomial {
    breaks: Vec<f64>,
    coeffs: Vec<Vec<f64>>,
}

impl PiecewisePolynomial {
    /// `pieces` as `(left breakpoint, coefficients)`, breakpoints increasing.
    pub fn new(pieces: Vec<(f64, Vec<f64>)>) -> Option<Self> {
        if pieces.is_empty()
            || pieces.windows(2).any(|w| w[0].0 >= w[1].0)
            || pieces.iter().any(|(b, c)| !b.is_finite() || c.iter().any(|v| !v.is_finite()))
        {
            return None;
        }
        let (breaks, coeffs) = pieces.into_iter().unzip();
        Some(Self { breaks, coeffs })
    }

    /// One polynomial in `x` over the whole line.
    pub fn polynomial(coeffs: Vec<f64>) -> Option<Self> {
        Self::new(vec![(0.0, coeffs)]).map(|mut p| {
            p.breaks[0] = f64::NEG_INFINITY;
            p
        })
    }

    pub fn eval(&self, x: f64) -> f64 {
        let k = self.breaks.partition_point(|&b| b <= x).saturating_sub(1);
        let origin = if self.breaks[k].is_finite() { self.breaks[k] } else { 0.0 };
        let t = x - origin;
        self.coeffs[k].iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    /// Parses the text format: one piece per line, `left c0 c1 c2 ...`,
    /// whitespace separated; `#` starts a comment.
    pub fn parse(text: &str) -> Option<Self> {
        let mut pieces = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let vals: Vec<f64> = line
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<_, _>>()
                .ok()?;
            let (left, coeffs) = vals.split_first()?;
            pieces.push((*left, coeffs.to_vec()));
        }
        Self::new(pieces)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FunctionKind {
    /// `1 / (1 + x^2)`
    Runge,
    Piecewise(PiecewisePolynomial),
}

/// A named function to approximate on `[a, b]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceFunction {
    pub id: String,
    pub kind: FunctionKind,
    pub interval: (f64, f64),
}

impl ReferenceFunction {
    pub fn runge(a: f64, b: f64) -> Self {
        Self {
            id: "runge".into(),
            kind: FunctionKind::Runge,
            interval: (a, b),
        }
    }

    pub fn piecewise(id: impl Into<String>, pp: PiecewisePolynomial, a: f64, b: f64) -> Self {
        Self {
            id: id.into(),
            kind: FunctionKind::Piecewise(pp),
            interval: (a, b),
        }
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        match &self.kind {
            FunctionKind::Runge => 1.0 / (1.0 + x * x),
            FunctionKind::Piecewise(p) => p.eval(x),
        }
    }

    pub fn a(&self) -> f64 {
        self.interval.0
    }

    pub fn b(&self) -> f64 {
        self.interval.1
    }
}

impl fmt::Display for ReferenceFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on [{}, {}]", self.id, self.interval.0, self.interval.1)
    }
}
