//! Evaluation of the extended interpolant
//!
//! ```text
//!            Σ_j (ζ_j(x) + ξ_j + η_j(x)) / (x - x_j) · y_j
//!   r(x) =  -----------------------------------------------
//!            Σ_j (ζ_j(x) + ξ_j + η_j(x)) / (x - x_j)
//! ```
//!
//! `ξ_j` is precomputed. The end corrections are polynomials in
//! `t = L / (x - x_0)` and `s = L / (x - x_n)` without constant term:
//!
//! ```text
//!   ζ_j(x) = Σ_{k=1..K} (-1)^k ω_{0,j,d-k} t^k,            K = min(d - j, e)
//!   η_j(x) = Σ_{k=1..K} (-1)^(n-d+k) ω_{n-d+k,j,n} s^k,     K = min(j - n + d, e)
//! ```
//!
//! and are evaluated by Horner's rule in `O(e)` each. Within one length unit
//! of an endpoint the powers of `t` blow up, so the whole weight vector is
//! multiplied by `(1/t)^e` there and the correction is evaluated as a
//! polynomial in `1/t` instead.

use crate::error::{InterpError, Result};
use crate::nodes::{NodeSet, Samples};
use crate::params::ExtParams;
use crate::weights::{sign, PrecomputedWeights};

/// Result of a single evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOutcome {
    pub value: f64,
    /// Set when `x` snapped to a node; `value` is then the sample there.
    pub at_node: Option<usize>,
}

/// Sink for arithmetic-operation counts.
pub trait OpTally {
    fn add(&mut self, ops: u64);
}

impl OpTally for () {
    #[inline(always)]
    fn add(&mut self, _ops: u64) {}
}

/// Counts floating-point operations performed by an evaluation.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounter(pub u64);

impl OpTally for OpCounter {
    #[inline]
    fn add(&mut self, ops: u64) {
        self.0 += ops;
    }
}

/// Running sum with optional Neumaier compensation.
#[derive(Debug, Clone, Copy)]
struct Accumulator {
    sum: f64,
    carry: f64,
    compensated: bool,
}

impl Accumulator {
    fn new(compensated: bool) -> Self {
        Self {
            sum: 0.0,
            carry: 0.0,
            compensated,
        }
    }

    #[inline]
    fn push(&mut self, v: f64) {
        if self.compensated {
            let t = self.sum + v;
            if self.sum.abs() >= v.abs() {
                self.carry += (self.sum - t) + v;
            } else {
                self.carry += (v - t) + self.sum;
            }
            self.sum = t;
        } else {
            self.sum += v;
        }
    }

    fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

/// How one end's corrections are formed at a given `x`.
#[derive(Debug, Clone, Copy)]
enum EndForm {
    /// Plain polynomial in `t = L / (x - x_end)`.
    Direct(f64),
    /// Polynomial in `q = (x - x_end) / L`, pre-multiplied by `q^e`.
    Damped(f64),
}

impl EndForm {
    fn at(offset: f64) -> Self {
        if offset.abs() < 1.0 {
            EndForm::Damped(offset)
        } else {
            EndForm::Direct(offset.recip())
        }
    }

    /// Factor this form applies to every weight.
    fn multiplier(self, e: usize) -> f64 {
        match self {
            EndForm::Direct(_) => 1.0,
            EndForm::Damped(q) => q.powi(e as i32),
        }
    }

    /// `Σ_{k=1..K} coeff(k) t^k`, times `q^e` in the damped form.
    #[inline]
    fn horner<T: OpTally>(self, big_k: usize, e: usize, coeff: impl Fn(usize) -> f64, tally: &mut T) -> f64 {
        tally.add(2 * big_k as u64 + 1);
        match self {
            EndForm::Direct(t) => {
                let mut acc = coeff(big_k);
                for k in (1..big_k).rev() {
                    acc = acc * t + coeff(k);
                }
                acc * t
            }
            EndForm::Damped(q) => {
                let mut acc = coeff(1);
                for k in 2..=big_k {
                    acc = acc * q + coeff(k);
                }
                acc * q.powi((e - big_k) as i32)
            }
        }
    }
}

/// Nodes plus precomputed weights: everything needed for basis functions.
#[derive(Debug, Clone, PartialEq)]
pub struct Scheme {
    nodes: NodeSet,
    weights: PrecomputedWeights,
}

impl Scheme {
    pub fn new(nodes: NodeSet, params: ExtParams) -> Result<Self> {
        let weights = PrecomputedWeights::new(&nodes, params)?;
        Ok(Self { nodes, weights })
    }

    /// Uses the given weights as-is (e.g. a rescaled copy).
    pub fn with_weights(nodes: NodeSet, weights: PrecomputedWeights) -> Self {
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn weights(&self) -> &PrecomputedWeights {
        &self.weights
    }

    pub fn params(&self) -> ExtParams {
        self.weights.params()
    }

    /// Calls `sink(j, w_j(x) / (x - x_j))` for every node, in index order,
    /// where `w_j = ζ_j + ξ_j + η_j` up to a positive-or-negative common
    /// factor. `x` must not be a node.
    #[inline]
    fn terms<T: OpTally>(&self, x: f64, tally: &mut T, mut sink: impl FnMut(usize, f64)) {
        let xs = self.nodes.xs();
        let n = self.nodes.n();
        let ExtParams { d, e } = self.params();
        let fh = self.weights.fh();

        if e == 0 {
            for (j, (&xj, &w)) in xs.iter().zip(fh).enumerate() {
                sink(j, w / (x - xj));
            }
            tally.add(2 * fh.len() as u64);
            return;
        }

        let unit = self.weights.length_unit();
        let lower_form = EndForm::at((x - xs[0]) / unit);
        let upper_form = EndForm::at((x - xs[n]) / unit);
        let lower_mult = lower_form.multiplier(e);
        let upper_mult = upper_form.multiplier(e);
        let common = lower_mult * upper_mult;
        tally.add(6);

        let lower = self.weights.lower();
        let upper = self.weights.upper();
        for (j, (&xj, &xi)) in xs.iter().zip(fh).enumerate() {
            let mut w = xi * common;
            tally.add(1);
            if j < d {
                let big_k = (d - j).min(e);
                let zeta = lower_form.horner(
                    big_k,
                    e,
                    |k| sign(k) * lower.get(d - k, j).unwrap_or(0.0),
                    tally,
                );
                w += zeta * upper_mult;
                tally.add(2);
            }
            if j + d > n {
                let big_k = (j + d - n).min(e);
                let eta = upper_form.horner(
                    big_k,
                    e,
                    |k| sign(n - d + k) * upper.get(n - d + k, j).unwrap_or(0.0),
                    tally,
                );
                w += eta * lower_mult;
                tally.add(2);
            }
            sink(j, w / (x - xj));
            tally.add(2);
        }
    }

    /// All basis values `β_j(x)`, summing to one.
    pub fn basis_values(&self, x: f64) -> Result<Vec<f64>> {
        if !x.is_finite() {
            return Err(InterpError::NonFiniteInput(x));
        }
        let mut out = vec![0.0; self.nodes.len()];
        if let Some(j) = self.nodes.snap(x) {
            out[j] = 1.0;
            return Ok(out);
        }
        let mut den = 0.0;
        self.terms(x, &mut (), |j, t| {
            out[j] = t;
            den += t;
        });
        out.iter_mut().for_each(|v| *v /= den);
        Ok(out)
    }

    /// Basis function `β_j(x)`: the interpolant of unit data at node `j`.
    pub fn basis_function(&self, j: usize, x: f64) -> Result<f64> {
        if j >= self.nodes.len() {
            return Err(InterpError::IndexOutOfRange {
                index: j,
                len: self.nodes.len(),
            });
        }
        Ok(self.basis_values(x)?[j])
    }

    /// Lebesgue function `Σ_j |β_j(x)|`.
    pub fn lebesgue(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(InterpError::NonFiniteInput(x));
        }
        if self.nodes.snap(x).is_some() {
            return Ok(1.0);
        }
        let (mut abs_sum, mut sum) = (0.0, 0.0);
        self.terms(x, &mut (), |_, t| {
            abs_sum += t.abs();
            sum += t;
        });
        Ok(abs_sum / sum.abs())
    }

    /// End corrections `(ζ_0 .. ζ_{d-1}, η_{n-d+1} .. η_n)` at `x`, on the
    /// same scale as the stored weights. Both vectors have length `d`.
    pub fn zeta_eta(&self, x: f64) -> Result<(Vec<f64>, Vec<f64>)> {
        if !x.is_finite() {
            return Err(InterpError::NonFiniteInput(x));
        }
        let xs = self.nodes.xs();
        let n = self.nodes.n();
        if x == xs[0] || x == xs[n] {
            return Err(InterpError::EvaluationAtEndpoint(x));
        }
        let ExtParams { d, e } = self.params();
        if e == 0 {
            return Ok((vec![0.0; d], vec![0.0; d]));
        }
        let unit = self.weights.length_unit();
        let lower_form = EndForm::Direct(unit / (x - xs[0]));
        let upper_form = EndForm::Direct(unit / (x - xs[n]));
        let lower = self.weights.lower();
        let upper = self.weights.upper();
        let zeta = (0..d)
            .map(|j| {
                let big_k = (d - j).min(e);
                lower_form.horner(big_k, e, |k| sign(k) * lower.get(d - k, j).unwrap_or(0.0), &mut ())
            })
            .collect();
        let eta = (n - d + 1..=n)
            .map(|j| {
                let big_k = (j + d - n).min(e);
                upper_form.horner(
                    big_k,
                    e,
                    |k| sign(n - d + k) * upper.get(n - d + k, j).unwrap_or(0.0),
                    &mut (),
                )
            })
            .collect();
        Ok((zeta, eta))
    }
}

/// Extended Floater-Hormann interpolant through fixed data.
///
/// Immutable after construction; evaluation takes `&self` and can run from
/// many threads at once.
#[derive(Debug, Clone, PartialEq)]
pub struct Interpolant {
    scheme: Scheme,
    samples: Samples,
    compensated: bool,
}

impl Interpolant {
    pub fn new(nodes: NodeSet, samples: Samples, params: ExtParams) -> Result<Self> {
        if samples.len() != nodes.len() {
            return Err(InterpError::LengthMismatch {
                nodes: nodes.len(),
                samples: samples.len(),
            });
        }
        Ok(Self {
            scheme: Scheme::new(nodes, params)?,
            samples,
            compensated: false,
        })
    }

    pub fn from_scheme(scheme: Scheme, samples: Samples) -> Result<Self> {
        if samples.len() != scheme.nodes().len() {
            return Err(InterpError::LengthMismatch {
                nodes: scheme.nodes().len(),
                samples: samples.len(),
            });
        }
        Ok(Self {
            scheme,
            samples,
            compensated: false,
        })
    }

    /// Samples `f` at the nodes and builds the interpolant.
    pub fn from_fn(nodes: NodeSet, params: ExtParams, f: impl Fn(f64) -> f64) -> Result<Self> {
        let samples = Samples::from_fn(&nodes, f)?;
        Self::new(nodes, samples, params)
    }

    /// Toggles compensated accumulation of numerator and denominator.
    pub fn with_compensation(mut self, on: bool) -> Self {
        self.compensated = on;
        self
    }

    pub fn scheme(&self) -> &Scheme {
        &self.scheme
    }

    pub fn nodes(&self) -> &NodeSet {
        self.scheme.nodes()
    }

    pub fn samples(&self) -> &Samples {
        &self.samples
    }

    pub fn params(&self) -> ExtParams {
        self.scheme.params()
    }

    pub fn weights(&self) -> &PrecomputedWeights {
        self.scheme.weights()
    }

    /// Evaluates `r^(d,e)(x)`. Points outside `[a, b]` are extrapolated.
    pub fn eval(&self, x: f64) -> Result<EvalOutcome> {
        self.eval_tallied(x, &mut ())
    }

    /// Like [`Interpolant::eval`], also reporting the operation count.
    pub fn eval_counted(&self, x: f64) -> Result<(EvalOutcome, u64)> {
        let mut counter = OpCounter::default();
        let out = self.eval_tallied(x, &mut counter)?;
        Ok((out, counter.0))
    }

    fn eval_tallied<T: OpTally>(&self, x: f64, tally: &mut T) -> Result<EvalOutcome> {
        if !x.is_finite() {
            return Err(InterpError::NonFiniteInput(x));
        }
        let ys = self.samples.ys();
        if let Some(j) = self.nodes().snap(x) {
            return Ok(EvalOutcome {
                value: ys[j],
                at_node: Some(j),
            });
        }
        let mut num = Accumulator::new(self.compensated);
        let mut den = Accumulator::new(self.compensated);
        self.scheme.terms(x, tally, |j, t| {
            num.push(t * ys[j]);
            den.push(t);
        });
        tally.add(3 * ys.len() as u64 + 1);
        Ok(EvalOutcome {
            value: num.total() / den.total(),
            at_node: None,
        })
    }

    /// Convenience: the value only.
    pub fn value(&self, x: f64) -> Result<f64> {
        self.eval(x).map(|o| o.value)
    }

    /// Plain Floater-Hormann interpolant `r^(d)` of the same data and `d`,
    /// ignoring the end corrections. Independent of the extended path.
    pub fn eval_fh(&self, x: f64) -> Result<EvalOutcome> {
        if !x.is_finite() {
            return Err(InterpError::NonFiniteInput(x));
        }
        let xs = self.nodes().xs();
        let ys = self.samples.ys();
        if let Some(j) = self.nodes().snap(x) {
            return Ok(EvalOutcome {
                value: ys[j],
                at_node: Some(j),
            });
        }
        let mut num = Accumulator::new(self.compensated);
        let mut den = Accumulator::new(self.compensated);
        for ((&xj, &yj), &wj) in xs.iter().zip(ys).zip(self.weights().fh()) {
            let t = wj / (x - xj);
            num.push(t * yj);
            den.push(t);
        }
        Ok(EvalOutcome {
            value: num.total() / den.total(),
            at_node: None,
        })
    }

    pub fn basis_function(&self, j: usize, x: f64) -> Result<f64> {
        self.scheme.basis_function(j, x)
    }

    pub fn zeta_eta(&self, x: f64) -> Result<(Vec<f64>, Vec<f64>)> {
        self.scheme.zeta_eta(x)
    }
}
