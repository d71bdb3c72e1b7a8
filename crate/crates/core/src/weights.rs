//! x-independent weight precomputation.
//!
//! Every quantity here is a product of inverse node differences. Differences
//! are measured in units of the mean spacing `L`, so a weight built from `k`
//! factors carries an implicit `L^k`. The families are arranged so that each
//! of them ends up multiplied by the same `L^d` (the end tables make up the
//! missing powers through `L / (x - x_0)` and `L / (x - x_n)` at evaluation
//! time). For non-equispaced nodes everything is further divided by the
//! geometric mean of the Floater-Hormann weights. Evaluation is a ratio, so
//! a common factor cancels.

use crate::error::{InterpError, Result};
use crate::nodes::NodeSet;
use crate::params::ExtParams;

/// Inverse-difference product `ω_{i,j,k} = Π_{l=i..=k, l≠j} 1 / (x_j - x_l)`
/// with differences in mean-spacing units.
pub(crate) fn scaled_omega(nodes: &NodeSet, i: usize, j: usize, k: usize) -> f64 {
    let prod: f64 = (i..=k)
        .filter(|&l| l != j)
        .map(|l| nodes.scaled_diff(j, l))
        .product();
    prod.recip()
}

/// Rows of barycentric-weight constants feeding one end's corrections.
///
/// Row `i` covers node indices `col_start(i) ..= col_end(i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EndTable {
    first_row: usize,
    rows: Vec<(usize, Vec<f64>)>,
}

impl EndTable {
    fn empty() -> Self {
        Self {
            first_row: 0,
            rows: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of rows (equals `e`).
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Indices `i` of the rows, in increasing order.
    pub fn row_indices(&self) -> std::ops::Range<usize> {
        self.first_row..self.first_row + self.rows.len()
    }

    /// Node indices `j` stored for row `i`.
    pub fn columns(&self, i: usize) -> std::ops::Range<usize> {
        match self.row(i) {
            Some((start, vals)) => *start..*start + vals.len(),
            None => 0..0,
        }
    }

    /// Stored (rescaled) `ω` for row `i`, node `j`.
    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        let (start, vals) = self.row(i)?;
        vals.get(j.checked_sub(*start)?).copied()
    }

    fn row(&self, i: usize) -> Option<&(usize, Vec<f64>)> {
        self.rows.get(i.checked_sub(self.first_row)?)
    }

    fn values(&self) -> impl Iterator<Item = &f64> {
        self.rows.iter().flat_map(|(_, v)| v.iter())
    }

    fn scale_by(&mut self, factor: f64) {
        for (_, row) in &mut self.rows {
            row.iter_mut().for_each(|v| *v *= factor);
        }
    }
}

/// Floater-Hormann weights plus the end tables needed for `e > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct PrecomputedWeights {
    params: ExtParams,
    fh: Vec<f64>,
    scale: f64,
    length_unit: f64,
    lower: EndTable,
    upper: EndTable,
}

impl PrecomputedWeights {
    pub fn new(nodes: &NodeSet, params: ExtParams) -> Result<Self> {
        params.validate_for(nodes)?;
        let n = nodes.n();
        let ExtParams { d, e } = params;

        let mut fh: Vec<f64> = (0..=n)
            .map(|j| {
                let lo = j.saturating_sub(d);
                let hi = j.min(n - d);
                (lo..=hi)
                    .map(|i| sign(i) * scaled_omega(nodes, i, j, i + d))
                    .sum()
            })
            .collect();

        // Lower rows i = d-e .. d-1 hold ω_{0,j,i} for j in 0..=i.
        let mut lower = if e == 0 {
            EndTable::empty()
        } else {
            EndTable {
                first_row: d - e,
                rows: (d - e..d)
                    .map(|i| (0, (0..=i).map(|j| scaled_omega(nodes, 0, j, i)).collect()))
                    .collect(),
            }
        };
        // Upper rows i = n-d+1 .. n-d+e hold ω_{i,j,n} for j in i..=n.
        let mut upper = if e == 0 {
            EndTable::empty()
        } else {
            EndTable {
                first_row: n - d + 1,
                rows: (n - d + 1..=n - d + e)
                    .map(|i| (i, (i..=n).map(|j| scaled_omega(nodes, i, j, n)).collect()))
                    .collect(),
            }
        };

        let length_unit = nodes.mean_spacing();
        let mut scale = length_unit.powi(-(d as i32));
        if !nodes.is_equispaced() {
            let log_mean = fh.iter().map(|w| w.abs().ln()).sum::<f64>() / fh.len() as f64;
            let g = log_mean.exp();
            if g.is_finite() && g > 0.0 {
                let inv = g.recip();
                fh.iter_mut().for_each(|w| *w *= inv);
                lower.scale_by(inv);
                upper.scale_by(inv);
                scale *= g;
            }
        }

        let usable = |v: &f64| v.is_finite() && *v != 0.0;
        if !(fh.iter().all(usable) && lower.values().all(usable) && upper.values().all(usable)) {
            return Err(InterpError::WeightRange {
                d,
                nodes: nodes.len(),
            });
        }

        Ok(Self {
            params,
            fh,
            scale,
            length_unit,
            lower,
            upper,
        })
    }

    /// Stored Floater-Hormann weights `ξ_j / s_w`.
    pub fn fh(&self) -> &[f64] {
        &self.fh
    }

    /// Common factor `s_w`: stored values are the true ones divided by it.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Length `L` used to nondimensionalize `x - x_0` and `x - x_n`.
    pub fn length_unit(&self) -> f64 {
        self.length_unit
    }

    pub fn params(&self) -> ExtParams {
        self.params
    }

    /// `ω_{0,j,i}` table, rows `i ∈ {d-e .. d-1}`.
    pub fn lower(&self) -> &EndTable {
        &self.lower
    }

    /// `ω_{i,j,n}` table, rows `i ∈ {n-d+1 .. n-d+e}`.
    pub fn upper(&self) -> &EndTable {
        &self.upper
    }

    /// Copy with every weight family multiplied by `factor`.
    pub fn rescaled(&self, factor: f64) -> Self {
        let mut out = self.clone();
        out.fh.iter_mut().for_each(|w| *w *= factor);
        out.lower.scale_by(factor);
        out.upper.scale_by(factor);
        out.scale /= factor;
        out
    }
}

/// `(-1)^k` as a float.
#[inline]
pub(crate) fn sign(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Floater-Hormann weights `ξ_j^(d) / s_w` and the scale `s_w`.
pub fn fh_weights(nodes: &NodeSet, d: usize) -> Result<(Vec<f64>, f64)> {
    let w = PrecomputedWeights::new(nodes, ExtParams::fh(d))?;
    Ok((w.fh, w.scale))
}

/// End tables `(lower, upper)`, scaled consistently with [`fh_weights`].
pub fn end_weight_tables(nodes: &NodeSet, params: ExtParams) -> Result<(EndTable, EndTable)> {
    let w = PrecomputedWeights::new(nodes, params)?;
    Ok((w.lower, w.upper))
}
