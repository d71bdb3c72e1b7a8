//! Parameter sweeps: `(d, e)` scans at fixed `n`, convergence in `n`, and
//! the fixed-configuration Runge table.
//!
//! Cells are independent and run in parallel; results always come back in
//! index order.

use rayon::prelude::*;

use super::chebyshev::ChebyshevInterpolant;
use super::grid::GridSpec;
use super::lebesgue::{lebesgue_constant, LebesgueReport};
use super::metrics::{error_report, ErrorReport, Method};
use super::noise::NoiseSpec;
use super::reference::ReferenceFunction;
use super::spline::CubicSpline;
use crate::error::Result;
use crate::eval::{Interpolant, Scheme};
use crate::nodes::{NodeSet, Samples};
use crate::params::ExtParams;

/// Node values of `f`, perturbed when `noise` is given.
fn sampled(f: &ReferenceFunction, xs: &[f64], noise: Option<NoiseSpec>) -> Vec<f64> {
    let ys: Vec<f64> = xs.iter().map(|&x| f.eval(x)).collect();
    match noise {
        Some(spec) => spec.perturb(&ys),
        None => ys,
    }
}

/// Builds the rational interpolant for `params` on `n` equispaced nodes.
pub fn build_rational(
    f: &ReferenceFunction,
    n: usize,
    params: ExtParams,
    noise: Option<NoiseSpec>,
) -> Result<Interpolant> {
    let nodes = NodeSet::equispaced(f.a(), f.b(), n)?;
    let ys = sampled(f, nodes.xs(), noise);
    Interpolant::new(nodes, Samples::new(ys)?, params)
}

/// One `(d, e)` cell of a scan. `None` marks a parameter pair outside
/// `0 <= e <= d <= n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanCell {
    pub n: usize,
    pub d: usize,
    pub e: usize,
    pub result: Option<(ErrorReport, LebesgueReport)>,
}

impl ScanCell {
    pub fn log10_linf(&self) -> Option<f64> {
        self.result.as_ref().map(|(r, _)| r.linf.log10())
    }

    pub fn log10_lebesgue(&self) -> Option<f64> {
        self.result.as_ref().map(|(_, l)| l.lambda_max.log10())
    }
}

/// Scan output, row-major in `d` then `e`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanMatrix {
    pub n: usize,
    pub d_values: Vec<usize>,
    pub e_values: Vec<usize>,
    pub noise: Option<NoiseSpec>,
    pub cells: Vec<ScanCell>,
}

impl ScanMatrix {
    pub fn cell(&self, d: usize, e: usize) -> Option<&ScanCell> {
        let row = self.d_values.iter().position(|&v| v == d)?;
        let col = self.e_values.iter().position(|&v| v == e)?;
        self.cells.get(row * self.e_values.len() + col)
    }
}

/// Error against `f` and Lebesgue constant for every `(d, e)` pair on `n`
/// equispaced nodes.
pub fn scan_de(
    f: &ReferenceFunction,
    n: usize,
    d_values: &[usize],
    e_values: &[usize],
    noise: Option<NoiseSpec>,
    grid: GridSpec,
) -> Result<ScanMatrix> {
    let nodes = NodeSet::equispaced(f.a(), f.b(), n)?;
    let samples = Samples::new(sampled(f, nodes.xs(), noise))?;
    let pairs: Vec<(usize, usize)> = d_values
        .iter()
        .flat_map(|&d| e_values.iter().map(move |&e| (d, e)))
        .collect();
    let cells = pairs
        .par_iter()
        .map(|&(d, e)| -> Result<ScanCell> {
            let params = ExtParams::new(d, e);
            if params.validate(n).is_err() {
                return Ok(ScanCell { n, d, e, result: None });
            }
            let scheme = Scheme::new(nodes.clone(), params)?;
            let lebesgue = lebesgue_constant(&scheme, GridSpec::lebesgue_default(n, d))?;
            let interp = Interpolant::from_scheme(scheme, samples.clone())?;
            let report = error_report(&interp, f, grid, n, Method::from_params(params));
            Ok(ScanCell {
                n,
                d,
                e,
                result: Some((report, lebesgue)),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanMatrix {
        n,
        d_values: d_values.to_vec(),
        e_values: e_values.to_vec(),
        noise,
        cells,
    })
}

/// One point of a convergence curve; `report` is `None` when the method is
/// not defined for this `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergeRow {
    pub method: Method,
    pub n: usize,
    pub report: Option<ErrorReport>,
    pub lebesgue: Option<f64>,
}

/// Whether `method` can be built with `n` intervals.
pub fn method_defined(method: Method, n: usize) -> bool {
    match method {
        Method::Fh { d } => n >= 1 && d <= n,
        Method::Extended { d, e } => n >= 1 && d <= n && e <= d,
        Method::Chebyshev => n >= 1,
        Method::Spline => n >= 3,
    }
}

/// Error of a single method at a single `n`.
pub fn measure(
    f: &ReferenceFunction,
    method: Method,
    n: usize,
    noise: Option<NoiseSpec>,
    grid: GridSpec,
    with_lebesgue: bool,
) -> Result<ConvergeRow> {
    if !method_defined(method, n) {
        return Ok(ConvergeRow {
            method,
            n,
            report: None,
            lebesgue: None,
        });
    }
    let (report, lebesgue) = match method {
        Method::Fh { .. } | Method::Extended { .. } => {
            let params = method.params().expect("rational method");
            let interp = build_rational(f, n, params, noise)?;
            let lebesgue = if with_lebesgue {
                let g = GridSpec::lebesgue_default(n, params.d);
                Some(lebesgue_constant(interp.scheme(), g)?.lambda_max)
            } else {
                None
            };
            (error_report(&interp, f, grid, n, method), lebesgue)
        }
        Method::Chebyshev => {
            let xs = ChebyshevInterpolant::points(f.a(), f.b(), n);
            let ys = sampled(f, &xs, noise);
            let cheb = ChebyshevInterpolant::from_samples(xs, ys);
            (error_report(&cheb, f, grid, n, method), None)
        }
        Method::Spline => {
            let nodes = NodeSet::equispaced(f.a(), f.b(), n)?;
            let ys = Samples::new(sampled(f, nodes.xs(), noise))?;
            let spline = CubicSpline::new(nodes, &ys)?;
            (error_report(&spline, f, grid, n, method), None)
        }
    };
    Ok(ConvergeRow {
        method,
        n,
        report: Some(report),
        lebesgue,
    })
}

/// Error curves in `n` for each method; rows ordered by method, then `n`.
pub fn converge_n(
    f: &ReferenceFunction,
    methods: &[Method],
    n_values: &[usize],
    noise: Option<NoiseSpec>,
    grid: GridSpec,
    with_lebesgue: bool,
) -> Result<Vec<ConvergeRow>> {
    let jobs: Vec<(Method, usize)> = methods
        .iter()
        .flat_map(|&m| n_values.iter().map(move |&n| (m, n)))
        .collect();
    jobs.par_iter()
        .map(|&(m, n)| measure(f, m, n, noise, grid, with_lebesgue))
        .collect()
}

/// Node counts and Floater-Hormann degrees of the Runge comparison table.
pub const TABLE1_CONFIG: [(usize, usize); 5] = [(10, 0), (20, 1), (40, 3), (80, 7), (160, 10)];

/// One row: Floater-Hormann at its listed degree next to the extended
/// interpolant at `(min(14, n), 4)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Table1Row {
    pub n: usize,
    pub fh: ErrorReport,
    pub ext: ErrorReport,
}

impl Table1Row {
    pub fn fh_d(&self) -> usize {
        self.fh.method.params().map_or(0, |p| p.d)
    }

    pub fn ext_params(&self) -> ExtParams {
        self.ext.method.params().expect("rational method")
    }
}

/// Runge's function on `[-5, 5]` for every row of [`TABLE1_CONFIG`].
pub fn table1(grid: GridSpec) -> Result<Vec<Table1Row>> {
    let f = ReferenceFunction::runge(-5.0, 5.0);
    TABLE1_CONFIG
        .par_iter()
        .map(|&(n, fh_d)| {
            let fh_params = ExtParams::fh(fh_d);
            let ext_params = ExtParams::new(n.min(14), 4);
            let fh = build_rational(&f, n, fh_params, None)?;
            let ext = build_rational(&f, n, ext_params, None)?;
            Ok(Table1Row {
                n,
                fh: error_report(&fh, &f, grid, n, Method::from_params(fh_params)),
                ext: error_report(&ext, &f, grid, n, Method::from_params(ext_params)),
            })
        })
        .collect()
}
