//! Conditioning and accuracy measurements: Lebesgue functions and
//! constants, L∞/L1 errors against reference functions, polynomial and
//! spline baselines, seeded noise, and parameter sweeps.

pub mod chebyshev;
pub mod csv;
pub mod grid;
pub mod lebesgue;
pub mod metrics;
pub mod noise;
pub mod reference;
pub mod spline;
pub mod sweep;

pub use chebyshev::ChebyshevInterpolant;
pub use grid::GridSpec;
pub use lebesgue::{lebesgue_constant, lebesgue_constant_for, lebesgue_function, LebesgueReport};
pub use metrics::{error_report, Approximant, ErrorReport, Method};
pub use noise::{add_noise, NoiseSpec};
pub use reference::{FunctionKind, PiecewisePolynomial, ReferenceFunction};
pub use spline::CubicSpline;
pub use sweep::{converge_n, scan_de, table1, ConvergeRow, ScanCell, ScanMatrix, Table1Row};
