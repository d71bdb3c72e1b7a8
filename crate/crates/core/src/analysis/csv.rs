//! CSV rendering. Reals are written in shortest round-trip form; missing
//! cells are the literal `NA`.

use std::fmt::Write as _;

use super::metrics::Method;
use super::noise::NoiseSpec;
use super::sweep::{ConvergeRow, ScanMatrix, Table1Row};
use crate::record::format_real;

pub const NA: &str = "NA";

pub const RESULT_HEADER: &str = "method,n,d,e,linf,l1,lebesgue,seed,sigma";

pub const TABLE1_HEADER: &str = "n,fh_d,fh_linf,fh_l1,d,e,linf,l1";

fn real_or_na(v: Option<f64>) -> String {
    v.map_or_else(|| NA.to_string(), format_real)
}

fn noise_fields(noise: Option<NoiseSpec>) -> (String, String) {
    match noise {
        Some(spec) => (spec.seed.to_string(), format_real(spec.sigma)),
        None => (NA.to_string(), format_real(0.0)),
    }
}

fn degree_fields(method: Method) -> (String, String) {
    match method.params() {
        Some(p) => (p.d.to_string(), p.e.to_string()),
        None => (NA.to_string(), NA.to_string()),
    }
}

pub fn scan_csv(m: &ScanMatrix) -> String {
    let (seed, sigma) = noise_fields(m.noise);
    let mut out = String::new();
    let _ = writeln!(out, "{RESULT_HEADER}");
    for cell in &m.cells {
        let (linf, l1, leb) = match &cell.result {
            Some((r, l)) => (Some(r.linf), Some(r.l1), Some(l.lambda_max)),
            None => (None, None, None),
        };
        let _ = writeln!(
            out,
            "ext,{},{},{},{},{},{},{seed},{sigma}",
            cell.n,
            cell.d,
            cell.e,
            real_or_na(linf),
            real_or_na(l1),
            real_or_na(leb),
        );
    }
    out
}

pub fn converge_csv(rows: &[ConvergeRow], noise: Option<NoiseSpec>) -> String {
    let (seed, sigma) = noise_fields(noise);
    let mut out = String::new();
    let _ = writeln!(out, "{RESULT_HEADER}");
    for row in rows {
        let (d, e) = degree_fields(row.method);
        let _ = writeln!(
            out,
            "{},{},{d},{e},{},{},{},{seed},{sigma}",
            row.method.tag(),
            row.n,
            real_or_na(row.report.as_ref().map(|r| r.linf)),
            real_or_na(row.report.as_ref().map(|r| r.l1)),
            real_or_na(row.lebesgue),
        );
    }
    out
}

pub fn table1_csv(rows: &[Table1Row]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{TABLE1_HEADER}");
    for row in rows {
        let p = row.ext_params();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            row.n,
            row.fh_d(),
            format_real(row.fh.linf),
            format_real(row.fh.l1),
            p.d,
            p.e,
            format_real(row.ext.linf),
            format_real(row.ext.l1),
        );
    }
    out
}

/// `x,value` pairs.
pub fn eval_csv(points: &[(f64, f64)]) -> String {
    let mut out = String::from("x,value\n");
    for &(x, v) in points {
        let _ = writeln!(out, "{},{}", format_real(x), format_real(v));
    }
    out
}

/// `x,lambda` pairs.
pub fn lebesgue_csv(points: &[(f64, f64)]) -> String {
    let mut out = String::from("x,lambda\n");
    for &(x, v) in points {
        let _ = writeln!(out, "{},{}", format_real(x), format_real(v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::grid::GridSpec;
    use crate::analysis::reference::ReferenceFunction;
    use crate::analysis::sweep::scan_de;

    #[test]
    fn scan_rectangular_with_na() {
        let f = ReferenceFunction::runge(-5.0, 5.0);
        let m = scan_de(&f, 6, &[1, 2], &[0, 1, 2], None, GridSpec::uniform(100)).unwrap();
        let text = scan_csv(&m);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], RESULT_HEADER);
        assert_eq!(lines.len(), 7);
        assert!(lines.iter().all(|l| l.split(',').count() == 9));
        assert!(lines[3].starts_with("ext,6,1,2,NA,NA,NA,NA,0e0"));
    }

    #[test]
    fn eval_pairs() {
        assert_eq!(eval_csv(&[(0.5, 1.0)]), "x,value\n5e-1,1e0\n");
    }
}
