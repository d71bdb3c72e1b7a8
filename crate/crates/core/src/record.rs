//! Plain-text record of an interpolant's defining data.
//!
//! One value per line: `n`, `d`, `e`, then the `n + 1` nodes, then the
//! `n + 1` samples. Reals use shortest round-trip scientific notation, so a
//! record read back reproduces the data bit for bit.

use std::fmt::Write as _;

use crate::error::{InterpError, Result};
use crate::eval::Interpolant;
use crate::nodes::{NodeSet, Samples};
use crate::params::ExtParams;

/// Shortest decimal that parses back to the same `f64`.
pub fn format_real(v: f64) -> String {
    format!("{v:e}")
}

pub fn to_record(interp: &Interpolant) -> String {
    let ExtParams { d, e } = interp.params();
    let mut out = String::new();
    let _ = writeln!(out, "{}", interp.nodes().n());
    let _ = writeln!(out, "{d}");
    let _ = writeln!(out, "{e}");
    for &v in interp.nodes().xs().iter().chain(interp.samples().ys()) {
        let _ = writeln!(out, "{}", format_real(v));
    }
    out
}

pub fn from_record(text: &str) -> Result<Interpolant> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let mut next_int = |what: &str| -> Result<usize> {
        let line = lines
            .next()
            .ok_or_else(|| InterpError::Record(format!("missing {what}")))?;
        line.parse()
            .map_err(|_| InterpError::Record(format!("bad {what}: {line:?}")))
    };
    let n = next_int("n")?;
    let d = next_int("d")?;
    let e = next_int("e")?;
    let reals: Vec<f64> = lines
        .map(|l| {
            l.parse::<f64>()
                .map_err(|_| InterpError::Record(format!("bad real: {l:?}")))
        })
        .collect::<Result<_>>()?;
    if reals.len() != 2 * (n + 1) {
        return Err(InterpError::Record(format!(
            "expected {} reals for n = {n}, found {}",
            2 * (n + 1),
            reals.len()
        )));
    }
    let (xs, ys) = reals.split_at(n + 1);
    let nodes = NodeSet::new(xs.to_vec())?;
    let samples = Samples::new(ys.to_vec())?;
    Interpolant::new(nodes, samples, ExtParams::new(d, e))
}
