//! Parameter sweeps over the relaxation parameter or the cell size.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::SolverError;
use crate::harness::config::{Case, Oracle};
use crate::harness::norms::ErrorMeasure;
use crate::state::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepAxis {
    Epsilon,
    Dx,
}

impl SweepAxis {
    pub fn as_str(&self) -> &'static str {
        match self {
            SweepAxis::Epsilon => "epsilon",
            SweepAxis::Dx => "dx",
        }
    }
}

impl std::str::FromStr for SweepAxis {
    type Err = SolverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "eps" | "epsilon" => Ok(SweepAxis::Epsilon),
            "dx" => Ok(SweepAxis::Dx),
            other => Err(SolverError::config(format!("unknown sweep axis '{other}' (expected eps or dx)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub param: f64,
    pub l2: Option<f64>,
    pub linf: Option<f64>,
    pub runtime: f64,
    /// Observed order against the next coarser row (cell-size sweeps only).
    pub rate: Option<f64>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    pub axis: SweepAxis,
    pub rows: Vec<SweepRow>,
}

/// `ln(e_fine / e_coarse) / ln(h_fine / h_coarse)`.
pub fn convergence_rate(h_fine: f64, e_fine: f64, h_coarse: f64, e_coarse: f64) -> f64 {
    (e_fine / e_coarse).ln() / (h_fine / h_coarse).ln()
}

impl SweepResult {
    fn assemble(axis: SweepAxis, mut rows: Vec<SweepRow>) -> Self {
        rows.sort_by(|a, b| a.param.total_cmp(&b.param));
        if axis == SweepAxis::Dx {
            for i in 0..rows.len().saturating_sub(1) {
                let (fine, coarse) = (&rows[i], &rows[i + 1]);
                rows[i].rate = match (fine.l2, coarse.l2) {
                    (Some(ef), Some(ec)) if ef > 0.0 && ec > 0.0 && fine.param < coarse.param => {
                        Some(convergence_rate(fine.param, ef, coarse.param, ec))
                    }
                    _ => None,
                };
            }
        }
        SweepResult { axis, rows }
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("{},l2,linf,rate,runtime_s,error\n", self.axis.as_str());
        let opt = |v: Option<f64>| v.map(crate::harness::output::fmt_f64).unwrap_or_default();
        for r in &self.rows {
            let err = r.error.as_deref().unwrap_or("").replace([',', '\n', '\r'], " ");
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                crate::harness::output::fmt_f64(r.param),
                opt(r.l2),
                opt(r.linf),
                opt(r.rate),
                crate::harness::output::fmt_f64(r.runtime),
                err
            ));
        }
        out
    }

    /// Gnuplot script drawing both error norms against the parameter on
    /// log-log axes, reading `csv_name` from the script's directory.
    pub fn gnuplot_script(&self, csv_name: &str, title: &str) -> String {
        let xlabel = match self.axis {
            SweepAxis::Epsilon => "epsilon",
            SweepAxis::Dx => "dx",
        };
        let mut s = String::new();
        s.push_str("set datafile separator ','\n");
        s.push_str("set logscale xy\n");
        s.push_str("set format x '%.0e'\nset format y '%.0e'\n");
        s.push_str(&format!("set xlabel '{xlabel}'\nset ylabel 'error'\n"));
        s.push_str(&format!("set title '{}'\n", title.replace('\'', "")));
        s.push_str("set key top left\nset grid\n");
        s.push_str(&format!(
            "plot '{csv_name}' using 1:2 skip 1 with linespoints title 'L2', \\\n     '{csv_name}' using 1:3 skip 1 with linespoints title 'Linf'\n"
        ));
        if self.axis == SweepAxis::Dx {
            if let Some(r) = self.rows.iter().find(|r| r.l2.is_some()) {
                let c = r.l2.unwrap_or(1.0) / r.param;
                s.push_str(&format!(
                    "replot {} * x with lines dashtype 2 title 'order 1'\n",
                    crate::harness::output::fmt_f64(c)
                ));
            }
        }
        s
    }
}

fn run_and_measure(case: &Case, reference: Result<Field, SolverError>, measure: &ErrorMeasure) -> SweepRow {
    let start = Instant::now();
    let result = case.run().and_then(|out| {
        let reference = reference?;
        Ok((measure.l2(&out, &reference)?, measure.linf(&out, &reference)?))
    });
    let runtime = start.elapsed().as_secs_f64();
    match result {
        Ok((l2, linf)) => SweepRow { param: 0.0, l2: Some(l2), linf: Some(linf), runtime, rate: None, error: None },
        Err(e) => SweepRow { param: 0.0, l2: None, linf: None, runtime, rate: None, error: Some(e.to_string()) },
    }
}

/// One run per relaxation parameter, each measured against `oracle`.
pub fn epsilon_sweep(case: &Case, values: &[f64], oracle: &Oracle, measure: &ErrorMeasure) -> SweepResult {
    // a fine-mesh reference depends on epsilon but not on the scheme under test
    let refs: HashMap<u64, Result<Field, SolverError>> = values
        .par_iter()
        .map(|&eps| {
            let r = case.clone().with_eps(eps).and_then(|c| oracle.reference(&c));
            (eps.to_bits(), r)
        })
        .collect();
    let rows = values
        .par_iter()
        .map(|&eps| {
            let mut row = match case.clone().with_eps(eps) {
                Ok(c) => run_and_measure(&c, refs[&eps.to_bits()].clone(), measure),
                Err(e) => {
                    SweepRow { param: 0.0, l2: None, linf: None, runtime: 0.0, rate: None, error: Some(e.to_string()) }
                }
            };
            row.param = eps;
            row
        })
        .collect();
    SweepResult::assemble(SweepAxis::Epsilon, rows)
}

/// One run per cell size at the case's epsilon.
pub fn refinement_sweep(case: &Case, dxs: &[f64], oracle: &Oracle, measure: &ErrorMeasure) -> SweepResult {
    // the fine-mesh reference is shared by every row and restricted per row
    let fine = match oracle {
        Oracle::FineMesh { cells, scheme, cfl } if !dxs.is_empty() => Some(
            case.clone()
                .with_cells(*cells)
                .map(|mut c| {
                    c.scheme = *scheme;
                    c.cfl = *cfl;
                    c
                })
                .and_then(|c| c.run()),
        ),
        _ => None,
    };
    let rows = dxs
        .par_iter()
        .map(|&dx| {
            let mut row = match case.clone().with_dx(dx) {
                Ok(c) => {
                    let reference = match (&fine, oracle) {
                        (Some(f), _) => f.clone().and_then(|f| crate::harness::norms::restrict(&f, &c.grid)),
                        (None, o) => o.reference(&c),
                    };
                    run_and_measure(&c, reference, measure)
                }
                Err(e) => {
                    SweepRow { param: 0.0, l2: None, linf: None, runtime: 0.0, rate: None, error: Some(e.to_string()) }
                }
            };
            row.param = dx;
            row
        })
        .collect();
    SweepResult::assemble(SweepAxis::Dx, rows)
}
