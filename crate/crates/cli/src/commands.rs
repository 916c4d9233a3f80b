use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use relaxsolve_core::harness::output::{distances, distances_csv, profile_csv};
use relaxsolve_core::harness::{epsilon_sweep, refinement_sweep, Oracle, SweepAxis};
use relaxsolve_core::{RelaxationModel, SchemeKind};

use crate::io::{load, write_atomic};

const DEFAULT_PROFILE: &str = "profile.csv";
const DEFAULT_SWEEP: &str = "sweep";
const DEFAULT_COMPARE: &str = "compare.csv";

pub fn run(config: &Path, out_dir: &Path) -> anyhow::Result<Vec<PathBuf>> {
    let (cfg, case) = load(config)?;
    let field = case.run().context("simulation aborted")?;
    let name = cfg.output.profile.as_deref().unwrap_or(DEFAULT_PROFILE);
    Ok(vec![write_atomic(out_dir, name, &profile_csv(&field, &case.model))?])
}

pub fn sweep(config: &Path, axis: SweepAxis, values: &[f64], out_dir: &Path) -> anyhow::Result<Vec<PathBuf>> {
    let (cfg, case) = load(config)?;
    if values.is_empty() {
        bail!("--values needs at least one entry");
    }
    let oracle = cfg.oracle(&case)?;
    let measure = cfg.measure();
    let result = match axis {
        SweepAxis::Epsilon => epsilon_sweep(&case, values, &oracle, &measure),
        SweepAxis::Dx => refinement_sweep(&case, values, &oracle, &measure),
    };
    let base = cfg.output.sweep.as_deref().unwrap_or(DEFAULT_SWEEP);
    let csv_name = format!("{base}.csv");
    let title = format!("{} {} {}", case.model.name(), case.scheme, axis.as_str());
    Ok(vec![
        write_atomic(out_dir, &csv_name, &result.to_csv())?,
        write_atomic(out_dir, &format!("{base}.gp"), &result.gnuplot_script(&csv_name, &title))?,
    ])
}

pub fn compare(
    config: &Path,
    other: &Path,
    reference_cells: Option<usize>,
    out_dir: &Path,
) -> anyhow::Result<Vec<PathBuf>> {
    let (cfg_a, a) = load(config)?;
    let (cfg_b, b) = load(other)?;
    if cfg_a.model != cfg_b.model || cfg_a.initial != cfg_b.initial {
        bail!("{} and {} describe different models or initial conditions", config.display(), other.display());
    }
    if a.grid != b.grid || a.t_final != b.t_final || a.eps != b.eps {
        bail!("{} and {} must share the grid, final time and relaxation parameter", config.display(), other.display());
    }
    let oracle = match reference_cells {
        Some(cells) => Oracle::FineMesh { cells, scheme: SchemeKind::Splitting, cfl: a.cfl },
        None => cfg_a.oracle(&a)?,
    };
    let reference = oracle.reference(&a).context("computing the reference solution")?;
    let (run_a, run_b) = rayon::join(|| a.run(), || b.run());
    let label = |p: &Path| p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let mut rows = distances(&label(config), &run_a.context("first run aborted")?, &reference, &a.model)?;
    rows.extend(distances(&label(other), &run_b.context("second run aborted")?, &reference, &b.model)?);
    let name = cfg_a.output.compare.as_deref().unwrap_or(DEFAULT_COMPARE);
    Ok(vec![write_atomic(out_dir, name, &distances_csv(&rows))?])
}
