//! Time-step selection under the schemes' CFL conditions.

use serde::{Deserialize, Serialize};

use crate::error::SolverError;
use crate::model::RelaxationModel;
use crate::state::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SchemeKind {
    Staggered,
    Ars,
    Splitting,
}

impl SchemeKind {
    pub const ALL: [SchemeKind; 3] = [SchemeKind::Staggered, SchemeKind::Ars, SchemeKind::Splitting];

    pub fn as_str(&self) -> &'static str {
        match self {
            SchemeKind::Staggered => "staggered",
            SchemeKind::Ars => "ars",
            SchemeKind::Splitting => "splitting",
        }
    }

    /// Fraction of `dx / max_speed` the scheme tolerates at CFL number 1.
    pub fn stability_bound(&self) -> f64 {
        match self {
            SchemeKind::Ars => 0.5,
            SchemeKind::Staggered | SchemeKind::Splitting => 1.0,
        }
    }
}

impl std::fmt::Display for SchemeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for SchemeKind {
    type Err = SolverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "staggered" => Ok(SchemeKind::Staggered),
            "ars" => Ok(SchemeKind::Ars),
            "splitting" => Ok(SchemeKind::Splitting),
            other => Err(SolverError::config(format!("unknown scheme '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimeControls {
    cfl: f64,
    t_final: f64,
    scheme: SchemeKind,
}

impl TimeControls {
    /// `0 < cfl <= 1`, `t_final >= 0`. A zero final time is accepted and
    /// makes a run return its initial data.
    pub fn new(cfl: f64, t_final: f64, scheme: SchemeKind) -> Result<Self, SolverError> {
        if !(cfl > 0.0 && cfl <= 1.0) {
            return Err(SolverError::config(format!("CFL number must lie in (0, 1], got {cfl}")));
        }
        if !(t_final.is_finite() && t_final >= 0.0) {
            return Err(SolverError::config(format!("final time must be finite and >= 0, got {t_final}")));
        }
        Ok(TimeControls { cfl, t_final, scheme })
    }

    pub fn cfl(&self) -> f64 {
        self.cfl
    }

    pub fn t_final(&self) -> f64 {
        self.t_final
    }

    pub fn scheme(&self) -> SchemeKind {
        self.scheme
    }
}

/// CFL step for a given maximal wave speed, clipped to land on `t_final`.
pub fn dt_for_speed(speed: f64, dx: f64, time: f64, controls: &TimeControls) -> Result<f64, SolverError> {
    if !(speed.is_finite() && speed > 0.0) {
        return Err(SolverError::config(format!("maximal wave speed must be positive and finite, got {speed}")));
    }
    let dt = controls.cfl * controls.scheme.stability_bound() * dx / speed;
    let remaining = controls.t_final - time;
    Ok(dt.min(remaining))
}

pub fn compute_dt<M: RelaxationModel + ?Sized>(
    field: &Field,
    model: &M,
    controls: &TimeControls,
) -> Result<f64, SolverError> {
    dt_for_speed(model.max_wave_speed(&field.data), field.grid.dx(), field.time, controls)
}
