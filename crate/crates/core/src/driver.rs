//! Time marching: repeat CFL step selection and one scheme step until the
//! final time, checking admissibility after every full step.

use crate::error::SolverError;
use crate::model::RelaxationModel;
use crate::schemes::advance;
use crate::state::Field;
use crate::timestep::{dt_for_speed, TimeControls};

/// What the observer sees after each accepted step.
#[derive(Debug)]
pub struct StepInfo<'a> {
    pub step: usize,
    pub dt: f64,
    pub speed: f64,
    pub before: &'a Field,
    pub after: &'a Field,
}

fn check_field<M: RelaxationModel + ?Sized>(field: &Field, model: &M) -> Result<(), SolverError> {
    for (cell, w) in field.data.iter().enumerate() {
        if let Err(v) = model.check_state(w) {
            return Err(SolverError::Inadmissible {
                time: field.time,
                cell,
                component: v.component,
                value: v.value,
                reason: v.reason,
            });
        }
    }
    Ok(())
}

fn validate_run<M: RelaxationModel + ?Sized>(model: &M, ic: &Field, eps: f64) -> Result<(), SolverError> {
    if !(eps > 0.0) {
        return Err(SolverError::config(format!("relaxation parameter must be positive, got {eps}")));
    }
    if let Some((cell, w)) = ic.data.iter().enumerate().find(|(_, w)| w.len() != model.n()) {
        return Err(SolverError::config(format!(
            "cell {cell} has {} components, model '{}' expects {}",
            w.len(),
            model.name(),
            model.n()
        )));
    }
    check_field(ic, model)
}

pub fn run<M: RelaxationModel + ?Sized>(
    model: &M,
    ic: &Field,
    controls: &TimeControls,
    eps: f64,
) -> Result<Field, SolverError> {
    run_observed(model, ic, controls, eps, |_| {})
}

/// Like [`run`], calling `observer` after every accepted step.
pub fn run_observed<M, F>(
    model: &M,
    ic: &Field,
    controls: &TimeControls,
    eps: f64,
    mut observer: F,
) -> Result<Field, SolverError>
where
    M: RelaxationModel + ?Sized,
    F: FnMut(&StepInfo<'_>),
{
    validate_run(model, ic, eps)?;
    let t_final = controls.t_final();
    let dx = ic.grid.dx();
    let mut field = ic.clone();
    let mut step = 0;
    while field.time < t_final {
        let speed = model.max_wave_speed(&field.data);
        let dt = dt_for_speed(speed, dx, field.time, controls)?;
        let mut next = advance(controls.scheme(), &field, dt, eps, speed, model)?;
        // the clipped last step lands exactly, independent of accumulated round-off
        if dt >= t_final - field.time {
            next.time = t_final;
        }
        check_field(&next, model)?;
        step += 1;
        observer(&StepInfo { step, dt, speed, before: &field, after: &next });
        field = next;
    }
    Ok(field)
}
