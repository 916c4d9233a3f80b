//! The three time-stepping schemes.

pub mod ars;
pub mod splitting;
pub mod staggered;

pub use ars::{ars_intermediate_state, ars_step, q_brace, ArsSpeeds};
pub use splitting::{hll_flux, implicit_source, splitting_step};
pub use staggered::{staggered_half_step, staggered_step, staggered_step_detailed, HalfStepField};

use crate::error::SolverError;
use crate::model::RelaxationModel;
use crate::state::Field;
use crate::timestep::SchemeKind;

/// Advances `field` by `dt` with the selected scheme; `speed` is the wave
/// speed bound the step was sized with, used as symmetric solver speeds.
pub fn advance<M: RelaxationModel + ?Sized>(
    kind: SchemeKind,
    field: &Field,
    dt: f64,
    eps: f64,
    speed: f64,
    model: &M,
) -> Result<Field, SolverError> {
    Ok(match kind {
        SchemeKind::Staggered => staggered_step(field, dt, eps, model),
        SchemeKind::Ars => ars_step(field, dt, eps, &ArsSpeeds::symmetric(speed)?, model),
        SchemeKind::Splitting => splitting_step(field, dt, eps, &ArsSpeeds::symmetric(speed)?, model),
    })
}
