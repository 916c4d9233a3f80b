//! Reference scheme: explicit HLL convection followed by an implicit
//! backward-Euler source step.

use crate::boundary::apply_neumann_ghosts;
use crate::model::RelaxationModel;
use crate::schemes::ars::ArsSpeeds;
use crate::state::{Field, State};

/// `(lambda_r f(wl) - lambda_l f(wr) + lambda_r lambda_l (wr - wl)) / (lambda_r - lambda_l)`.
pub fn hll_flux<M: RelaxationModel + ?Sized>(wl: &State, wr: &State, speeds: &ArsSpeeds, model: &M) -> State {
    hll_from_fluxes(wl, wr, &model.flux(wl), &model.flux(wr), speeds)
}

#[inline]
fn hll_from_fluxes(wl: &State, wr: &State, fl: &State, fr: &State, speeds: &ArsSpeeds) -> State {
    let (ll, lr) = (speeds.lambda_l(), speeds.lambda_r());
    (1.0 / speeds.spread()) * (lr * *fl - ll * *fr + lr * ll * (*wr - *wl))
}

/// Backward-Euler source step; closed form because `Q` depends only on
/// the conserved block, which the source leaves untouched.
#[inline]
pub fn implicit_source<M: RelaxationModel + ?Sized>(w: &State, dt: f64, eps: f64, model: &M) -> State {
    let k = model.k();
    let theta = dt / eps;
    let q = model.equilibrium_map(w);
    let mut out = *w;
    for i in 0..q.len() {
        out[k + i] = q[i] + (w[k + i] - q[i]) / (1.0 + theta);
    }
    out
}

pub fn splitting_step<M: RelaxationModel + ?Sized>(
    field: &Field,
    dt: f64,
    eps: f64,
    speeds: &ArsSpeeds,
    model: &M,
) -> Field {
    let ratio = dt / field.grid.dx();
    let extended = apply_neumann_ghosts(field, 1);
    let fluxes: Vec<State> = extended.iter().map(|w| model.flux(w)).collect();
    let interface: Vec<State> = extended
        .windows(2)
        .zip(fluxes.windows(2))
        .map(|(w, f)| hll_from_fluxes(&w[0], &w[1], &f[0], &f[1], speeds))
        .collect();
    let data = field
        .data
        .iter()
        .zip(interface.windows(2))
        .map(|(w, f)| implicit_source(&(*w - ratio * (f[1] - f[0])), dt, eps, model))
        .collect();
    Field { grid: field.grid, data, time: field.time + dt }
}
