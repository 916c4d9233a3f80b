//! Approximate Riemann solver whose intermediate state accounts for the
//! relaxation source, written in its flux form.
//!
//! Fluxes are evaluated on the states `S_dt W` obtained by solving the
//! source ODE exactly over the whole step. The conserved block is updated
//! with an HLL flux on those states; the relaxing block uses damped HLL
//! coefficients plus the correction `-(e^(-dt/eps) - 1) (Q(W1^{n+1}) - W2^n)`
//! that comes from the interface closure `{Q}` and makes the `eps -> 0`
//! limit land exactly on the equilibrium manifold.

use crate::boundary::apply_neumann_ghosts;
use crate::error::SolverError;
use crate::model::{decay_factor, decay_minus_one, relaxation_weight, RelaxationModel};
use crate::state::{Field, State};

/// Left and right wave speeds of the three-state solver, `lambda_l < 0 < lambda_r`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArsSpeeds {
    lambda_l: f64,
    lambda_r: f64,
}

impl ArsSpeeds {
    pub fn new(lambda_l: f64, lambda_r: f64) -> Result<Self, SolverError> {
        if !(lambda_l < 0.0 && 0.0 < lambda_r) || !lambda_l.is_finite() || !lambda_r.is_finite() {
            return Err(SolverError::DegenerateSpeeds { lambda_l, lambda_r });
        }
        Ok(ArsSpeeds { lambda_l, lambda_r })
    }

    /// `(-speed, speed)`.
    pub fn symmetric(speed: f64) -> Result<Self, SolverError> {
        Self::new(-speed, speed)
    }

    pub fn lambda_l(&self) -> f64 {
        self.lambda_l
    }

    pub fn lambda_r(&self) -> f64 {
        self.lambda_r
    }

    pub fn spread(&self) -> f64 {
        self.lambda_r - self.lambda_l
    }

    pub fn max_abs(&self) -> f64 {
        self.lambda_l.abs().max(self.lambda_r.abs())
    }
}

/// Intermediate state `W*` of the solver between `wl` and `wr`, for a given
/// source closure `q_brace` (length `n - k`).
#[allow(clippy::too_many_arguments)]
pub fn ars_intermediate_state<M: RelaxationModel + ?Sized>(
    wl: &State,
    wr: &State,
    speeds: &ArsSpeeds,
    dt: f64,
    dx: f64,
    eps: f64,
    q_brace: &State,
    model: &M,
) -> State {
    let (n, k) = (model.n(), model.k());
    let (ll, lr) = (speeds.lambda_l, speeds.lambda_r);
    let spread = speeds.spread();
    let fl = model.flux(&model.exact_source_solution(wl, dt, eps));
    let fr = model.flux(&model.exact_source_solution(wr, dt, eps));
    let em1 = decay_minus_one(dt, eps);
    let weight = relaxation_weight(dt, eps);
    let geometric = em1 * dx / (dt * spread);

    let mut star = State::zeros(n);
    for i in 0..k {
        star[i] = (lr * wr[i] - ll * wl[i] - (fr[i] - fl[i])) / spread;
    }
    for i in k..n {
        let mean = 0.5 * (wl[i] + wr[i]);
        star[i] = geometric * (mean - q_brace[i - k])
            + weight * (fr[i] - fl[i]) / spread
            + (lr * wr[i] - ll * wl[i]) / spread;
    }
    star
}

/// Interface source closure `{Q}` for cell `j`, assuming the same speeds on
/// both of its interfaces. `w1_next` carries the already updated conserved
/// block of cell `j` in its first `k` components.
#[allow(clippy::too_many_arguments)]
pub fn q_brace<M: RelaxationModel + ?Sized>(
    w_prev: &State,
    w: &State,
    w_next: &State,
    w1_next: &State,
    speeds: &ArsSpeeds,
    dt: f64,
    dx: f64,
    model: &M,
) -> Result<State, SolverError> {
    let spread = speeds.spread();
    if !(spread > 0.0) {
        return Err(SolverError::DegenerateSpeeds { lambda_l: speeds.lambda_l, lambda_r: speeds.lambda_r });
    }
    let (ll, lr) = (speeds.lambda_l, speeds.lambda_r);
    let k = model.k();
    let q = model.equilibrium_map(w1_next);
    let mut out = State::zeros(q.len());
    for i in 0..q.len() {
        let (a, b, c) = (w_prev[k + i], w[k + i], w_next[k + i]);
        out[i] = q[i] - b + lr / spread * 0.5 * (a + b) - ll / spread * 0.5 * (c + b)
            + dt / dx * lr * ll / spread * (a - 2.0 * b + c);
    }
    Ok(out)
}

/// Interface fluxes for every adjacent pair of `cells`.
fn interface_fluxes<M: RelaxationModel + ?Sized>(
    cells: &[State],
    speeds: &ArsSpeeds,
    dt: f64,
    eps: f64,
    model: &M,
) -> Vec<State> {
    let (n, k) = (model.n(), model.k());
    let (ll, lr) = (speeds.lambda_l, speeds.lambda_r);
    let spread = speeds.spread();
    let diffusion = lr * ll / spread;
    let decay = decay_factor(dt, eps);
    let weight = relaxation_weight(dt, eps);

    let relaxed_flux: Vec<State> = cells.iter().map(|w| model.flux(&model.exact_source_solution(w, dt, eps))).collect();

    cells
        .windows(2)
        .zip(relaxed_flux.windows(2))
        .map(|(w, f)| {
            let mut flux = State::zeros(n);
            for i in 0..k {
                flux[i] = diffusion * (w[1][i] - w[0][i]) - (ll * f[1][i] - lr * f[0][i]) / spread;
            }
            for i in k..n {
                flux[i] = decay * diffusion * (w[1][i] - w[0][i]) + weight * (ll * f[1][i] - lr * f[0][i]) / spread;
            }
            flux
        })
        .collect()
}

pub fn ars_step<M: RelaxationModel + ?Sized>(field: &Field, dt: f64, eps: f64, speeds: &ArsSpeeds, model: &M) -> Field {
    let (n, k) = (model.n(), model.k());
    let ratio = dt / field.grid.dx();
    let em1 = decay_minus_one(dt, eps);

    let extended = apply_neumann_ghosts(field, 1);
    let fluxes = interface_fluxes(&extended, speeds, dt, eps, model);

    let data = field
        .data
        .iter()
        .zip(fluxes.windows(2))
        .map(|(w, f)| {
            let mut next = *w - ratio * (f[1] - f[0]);
            let q = model.equilibrium_map(&next);
            for i in k..n {
                next[i] -= em1 * (q[i - k] - w[i]);
            }
            next
        })
        .collect();

    Field { grid: field.grid, data, time: field.time + dt }
}
