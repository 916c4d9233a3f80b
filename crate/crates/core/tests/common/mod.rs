//! Independent reference implementations shared by the integration tests.
//!
//! Nothing here calls into the schemes under test; only model fluxes,
//! sources and equilibrium maps are reused.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use relaxsolve_core::models::{ChaplyginModel, JinXinModel, TwoPhaseModel};
use relaxsolve_core::{Field, Grid1D, RelaxationModel, State};

pub fn with_ghosts(cells: &[State]) -> Vec<State> {
    let mut v = Vec::with_capacity(cells.len() + 2);
    v.push(cells[0]);
    v.extend_from_slice(cells);
    v.push(cells[cells.len() - 1]);
    v
}

fn scalar_ghosts(u: &[f64]) -> Vec<f64> {
    let mut v = Vec::with_capacity(u.len() + 2);
    v.push(u[0]);
    v.extend_from_slice(u);
    v.push(u[u.len() - 1]);
    v
}

fn conservative_update(field: &Field, dt: f64, flux: impl Fn(&State, &State) -> State) -> Field {
    let ext = with_ghosts(&field.data);
    let r = dt / field.grid.dx();
    let f: Vec<State> = ext.windows(2).map(|p| flux(&p[0], &p[1])).collect();
    let data = (0..field.n_cells()).map(|j| field.data[j] - r * (f[j + 1] - f[j])).collect();
    Field { grid: field.grid, data, time: field.time + dt }
}

/// Homogeneous FORCE step: mean of the Lax-Friedrichs and Richtmyer fluxes.
pub fn force_step<M: RelaxationModel>(field: &Field, dt: f64, model: &M) -> Field {
    let dx = field.grid.dx();
    conservative_update(field, dt, |a, b| {
        let (fa, fb) = (model.flux(a), model.flux(b));
        let lf = 0.5 * (fa + fb) - (0.5 * dx / dt) * (*b - *a);
        let predictor = 0.5 * (*a + *b) - (0.5 * dt / dx) * (fb - fa);
        let ri = model.flux(&predictor);
        0.5 * (lf + ri)
    })
}

/// Homogeneous HLL step with fixed speeds.
pub fn hll_step<M: RelaxationModel>(field: &Field, dt: f64, sl: f64, sr: f64, model: &M) -> Field {
    conservative_update(field, dt, |a, b| {
        let (fa, fb) = (model.flux(a), model.flux(b));
        let star = (1.0 / (sr - sl)) * (sr * *b - sl * *a - (fb - fa));
        // flux through the interface from the left fan: f_l + s_l (W* - W_l)
        fa + sl * (star - *a)
    })
}

pub fn burgers(u: f64) -> f64 {
    0.5 * u * u
}

/// Rusanov (local Lax-Friedrichs with global speed) on Burgers.
pub fn rusanov_burgers(u: &[f64], dt: f64, dx: f64, lambda: f64) -> Vec<f64> {
    let e = scalar_ghosts(u);
    (1..=u.len())
        .map(|j| {
            let lap = e[j + 1] - 2.0 * e[j] + e[j - 1];
            e[j] - dt / dx * (-0.5 * lambda * lap + 0.5 * (burgers(e[j + 1]) - burgers(e[j - 1])))
        })
        .collect()
}

/// FORCE on Burgers.
pub fn force_burgers(u: &[f64], dt: f64, dx: f64) -> Vec<f64> {
    let e = scalar_ghosts(u);
    let flux = |a: f64, b: f64| {
        let lf = 0.5 * (burgers(a) + burgers(b)) - 0.5 * dx / dt * (b - a);
        let ri = burgers(0.5 * (a + b) - 0.5 * dt / dx * (burgers(b) - burgers(a)));
        0.5 * (lf + ri)
    };
    (1..=u.len()).map(|j| e[j] - dt / dx * (flux(e[j], e[j + 1]) - flux(e[j - 1], e[j]))).collect()
}

/// Classical RK4 on `dW/dt = R(W) / eps`, reporting the state after every
/// `report_every` substeps.
pub fn rk4_source<M: RelaxationModel>(
    model: &M,
    w0: &State,
    t: f64,
    eps: f64,
    substeps: usize,
    report_every: usize,
) -> Vec<(f64, State)> {
    let h = t / substeps as f64;
    let rhs = |w: &State| (1.0 / eps) * model.source(w);
    let mut w = *w0;
    let mut out = vec![(0.0, w)];
    for i in 1..=substeps {
        let k1 = rhs(&w);
        let k2 = rhs(&(w + (0.5 * h) * k1));
        let k3 = rhs(&(w + (0.5 * h) * k2));
        let k4 = rhs(&(w + h * k3));
        w += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if i % report_every == 0 {
            out.push((i as f64 * h, w));
        }
    }
    out
}

/// General source closure with per-interface speeds `(l_m, r_m)` on the
/// left interface and `(l_p, r_p)` on the right one.
#[allow(clippy::too_many_arguments)]
pub fn q_brace_general(
    w2m: f64,
    w2: f64,
    w2p: f64,
    q_next: f64,
    (l_m, r_m): (f64, f64),
    (l_p, r_p): (f64, f64),
    dt: f64,
    dx: f64,
) -> f64 {
    let (jm, jp) = (r_m - l_m, r_p - l_p);
    let denom = l_p * jm - r_m * jp;
    let num = jm * jp * (-q_next + w2)
        - dt / dx * (r_m * l_m * jp * (w2m - w2) + l_p * r_p * jm * (w2p - w2))
        - r_m * jp * 0.5 * (w2m + w2)
        + l_p * jm * 0.5 * (w2p + w2);
    num / denom
}

pub fn random_jinxin_state(rng: &mut ChaCha8Rng, m: &JinXinModel) -> State {
    let (lo, hi) = m.interval();
    let lambda = m.lambda();
    let ((rp_lo, rp_hi), (sm_lo, sm_hi)) = m.image_intervals();
    let u = rng.gen_range(lo..=hi);
    // r = u + v/lambda in K+, s = u - v/lambda in K-
    let a = (rp_lo - u).max(u - sm_hi);
    let b = (rp_hi - u).min(u - sm_lo);
    let y = if b > a { rng.gen_range(a..=b) } else { a };
    State::from([u, lambda * y])
}

pub fn random_chaplygin_state(rng: &mut ChaCha8Rng) -> State {
    State::from([rng.gen_range(0.8..1.2), rng.gen_range(-0.3..0.3), rng.gen_range(0.8..1.2)])
}

pub fn random_two_phase_state(rng: &mut ChaCha8Rng, m: &TwoPhaseModel, rho_max: f64) -> State {
    let p = State::from([
        rng.gen_range(0.5..rho_max),
        rng.gen_range(-0.5..0.5),
        rng.gen_range(0.05..0.5),
        rng.gen_range(0.0..=1.0),
    ]);
    m.from_primitive(&p)
}

pub fn random_field(n: usize, mut gen: impl FnMut() -> State) -> Field {
    let grid = Grid1D::new(0.0, 1.0, n).unwrap();
    Field::new(grid, (0..n).map(|_| gen()).collect(), 0.0).unwrap()
}

pub fn jinxin_k() -> JinXinModel {
    JinXinModel::burgers(2.0, -1.0, 0.5).unwrap()
}

pub fn chaplygin() -> ChaplyginModel {
    ChaplyginModel::new(1.8, 1.4).unwrap()
}

pub fn max_diff(a: &Field, b: &Field) -> f64 {
    a.data.iter().zip(&b.data).map(|(x, y)| x.max_abs_diff(y)).fold(0.0, f64::max)
}
