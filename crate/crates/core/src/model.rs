//! The contract every relaxation system fulfils.
//!
//! A model describes `d_t W + d_x f(W) = R(W) / eps` where the state splits
//! into a conserved block `W1` (first `k` components, no source) and a
//! relaxing block `W2` (last `n - k` components) with the linear source
//! `R2(W) = Q(W1) - W2`. The equilibrium manifold is `W2 = Q(W1)`.

use crate::state::State;

/// Why a state left the admissible set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Violation {
    pub component: usize,
    pub value: f64,
    pub reason: &'static str,
}

impl Violation {
    pub fn new(component: usize, value: f64, reason: &'static str) -> Self {
        Violation { component, value, reason }
    }
}

/// `exp(-t / eps)`, equal to 1 for `eps = inf`.
#[inline]
pub fn decay_factor(t: f64, eps: f64) -> f64 {
    (-t / eps).exp()
}

/// `exp(-t / eps) - 1` without cancellation for `t << eps`.
#[inline]
pub fn decay_minus_one(t: f64, eps: f64) -> f64 {
    (-t / eps).exp_m1()
}

/// `eps * (exp(-dt / eps) - 1) / dt`.
///
/// Tends to -1 as `eps -> inf` and to 0 as `eps -> 0`; evaluated through
/// `expm1(-x) / x` with `x = dt / eps` so neither limit cancels or overflows.
#[inline]
pub fn relaxation_weight(dt: f64, eps: f64) -> f64 {
    let x = dt / eps;
    if x == 0.0 {
        -1.0
    } else {
        (-x).exp_m1() / x
    }
}

pub trait RelaxationModel: Send + Sync {
    fn name(&self) -> &'static str;

    /// State dimension `n`.
    fn n(&self) -> usize;

    /// Number of conserved components `k < n`.
    fn k(&self) -> usize;

    fn flux(&self, w: &State) -> State;

    fn flux1(&self, w: &State) -> State {
        self.flux(w).segment(0, self.k())
    }

    fn flux2(&self, w: &State) -> State {
        self.flux(w).segment(self.k(), self.n() - self.k())
    }

    /// `Q(W1)`, reading only the first `k` components of `w`.
    fn equilibrium_map(&self, w: &State) -> State;

    /// `R(W)`: zero on the conserved block, `Q(W1) - W2` on the relaxing block.
    fn source(&self, w: &State) -> State {
        let (n, k) = (self.n(), self.k());
        let q = self.equilibrium_map(w);
        let mut r = State::zeros(n);
        for i in 0..n - k {
            r[k + i] = q[i] - w[k + i];
        }
        r
    }

    /// Exact solution of `dW/dt = R(W) / eps` after time `t`.
    ///
    /// `W1` is frozen along the source ODE, so `Q(W1)` is constant and the
    /// relaxing block decays exponentially towards it. The update is
    /// anchored at `W2` while less than half of the gap has closed and at
    /// `Q` afterwards, so `t = 0` returns `w` exactly and large `t / eps`
    /// lands on `Q` up to `exp(-t / eps)`.
    fn exact_source_solution(&self, w: &State, t: f64, eps: f64) -> State {
        let k = self.k();
        let q = self.equilibrium_map(w);
        let decay = decay_factor(t, eps);
        let gain = -decay_minus_one(t, eps);
        let mut out = *w;
        for i in 0..q.len() {
            let w2 = w[k + i];
            out[k + i] = if decay >= 0.5 { w2 + (q[i] - w2) * gain } else { q[i] + (w2 - q[i]) * decay };
        }
        out
    }

    /// Bound on the modulus of the eigenvalues of the flux Jacobian at `w`.
    fn wave_speed(&self, w: &State) -> f64;

    fn max_wave_speed(&self, cells: &[State]) -> f64 {
        cells.iter().map(|w| self.wave_speed(w)).fold(0.0, f64::max)
    }

    /// Whether `grad f2 . R = 0`, i.e. `f2` is invariant along the source ODE.
    fn flux2_constant_along_source(&self) -> bool;

    fn check_state(&self, w: &State) -> Result<(), Violation>;

    fn admissible(&self, w: &State) -> bool {
        self.check_state(w).is_ok()
    }

    /// Convex entropy `H(W)`, when the model defines one.
    fn entropy(&self, _w: &State) -> Option<f64> {
        None
    }

    /// `grad H(W) . R(W)`, when the model defines an entropy.
    fn entropy_source(&self, _w: &State) -> Option<f64> {
        None
    }

    /// Column names of the primitive variables, in output order.
    fn primitive_names(&self) -> &'static [&'static str];

    fn to_primitive(&self, w: &State) -> State;

    #[allow(clippy::wrong_self_convention)]
    fn from_primitive(&self, p: &State) -> State;

    /// Largest `|W2 - Q(W1)|` component at `w`.
    fn distance_to_equilibrium(&self, w: &State) -> f64 {
        let k = self.k();
        let q = self.equilibrium_map(w);
        (0..q.len()).map(|i| (w[k + i] - q[i]).abs()).fold(0.0, f64::max)
    }
}
