//! Suliciu-type relaxation of the Lagrangian p-system.
//!
//! State `(tau, u, T)` with `tau_t - u_x = 0`,
//! `u_t + (p(T) + a^2 (T - tau))_x = 0` and `T_t = (tau - T) / eps`,
//! where `p(T) = T^-gamma`. The equilibrium is `T = tau`.

use crate::error::SolverError;
use crate::model::{RelaxationModel, Violation};
use crate::state::State;

#[derive(Clone, Debug, PartialEq)]
pub struct ChaplyginModel {
    a: f64,
    gamma: f64,
}

impl ChaplyginModel {
    pub fn new(a: f64, gamma: f64) -> Result<Self, SolverError> {
        if !(a.is_finite() && a > 0.0) {
            return Err(SolverError::config(format!("chaplygin: a must be positive, got {a}")));
        }
        if !(gamma.is_finite() && gamma > 1.0) {
            return Err(SolverError::config(format!("chaplygin: gamma must exceed 1, got {gamma}")));
        }
        Ok(ChaplyginModel { a, gamma })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    #[inline]
    pub fn pressure(&self, t: f64) -> f64 {
        t.powf(-self.gamma)
    }

    /// `p'(T) = -gamma T^(-gamma - 1)`.
    #[inline]
    pub fn pressure_derivative(&self, t: f64) -> f64 {
        -self.gamma * t.powf(-self.gamma - 1.0)
    }

    /// `a^2 + p'(T)`, positive exactly when the subcharacteristic condition holds at `T`.
    pub fn subcharacteristic_margin(&self, t: f64) -> f64 {
        self.a * self.a + self.pressure_derivative(t)
    }

    /// Relaxation entropy
    /// `H = u^2/2 + e(T) + p(T) (T - tau) + a^2/2 (T - tau)^2`
    /// with the internal energy `e(T) = T^(1-gamma) / (gamma - 1)`, `e' = -p`.
    pub fn entropy_value(&self, tau: f64, u: f64, t: f64) -> f64 {
        let g = self.gamma;
        let d = t - tau;
        0.5 * u * u + t.powf(1.0 - g) / (g - 1.0) + self.pressure(t) * d + 0.5 * self.a * self.a * d * d
    }

    /// `grad H . R = -(a^2 + p'(T)) (tau - T)^2`, which is `<= 0` under the
    /// subcharacteristic condition.
    pub fn entropy_source_value(&self, tau: f64, _u: f64, t: f64) -> Result<f64, SolverError> {
        if !(tau > 0.0) || !(t > 0.0) {
            return Err(SolverError::domain(format!(
                "chaplygin entropy source needs tau > 0 and T > 0, got tau = {tau}, T = {t}"
            )));
        }
        // dH/dT = (a^2 + p'(T)) (T - tau); dH/dtau and dH/du pair with zero source
        let dh_dt = self.subcharacteristic_margin(t) * (t - tau);
        Ok(dh_dt * (tau - t))
    }
}

/// `grad H . R` at `(tau, u, T)`.
pub fn chaplygin_entropy_source(tau: f64, u: f64, t: f64, model: &ChaplyginModel) -> Result<f64, SolverError> {
    model.entropy_source_value(tau, u, t)
}

impl RelaxationModel for ChaplyginModel {
    fn name(&self) -> &'static str {
        "chaplygin"
    }

    fn n(&self) -> usize {
        3
    }

    fn k(&self) -> usize {
        2
    }

    #[inline]
    fn flux(&self, w: &State) -> State {
        let (tau, u, t) = (w[0], w[1], w[2]);
        State::from([-u, self.pressure(t) + self.a * self.a * (t - tau), 0.0])
    }

    #[inline]
    fn equilibrium_map(&self, w: &State) -> State {
        State::from([w[0]])
    }

    fn wave_speed(&self, _w: &State) -> f64 {
        self.a
    }

    fn max_wave_speed(&self, _cells: &[State]) -> f64 {
        self.a
    }

    fn flux2_constant_along_source(&self) -> bool {
        true
    }

    fn check_state(&self, w: &State) -> Result<(), Violation> {
        for c in 0..3 {
            if !w[c].is_finite() {
                return Err(Violation::new(c, w[c], "non-finite value"));
            }
        }
        if w[0] <= 0.0 {
            return Err(Violation::new(0, w[0], "non-positive covolume"));
        }
        if w[2] <= 0.0 {
            return Err(Violation::new(2, w[2], "non-positive relaxed covolume"));
        }
        if self.subcharacteristic_margin(w[2]) <= 0.0 {
            return Err(Violation::new(2, w[2], "subcharacteristic condition a^2 > -p'(T) violated"));
        }
        Ok(())
    }

    fn entropy(&self, w: &State) -> Option<f64> {
        Some(self.entropy_value(w[0], w[1], w[2]))
    }

    fn entropy_source(&self, w: &State) -> Option<f64> {
        self.entropy_source_value(w[0], w[1], w[2]).ok()
    }

    fn primitive_names(&self) -> &'static [&'static str] {
        &["tau", "u", "T"]
    }

    fn to_primitive(&self, w: &State) -> State {
        *w
    }

    fn from_primitive(&self, p: &State) -> State {
        *p
    }
}
