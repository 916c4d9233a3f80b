//! Jin–Xin relaxation of a scalar conservation law `u_t + g(u)_x = 0`.
//!
//! State `(u, v)`, flux `(v, lambda^2 u)`, equilibrium `v = g(u)`.

use serde::{Deserialize, Serialize};

use crate::error::SolverError;
use crate::model::{RelaxationModel, Violation};
use crate::state::State;

/// Slack allowed on the interval bounds when checking admissibility.
pub const BOUND_TOLERANCE: f64 = 1e-12;

/// Equilibrium flux `g`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum ScalarFlux {
    /// `g(u) = u^2 / 2`
    Burgers,
    /// `g(u) = speed * u`
    Linear { speed: f64 },
}

impl ScalarFlux {
    #[inline]
    pub fn eval(&self, u: f64) -> f64 {
        match *self {
            ScalarFlux::Burgers => 0.5 * u * u,
            ScalarFlux::Linear { speed } => speed * u,
        }
    }

    #[inline]
    pub fn derivative(&self, u: f64) -> f64 {
        match *self {
            ScalarFlux::Burgers => u,
            ScalarFlux::Linear { speed } => speed,
        }
    }

    /// `max |g'(u)|` over `[lo, hi]`.
    pub fn max_abs_derivative(&self, lo: f64, hi: f64) -> f64 {
        match *self {
            ScalarFlux::Burgers => lo.abs().max(hi.abs()),
            ScalarFlux::Linear { speed } => speed.abs(),
        }
    }
}

/// `(v, lambda^2 u)`.
#[inline]
pub fn jinxin_flux(u: f64, v: f64, lambda: f64) -> (f64, f64) {
    (v, lambda * lambda * u)
}

#[derive(Clone, Debug, PartialEq)]
pub struct JinXinModel {
    lambda: f64,
    flux: ScalarFlux,
    k_min: f64,
    k_max: f64,
}

impl JinXinModel {
    /// Builds the model on the admissible interval `K = [k_min, k_max]`,
    /// rejecting `lambda` that violates `lambda > max_K |g'|`.
    pub fn new(lambda: f64, flux: ScalarFlux, k_min: f64, k_max: f64) -> Result<Self, SolverError> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(SolverError::config(format!("jin-xin: lambda must be positive, got {lambda}")));
        }
        if !(k_min.is_finite() && k_max.is_finite()) || k_min > k_max {
            return Err(SolverError::config(format!("jin-xin: invalid admissible interval [{k_min}, {k_max}]")));
        }
        let slope = flux.max_abs_derivative(k_min, k_max);
        if lambda <= slope {
            return Err(SolverError::config(format!(
                "jin-xin: subcharacteristic condition violated, lambda = {lambda} <= max|g'| = {slope}"
            )));
        }
        Ok(JinXinModel { lambda, flux, k_min, k_max })
    }

    /// Burgers flux, the default configuration.
    pub fn burgers(lambda: f64, k_min: f64, k_max: f64) -> Result<Self, SolverError> {
        Self::new(lambda, ScalarFlux::Burgers, k_min, k_max)
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn scalar_flux(&self) -> ScalarFlux {
        self.flux
    }

    pub fn g(&self, u: f64) -> f64 {
        self.flux.eval(u)
    }

    pub fn interval(&self) -> (f64, f64) {
        (self.k_min, self.k_max)
    }

    pub fn h_plus(&self, u: f64) -> f64 {
        u + self.flux.eval(u) / self.lambda
    }

    pub fn h_minus(&self, u: f64) -> f64 {
        u - self.flux.eval(u) / self.lambda
    }

    /// `(r, s) = (u + v / lambda, u - v / lambda)`.
    pub fn riemann_invariants(&self, w: &State) -> (f64, f64) {
        (w[0] + w[1] / self.lambda, w[0] - w[1] / self.lambda)
    }

    /// Images `K_+ = h_+(K)` and `K_- = h_-(K)`.
    ///
    /// Both maps are increasing under the subcharacteristic condition, so the
    /// images are the intervals spanned by the endpoint values.
    pub fn image_intervals(&self) -> ((f64, f64), (f64, f64)) {
        ((self.h_plus(self.k_min), self.h_plus(self.k_max)), (self.h_minus(self.k_min), self.h_minus(self.k_max)))
    }

    pub fn in_interval(&self, u: f64, tol: f64) -> bool {
        u >= self.k_min - tol && u <= self.k_max + tol
    }

    /// Membership in `D_K = {(u, v) : r in K_+, s in K_-}`.
    ///
    /// Not part of admissibility: the approximate Riemann solver keeps `u`
    /// in `K` but may leave `D_K` by `O(dt / eps)` when data sit on its edge.
    pub fn check_relaxed_domain(&self, w: &State) -> Result<(), Violation> {
        let (r, s) = self.riemann_invariants(w);
        let ((rp_lo, rp_hi), (sm_lo, sm_hi)) = self.image_intervals();
        if !(r >= rp_lo - BOUND_TOLERANCE && r <= rp_hi + BOUND_TOLERANCE) {
            return Err(Violation::new(1, w[1], "u + v/lambda outside h_+(K)"));
        }
        if !(s >= sm_lo - BOUND_TOLERANCE && s <= sm_hi + BOUND_TOLERANCE) {
            return Err(Violation::new(1, w[1], "u - v/lambda outside h_-(K)"));
        }
        Ok(())
    }

    pub fn in_relaxed_domain(&self, w: &State) -> bool {
        self.check_relaxed_domain(w).is_ok()
    }
}

impl RelaxationModel for JinXinModel {
    fn name(&self) -> &'static str {
        "jinxin"
    }

    fn n(&self) -> usize {
        2
    }

    fn k(&self) -> usize {
        1
    }

    #[inline]
    fn flux(&self, w: &State) -> State {
        let (a, b) = jinxin_flux(w[0], w[1], self.lambda);
        State::from([a, b])
    }

    #[inline]
    fn equilibrium_map(&self, w: &State) -> State {
        State::from([self.flux.eval(w[0])])
    }

    fn wave_speed(&self, _w: &State) -> f64 {
        self.lambda
    }

    fn max_wave_speed(&self, _cells: &[State]) -> f64 {
        self.lambda
    }

    fn flux2_constant_along_source(&self) -> bool {
        true
    }

    fn check_state(&self, w: &State) -> Result<(), Violation> {
        for c in 0..2 {
            if !w[c].is_finite() {
                return Err(Violation::new(c, w[c], "non-finite value"));
            }
        }
        if !self.in_interval(w[0], BOUND_TOLERANCE) {
            return Err(Violation::new(0, w[0], "u outside the admissible interval K"));
        }
        Ok(())
    }

    fn primitive_names(&self) -> &'static [&'static str] {
        &["u", "v"]
    }

    fn to_primitive(&self, w: &State) -> State {
        *w
    }

    fn from_primitive(&self, p: &State) -> State {
        *p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::RelaxationModel;

    #[test]
    fn flux_examples() {
        assert_eq!(jinxin_flux(1.0, 0.5, 2.0), (0.5, 4.0));
        assert_eq!(jinxin_flux(0.0, 0.0, 2.0), (0.0, 0.0));
        assert_eq!(jinxin_flux(-1.0, 0.5, 3.0), (0.5, -9.0));
    }

    #[test]
    fn rejects_subcharacteristic_violation() {
        assert!(JinXinModel::burgers(1.0, -1.0, 0.5).is_err());
        assert!(JinXinModel::burgers(2.0, -2.5, 0.5).is_err());
        assert!(JinXinModel::burgers(2.0, -1.0, 0.5).is_ok());
        assert!(JinXinModel::new(0.5, ScalarFlux::Linear { speed: -0.7 }, -10.0, 10.0).is_err());
    }

    #[test]
    fn image_intervals_for_burgers() {
        let m = JinXinModel::burgers(2.0, -1.0, 0.5).unwrap();
        let ((a, b), (c, d)) = m.image_intervals();
        assert!((a + 0.75).abs() < 1e-15 && (b - 0.5625).abs() < 1e-15);
        assert!((c + 1.25).abs() < 1e-15 && (d - 0.4375).abs() < 1e-15);
    }

    #[test]
    fn equilibrium_states_are_admissible() {
        let m = JinXinModel::burgers(2.0, -1.0, 0.5).unwrap();
        for &u in &[-1.0, -0.3, 0.0, 0.5] {
            assert!(m.admissible(&State::from([u, m.g(u)])));
        }
        let err = m.check_state(&State::from([0.7, 0.0])).unwrap_err();
        assert_eq!(err.component, 0);
        assert!(m.admissible(&State::from([0.0, 3.0])));
        assert!(!m.in_relaxed_domain(&State::from([0.0, 3.0])));
        assert!(m.in_relaxed_domain(&State::from([0.5, m.g(0.5)])));
        assert!(!m.admissible(&State::from([f64::NAN, 0.0])));
    }

    #[test]
    fn exact_source_matches_closed_form() {
        let m = JinXinModel::burgers(2.0, -1.0, 1.0).unwrap();
        let eps = 1e-3;
        let w = m.exact_source_solution(&State::from([1.0, 1.0]), eps, eps);
        let expected = 0.5 + 0.5 * (-1.0f64).exp();
        assert_eq!(w[0], 1.0);
        assert!((w[1] - expected).abs() < 1e-15);
    }
}
