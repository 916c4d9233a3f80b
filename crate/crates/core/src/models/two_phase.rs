//! Homogeneous relaxation model of a two-phase flow with mass transfer.
//!
//! Conservative state `(rho, rho u, rho E, rho phi)`; the first three are
//! conserved, the mass fraction relaxes towards `phi_eq(rho)`. Closure
//! `p = (gamma(phi) - 1) rho e` with `gamma(phi) = gamma1 phi + gamma2 (1 - phi)`.

use crate::error::SolverError;
use crate::model::{RelaxationModel, Violation};
use crate::state::State;

/// Slack on `phi in [0, 1]` when checking admissibility.
pub const FRACTION_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct TwoPhaseModel {
    gamma1: f64,
    gamma2: f64,
    rho1_star: f64,
    rho2_star: f64,
}

impl TwoPhaseModel {
    /// Saturation densities follow from the two adiabatic coefficients:
    /// `rho1* = e^-1 ((g2-1)/(g1-1))^(g2/(g2-g1))`,
    /// `rho2* = e^-1 ((g2-1)/(g1-1))^(g1/(g2-g1))`.
    /// `rho1* < rho2*` requires `gamma1 > gamma2`.
    pub fn new(gamma1: f64, gamma2: f64) -> Result<Self, SolverError> {
        if !(gamma1.is_finite() && gamma1 > 1.0 && gamma2.is_finite() && gamma2 > 1.0) {
            return Err(SolverError::config(format!(
                "two-phase: adiabatic coefficients must exceed 1, got {gamma1}, {gamma2}"
            )));
        }
        if gamma1 <= gamma2 {
            return Err(SolverError::config(format!(
                "two-phase: saturation densities are ordered only for gamma1 > gamma2, got {gamma1} <= {gamma2}"
            )));
        }
        let ratio = (gamma2 - 1.0) / (gamma1 - 1.0);
        let pre = (-1.0f64).exp();
        let rho1_star = pre * ratio.powf(gamma2 / (gamma2 - gamma1));
        let rho2_star = pre * ratio.powf(gamma1 / (gamma2 - gamma1));
        Ok(TwoPhaseModel { gamma1, gamma2, rho1_star, rho2_star })
    }

    pub fn gamma1(&self) -> f64 {
        self.gamma1
    }

    pub fn gamma2(&self) -> f64 {
        self.gamma2
    }

    pub fn rho1_star(&self) -> f64 {
        self.rho1_star
    }

    pub fn rho2_star(&self) -> f64 {
        self.rho2_star
    }

    pub fn tau1_star(&self) -> f64 {
        1.0 / self.rho1_star
    }

    pub fn tau2_star(&self) -> f64 {
        1.0 / self.rho2_star
    }

    #[inline]
    pub fn gamma_mix(&self, phi: f64) -> f64 {
        self.gamma1 * phi + self.gamma2 * (1.0 - phi)
    }

    /// Equilibrium mass fraction; callers guarantee `rho > 0`.
    #[inline]
    fn phi_eq_unchecked(&self, rho: f64) -> f64 {
        if rho <= self.rho1_star {
            1.0
        } else if rho >= self.rho2_star {
            0.0
        } else {
            let (t1, t2) = (self.tau1_star(), self.tau2_star());
            (1.0 / rho - t2) / (t1 - t2)
        }
    }

    pub fn phi_eq(&self, rho: f64) -> Result<f64, SolverError> {
        if !(rho > 0.0) {
            return Err(SolverError::domain(format!("phi_eq needs rho > 0, got {rho}")));
        }
        Ok(self.phi_eq_unchecked(rho))
    }

    /// Mixture pressure `(gamma(phi) - 1) rho e`.
    #[inline]
    pub fn mixture_pressure(&self, rho: f64, e: f64, phi: f64) -> f64 {
        (self.gamma_mix(phi) - 1.0) * rho * e
    }

    /// Pressure with the mass fraction at equilibrium, branch by branch.
    pub fn equilibrium_pressure(&self, rho: f64, e: f64) -> Result<f64, SolverError> {
        if !(rho > 0.0) || !(e > 0.0) {
            return Err(SolverError::domain(format!(
                "equilibrium pressure needs rho > 0 and e > 0, got rho = {rho}, e = {e}"
            )));
        }
        Ok(if rho <= self.rho1_star {
            (self.gamma1 - 1.0) * rho * e
        } else if rho <= self.rho2_star {
            (self.gamma1 - 1.0) * self.rho1_star * e
        } else {
            (self.gamma2 - 1.0) * rho * e
        })
    }

    /// `(rho, u, e, phi)` from a conservative state.
    #[inline]
    pub fn decode(&self, w: &State) -> (f64, f64, f64, f64) {
        let rho = w[0];
        let u = w[1] / rho;
        let e = w[2] / rho - 0.5 * u * u;
        let phi = w[3] / rho;
        (rho, u, e, phi)
    }

    #[inline]
    pub fn pressure(&self, w: &State) -> f64 {
        let (rho, _, e, phi) = self.decode(w);
        self.mixture_pressure(rho, e, phi)
    }

    /// Frozen sound speed `sqrt(gamma(phi) p / rho) = sqrt(gamma (gamma - 1) e)`.
    #[inline]
    pub fn sound_speed(&self, e: f64, phi: f64) -> f64 {
        let g = self.gamma_mix(phi);
        (g * (g - 1.0) * e).max(0.0).sqrt()
    }
}

impl RelaxationModel for TwoPhaseModel {
    fn name(&self) -> &'static str {
        "two-phase"
    }

    fn n(&self) -> usize {
        4
    }

    fn k(&self) -> usize {
        3
    }

    #[inline]
    fn flux(&self, w: &State) -> State {
        let (rho, u, e, phi) = self.decode(w);
        let p = self.mixture_pressure(rho, e, phi);
        State::from([w[1], w[1] * u + p, (w[2] + p) * u, w[3] * u])
    }

    #[inline]
    fn equilibrium_map(&self, w: &State) -> State {
        State::from([w[0] * self.phi_eq_unchecked(w[0])])
    }

    /// `|u| + c`, with `c` taken at the larger of the frozen sound speeds for
    /// the current and the equilibrium mass fraction, so the bound also
    /// covers the source-relaxed states used by the schemes.
    fn wave_speed(&self, w: &State) -> f64 {
        let (rho, u, e, phi) = self.decode(w);
        let c = self.sound_speed(e, phi).max(self.sound_speed(e, self.phi_eq_unchecked(rho)));
        u.abs() + c
    }

    fn flux2_constant_along_source(&self) -> bool {
        false
    }

    fn check_state(&self, w: &State) -> Result<(), Violation> {
        for c in 0..4 {
            if !w[c].is_finite() {
                return Err(Violation::new(c, w[c], "non-finite value"));
            }
        }
        if w[0] <= 0.0 {
            return Err(Violation::new(0, w[0], "non-positive density"));
        }
        let (rho, _, e, phi) = self.decode(w);
        if !(e > 0.0) {
            return Err(Violation::new(2, w[2], "non-positive internal energy"));
        }
        if !(-FRACTION_TOLERANCE..=1.0 + FRACTION_TOLERANCE).contains(&phi) {
            return Err(Violation::new(3, phi, "mass fraction phi = rho phi / rho outside [0, 1]"));
        }
        if !(self.mixture_pressure(rho, e, phi) > 0.0) {
            return Err(Violation::new(2, w[2], "non-positive pressure"));
        }
        Ok(())
    }

    fn primitive_names(&self) -> &'static [&'static str] {
        &["rho", "u", "p", "phi"]
    }

    fn to_primitive(&self, w: &State) -> State {
        let (rho, u, e, phi) = self.decode(w);
        State::from([rho, u, self.mixture_pressure(rho, e, phi), phi])
    }

    /// Expects `(rho, u, p, phi)`; a 3-component input `(rho, u, p)` puts
    /// the mass fraction at equilibrium.
    fn from_primitive(&self, p: &State) -> State {
        let (rho, u, pressure) = (p[0], p[1], p[2]);
        let phi = if p.len() > 3 { p[3] } else { self.phi_eq_unchecked(rho) };
        let e = pressure / ((self.gamma_mix(phi) - 1.0) * rho);
        State::from([rho, rho * u, rho * (e + 0.5 * u * u), rho * phi])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model() -> TwoPhaseModel {
        TwoPhaseModel::new(1.6, 1.5).unwrap()
    }

    #[test]
    fn saturation_densities_are_ordered() {
        let m = model();
        assert!(m.rho1_star() < m.rho2_star());
        // rho2*/rho1* = (g1 - 1)/(g2 - 1)
        assert!((m.rho2_star() / m.rho1_star() - 0.6 / 0.5).abs() < 1e-13);
        assert!(TwoPhaseModel::new(1.5, 1.6).is_err());
        assert!(TwoPhaseModel::new(0.9, 1.6).is_err());
    }

    #[test]
    fn phi_eq_branches() {
        let m = model();
        assert_eq!(m.phi_eq(0.5 * m.rho1_star()).unwrap(), 1.0);
        assert_eq!(m.phi_eq(2.0 * m.rho2_star()).unwrap(), 0.0);
        let mid = 2.0 / (m.tau1_star() + m.tau2_star());
        assert!((m.phi_eq(mid).unwrap() - 0.5).abs() < 1e-12);
        assert!((m.phi_eq(m.rho1_star()).unwrap() - 1.0).abs() < 1e-15);
        assert!(m.phi_eq(0.0).is_err());
        assert!(m.phi_eq(-1.0).is_err());
    }

    #[test]
    fn equilibrium_pressure_branches() {
        let m = model();
        let e = 2.0;
        let lo = 0.5 * m.rho1_star();
        assert!((m.equilibrium_pressure(lo, e).unwrap() - 0.6 * lo * e).abs() < 1e-14);
        let hi = 3.0 * m.rho2_star();
        assert!((m.equilibrium_pressure(hi, e).unwrap() - 0.5 * hi * e).abs() < 1e-12);
        let at = m.rho1_star();
        assert!((m.equilibrium_pressure(at, e).unwrap() - 0.6 * at * e).abs() < 1e-14);
        // continuity at rho2*
        let left = (m.gamma1() - 1.0) * m.rho1_star() * e;
        let right = (m.gamma2() - 1.0) * m.rho2_star() * e;
        assert!((left - right).abs() < 1e-12);
        assert!(m.equilibrium_pressure(1.0, 0.0).is_err());
        assert!(m.equilibrium_pressure(-1.0, 1.0).is_err());
    }

    #[test]
    fn equilibrium_pressure_matches_mixture_law() {
        let m = model();
        let e = 0.37;
        let (a, b) = (0.2 * m.rho1_star(), 1.5 * m.rho2_star());
        for i in 0..=200 {
            let rho = a + (b - a) * i as f64 / 200.0;
            let phi = m.phi_eq(rho).unwrap();
            let direct = m.mixture_pressure(rho, e, phi);
            let branch = m.equilibrium_pressure(rho, e).unwrap();
            assert!((direct - branch).abs() < 1e-12 * (1.0 + direct), "rho = {rho}");
        }
    }

    #[test]
    fn primitive_roundtrip() {
        let m = model();
        let p = State::from([1.0 / 0.92, 0.4301, 0.1445, 1.0]);
        let w = m.from_primitive(&p);
        let back = m.to_primitive(&w);
        assert!(back.max_abs_diff(&p) < 1e-14);
        assert!(m.admissible(&w));
        let w3 = m.from_primitive(&State::from([1.0 / 0.92, 0.4301, 0.1445]));
        assert_eq!(w3, w);
    }

    #[test]
    fn flux2_is_not_invariant_along_source() {
        let m = model();
        assert!(!m.flux2_constant_along_source());
        let w = m.from_primitive(&State::from([1.0, 0.5, 1.0, 0.3]));
        let relaxed = m.exact_source_solution(&w, 1.0, 0.5);
        assert!((m.flux2(&w)[0] - m.flux2(&relaxed)[0]).abs() > 1e-3);
    }
}
