//! Closed-form Burgers solutions used as oracles in the equilibrium limit.

/// `x / (1 + t)`, the solution with initial profile `u0(x) = x`.
#[inline]
pub fn burgers_exact_smooth(t: f64, x: f64) -> f64 {
    x / (1.0 + t)
}

/// Entropy solution of Burgers for a single jump at `x = 0`.
pub fn burgers_riemann_exact(t: f64, x: f64, u_l: f64, u_r: f64) -> f64 {
    if t <= 0.0 {
        return if x < 0.0 { u_l } else { u_r };
    }
    if u_l > u_r {
        if x < 0.5 * (u_l + u_r) * t {
            u_l
        } else {
            u_r
        }
    } else {
        (x / t).clamp(u_l, u_r)
    }
}

/// Left jump position, left plateau, right jump position and right plateau
/// of the three-state Burgers data `0 | -1 | 1/2` with jumps at 0.3 and 0.7.
const THREE_STATE: (f64, f64, f64, f64) = (0.3, -1.0, 0.7, 0.5);

/// Initial data `0` for `x < 0.3`, `-1` on `(0.3, 0.7)`, `1/2` for `x > 0.7`.
pub fn three_state_initial(x: f64) -> f64 {
    let (a, um, b, ur) = THREE_STATE;
    if x < a {
        0.0
    } else if x < b {
        um
    } else {
        ur
    }
}

/// Entropy solution for the three-state data.
///
/// The shock from `x = 0.3` (speed -1/2) meets the tail of the fan from
/// `x = 0.7` at `t = 0.8`; afterwards it moves as `x_s = 0.7 - sqrt(0.8 t)`,
/// the curve along which `dx_s/dt = ((x_s - 0.7)/t + 0)/2`.
pub fn three_state_exact(t: f64, x: f64) -> f64 {
    let (a, um, b, ur) = THREE_STATE;
    if t <= 0.0 {
        return three_state_initial(x);
    }
    let fan_head = b + ur * t;
    if x >= fan_head {
        return ur;
    }
    // the shock from the left jump reaches the fan tail at `meet`
    let meet = (b - a) / (-0.5 * um);
    let shock = if t < meet {
        a + 0.5 * um * t
    } else {
        let at_meet = a + 0.5 * um * meet;
        b + (at_meet - b) * (t / meet).sqrt()
    };
    if x < shock {
        return 0.0;
    }
    let fan_tail = b + um * t;
    if x < fan_tail {
        um
    } else {
        (x - b) / t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smooth_examples() {
        assert_eq!(burgers_exact_smooth(0.0, 0.3), 0.3);
        assert_eq!(burgers_exact_smooth(1.0, 0.5), 0.25);
        assert_eq!(burgers_exact_smooth(7.0, 0.0), 0.0);
    }

    #[test]
    fn single_jumps() {
        // shock at speed -1/2
        assert_eq!(burgers_riemann_exact(1.0, -0.51, 0.0, -1.0), 0.0);
        assert_eq!(burgers_riemann_exact(1.0, -0.49, 0.0, -1.0), -1.0);
        assert_eq!(burgers_riemann_exact(2.0, -1.1, 0.0, -1.0), 0.0);
        assert_eq!(burgers_riemann_exact(2.0, -0.9, 0.0, -1.0), -1.0);
        // stationary shock
        assert_eq!(burgers_riemann_exact(2.0, -0.1, 1.0, -1.0), 1.0);
        assert_eq!(burgers_riemann_exact(2.0, 0.1, 1.0, -1.0), -1.0);
        // fan between slopes -1 and 1/2
        assert_eq!(burgers_riemann_exact(2.0, -3.0, -1.0, 0.5), -1.0);
        assert_eq!(burgers_riemann_exact(2.0, 0.4, -1.0, 0.5), 0.2);
        assert_eq!(burgers_riemann_exact(2.0, 3.0, -1.0, 0.5), 0.5);
    }

    #[test]
    fn three_state_before_interaction() {
        let t = 0.4;
        assert_eq!(three_state_exact(t, 0.05), 0.0);
        assert_eq!(three_state_exact(t, 0.15), -1.0);
        assert!((three_state_exact(t, 0.6) - (-0.25)).abs() < 1e-15);
        assert_eq!(three_state_exact(t, 0.95), 0.5);
    }

    #[test]
    fn three_state_after_interaction() {
        let t = 3.2;
        let xs = 0.7 - (0.8f64 * t).sqrt();
        assert!((xs + 0.9).abs() < 1e-12);
        assert_eq!(three_state_exact(t, xs - 1e-9), 0.0);
        assert!((three_state_exact(t, xs + 1e-9) - (xs - 0.7) / t).abs() < 1e-8);
        assert!((three_state_exact(t, 1.0) - 0.3 / 3.2).abs() < 1e-15);
        assert_eq!(three_state_exact(t, 2.31), 0.5);
    }
}
