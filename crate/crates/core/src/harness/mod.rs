//! Error measurement, exact oracles, sweeps and text output.

pub mod config;
pub mod exact;
pub mod norms;
pub mod output;
pub mod sweep;

pub use config::{Case, ExactSolution, InitialCondition, Oracle, RunConfig};
pub use exact::{burgers_exact_smooth, burgers_riemann_exact, three_state_exact};
pub use norms::{l2_error, linf_error, restrict, ErrorMeasure};
pub use sweep::{epsilon_sweep, refinement_sweep, SweepAxis, SweepResult, SweepRow};
