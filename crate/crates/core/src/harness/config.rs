//! Serializable run description and its validated, ready-to-run form.

use serde::{Deserialize, Serialize};

use crate::driver::run;
use crate::error::SolverError;
use crate::harness::exact::{burgers_exact_smooth, three_state_exact};
use crate::harness::norms::ErrorMeasure;
use crate::model::RelaxationModel;
use crate::models::{AnyModel, ChaplyginModel, JinXinModel, ScalarFlux, TwoPhaseModel};
use crate::state::{Field, Grid1D, State};
use crate::timestep::{SchemeKind, TimeControls};

fn default_flux() -> ScalarFlux {
    ScalarFlux::Burgers
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ModelConfig {
    JinXin {
        lambda: f64,
        #[serde(default = "default_flux")]
        flux: ScalarFlux,
        k_min: f64,
        k_max: f64,
    },
    Chaplygin {
        a: f64,
        gamma: f64,
    },
    TwoPhase {
        gamma1: f64,
        gamma2: f64,
    },
}

impl ModelConfig {
    pub fn build(&self) -> Result<AnyModel, SolverError> {
        Ok(match *self {
            ModelConfig::JinXin { lambda, flux, k_min, k_max } => JinXinModel::new(lambda, flux, k_min, k_max)?.into(),
            ModelConfig::Chaplygin { a, gamma } => ChaplyginModel::new(a, gamma)?.into(),
            ModelConfig::TwoPhase { gamma1, gamma2 } => TwoPhaseModel::new(gamma1, gamma2)?.into(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeConfig {
    pub kind: SchemeKind,
    pub epsilon: f64,
    pub cfl: f64,
    pub t_final: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub x_min: f64,
    pub x_max: f64,
    pub cells: usize,
}

/// Initial data. Riemann states are given in the model's primitive
/// variables; a two-phase state with three entries starts at equilibrium.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum InitialConfig {
    /// Burgers data `0 | -1 | 1/2` with jumps at 0.3 and 0.7, `v = g(u)`.
    #[serde(rename = "jinxin-3state")]
    JinxinThreeState,
    /// `u0(x) = x`, `v = g(u)`.
    BurgersSmooth,
    Riemann {
        left: Vec<f64>,
        right: Vec<f64>,
        #[serde(default)]
        position: f64,
    },
}

/// What errors are measured against.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ReferenceConfig {
    /// Closed-form equilibrium solution of the named initial condition.
    Exact,
    /// The same case on a finer grid, restricted by cell averaging.
    FineMesh {
        cells: usize,
        #[serde(default = "default_reference_scheme")]
        scheme: SchemeKind,
        #[serde(default)]
        cfl: Option<f64>,
    },
}

fn default_reference_scheme() -> SchemeKind {
    SchemeKind::Splitting
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    /// File name of the profile CSV, relative to the output directory.
    #[serde(default)]
    pub profile: Option<String>,
    /// Base name of the sweep CSV and plot script.
    #[serde(default)]
    pub sweep: Option<String>,
    #[serde(default)]
    pub compare: Option<String>,
    /// Component whose errors sweeps report.
    #[serde(default)]
    pub component: usize,
    /// Optional `[lo, hi]` restricting error norms to cells centred inside it.
    #[serde(default)]
    pub window: Option<[f64; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub model: ModelConfig,
    pub scheme: SchemeConfig,
    pub grid: GridConfig,
    pub initial: InitialConfig,
    #[serde(default)]
    pub output: OutputConfig,
    #[serde(default)]
    pub reference: Option<ReferenceConfig>,
}

impl RunConfig {
    /// Validates every field and builds the runnable case. Nothing
    /// proportional to the cell count is allocated here.
    pub fn build(&self) -> Result<Case, SolverError> {
        let model = self.model.build()?;
        let grid = Grid1D::new(self.grid.x_min, self.grid.x_max, self.grid.cells)?;
        let case = Case {
            initial: InitialCondition::from_config(&self.initial, &model)?,
            model,
            grid,
            scheme: self.scheme.kind,
            eps: self.scheme.epsilon,
            cfl: self.scheme.cfl,
            t_final: self.scheme.t_final,
        };
        case.validate()?;
        if self.output.component >= case.model.n() {
            return Err(SolverError::config(format!(
                "output component {} out of range for model '{}' with {} components",
                self.output.component,
                case.model.name(),
                case.model.n()
            )));
        }
        if let Some([lo, hi]) = self.output.window {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(SolverError::config(format!(
                    "output window [{lo}, {hi}] must be a non-empty finite interval"
                )));
            }
        }
        if let Some(ReferenceConfig::FineMesh { cells, cfl, .. }) = &self.reference {
            Grid1D::new(self.grid.x_min, self.grid.x_max, *cells)?;
            if let Some(c) = cfl {
                TimeControls::new(*c, case.t_final, case.scheme)?;
            }
        }
        if matches!(self.reference, Some(ReferenceConfig::Exact)) && case.initial.exact_solution().is_none() {
            return Err(SolverError::config("an exact reference needs a named Burgers initial condition"));
        }
        Ok(case)
    }

    pub fn measure(&self) -> ErrorMeasure {
        let m = ErrorMeasure::component(self.output.component);
        match self.output.window {
            Some([lo, hi]) => m.within(lo, hi),
            None => m,
        }
    }

    pub fn oracle(&self, case: &Case) -> Result<Oracle, SolverError> {
        match &self.reference {
            Some(ReferenceConfig::FineMesh { cells, scheme, cfl }) => {
                Ok(Oracle::FineMesh { cells: *cells, scheme: *scheme, cfl: cfl.unwrap_or(case.cfl) })
            }
            Some(ReferenceConfig::Exact) | None => case.initial.exact_solution().map(Oracle::Exact).ok_or_else(|| {
                SolverError::config("no exact solution for this initial condition; add a [reference] section")
            }),
        }
    }
}

/// Closed-form equilibrium solutions available as oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExactSolution {
    BurgersSmooth,
    BurgersThreeState,
}

impl ExactSolution {
    pub fn u(&self, t: f64, x: f64) -> f64 {
        match self {
            ExactSolution::BurgersSmooth => burgers_exact_smooth(t, x),
            ExactSolution::BurgersThreeState => three_state_exact(t, x),
        }
    }

    /// Equilibrium state `(u, g(u))` sampled at the cell centers.
    pub fn field<M: RelaxationModel + ?Sized>(&self, grid: Grid1D, t: f64, model: &M) -> Field {
        let mut f = Field::from_fn(grid, |x| {
            let u = self.u(t, x);
            let mut w = State::from([u, 0.0]);
            w[1] = model.equilibrium_map(&w)[0];
            w
        });
        f.time = t;
        f
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Oracle {
    Exact(ExactSolution),
    FineMesh { cells: usize, scheme: SchemeKind, cfl: f64 },
}

impl Oracle {
    /// Reference field on the case's grid at its final time.
    pub fn reference(&self, case: &Case) -> Result<Field, SolverError> {
        match *self {
            Oracle::Exact(sol) => Ok(sol.field(case.grid, case.t_final, &case.model)),
            Oracle::FineMesh { cells, scheme, cfl } => {
                let mut fine = case.clone().with_cells(cells)?;
                fine.scheme = scheme;
                fine.cfl = cfl;
                let out = fine.run()?;
                crate::harness::norms::restrict(&out, &case.grid)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum InitialCondition {
    JinxinThreeState,
    BurgersSmooth,
    /// Conservative left and right states.
    Riemann {
        left: State,
        right: State,
        position: f64,
    },
}

impl InitialCondition {
    pub fn from_config(cfg: &InitialConfig, model: &AnyModel) -> Result<Self, SolverError> {
        let named_ok = matches!(model, AnyModel::JinXin(m) if m.scalar_flux() == ScalarFlux::Burgers);
        match cfg {
            InitialConfig::JinxinThreeState | InitialConfig::BurgersSmooth if !named_ok => Err(SolverError::config(
                "named Burgers initial conditions need the jin-xin model with the Burgers flux",
            )),
            InitialConfig::JinxinThreeState => Ok(InitialCondition::JinxinThreeState),
            InitialConfig::BurgersSmooth => Ok(InitialCondition::BurgersSmooth),
            InitialConfig::Riemann { left, right, position } => {
                let convert = |side: &str, p: &[f64]| -> Result<State, SolverError> {
                    let names = model.primitive_names();
                    let short_ok = matches!(model, AnyModel::TwoPhase(_)) && p.len() == names.len() - 1;
                    if p.len() != names.len() && !short_ok {
                        return Err(SolverError::config(format!(
                            "{side} state needs {} values ({}), got {}",
                            names.len(),
                            names.join(", "),
                            p.len()
                        )));
                    }
                    if p.iter().any(|v| !v.is_finite()) {
                        return Err(SolverError::config(format!("{side} state has non-finite values")));
                    }
                    Ok(model.from_primitive(&State::from_slice(p)))
                };
                if !position.is_finite() {
                    return Err(SolverError::config("riemann position must be finite"));
                }
                Ok(InitialCondition::Riemann {
                    left: convert("left", left)?,
                    right: convert("right", right)?,
                    position: *position,
                })
            }
        }
    }

    pub fn exact_solution(&self) -> Option<ExactSolution> {
        match self {
            InitialCondition::JinxinThreeState => Some(ExactSolution::BurgersThreeState),
            InitialCondition::BurgersSmooth => Some(ExactSolution::BurgersSmooth),
            InitialCondition::Riemann { .. } => None,
        }
    }

    pub fn field<M: RelaxationModel + ?Sized>(&self, grid: Grid1D, model: &M) -> Field {
        match self {
            InitialCondition::JinxinThreeState => ExactSolution::BurgersThreeState.field(grid, 0.0, model),
            InitialCondition::BurgersSmooth => ExactSolution::BurgersSmooth.field(grid, 0.0, model),
            InitialCondition::Riemann { left, right, position } => {
                Field::from_fn(grid, |x| if x < *position { *left } else { *right })
            }
        }
    }
}

/// A validated run: model, grid, scheme, parameters and initial data.
#[derive(Clone, Debug, PartialEq)]
pub struct Case {
    pub model: AnyModel,
    pub grid: Grid1D,
    pub scheme: SchemeKind,
    pub eps: f64,
    pub cfl: f64,
    pub t_final: f64,
    pub initial: InitialCondition,
}

impl Case {
    pub fn validate(&self) -> Result<(), SolverError> {
        if !(self.eps > 0.0) {
            return Err(SolverError::config(format!("epsilon must be positive, got {}", self.eps)));
        }
        self.controls()?;
        Ok(())
    }

    pub fn controls(&self) -> Result<TimeControls, SolverError> {
        TimeControls::new(self.cfl, self.t_final, self.scheme)
    }

    pub fn initial_field(&self) -> Field {
        self.initial.field(self.grid, &self.model)
    }

    pub fn with_cells(mut self, cells: usize) -> Result<Self, SolverError> {
        self.grid = Grid1D::new(self.grid.x_min(), self.grid.x_max(), cells)?;
        Ok(self)
    }

    /// Same case with the cell count whose size is `dx`; `dx` must divide
    /// the domain length up to round-off.
    pub fn with_dx(self, dx: f64) -> Result<Self, SolverError> {
        if !(dx > 0.0 && dx.is_finite()) {
            return Err(SolverError::config(format!("cell size must be positive, got {dx}")));
        }
        let cells = (self.grid.length() / dx).round();
        if cells < 1.0 || ((cells * dx) - self.grid.length()).abs() > 1e-9 * self.grid.length() {
            return Err(SolverError::config(format!(
                "cell size {dx} does not divide the domain length {}",
                self.grid.length()
            )));
        }
        self.with_cells(cells as usize)
    }

    pub fn with_eps(mut self, eps: f64) -> Result<Self, SolverError> {
        self.eps = eps;
        self.validate()?;
        Ok(self)
    }

    pub fn run(&self) -> Result<Field, SolverError> {
        run(&self.model, &self.initial_field(), &self.controls()?, self.eps)
    }
}
