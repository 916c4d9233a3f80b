//! Concrete relaxation systems.

mod chaplygin;
mod jinxin;
mod two_phase;

pub use chaplygin::{chaplygin_entropy_source, ChaplyginModel};
pub use jinxin::{jinxin_flux, JinXinModel, ScalarFlux};
pub use two_phase::TwoPhaseModel;

use crate::model::{RelaxationModel, Violation};
use crate::state::State;

/// Any of the shipped models, dispatched statically.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyModel {
    JinXin(JinXinModel),
    Chaplygin(ChaplyginModel),
    TwoPhase(TwoPhaseModel),
}

macro_rules! dispatch {
    ($self:ident, $m:ident => $e:expr) => {
        match $self {
            AnyModel::JinXin($m) => $e,
            AnyModel::Chaplygin($m) => $e,
            AnyModel::TwoPhase($m) => $e,
        }
    };
}

impl RelaxationModel for AnyModel {
    fn name(&self) -> &'static str {
        dispatch!(self, m => m.name())
    }
    fn n(&self) -> usize {
        dispatch!(self, m => m.n())
    }
    fn k(&self) -> usize {
        dispatch!(self, m => m.k())
    }
    #[inline]
    fn flux(&self, w: &State) -> State {
        dispatch!(self, m => m.flux(w))
    }
    #[inline]
    fn equilibrium_map(&self, w: &State) -> State {
        dispatch!(self, m => m.equilibrium_map(w))
    }
    fn exact_source_solution(&self, w: &State, t: f64, eps: f64) -> State {
        dispatch!(self, m => m.exact_source_solution(w, t, eps))
    }
    fn wave_speed(&self, w: &State) -> f64 {
        dispatch!(self, m => m.wave_speed(w))
    }
    fn max_wave_speed(&self, cells: &[State]) -> f64 {
        dispatch!(self, m => m.max_wave_speed(cells))
    }
    fn flux2_constant_along_source(&self) -> bool {
        dispatch!(self, m => m.flux2_constant_along_source())
    }
    fn check_state(&self, w: &State) -> Result<(), Violation> {
        dispatch!(self, m => m.check_state(w))
    }
    fn entropy(&self, w: &State) -> Option<f64> {
        dispatch!(self, m => m.entropy(w))
    }
    fn entropy_source(&self, w: &State) -> Option<f64> {
        dispatch!(self, m => m.entropy_source(w))
    }
    fn primitive_names(&self) -> &'static [&'static str] {
        dispatch!(self, m => m.primitive_names())
    }
    fn to_primitive(&self, w: &State) -> State {
        dispatch!(self, m => m.to_primitive(w))
    }
    fn from_primitive(&self, p: &State) -> State {
        dispatch!(self, m => m.from_primitive(p))
    }
}

impl From<JinXinModel> for AnyModel {
    fn from(m: JinXinModel) -> Self {
        AnyModel::JinXin(m)
    }
}

impl From<ChaplyginModel> for AnyModel {
    fn from(m: ChaplyginModel) -> Self {
        AnyModel::Chaplygin(m)
    }
}

impl From<TwoPhaseModel> for AnyModel {
    fn from(m: TwoPhaseModel) -> Self {
        AnyModel::TwoPhase(m)
    }
}
