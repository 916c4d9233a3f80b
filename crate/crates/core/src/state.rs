//! Cell states, the uniform grid and the cell-averaged field.

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Sub};

use crate::error::SolverError;

/// Largest state dimension any shipped model uses.
pub const MAX_COMPONENTS: usize = 4;

/// A short, stack-allocated vector of state components.
///
/// The first `k` components are the conserved block, the remaining `n - k`
/// the relaxing block; which split applies is decided by the owning model.
#[derive(Clone, Copy, PartialEq)]
pub struct State {
    len: usize,
    data: [f64; MAX_COMPONENTS],
}

impl State {
    pub fn zeros(len: usize) -> Self {
        assert!(len <= MAX_COMPONENTS, "state length {len} exceeds {MAX_COMPONENTS}");
        State { len, data: [0.0; MAX_COMPONENTS] }
    }

    pub fn from_slice(values: &[f64]) -> Self {
        let mut s = State::zeros(values.len());
        s.data[..values.len()].copy_from_slice(values);
        s
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn as_slice(&self) -> &[f64] {
        &self.data[..self.len]
    }

    #[inline]
    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data[..self.len]
    }

    /// Components `start..start + len` as a new state.
    #[inline]
    pub fn segment(&self, start: usize, len: usize) -> State {
        State::from_slice(&self.data[start..start + len])
    }

    /// Overwrites components starting at `start` with `values`.
    #[inline]
    pub fn set_segment(&mut self, start: usize, values: &State) {
        self.data[start..start + values.len].copy_from_slice(values.as_slice());
    }

    pub fn is_finite(&self) -> bool {
        self.as_slice().iter().all(|v| v.is_finite())
    }

    /// Max-norm of the componentwise difference.
    pub fn max_abs_diff(&self, other: &State) -> f64 {
        debug_assert_eq!(self.len, other.len);
        self.as_slice().iter().zip(other.as_slice()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.as_slice().iter()
    }
}

impl fmt::Debug for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.as_slice()).finish()
    }
}

impl Index<usize> for State {
    type Output = f64;
    #[inline]
    fn index(&self, i: usize) -> &f64 {
        &self.as_slice()[i]
    }
}

impl IndexMut<usize> for State {
    #[inline]
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.as_mut_slice()[i]
    }
}

impl Add for State {
    type Output = State;
    #[inline]
    fn add(mut self, rhs: State) -> State {
        debug_assert_eq!(self.len, rhs.len);
        for i in 0..self.len {
            self.data[i] += rhs.data[i];
        }
        self
    }
}

impl AddAssign for State {
    #[inline]
    fn add_assign(&mut self, rhs: State) {
        *self = *self + rhs;
    }
}

impl Sub for State {
    type Output = State;
    #[inline]
    fn sub(mut self, rhs: State) -> State {
        debug_assert_eq!(self.len, rhs.len);
        for i in 0..self.len {
            self.data[i] -= rhs.data[i];
        }
        self
    }
}

impl Mul<State> for f64 {
    type Output = State;
    #[inline]
    fn mul(self, mut rhs: State) -> State {
        for v in rhs.as_mut_slice() {
            *v *= self;
        }
        rhs
    }
}

impl Mul<f64> for State {
    type Output = State;
    #[inline]
    fn mul(self, rhs: f64) -> State {
        rhs * self
    }
}

impl From<&[f64]> for State {
    fn from(values: &[f64]) -> Self {
        State::from_slice(values)
    }
}

impl<const N: usize> From<[f64; N]> for State {
    fn from(values: [f64; N]) -> Self {
        State::from_slice(&values)
    }
}

/// Uniform 1-D grid on `[x_min, x_max]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid1D {
    x_min: f64,
    x_max: f64,
    n_cells: usize,
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, n_cells: usize) -> Result<Self, SolverError> {
        if n_cells == 0 {
            return Err(SolverError::config("grid needs at least one cell"));
        }
        if !(x_min.is_finite() && x_max.is_finite()) || x_max <= x_min {
            return Err(SolverError::config(format!("invalid grid bounds [{x_min}, {x_max}]")));
        }
        Ok(Grid1D { x_min, x_max, n_cells })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    pub fn length(&self) -> f64 {
        self.x_max - self.x_min
    }

    #[inline]
    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / self.n_cells as f64
    }

    #[inline]
    pub fn center(&self, j: usize) -> f64 {
        self.x_min + (j as f64 + 0.5) * self.dx()
    }

    pub fn centers(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_cells).map(move |j| self.center(j))
    }
}

/// Cell averages over a grid at a given simulation time.
#[derive(Clone, Debug, PartialEq)]
pub struct Field {
    pub grid: Grid1D,
    pub data: Vec<State>,
    pub time: f64,
}

impl Field {
    pub fn new(grid: Grid1D, data: Vec<State>, time: f64) -> Result<Self, SolverError> {
        if data.len() != grid.n_cells() {
            return Err(SolverError::config(format!(
                "field has {} states for a {}-cell grid",
                data.len(),
                grid.n_cells()
            )));
        }
        Ok(Field { grid, data, time })
    }

    /// Samples `init` at every cell center.
    pub fn from_fn(grid: Grid1D, mut init: impl FnMut(f64) -> State) -> Self {
        let data = grid.centers().map(&mut init).collect();
        Field { grid, data, time: 0.0 }
    }

    pub fn n_cells(&self) -> usize {
        self.data.len()
    }

    /// Component `c` of every cell.
    pub fn component(&self, c: usize) -> Vec<f64> {
        self.data.iter().map(|w| w[c]).collect()
    }

    /// Sum over cells of component `c` times `dx`.
    pub fn integral(&self, c: usize) -> f64 {
        let dx = self.grid.dx();
        self.data.iter().map(|w| w[c]).sum::<f64>() * dx
    }
}
