//! Discrete error norms and grid transfer.

use crate::error::SolverError;
use crate::state::{Field, Grid1D, State};

fn same_grid(a: &Field, b: &Field) -> Result<(), SolverError> {
    if a.grid != b.grid || a.data.len() != b.data.len() {
        return Err(SolverError::GridMismatch(format!(
            "{} cells on [{}, {}] vs {} cells on [{}, {}]",
            a.grid.n_cells(),
            a.grid.x_min(),
            a.grid.x_max(),
            b.grid.n_cells(),
            b.grid.x_min(),
            b.grid.x_max()
        )));
    }
    Ok(())
}

fn check_component(a: &Field, component: usize) -> Result<(), SolverError> {
    match a.data.first() {
        Some(w) if component >= w.len() => {
            Err(SolverError::config(format!("component {component} out of range for {}-component states", w.len())))
        }
        _ => Ok(()),
    }
}

/// Component and spatial window over which errors are measured.
///
/// Without a window every cell counts; with `(lo, hi)` only the cells whose
/// centre lies in `[lo, hi]`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ErrorMeasure {
    pub component: usize,
    pub window: Option<(f64, f64)>,
}

impl ErrorMeasure {
    pub fn component(component: usize) -> Self {
        ErrorMeasure { component, window: None }
    }

    pub fn within(self, lo: f64, hi: f64) -> Self {
        ErrorMeasure { window: Some((lo, hi)), ..self }
    }

    fn differences<'a>(&self, a: &'a Field, b: &'a Field) -> Result<impl Iterator<Item = f64> + 'a, SolverError> {
        same_grid(a, b)?;
        check_component(a, self.component)?;
        if let Some((lo, hi)) = self.window {
            if !(lo <= hi) {
                return Err(SolverError::config(format!("empty error window [{lo}, {hi}]")));
            }
        }
        let (c, window, grid) = (self.component, self.window, a.grid);
        Ok(a.data.iter().zip(&b.data).enumerate().filter_map(move |(j, (x, y))| {
            let inside = window.is_none_or(|(lo, hi)| {
                let xc = grid.center(j);
                lo <= xc && xc <= hi
            });
            inside.then(|| (x[c] - y[c]).abs())
        }))
    }

    /// `sqrt(sum_j (a_j - b_j)^2 dx)` over the measured cells.
    pub fn l2(&self, a: &Field, b: &Field) -> Result<f64, SolverError> {
        let sum: f64 = self.differences(a, b)?.map(|d| d * d).sum();
        Ok((sum * a.grid.dx()).sqrt())
    }

    /// `max_j |a_j - b_j|` over the measured cells.
    pub fn linf(&self, a: &Field, b: &Field) -> Result<f64, SolverError> {
        Ok(self.differences(a, b)?.fold(0.0, f64::max))
    }
}

/// `sqrt(sum_j (a_j - b_j)^2 dx)` on one component.
pub fn l2_error(a: &Field, b: &Field, component: usize) -> Result<f64, SolverError> {
    ErrorMeasure::component(component).l2(a, b)
}

/// `max_j |a_j - b_j|` on one component.
pub fn linf_error(a: &Field, b: &Field, component: usize) -> Result<f64, SolverError> {
    ErrorMeasure::component(component).linf(a, b)
}

/// Cell averages of `fine` over the cells of `coarse`. The coarse grid must
/// cover the same interval with a cell count dividing the fine one.
pub fn restrict(fine: &Field, coarse: &Grid1D) -> Result<Field, SolverError> {
    let (nf, nc) = (fine.grid.n_cells(), coarse.n_cells());
    let same_bounds = (fine.grid.x_min() - coarse.x_min()).abs() <= 1e-12 * coarse.length()
        && (fine.grid.x_max() - coarse.x_max()).abs() <= 1e-12 * coarse.length();
    if !same_bounds || nf < nc || nf % nc != 0 {
        return Err(SolverError::GridMismatch(format!(
            "cannot restrict {nf} cells on [{}, {}] onto {nc} cells on [{}, {}]",
            fine.grid.x_min(),
            fine.grid.x_max(),
            coarse.x_min(),
            coarse.x_max()
        )));
    }
    let ratio = nf / nc;
    let scale = 1.0 / ratio as f64;
    let data = fine
        .data
        .chunks(ratio)
        .map(|chunk| {
            let mut acc = State::zeros(chunk[0].len());
            for w in chunk {
                acc += *w;
            }
            scale * acc
        })
        .collect();
    Ok(Field { grid: *coarse, data, time: fine.time })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn scalar_field(values: &[f64], length: f64) -> Field {
        let grid = Grid1D::new(0.0, length, values.len()).unwrap();
        Field::new(grid, values.iter().map(|&v| State::from([v])).collect(), 0.0).unwrap()
    }

    #[test]
    fn identical_fields_have_zero_distance() {
        let a = scalar_field(&[1.0, -2.0, 3.5], 3.0);
        assert_eq!(l2_error(&a, &a, 0).unwrap(), 0.0);
        assert_eq!(linf_error(&a, &a, 0).unwrap(), 0.0);
    }

    #[test]
    fn constant_offset() {
        let a = scalar_field(&[0.0; 8], 2.0);
        let b = scalar_field(&[0.25; 8], 2.0);
        assert!((l2_error(&a, &b, 0).unwrap() - 0.25 * 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn three_cell_example() {
        let a = scalar_field(&[0.0, 0.0, 0.0], 3.0);
        let b = scalar_field(&[1.0, 2.0, 2.0], 3.0);
        assert!((l2_error(&a, &b, 0).unwrap() - 3.0).abs() < 1e-15);
        assert_eq!(linf_error(&a, &b, 0).unwrap(), 2.0);
    }

    #[test]
    fn mismatched_grids_and_components() {
        let a = scalar_field(&[0.0, 0.0], 1.0);
        let b = scalar_field(&[0.0, 0.0, 0.0], 1.0);
        assert!(matches!(l2_error(&a, &b, 0), Err(SolverError::GridMismatch(_))));
        assert!(l2_error(&a, &a, 1).is_err());
    }

    #[test]
    fn window_selects_cell_centres() {
        let a = scalar_field(&[0.0; 4], 4.0);
        let b = scalar_field(&[1.0, 2.0, 3.0, 4.0], 4.0);
        let m = ErrorMeasure::component(0).within(1.0, 3.0);
        assert!((m.l2(&a, &b).unwrap() - 13f64.sqrt()).abs() < 1e-15);
        assert_eq!(m.linf(&a, &b).unwrap(), 3.0);
        assert_eq!(ErrorMeasure::component(0).within(5.0, 6.0).l2(&a, &b).unwrap(), 0.0);
        assert!(ErrorMeasure::component(0).within(2.0, 1.0).l2(&a, &b).is_err());
    }

    #[test]
    fn restriction_averages_blocks() {
        let fine = scalar_field(&[1.0, 3.0, 2.0, 2.0, -1.0, 1.0], 3.0);
        let coarse = Grid1D::new(0.0, 3.0, 3).unwrap();
        let r = restrict(&fine, &coarse).unwrap();
        assert_eq!(r.component(0), vec![2.0, 2.0, 0.0]);
        assert!(restrict(&fine, &Grid1D::new(0.0, 3.0, 4).unwrap()).is_err());
        assert!(restrict(&fine, &Grid1D::new(0.0, 2.0, 3).unwrap()).is_err());
    }

    proptest! {
        #[test]
        fn l2_is_a_metric(
            a in proptest::collection::vec(-10.0f64..10.0, 12),
            b in proptest::collection::vec(-10.0f64..10.0, 12),
            c in proptest::collection::vec(-10.0f64..10.0, 12),
        ) {
            let (fa, fb, fc) = (scalar_field(&a, 1.5), scalar_field(&b, 1.5), scalar_field(&c, 1.5));
            let ab = l2_error(&fa, &fb, 0).unwrap();
            let ba = l2_error(&fb, &fa, 0).unwrap();
            let ac = l2_error(&fa, &fc, 0).unwrap();
            let cb = l2_error(&fc, &fb, 0).unwrap();
            prop_assert!((ab - ba).abs() <= 1e-14);
            prop_assert!(ab <= ac + cb + 1e-14);
            prop_assert!(ab >= 0.0);
        }

        #[test]
        fn restriction_preserves_integrals(v in proptest::collection::vec(-5.0f64..5.0, 24)) {
            let fine = scalar_field(&v, 2.0);
            for n in [1usize, 2, 3, 4, 6, 8, 12, 24] {
                let r = restrict(&fine, &Grid1D::new(0.0, 2.0, n).unwrap()).unwrap();
                prop_assert!((r.integral(0) - fine.integral(0)).abs() <= 1e-12);
            }
        }
    }
}
