//! Homogeneous Neumann boundaries by copy-extension.

use crate::state::{Field, State};

/// `cells` with `width` copies of the first and last cell prepended and appended.
pub fn extend_neumann(cells: &[State], width: usize) -> Vec<State> {
    assert!(!cells.is_empty(), "cannot extend an empty cell array");
    let first = cells[0];
    let last = cells[cells.len() - 1];
    let mut out = Vec::with_capacity(cells.len() + 2 * width);
    out.extend(std::iter::repeat_n(first, width));
    out.extend_from_slice(cells);
    out.extend(std::iter::repeat_n(last, width));
    out
}

/// Ghost-extended copy of the field's cells.
pub fn apply_neumann_ghosts(field: &Field, width: usize) -> Vec<State> {
    extend_neumann(&field.data, width)
}
