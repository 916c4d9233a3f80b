//! Plain-text CSV encoding of profiles and comparison tables.

use crate::error::SolverError;
use crate::model::RelaxationModel;
use crate::state::Field;

/// Scientific notation with 17 significant digits, enough to round-trip
/// every finite `f64`.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// Header `x,<primitive names>` and one row per cell.
pub fn profile_csv<M: RelaxationModel + ?Sized>(field: &Field, model: &M) -> String {
    let names = model.primitive_names();
    let mut out = String::with_capacity(24 * (names.len() + 1) * (field.n_cells() + 1));
    out.push('x');
    for n in names {
        out.push(',');
        out.push_str(n);
    }
    out.push('\n');
    for (x, w) in field.grid.centers().zip(&field.data) {
        out.push_str(&fmt_f64(x));
        let p = model.to_primitive(w);
        for v in p.iter() {
            out.push(',');
            out.push_str(&fmt_f64(*v));
        }
        out.push('\n');
    }
    out
}

/// Header names and numeric rows of a comma-separated table.
pub fn parse_csv(text: &str) -> Result<(Vec<String>, Vec<Vec<f64>>), SolverError> {
    let mut lines = text.lines();
    let header: Vec<String> =
        lines.next().ok_or_else(|| SolverError::config("empty CSV"))?.split(',').map(str::to_owned).collect();
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let row = line
            .split(',')
            .map(|s| s.parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| SolverError::config(format!("CSV line {}: {e}", i + 2)))?;
        if row.len() != header.len() {
            return Err(SolverError::config(format!(
                "CSV line {} has {} fields, header has {}",
                i + 2,
                row.len(),
                header.len()
            )));
        }
        rows.push(row);
    }
    Ok((header, rows))
}

/// Distances of one run to a reference, per primitive variable.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceRow {
    pub label: String,
    pub variable: String,
    pub l2: f64,
    pub linf: f64,
}

pub fn distances<M: RelaxationModel + ?Sized>(
    label: &str,
    run: &Field,
    reference: &Field,
    model: &M,
) -> Result<Vec<DistanceRow>, SolverError> {
    let to_prim =
        |f: &Field| Field { grid: f.grid, data: f.data.iter().map(|w| model.to_primitive(w)).collect(), time: f.time };
    let (a, b) = (to_prim(run), to_prim(reference));
    model
        .primitive_names()
        .iter()
        .enumerate()
        .map(|(c, name)| {
            Ok(DistanceRow {
                label: label.to_owned(),
                variable: (*name).to_owned(),
                l2: crate::harness::norms::l2_error(&a, &b, c)?,
                linf: crate::harness::norms::linf_error(&a, &b, c)?,
            })
        })
        .collect()
}

pub fn distances_csv(rows: &[DistanceRow]) -> String {
    let mut out = String::from("run,variable,l2,linf\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.label, r.variable, fmt_f64(r.l2), fmt_f64(r.linf)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{ChaplyginModel, TwoPhaseModel};
    use crate::state::{Grid1D, State};
    use proptest::prelude::*;

    #[test]
    fn profile_header_follows_model() {
        let m = TwoPhaseModel::new(1.6, 1.5).unwrap();
        let grid = Grid1D::new(-0.5, 0.5, 3).unwrap();
        let f = Field::from_fn(grid, |_| m.from_primitive(&State::from([1.0, 0.1, 0.2, 1.0])));
        let csv = profile_csv(&f, &m);
        assert!(csv.starts_with("x,rho,u,p,phi\n"));
        assert_eq!(csv.lines().count(), 4);
    }

    #[test]
    fn malformed_csv_is_rejected() {
        assert!(parse_csv("").is_err());
        assert!(parse_csv("x,u\n1,2,3\n").is_err());
        assert!(parse_csv("x,u\n1,abc\n").is_err());
    }

    proptest! {
        #[test]
        fn profile_round_trip_is_bit_exact(values in proptest::collection::vec((0.1f64..10.0, -1e3f64..1e3, 0.1f64..10.0), 1..40)) {
            let m = ChaplyginModel::new(1.8, 1.4).unwrap();
            let grid = Grid1D::new(-1.0, 1.0, values.len()).unwrap();
            let data: Vec<State> = values.iter().map(|&(a, b, c)| State::from([a, b, c])).collect();
            let f = Field::new(grid, data, 0.0).unwrap();
            let (header, rows) = parse_csv(&profile_csv(&f, &m)).unwrap();
            prop_assert_eq!(header, vec!["x", "tau", "u", "T"]);
            for ((row, w), x) in rows.iter().zip(&f.data).zip(grid.centers()) {
                prop_assert_eq!(row[0].to_bits(), x.to_bits());
                for c in 0..3 {
                    prop_assert_eq!(row[c + 1].to_bits(), w[c].to_bits());
                }
            }
        }
    }
}
