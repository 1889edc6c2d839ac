//! CSV serialization of grids and dip traces.
//!
//! Numbers are written with 12 significant digits so repeated runs produce
//! byte-identical files and parsed values agree to well within 1e-9.

use std::path::Path;

use super::{CoincidenceGrid, DipTrace};
use crate::error::{Error, Result};
use crate::mode_index::SpatialMode;

const SIGNIFICANT_DIGITS: usize = 12;

/// Shortest of fixed or exponent notation carrying 12 significant digits,
/// with trailing zeros removed. Zero (of either sign) is written as `0`.
pub fn format_number(value: f64) -> String {
    if value == 0.0 {
        return "0".into();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let exponent = value.abs().log10().floor() as i32;
    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exponent) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exponent).max(0) as usize;
        trim_fraction(&format!("{value:.decimals$}")).to_string()
    } else {
        let text = format!("{value:.prec$e}", prec = SIGNIFICANT_DIGITS - 1);
        let (mantissa, exp) = text.split_once('e').expect("exponent notation");
        format!("{}e{exp}", trim_fraction(mantissa))
    }
}

fn trim_fraction(text: &str) -> &str {
    if text.contains('.') {
        text.trim_end_matches('0').trim_end_matches('.')
    } else {
        text
    }
}

fn csv_error(path: &Path, source: csv::Error) -> Error {
    Error::Csv {
        path: path.to_path_buf(),
        source,
    }
}

fn parse_error(path: &Path, line: usize, what: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{}:{line}: {what}", path.display()))
}

/// Header `modeC,<mode labels>`; one row per detector-C mode.
pub fn write_grid<W: std::io::Write>(grid: &CoincidenceGrid, out: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    let header =
        std::iter::once("modeC".to_string()).chain(grid.cols.iter().map(|m| m.to_string()));
    writer.write_record(header)?;
    for (mode, row) in grid.rows.iter().zip(&grid.counts) {
        let record = std::iter::once(mode.to_string()).chain(row.iter().map(|&c| format_number(c)));
        writer.write_record(record)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn write_grid_csv(grid: &CoincidenceGrid, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    write_grid(grid, file).map_err(|e| csv_error(path, e))
}

pub fn read_grid_csv(path: impl AsRef<Path>) -> Result<CoincidenceGrid> {
    let path = path.as_ref();
    let mut reader = csv::Reader::from_path(path).map_err(|e| csv_error(path, e))?;
    let header = reader.headers().map_err(|e| csv_error(path, e))?.clone();
    let cols = header
        .iter()
        .skip(1)
        .map(|label| {
            label
                .parse::<SpatialMode>()
                .map_err(|e| parse_error(path, 1, e))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut rows = Vec::new();
    let mut counts = Vec::new();
    for (k, record) in reader.records().enumerate() {
        let line = k + 2;
        let record = record.map_err(|e| csv_error(path, e))?;
        let mut fields = record.iter();
        let label = fields.next().unwrap_or_default();
        rows.push(
            label
                .parse::<SpatialMode>()
                .map_err(|e| parse_error(path, line, e))?,
        );
        let row = fields
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|e| parse_error(path, line, format!("{f:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        counts.push(row);
    }
    Ok(CoincidenceGrid { rows, cols, counts })
}

/// Header `delay_s,counts`.
pub fn write_trace<W: std::io::Write>(trace: &DipTrace, out: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["delay_s", "counts"])?;
    for &(tau, counts) in &trace.points {
        writer.write_record([format_number(tau), format_number(counts)])?;
    }
    writer.flush()?;
    Ok(())
}

pub fn write_trace_csv(trace: &DipTrace, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    write_trace(trace, file).map_err(|e| csv_error(path, e))
}

/// Returns the `(delay, counts)` points of a trace file.
pub fn read_trace_csv(path: impl AsRef<Path>) -> Result<Vec<(f64, f64)>> {
    let path = path.as_ref();
    let mut reader = csv::Reader::from_path(path).map_err(|e| csv_error(path, e))?;
    let mut points = Vec::new();
    for (k, record) in reader.deserialize::<(f64, f64)>().enumerate() {
        points.push(record.map_err(|e| match e.kind() {
            csv::ErrorKind::Deserialize { .. } => parse_error(path, k + 2, e),
            _ => csv_error(path, e),
        })?);
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::{scan_dip, scan_grid, Interference, RunConfig};
    use crate::mode_index::{Basis, LGIndex};

    #[test]
    fn number_format() {
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(0.25), "0.25");
        assert_eq!(format_number(-2.5), "-2.5");
        assert_eq!(format_number(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_number(1234.5), "1234.5");
        assert_eq!(format_number(1.5e-13), "1.5e-13");
        assert_eq!(format_number(6.02e23), "6.02e23");
        assert_eq!(format_number(1e-5), "0.00001");
    }

    #[test]
    fn number_format_precision() {
        for x in [
            std::f64::consts::PI,
            1.0 / 7.0,
            123456.789012345,
            9.87654321e-20,
            -4.2e15,
        ] {
            let back: f64 = format_number(x).parse().unwrap();
            assert!(((back - x) / x).abs() < 1e-11, "{x} -> {back}");
        }
    }

    #[test]
    fn single_cell_grid() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("one.csv");
        let mode: SpatialMode = "HG(0,0)".parse().unwrap();
        let grid = CoincidenceGrid {
            rows: vec![mode],
            cols: vec![mode],
            counts: vec![vec![0.0]],
        };
        write_grid_csv(&grid, &path).unwrap();
        assert_eq!(
            std::fs::read_to_string(&path).unwrap(),
            "modeC,\"HG(0,0)\"\n\"HG(0,0)\",0\n"
        );
        assert_eq!(read_grid_csv(&path).unwrap(), grid);
    }

    #[test]
    fn grid_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("grid.csv");
        let grid = scan_grid(&RunConfig {
            dove_theta_degrees: 45.0,
            pair_rate: 1234.0,
            ..RunConfig::default()
        })
        .unwrap();
        write_grid_csv(&grid, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(
            text.starts_with("modeC,\"HG(0,0)\",\"HG(1,0)\""),
            "{}",
            &text[..40]
        );

        let back = read_grid_csv(&path).unwrap();
        assert_eq!(back.rows, grid.rows);
        assert_eq!(back.cols, grid.cols);
        for ((_, _, a), (_, _, b)) in grid.cells().zip(back.cells()) {
            assert!((a - b).abs() <= 1e-9 * a.abs().max(1e-300), "{a} vs {b}");
        }
    }

    #[test]
    fn trace_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("dip.csv");
        let cfg = RunConfig {
            detection_basis: Basis::Lg,
            interference: Interference::DelayScan,
            delays: vec![-3e-13, 0.0, 1e-13, 4e-13],
            ..RunConfig::default()
        };
        let (u, v) = (LGIndex::new(0, 1).into(), LGIndex::new(0, -1).into());
        let trace = scan_dip(&cfg, u, v).unwrap();
        write_trace_csv(&trace, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("delay_s,counts\n-3e-13,"));
        let back = read_trace_csv(&path).unwrap();
        assert_eq!(back.len(), 4);
        for ((t0, c0), (t1, c1)) in trace.points.iter().zip(&back) {
            assert!((t0 - t1).abs() <= 1e-9 * t0.abs());
            assert!((c0 - c1).abs() <= 1e-9 * c0.abs().max(1e-300));
        }
    }

    #[test]
    fn errors_carry_the_path() {
        let dir = tempfile::tempdir().unwrap();
        let missing = dir.path().join("missing.csv");
        let err = read_grid_csv(&missing).unwrap_err().to_string();
        assert!(err.contains("missing.csv"), "{err}");

        let bad = dir.path().join("bad.csv");
        std::fs::write(&bad, "modeC,\"HG(0,0)\"\n\"HG(0,0)\",abc\n").unwrap();
        let err = read_grid_csv(&bad).unwrap_err().to_string();
        assert!(err.contains("bad.csv:2"), "{err}");
    }
}
