use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::SweepResult;
use crate::error::Result;

/// Twelve significant digits in scientific notation.
pub fn format_value(v: f64) -> String {
    format!("{v:.11e}")
}

pub fn write_csv<W: Write>(result: &SweepResult, mut out: W) -> std::io::Result<()> {
    writeln!(out, "{}", result.columns.join(","))?;
    for row in &result.rows {
        out.write_all(row.series.as_bytes())?;
        write!(out, ",{}", format_value(row.x))?;
        for v in &row.values {
            match v {
                Some(v) => write!(out, ",{}", format_value(*v))?,
                None => out.write_all(b",")?,
            }
        }
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn emit_csv(result: &SweepResult, path: impl AsRef<Path>) -> Result<()> {
    let file = File::create(path)?;
    write_csv(result, BufWriter::new(file))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ModelParams;
    use crate::sweep::{run_sweep, Param, Quantity, Series, SweepConfig};

    fn config(quantities: Vec<Quantity>) -> SweepConfig {
        SweepConfig {
            base: ModelParams {
                b1: 1.0,
                b2: 1.0,
                ..Default::default()
            },
            temperature: None,
            vary: Param::T,
            from: 0.1,
            to: 5.0,
            steps: 2,
            series: vec![],
            quantities,
            output: None,
            emit_svg: false,
        }
    }

    fn render(r: &SweepResult) -> String {
        let mut buf = Vec::new();
        write_csv(r, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn two_rows_make_three_lines() {
        let r = run_sweep(&config(vec![Quantity::Concurrence])).unwrap();
        let text = render(&r);
        assert_eq!(text.lines().count(), 3);
        assert!(text.ends_with('\n') && !text.contains('\r'));
        assert_eq!(text.lines().next().unwrap(), "series,T,concurrence");
        assert!(text
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("base,1.00000000000e-1,"));
    }

    #[test]
    fn absent_efficiency_is_an_empty_cell() {
        let r = run_sweep(&config(vec![Quantity::Eta, Quantity::W])).unwrap();
        for line in render(&r).lines().skip(1) {
            let cells: Vec<&str> = line.split(',').collect();
            assert_eq!(cells.len(), 4);
            assert_eq!(cells[2], "");
            assert!(!line.contains("NaN"));
        }
    }

    #[test]
    fn values_survive_a_write_read_cycle() {
        let cfg = SweepConfig {
            base: ModelParams {
                b1: 2.0,
                b2: 1.0,
                jx: 1.0,
                jy: 2.0,
                jz: 2.0,
                dz: 1.0,
                kz: 0.0,
            },
            vary: Param::Kz,
            from: 0.0,
            to: 10.0,
            steps: 17,
            series: vec![
                Series::with(&[(Param::T, 0.3)]),
                Series::with(&[(Param::T, 3.0)]),
            ],
            ..config(Quantity::ALL.to_vec())
        };
        let r = run_sweep(&cfg).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");
        emit_csv(&r, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        for (line, row) in text.lines().skip(1).zip(&r.rows) {
            let cells: Vec<&str> = line.split(',').collect();
            assert_eq!(cells[0], row.series);
            let x: f64 = cells[1].parse().unwrap();
            assert!((x - row.x).abs() <= 1e-12 * row.x.abs().max(f64::MIN_POSITIVE));
            for (cell, v) in cells[2..].iter().zip(&row.values) {
                match v {
                    Some(v) => {
                        let back: f64 = cell.parse().unwrap();
                        assert!((back - v).abs() <= 5e-12 * v.abs(), "{cell} vs {v}");
                    }
                    None => assert!(cell.is_empty()),
                }
            }
        }
        assert_eq!(text.lines().count(), 1 + r.rows.len());
    }

    #[test]
    fn unwritable_path_is_an_io_error() {
        let r = run_sweep(&config(vec![Quantity::W])).unwrap();
        let err = emit_csv(&r, "/nonexistent-dir/x.csv").unwrap_err();
        assert!(err.is_io());
    }
}
