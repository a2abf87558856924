//! One-dimensional parameter sweeps.
//!
//! A [`SweepConfig`] fixes a base point, varies one parameter over a uniform
//! grid (endpoints included) and draws one curve per [`Series`]. Grid points
//! are evaluated in parallel; rows are always assembled series-major, then in
//! ascending grid order, so the output does not depend on scheduling.

mod config;
mod csv;
mod preset;
mod svg;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::correlations::{concurrence_x, steering};
use crate::error::{Error, Result};
use crate::model::{thermal_state, ModelParams};
use crate::thermo::thermo_report;

pub use config::parse_config;
pub use csv::{emit_csv, format_value, write_csv};
pub use preset::{figure_preset, PRESET_NAMES};
pub use svg::{emit_svg, render_svg};

/// A sweepable input: one of the seven couplings or the temperature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    B1,
    B2,
    Jx,
    Jy,
    Jz,
    Dz,
    Kz,
    T,
}

impl Param {
    pub const ALL: [Param; 8] = [
        Param::B1,
        Param::B2,
        Param::Jx,
        Param::Jy,
        Param::Jz,
        Param::Dz,
        Param::Kz,
        Param::T,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::B1 => "b1",
            Param::B2 => "b2",
            Param::Jx => "Jx",
            Param::Jy => "Jy",
            Param::Jz => "Jz",
            Param::Dz => "Dz",
            Param::Kz => "Kz",
            Param::T => "T",
        }
    }

    fn apply(self, value: f64, params: &mut ModelParams, temperature: &mut Option<f64>) {
        match self {
            Param::B1 => params.b1 = value,
            Param::B2 => params.b2 = value,
            Param::Jx => params.jx = value,
            Param::Jy => params.jy = value,
            Param::Jz => params.jz = value,
            Param::Dz => params.dz = value,
            Param::Kz => params.kz = value,
            Param::T => *temperature = Some(value),
        }
    }

    pub fn read(self, params: &ModelParams, temperature: Option<f64>) -> Option<f64> {
        Some(match self {
            Param::B1 => params.b1,
            Param::B2 => params.b2,
            Param::Jx => params.jx,
            Param::Jy => params.jy,
            Param::Jz => params.jz,
            Param::Dz => params.dz,
            Param::Kz => params.kz,
            Param::T => return temperature,
        })
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Param::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown parameter `{s}`"))
    }
}

/// A column that a sweep can report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    SAb,
    SBa,
    Delta12,
    Concurrence,
    W,
    Eta,
    SG,
    Ed,
    Sl,
    Wl,
    MutualInfo,
}

impl Quantity {
    pub const ALL: [Quantity; 11] = [
        Quantity::SAb,
        Quantity::SBa,
        Quantity::Delta12,
        Quantity::Concurrence,
        Quantity::W,
        Quantity::Eta,
        Quantity::SG,
        Quantity::Ed,
        Quantity::Sl,
        Quantity::Wl,
        Quantity::MutualInfo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::SAb => "s_ab",
            Quantity::SBa => "s_ba",
            Quantity::Delta12 => "delta12",
            Quantity::Concurrence => "concurrence",
            Quantity::W => "w",
            Quantity::Eta => "eta",
            Quantity::SG => "s_g",
            Quantity::Ed => "e_d",
            Quantity::Sl => "s_l",
            Quantity::Wl => "w_l",
            Quantity::MutualInfo => "mutual_info",
        }
    }

    fn needs_steering(self) -> bool {
        matches!(self, Quantity::SAb | Quantity::SBa | Quantity::Delta12)
    }

    fn needs_thermo(self) -> bool {
        !self.needs_steering() && self != Quantity::Concurrence
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| format!("unknown quantity `{s}`"))
    }
}

/// One curve: overrides applied on top of the base point.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Series {
    pub label: Option<String>,
    pub overrides: Vec<(Param, f64)>,
}

impl Series {
    pub fn with(overrides: &[(Param, f64)]) -> Self {
        Series {
            label: None,
            overrides: overrides.to_vec(),
        }
    }

    /// Explicit label, or `name=value` pairs joined by `;`, or `base`.
    pub fn display_label(&self) -> String {
        if let Some(label) = &self.label {
            return label.clone();
        }
        if self.overrides.is_empty() {
            return "base".to_string();
        }
        self.overrides
            .iter()
            .map(|(p, v)| format!("{p}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub base: ModelParams,
    /// Base temperature; unused when `vary` is `T`.
    pub temperature: Option<f64>,
    pub vary: Param,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    /// Empty means a single curve at the base point.
    pub series: Vec<Series>,
    pub quantities: Vec<Quantity>,
    /// Output path stem (no extension).
    pub output: Option<String>,
    pub emit_svg: bool,
}

pub const DEFAULT_STEPS: usize = 200;

impl SweepConfig {
    /// Checks every structural invariant of the configuration.
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::Validation(msg));
        self.base
            .validate()
            .map_err(|e| Error::Validation(e.to_string()))?;
        if !(self.from.is_finite() && self.to.is_finite()) {
            return invalid("sweep bounds must be finite".into());
        }
        if !(self.from < self.to) {
            return invalid(format!(
                "from ({}) must be less than to ({})",
                self.from, self.to
            ));
        }
        if self.steps < 2 {
            return invalid(format!("steps must be at least 2, got {}", self.steps));
        }
        if self.vary == Param::T && !(self.from > 0.0) {
            return invalid(format!(
                "temperature sweep must start above 0, got from = {}",
                self.from
            ));
        }
        for (i, q) in self.quantities.iter().enumerate() {
            if self.quantities[..i].contains(q) {
                return invalid(format!("quantity `{q}` listed twice"));
            }
        }
        let mut labels = Vec::new();
        for s in &self.series {
            for (i, (p, v)) in s.overrides.iter().enumerate() {
                if *p == self.vary {
                    return invalid(format!("series overrides the swept parameter `{p}`"));
                }
                if s.overrides[..i].iter().any(|(q, _)| q == p) {
                    return invalid(format!("series overrides `{p}` twice"));
                }
                if !v.is_finite() {
                    return invalid(format!("series value for `{p}` is not finite"));
                }
            }
            let label = s.display_label();
            if let Some(l) = &s.label {
                if l.is_empty() || l.trim() != l || l.contains([',', '#', '\n', '\r']) {
                    return invalid(format!(
                        "series label `{l}` must be non-empty, trimmed, and free of `,` and `#`"
                    ));
                }
            }
            if labels.contains(&label) {
                return invalid(format!("duplicate series label `{label}`"));
            }
            labels.push(label);
        }
        if self.vary != Param::T && self.temperature.is_none() {
            let all_set = !self.series.is_empty()
                && self
                    .series
                    .iter()
                    .all(|s| s.overrides.iter().any(|(p, _)| *p == Param::T));
            if !all_set {
                return invalid("temperature T is not set in [base] or in every [series]".into());
            }
        }
        if let Some(out) = &self.output {
            if out.is_empty() || out.trim() != out || out.contains('#') {
                return invalid(format!(
                    "output `{out}` must be non-empty, trimmed, and free of `#`"
                ));
            }
        }
        Ok(())
    }

    /// Uniform grid with both endpoints included exactly.
    pub fn grid(&self) -> Vec<f64> {
        let n = self.steps;
        (0..n)
            .map(|i| {
                if i == n - 1 {
                    self.to
                } else {
                    self.from + (self.to - self.from) * (i as f64) / ((n - 1) as f64)
                }
            })
            .collect()
    }

    fn effective_series(&self) -> Vec<Series> {
        if self.series.is_empty() {
            vec![Series::default()]
        } else {
            self.series.clone()
        }
    }

    /// Column names: `series`, the swept parameter, then each quantity.
    pub fn columns(&self) -> Vec<String> {
        let mut cols = vec!["series".to_string(), self.vary.name().to_string()];
        cols.extend(self.quantities.iter().map(|q| q.name().to_string()));
        cols
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub series: String,
    pub x: f64,
    /// One cell per quantity; `None` only for an undefined efficiency.
    pub values: Vec<Option<f64>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    pub columns: Vec<String>,
    pub rows: Vec<SweepRow>,
    /// The fully resolved configuration that produced the rows.
    pub provenance: SweepConfig,
}

impl SweepResult {
    pub fn vary(&self) -> Param {
        self.provenance.vary
    }

    pub fn quantities(&self) -> &[Quantity] {
        &self.provenance.quantities
    }

    /// Rows grouped by series label, in output order.
    pub fn series_blocks(&self) -> Vec<(&str, &[SweepRow])> {
        let steps = self.provenance.steps;
        self.rows
            .chunks(steps)
            .map(|chunk| (chunk[0].series.as_str(), chunk))
            .collect()
    }
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepResult> {
    run_sweep_with_threads(cfg, 0)
}

/// Same as [`run_sweep`] on a dedicated pool of `threads` workers
/// (`0` picks the rayon default).
pub fn run_sweep_with_threads(cfg: &SweepConfig, threads: usize) -> Result<SweepResult> {
    cfg.validate()?;
    let grid = cfg.grid();
    let series = cfg.effective_series();
    let jobs: Vec<(usize, usize)> = (0..series.len())
        .flat_map(|s| (0..grid.len()).map(move |g| (s, g)))
        .collect();

    let eval = || -> Result<Vec<SweepRow>> {
        jobs.par_iter()
            .map(|&(s, g)| evaluate_point(cfg, &series[s], grid[g]))
            .collect()
    };
    let rows = if threads == 0 {
        eval()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Validation(format!("cannot start {threads} worker threads: {e}")))?
            .install(eval)?
    };

    Ok(SweepResult {
        columns: cfg.columns(),
        rows,
        provenance: cfg.clone(),
    })
}

fn evaluate_point(cfg: &SweepConfig, series: &Series, x: f64) -> Result<SweepRow> {
    let label = series.display_label();
    let mut params = cfg.base;
    let mut temperature = cfg.temperature;
    for &(p, v) in &series.overrides {
        p.apply(v, &mut params, &mut temperature);
    }
    cfg.vary.apply(x, &mut params, &mut temperature);
    let at_point = |source: Error| Error::AtGridPoint {
        series: label.clone(),
        axis: cfg.vary.name(),
        value: x,
        source: Box::new(source),
    };
    let t = temperature.unwrap_or(f64::NAN);
    let values = point_values(&params, t, &cfg.quantities).map_err(at_point)?;

    for (q, v) in cfg.quantities.iter().zip(&values) {
        if matches!(v, Some(v) if !v.is_finite()) || (v.is_none() && *q != Quantity::Eta) {
            return Err(Error::NonFiniteValue {
                quantity: q.name(),
                series: label,
                axis: cfg.vary.name(),
                value: x,
            });
        }
    }
    Ok(SweepRow {
        series: label,
        x,
        values,
    })
}

fn point_values(params: &ModelParams, t: f64, quantities: &[Quantity]) -> Result<Vec<Option<f64>>> {
    let ts = thermal_state(params, t)?;
    let steer = if quantities.iter().any(|q| q.needs_steering()) {
        Some(steering(&ts.rho)?)
    } else {
        None
    };
    let thermo = if quantities.iter().any(|q| q.needs_thermo()) {
        Some(thermo_report(&ts, params)?)
    } else {
        None
    };
    quantities
        .iter()
        .map(|q| {
            Ok(match q {
                Quantity::SAb => steer.map(|s| s.s_ab),
                Quantity::SBa => steer.map(|s| s.s_ba),
                Quantity::Delta12 => steer.map(|s| s.delta12),
                Quantity::Concurrence => Some(concurrence_x(&ts.rho)?),
                Quantity::W => thermo.map(|r| r.w),
                Quantity::Eta => thermo.and_then(|r| r.eta),
                Quantity::SG => thermo.map(|r| r.s_g),
                Quantity::Ed => thermo.map(|r| r.e_d),
                Quantity::Sl => thermo.map(|r| r.s_l),
                Quantity::Wl => thermo.map(|r| r.w_l),
                Quantity::MutualInfo => thermo.map(|r| r.mutual_info),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal() -> SweepConfig {
        SweepConfig {
            base: ModelParams::default(),
            temperature: None,
            vary: Param::T,
            from: 0.1,
            to: 5.0,
            steps: 2,
            series: vec![],
            quantities: vec![Quantity::Concurrence],
            output: None,
            emit_svg: false,
        }
    }

    #[test]
    fn two_steps_one_series() {
        let r = run_sweep(&minimal()).unwrap();
        assert_eq!(r.rows.len(), 2);
        assert_eq!(r.columns, ["series", "T", "concurrence"]);
        assert_eq!(r.rows[0].x, 0.1);
        assert_eq!(r.rows[1].x, 5.0);
    }

    #[test]
    fn grid_is_uniform_and_inclusive() {
        let cfg = SweepConfig {
            from: 0.0,
            to: 1.0,
            steps: 11,
            vary: Param::Kz,
            temperature: Some(1.0),
            ..minimal()
        };
        let g = cfg.grid();
        assert_eq!(g.len(), 11);
        assert_eq!((g[0], g[10]), (0.0, 1.0));
        assert!(g.windows(2).all(|w| w[1] > w[0]));
        assert!((g[3] - 0.3).abs() < 1e-15);
    }

    #[test]
    fn rows_are_series_major() {
        let cfg = SweepConfig {
            vary: Param::Kz,
            from: 0.0,
            to: 2.0,
            steps: 5,
            series: vec![
                Series::with(&[(Param::T, 0.5)]),
                Series::with(&[(Param::T, 1.0)]),
            ],
            quantities: Quantity::ALL.to_vec(),
            ..minimal()
        };
        let r = run_sweep(&cfg).unwrap();
        assert_eq!(r.rows.len(), 10);
        let blocks = r.series_blocks();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].0, "T=0.5");
        assert_eq!(blocks[1].0, "T=1");
        for (_, rows) in blocks {
            assert!(rows.windows(2).all(|w| w[1].x > w[0].x));
        }
    }

    #[test]
    fn parallelism_does_not_change_results() {
        let cfg = SweepConfig {
            vary: Param::Kz,
            from: 0.0,
            to: 10.0,
            steps: 50,
            base: ModelParams {
                b1: 2.0,
                b2: 1.0,
                jx: 2.0,
                jy: 2.0,
                jz: 2.0,
                dz: 1.0,
                kz: 0.0,
            },
            series: vec![
                Series::with(&[(Param::T, 0.1)]),
                Series::with(&[(Param::T, 0.4)]),
            ],
            quantities: Quantity::ALL.to_vec(),
            ..minimal()
        };
        let serial = run_sweep_with_threads(&cfg, 1).unwrap();
        let parallel = run_sweep_with_threads(&cfg, 4).unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn validation_rules() {
        let bad = |cfg: SweepConfig| matches!(cfg.validate(), Err(Error::Validation(_)));
        assert!(bad(SweepConfig {
            from: 5.0,
            to: 1.0,
            ..minimal()
        }));
        assert!(bad(SweepConfig {
            steps: 1,
            ..minimal()
        }));
        assert!(bad(SweepConfig {
            from: 0.0,
            ..minimal()
        }));
        assert!(bad(SweepConfig {
            series: vec![Series::with(&[(Param::T, 1.0)])],
            ..minimal()
        }));
        assert!(bad(SweepConfig {
            vary: Param::Kz,
            from: 0.0,
            ..minimal()
        }));
        assert!(bad(SweepConfig {
            quantities: vec![Quantity::W, Quantity::W],
            ..minimal()
        }));
        assert!(minimal().validate().is_ok());
    }

    #[test]
    fn non_positive_temperature_names_the_grid_point() {
        let cfg = SweepConfig {
            vary: Param::Kz,
            from: 0.0,
            to: 1.0,
            temperature: Some(-1.0),
            ..minimal()
        };
        match run_sweep(&cfg) {
            Err(Error::AtGridPoint {
                series,
                axis,
                value,
                source,
            }) => {
                assert_eq!(series, "base");
                assert_eq!(axis, "Kz");
                assert_eq!(value, 0.0);
                assert!(matches!(*source, Error::NonPositiveTemperature(t) if t == -1.0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn names_round_trip() {
        for p in Param::ALL {
            assert_eq!(p.name().parse::<Param>().unwrap(), p);
        }
        for q in Quantity::ALL {
            assert_eq!(q.name().parse::<Quantity>().unwrap(), q);
        }
        assert!("kz".parse::<Param>().is_err());
    }
}
