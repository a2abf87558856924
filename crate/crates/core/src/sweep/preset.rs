//! Built-in sweeps reproducing each sub-figure.
//!
//! | preset | vary | range | series | quantities |
//! |---|---|---|---|---|
//! | fig1a | Kz | 0..10 | T = 0.1, 0.2, 0.4 | s_ab |
//! | fig1b | T | 0.01..1 | Kz = 0.5, 1, 2, 3 | s_ab |
//! | fig1c | T | 0.01..1 | Kz = 3 | s_ab, s_ba, delta12 |
//! | fig2a | Kz | 0..10 | T = 0.1, 0.5, 1 | concurrence |
//! | fig2b | T | 0.01..5 | Kz = 0, 2, 4, 6 | concurrence |
//! | fig2c | T | 0.01..2 | Kz = 1 | concurrence, s_ab |
//! | fig3a | Kz | 0..50 | T = 1, 10, 20, 50 | w |
//! | fig3b | Kz | 0..50 | T = 1, 10, 20, 50 | eta |
//! | fig3c | Kz | 0..50 | T = 1 | w, e_d, s_g, s_l, w_l |
//! | fig4a | T | 0.01..200 | Kz = 0, 2, 5, 10 | w |
//! | fig4b | T | 0.01..200 | Kz = 0, 2, 5, 10 | eta |
//! | fig4c | T | 0.01..200 | Kz = 10 | w, e_d, s_g, s_l, w_l |
//!
//! Coupling values come from the figure captions. Ranges are read off the
//! plotted axes; temperature axes drawn from 0 start at 0.01. Every preset
//! uses 200 grid points.

use super::{Param, Quantity, Series, SweepConfig, DEFAULT_STEPS};
use crate::error::{Error, Result};
use crate::model::ModelParams;

pub const PRESET_NAMES: [&str; 12] = [
    "fig1a", "fig1b", "fig1c", "fig2a", "fig2b", "fig2c", "fig3a", "fig3b", "fig3c", "fig4a",
    "fig4b", "fig4c",
];

const T_MIN: f64 = 0.01;

fn fig1_base() -> ModelParams {
    ModelParams {
        b1: 2.0,
        b2: 1.0,
        jx: 2.0,
        jy: 2.0,
        jz: 2.0,
        dz: 1.0,
        kz: 0.0,
    }
}

fn fig2_base() -> ModelParams {
    ModelParams {
        b1: 2.0,
        b2: 1.0,
        jx: 1.0,
        jy: 2.0,
        jz: 2.0,
        dz: 1.0,
        kz: 0.0,
    }
}

fn fig34_base() -> ModelParams {
    ModelParams {
        b1: 1.0,
        b2: 1.0,
        jx: 1.0,
        jy: 0.0,
        jz: 1.0,
        dz: 1.0,
        kz: 0.0,
    }
}

fn curves(p: Param, values: &[f64]) -> Vec<Series> {
    values.iter().map(|&v| Series::with(&[(p, v)])).collect()
}

pub fn figure_preset(name: &str) -> Result<SweepConfig> {
    use Quantity::*;
    let thermo_terms = vec![W, Ed, SG, Sl, Wl];
    let (base, vary, from, to, series, quantities) = match name {
        "fig1a" => (
            fig1_base(),
            Param::Kz,
            0.0,
            10.0,
            curves(Param::T, &[0.1, 0.2, 0.4]),
            vec![SAb],
        ),
        "fig1b" => (
            fig1_base(),
            Param::T,
            T_MIN,
            1.0,
            curves(Param::Kz, &[0.5, 1.0, 2.0, 3.0]),
            vec![SAb],
        ),
        "fig1c" => (
            fig1_base(),
            Param::T,
            T_MIN,
            1.0,
            curves(Param::Kz, &[3.0]),
            vec![SAb, SBa, Delta12],
        ),
        "fig2a" => (
            fig2_base(),
            Param::Kz,
            0.0,
            10.0,
            curves(Param::T, &[0.1, 0.5, 1.0]),
            vec![Concurrence],
        ),
        "fig2b" => (
            fig2_base(),
            Param::T,
            T_MIN,
            5.0,
            curves(Param::Kz, &[0.0, 2.0, 4.0, 6.0]),
            vec![Concurrence],
        ),
        "fig2c" => (
            fig2_base(),
            Param::T,
            T_MIN,
            2.0,
            curves(Param::Kz, &[1.0]),
            vec![Concurrence, SAb],
        ),
        "fig3a" => (
            fig34_base(),
            Param::Kz,
            0.0,
            50.0,
            curves(Param::T, &[1.0, 10.0, 20.0, 50.0]),
            vec![W],
        ),
        "fig3b" => (
            fig34_base(),
            Param::Kz,
            0.0,
            50.0,
            curves(Param::T, &[1.0, 10.0, 20.0, 50.0]),
            vec![Eta],
        ),
        "fig3c" => (
            fig34_base(),
            Param::Kz,
            0.0,
            50.0,
            curves(Param::T, &[1.0]),
            thermo_terms,
        ),
        "fig4a" => (
            fig34_base(),
            Param::T,
            T_MIN,
            200.0,
            curves(Param::Kz, &[0.0, 2.0, 5.0, 10.0]),
            vec![W],
        ),
        "fig4b" => (
            fig34_base(),
            Param::T,
            T_MIN,
            200.0,
            curves(Param::Kz, &[0.0, 2.0, 5.0, 10.0]),
            vec![Eta],
        ),
        "fig4c" => (
            fig34_base(),
            Param::T,
            T_MIN,
            200.0,
            curves(Param::Kz, &[10.0]),
            thermo_terms,
        ),
        _ => return Err(Error::UnknownPreset(name.to_string())),
    };
    Ok(SweepConfig {
        base,
        temperature: None,
        vary,
        from,
        to,
        steps: DEFAULT_STEPS,
        series,
        quantities,
        output: None,
        emit_svg: false,
    })
}
