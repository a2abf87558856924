//! Work extraction by thermalizing the coupled pair, and the entropic terms
//! that split the extracted work into global, local and correlation parts.
//!
//! The qubits start uncoupled, each in its local Gibbs state
//! `ρ_i = e^{-H_i/T} / Z_i`; the interaction is then switched on and the pair
//! relaxes to the joint Gibbs state `ρ(T)`. With `⟨H_12⟩_{t_2} = 0`:
//!
//! ```text
//! W   = T ln(Z_1 Z_2 / Z_S) − ⟨H_12⟩
//! η   = W / (−⟨H_12⟩)
//! S_G = T (S(ρ) − S(ρ_1 ⊗ ρ_2))
//! E_d = W + S_G
//! S_l = T (S(ρ_1^r ⊗ ρ_2^r) − S(ρ_1 ⊗ ρ_2))
//! W_l = W − T S(1:2)
//! ```
//!
//! All entropies here are in nats so that `T·S` is an energy.

use crate::error::Result;
use crate::model::{
    interaction_hamiltonian, ln_local_partition_functions, local_gibbs_state, thermal_state,
    zeeman_hamiltonian, ModelParams, ThermalState,
};
use crate::qmath::{partial_trace, von_neumann_entropy, LogBase, Qubit};
use crate::tol;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThermoReport {
    pub temperature: f64,
    /// Extracted work.
    pub w: f64,
    /// Ideal efficiency; `None` when the interaction-energy cost is not positive.
    pub eta: Option<f64>,
    /// `⟨H_12⟩` in the final thermal state.
    pub h12_mean: f64,
    pub s_g: f64,
    pub e_d: f64,
    pub s_l: f64,
    pub w_l: f64,
    /// `S(1:2)` in nats.
    pub mutual_info: f64,
    pub z1: f64,
    pub z2: f64,
    pub zs: f64,
}

/// `Tr[H ρ] − Tr[(H_1 + H_2) ρ]`
pub fn interaction_energy(ts: &ThermalState, p: &ModelParams) -> f64 {
    ts.rho.expectation(&ts.hamiltonian) - ts.rho.expectation(&zeeman_hamiltonian(p))
}

fn work(ts: &ThermalState, p: &ModelParams, h12_mean: f64) -> f64 {
    let t = ts.temperature;
    let (ln_z1, ln_z2) = ln_local_partition_functions(p, t);
    t * (ln_z1 + ln_z2 - ts.ln_zs) - h12_mean
}

fn ratio(w: f64, h12_mean: f64) -> Option<f64> {
    let cost = -h12_mean;
    (cost > tol::ETA_DENOMINATOR_FLOOR).then(|| w / cost)
}

pub fn extracted_work(p: &ModelParams, t: f64) -> Result<f64> {
    let ts = thermal_state(p, t)?;
    Ok(work(&ts, p, interaction_energy(&ts, p)))
}

pub fn efficiency(p: &ModelParams, t: f64) -> Result<Option<f64>> {
    let ts = thermal_state(p, t)?;
    let h12 = interaction_energy(&ts, p);
    Ok(ratio(work(&ts, p, h12), h12))
}

pub fn entropic_terms(p: &ModelParams, t: f64) -> Result<ThermoReport> {
    thermo_report(&thermal_state(p, t)?, p)
}

/// Full report for an already computed thermal state of `p`.
pub fn thermo_report(ts: &ThermalState, p: &ModelParams) -> Result<ThermoReport> {
    let t = ts.temperature;
    let h12_mean = interaction_energy(ts, p);
    let w = work(ts, p, h12_mean);

    let s_joint = von_neumann_entropy(&ts.rho, LogBase::E)?;
    let s_local_gibbs = von_neumann_entropy(&local_gibbs_state(p.b1, t)?, LogBase::E)?
        + von_neumann_entropy(&local_gibbs_state(p.b2, t)?, LogBase::E)?;
    let s_reduced = von_neumann_entropy(&partial_trace(&ts.rho, Qubit::First), LogBase::E)?
        + von_neumann_entropy(&partial_trace(&ts.rho, Qubit::Second), LogBase::E)?;

    let s_g = t * (s_joint - s_local_gibbs);
    let mutual_info = s_reduced - s_joint;
    let (ln_z1, ln_z2) = ln_local_partition_functions(p, t);

    Ok(ThermoReport {
        temperature: t,
        w,
        eta: ratio(w, h12_mean),
        h12_mean,
        s_g,
        e_d: w + s_g,
        s_l: t * (s_reduced - s_local_gibbs),
        w_l: w - t * mutual_info,
        mutual_info,
        z1: ln_z1.exp(),
        z2: ln_z2.exp(),
        zs: ts.zs(),
    })
}

/// `Σ_j w_j ⟨ψ_j|H_12|ψ_j⟩` over the Gibbs populations.
pub fn interaction_energy_eigenbasis(ts: &ThermalState, p: &ModelParams) -> f64 {
    let h12 = interaction_hamiltonian(p);
    (0..4)
        .map(|j| {
            let v = ts.eigensystem.vector(j);
            let mut acc = crate::qmath::C64::new(0.0, 0.0);
            for a in 0..4 {
                for b in 0..4 {
                    acc += v[a].conj() * h12[(a, b)] * v[b];
                }
            }
            ts.populations[j] * acc.re
        })
        .sum()
}
