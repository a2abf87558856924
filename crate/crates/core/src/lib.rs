//! Thermal-equilibrium quantum correlations and work extraction for the
//! anisotropic two-qubit Heisenberg XYZ model with Zeeman fields, a
//! Dzyaloshinsky–Moriya coupling `Dz` and a KSEA coupling `Kz`.
//!
//! The crate is organised bottom-up:
//!
//! * [`qmath`]: dense 2×2 / 4×4 complex operators, a Jacobi Hermitian
//!   eigensolver, partial traces and entropies.
//! * [`model`]: Hamiltonian assembly and the Gibbs state.
//! * [`correlations`]: entropic EPR steering and concurrence.
//! * [`thermo`]: extracted work, efficiency and entropic bookkeeping.
//! * [`sweep`]: configuration-driven parameter sweeps, figure presets,
//!   CSV and SVG output.
//!
//! Energies are dimensionless with `ħ = k_B = 1`.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod correlations;
pub mod error;
pub mod model;
pub mod qmath;
pub mod sweep;
pub mod thermo;
pub mod tol;

pub use correlations::{
    concurrence_wootters, concurrence_x, conditional_entropy_sum, pauli_joint_distribution,
    steering, Direction, PauliAxis, PauliDistribution, SteeringClass, SteeringReport,
};
pub use error::{Error, Result};
pub use model::{
    analytic_crosscheck, build_hamiltonian, local_partition_functions, thermal_state,
    ClosedFormReading, ClosedFormReport, ModelParams, ThermalState,
};
pub use qmath::{
    eigen_hermitian, kron, partial_trace, shannon_entropy, von_neumann_entropy, EigenSystem,
    EigenSystem4, LogBase, Op, Op2, Op4, Qubit, C64,
};
pub use sweep::{
    emit_csv, emit_svg, figure_preset, parse_config, run_sweep, run_sweep_with_threads, Param,
    Quantity, Series, SweepConfig, SweepResult, SweepRow, PRESET_NAMES,
};
pub use thermo::{efficiency, entropic_terms, extracted_work, interaction_energy, ThermoReport};
