//! Two-qubit XYZ Hamiltonian with Zeeman, DM (`Dz`) and KSEA (`Kz`) terms,
//! and its Gibbs state.

use crate::error::{Error, Result};
use crate::qmath::{eigen_hermitian, EigenSystem4, Op2, Op4, C64};

/// Couplings of the two-qubit model. Temperature is passed separately.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ModelParams {
    /// Zeeman field on qubit 1.
    pub b1: f64,
    /// Zeeman field on qubit 2.
    pub b2: f64,
    pub jx: f64,
    pub jy: f64,
    pub jz: f64,
    /// z-component of the Dzyaloshinsky–Moriya vector.
    pub dz: f64,
    /// z-component of the KSEA tensor.
    pub kz: f64,
}

impl ModelParams {
    pub fn validate(&self) -> Result<()> {
        for (name, value) in self.named() {
            if !value.is_finite() {
                return Err(Error::NonFiniteParameter { name, value });
            }
        }
        Ok(())
    }

    pub fn named(&self) -> [(&'static str, f64); 7] {
        [
            ("b1", self.b1),
            ("b2", self.b2),
            ("Jx", self.jx),
            ("Jy", self.jy),
            ("Jz", self.jz),
            ("Dz", self.dz),
            ("Kz", self.kz),
        ]
    }

    /// True when the exchange, DM and KSEA couplings all vanish.
    pub fn is_interaction_free(&self) -> bool {
        self.jx == 0.0 && self.jy == 0.0 && self.jz == 0.0 && self.dz == 0.0 && self.kz == 0.0
    }
}

pub(crate) fn check_temperature(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveTemperature(t))
    }
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Full Hamiltonian in the computational basis. Only the diagonal, the
/// `{|00⟩,|11⟩}` corners and the `{|01⟩,|10⟩}` inner block are populated.
pub fn build_hamiltonian(p: &ModelParams) -> Op4 {
    let mut h = Op4::from_real_diagonal([
        p.b1 + p.b2 + p.jz,
        p.b1 - p.b2 - p.jz,
        -p.b1 + p.b2 - p.jz,
        -p.b1 - p.b2 + p.jz,
    ]);
    let corner = c(p.jx - p.jy, -2.0 * p.kz);
    let inner = c(p.jx + p.jy, 2.0 * p.dz);
    h[(0, 3)] = corner;
    h[(3, 0)] = corner.conj();
    h[(1, 2)] = inner;
    h[(2, 1)] = inner.conj();
    h
}

/// `H_1 + H_2 = b1 σ1^z + b2 σ2^z` as a two-qubit operator.
pub fn zeeman_hamiltonian(p: &ModelParams) -> Op4 {
    Op4::from_real_diagonal([p.b1 + p.b2, p.b1 - p.b2, -p.b1 + p.b2, -p.b1 - p.b2])
}

/// `H_12 = H - H_1 - H_2`.
pub fn interaction_hamiltonian(p: &ModelParams) -> Op4 {
    build_hamiltonian(&ModelParams {
        b1: 0.0,
        b2: 0.0,
        ..*p
    })
}

/// Gibbs state of the full Hamiltonian together with what produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct ThermalState {
    pub rho: Op4,
    pub temperature: f64,
    /// `ln Z_S`, finite even when `Z_S` itself overflows.
    pub ln_zs: f64,
    /// Normalized Boltzmann populations of the eigenvectors, ascending energy.
    pub populations: [f64; 4],
    pub eigensystem: EigenSystem4,
    pub hamiltonian: Op4,
}

impl ThermalState {
    pub fn zs(&self) -> f64 {
        self.ln_zs.exp()
    }
}

pub fn thermal_state(p: &ModelParams, t: f64) -> Result<ThermalState> {
    check_temperature(t)?;
    p.validate()?;
    let hamiltonian = build_hamiltonian(p);
    let eigensystem = eigen_hermitian(&hamiltonian)?;
    let lambda_min = eigensystem.values[0];
    let boltzmann = eigensystem.values.map(|l| (-(l - lambda_min) / t).exp());
    let sum: f64 = boltzmann.iter().sum();
    let populations = boltzmann.map(|w| w / sum);

    let mut rho = Op4::zero();
    for (j, &w) in populations.iter().enumerate() {
        if w == 0.0 {
            continue;
        }
        let v = eigensystem.vector(j);
        rho = rho + Op4::outer(&v, &v).scale(w);
    }
    let rho = rho.hermitian_part();

    Ok(ThermalState {
        rho,
        temperature: t,
        ln_zs: -lambda_min / t + sum.ln(),
        populations,
        eigensystem,
        hamiltonian,
    })
}

/// `ln(2 cosh x)` without overflow.
pub(crate) fn ln_two_cosh(x: f64) -> f64 {
    let a = x.abs();
    a + (-2.0 * a).exp().ln_1p()
}

/// `(Z_1, Z_2)` with `Z_i = Tr e^{-H_i/T} = 2 cosh(b_i/T)`.
pub fn local_partition_functions(p: &ModelParams, t: f64) -> Result<(f64, f64)> {
    check_temperature(t)?;
    Ok((ln_two_cosh(p.b1 / t).exp(), ln_two_cosh(p.b2 / t).exp()))
}

pub(crate) fn ln_local_partition_functions(p: &ModelParams, t: f64) -> (f64, f64) {
    (ln_two_cosh(p.b1 / t), ln_two_cosh(p.b2 / t))
}

/// Local Gibbs state `e^{-b σ^z / T} / Z` of a single qubit.
pub fn local_gibbs_state(b: f64, t: f64) -> Result<Op2> {
    check_temperature(t)?;
    let up = logistic(-2.0 * b / t);
    Ok(Op2::from_real_diagonal([up, 1.0 - up]))
}

/// `1 / (1 + e^{-x})`
fn logistic(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Which version of the closed-form thermal-state entries to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormReading {
    /// Mixing angles with `5K_z²`, `5D_z²`, the block-2 angles as printed and
    /// `sinh(βΔ)` in the partition function.
    AsPrinted,
    /// `4K_z²`, `4D_z²`, `cosh(βΔ)`, and block-2 angles measured from
    /// `b2 - b1` so that the populations land on the right basis states.
    Corrected,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormReport {
    pub reading: ClosedFormReading,
    pub closed_form: Op4,
    /// `|closed_form - rho|` entrywise.
    pub deviation: [[f64; 4]; 4],
    pub max_deviation: f64,
}

/// Evaluates the closed-form X-state entries and compares them with the
/// numerically built Gibbs state. Diagnostic only.
pub fn analytic_crosscheck(
    p: &ModelParams,
    t: f64,
    reading: ClosedFormReading,
) -> Result<ClosedFormReport> {
    let numeric = thermal_state(p, t)?;
    let closed_form = closed_form_rho(p, t, reading);
    let diff = closed_form - numeric.rho;
    let deviation: [[f64; 4]; 4] =
        std::array::from_fn(|i| std::array::from_fn(|j| diff[(i, j)].norm()));
    let max_deviation = deviation.iter().flatten().copied().fold(0.0, f64::max);
    Ok(ClosedFormReport {
        reading,
        closed_form,
        deviation,
        max_deviation,
    })
}

fn closed_form_rho(p: &ModelParams, t: f64, reading: ClosedFormReading) -> Op4 {
    let beta = 1.0 / t;
    let j_minus = p.jx - p.jy;
    let j_plus = p.jx + p.jy;
    let sum_b = p.b1 + p.b2;
    let diff_b = p.b1 - p.b2;
    let delta = (sum_b.powi(2) + j_minus.powi(2) + 4.0 * p.kz.powi(2)).sqrt();
    let delta_p = (diff_b.powi(2) + j_plus.powi(2) + 4.0 * p.dz.powi(2)).sqrt();

    let (coef, theta2, phi2, z_outer) = match reading {
        ClosedFormReading::AsPrinted => (
            5.0,
            (j_plus.powi(2) + 5.0 * p.dz.powi(2)).sqrt().atan2(diff_b),
            (-2.0 * p.dz).atan2(j_plus),
            (beta * delta).sinh(),
        ),
        ClosedFormReading::Corrected => (
            4.0,
            (j_plus.powi(2) + 4.0 * p.dz.powi(2)).sqrt().atan2(-diff_b),
            (2.0 * p.dz).atan2(-j_plus),
            (beta * delta).cosh(),
        ),
    };
    let theta1 = (j_minus.powi(2) + coef * p.kz.powi(2)).sqrt().atan2(sum_b);
    let phi1 = (2.0 * p.kz).atan2(j_minus);

    let e_jz = (beta * p.jz).exp();
    let e_mjz = (-beta * p.jz).exp();
    let zs = 2.0 * e_jz * (beta * delta_p).cosh() + 2.0 * e_mjz * z_outer;

    let (s1, c1) = ((theta1 / 2.0).sin().powi(2), (theta1 / 2.0).cos().powi(2));
    let (s2, c2) = ((theta2 / 2.0).sin().powi(2), (theta2 / 2.0).cos().powi(2));
    let (ep, em) = ((beta * delta).exp(), (-beta * delta).exp());
    let (epp, emp) = ((beta * delta_p).exp(), (-beta * delta_p).exp());

    let mut rho = Op4::from_real_diagonal([
        e_mjz / zs * (ep * s1 + em * c1),
        e_jz / zs * (epp * c2 + emp * s2),
        e_jz / zs * (epp * s2 + emp * c2),
        e_mjz / zs * (ep * c1 + em * s1),
    ]);
    let rho41 = C64::from_polar(1.0, phi1) * (-e_mjz / zs * theta1.sin() * (beta * delta).sinh());
    let rho32 = C64::from_polar(1.0, phi2) * (e_jz / zs * theta2.sin() * (beta * delta_p).sinh());
    rho[(3, 0)] = rho41;
    rho[(0, 3)] = rho41.conj();
    rho[(2, 1)] = rho32;
    rho[(1, 2)] = rho32.conj();
    rho
}
