//! Entropic EPR steering and concurrence of two-qubit states.
//!
//! Steering uses the entropic criterion `Σ_i H(σ_i^B | σ_i^A) ≥ 2` over the
//! three Pauli settings, with Shannon entropies in bits. The quantifier is
//! normalized so that a Bell state gives 1:
//!
//! ```text
//! S^{A→B} = max(0, (2 − Σ_i H(σ_i^B | σ_i^A)) / 2)
//! ```

use crate::error::{Error, Result};
use crate::qmath::{eigen_hermitian, kron, pauli, shannon_entropy, Op2, Op4};
use crate::tol;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PauliAxis {
    X,
    Y,
    Z,
}

impl PauliAxis {
    pub const ALL: [PauliAxis; 3] = [PauliAxis::X, PauliAxis::Y, PauliAxis::Z];

    pub fn operator(self) -> Op2 {
        match self {
            PauliAxis::X => pauli::x(),
            PauliAxis::Y => pauli::y(),
            PauliAxis::Z => pauli::z(),
        }
    }

    /// `(Π_+, Π_-)` with `Π_± = (1 ± σ) / 2`.
    pub fn projectors(self) -> [Op2; 2] {
        let s = self.operator();
        let id = Op2::identity();
        [(id + s).scale(0.5), (id - s).scale(0.5)]
    }
}

/// Born-rule outcome statistics when both qubits measure the same Pauli axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PauliDistribution {
    pub axis: PauliAxis,
    /// Outcomes ordered `(+,+), (+,−), (−,+), (−,−)`; qubit A first.
    pub joint: [f64; 4],
    pub marginal_a: [f64; 2],
    pub marginal_b: [f64; 2],
}

pub fn pauli_joint_distribution(rho: &Op4, axis: PauliAxis) -> PauliDistribution {
    let proj = axis.projectors();
    let mut joint = [0.0; 4];
    for a in 0..2 {
        for b in 0..2 {
            joint[2 * a + b] = rho.expectation(&kron(&proj[a], &proj[b]));
        }
    }
    PauliDistribution {
        axis,
        joint,
        marginal_a: [joint[0] + joint[1], joint[2] + joint[3]],
        marginal_b: [joint[0] + joint[2], joint[1] + joint[3]],
    }
}

/// Who measures and who is steered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Alice (qubit 1) measures, Bob (qubit 2) is steered.
    AtoB,
    BtoA,
}

/// `[H(σ_x^B|σ_x^A), H(σ_y^B|σ_y^A), H(σ_z^B|σ_z^A)]` for `AtoB`, roles
/// exchanged for `BtoA`. Bits.
pub fn conditional_entropies(rho: &Op4, direction: Direction) -> Result<[f64; 3]> {
    let mut out = [0.0; 3];
    for (slot, axis) in out.iter_mut().zip(PauliAxis::ALL) {
        let d = pauli_joint_distribution(rho, axis);
        let conditioning = match direction {
            Direction::AtoB => d.marginal_a,
            Direction::BtoA => d.marginal_b,
        };
        *slot = shannon_entropy(&d.joint)? - shannon_entropy(&conditioning)?;
    }
    Ok(out)
}

pub fn conditional_entropy_sum(rho: &Op4, direction: Direction) -> Result<f64> {
    Ok(conditional_entropies(rho, direction)?.iter().sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SteeringClass {
    TwoWay,
    OneWayAtoB,
    OneWayBtoA,
    NoWay,
}

impl SteeringClass {
    pub fn classify(s_ab: f64, s_ba: f64) -> Self {
        match (s_ab > tol::STEERING_FLOOR, s_ba > tol::STEERING_FLOOR) {
            (true, true) => SteeringClass::TwoWay,
            (true, false) => SteeringClass::OneWayAtoB,
            (false, true) => SteeringClass::OneWayBtoA,
            (false, false) => SteeringClass::NoWay,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SteeringReport {
    pub s_ab: f64,
    pub s_ba: f64,
    pub delta12: f64,
    pub cond_entropy_ab: [f64; 3],
    pub cond_entropy_ba: [f64; 3],
    pub class: SteeringClass,
}

fn quantifier(sum: f64) -> f64 {
    ((2.0 - sum) / 2.0).clamp(0.0, 1.0)
}

pub fn steering(rho: &Op4) -> Result<SteeringReport> {
    let cond_entropy_ab = conditional_entropies(rho, Direction::AtoB)?;
    let cond_entropy_ba = conditional_entropies(rho, Direction::BtoA)?;
    let s_ab = quantifier(cond_entropy_ab.iter().sum());
    let s_ba = quantifier(cond_entropy_ba.iter().sum());
    Ok(SteeringReport {
        s_ab,
        s_ba,
        delta12: (s_ab - s_ba).abs(),
        cond_entropy_ab,
        cond_entropy_ba,
        class: SteeringClass::classify(s_ab, s_ba),
    })
}

const OFF_X: [(usize, usize); 8] = [
    (0, 1),
    (0, 2),
    (1, 0),
    (1, 3),
    (2, 0),
    (2, 3),
    (3, 1),
    (3, 2),
];

/// Concurrence from the X-state closed form
/// `C = 2 max(0, |ρ14| − √(ρ22 ρ33), |ρ23| − √(ρ11 ρ44))`.
pub fn concurrence_x(rho: &Op4) -> Result<f64> {
    for (row, col) in OFF_X {
        let magnitude = rho[(row, col)].norm();
        if magnitude > tol::X_PATTERN {
            return Err(Error::NotXState {
                row,
                col,
                magnitude,
            });
        }
    }
    let d = rho.diagonal_re().map(|x| x.max(0.0));
    let a = rho[(0, 3)].norm() - (d[1] * d[2]).sqrt();
    let b = rho[(1, 2)].norm() - (d[0] * d[3]).sqrt();
    Ok((2.0 * a.max(b).max(0.0)).min(1.0))
}

/// Wootters concurrence of an arbitrary two-qubit state.
///
/// The spectrum of `ρ ρ̃` with `ρ̃ = (σ^y⊗σ^y) ρ* (σ^y⊗σ^y)` is obtained from
/// the Hermitian similar matrix `√ρ ρ̃ √ρ`.
pub fn concurrence_wootters(rho: &Op4) -> Result<f64> {
    let yy = kron(&pauli::y(), &pauli::y());
    let flipped = yy * rho.conj() * yy;
    let sqrt_rho = eigen_hermitian(rho)?.apply_fn(|x| x.max(0.0).sqrt());
    let r = (sqrt_rho * flipped * sqrt_rho).hermitian_part();
    let mut mu = eigen_hermitian(&r)?.values.map(|x| x.max(0.0).sqrt());
    mu.sort_by(|a, b| b.total_cmp(a));
    Ok((mu[0] - mu[1] - mu[2] - mu[3]).clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmath::{partial_trace, Qubit, C64};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn bell_phi_plus() -> Op4 {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let v = [c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(h, 0.0)];
        Op4::outer(&v, &v)
    }

    fn random_qubit_state(rng: &mut impl Rng) -> Op2 {
        let mut a = Op2::zero();
        for z in a.0.iter_mut().flatten() {
            *z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        let p = a * a.dagger();
        p.scale(1.0 / p.trace().re)
    }

    fn random_x_state(rng: &mut impl Rng) -> Op4 {
        let outer = random_qubit_state(rng).scale(rng.gen_range(0.05..0.95));
        let inner = random_qubit_state(rng).scale(1.0);
        let w_outer = outer.trace().re;
        let inner = inner.scale(1.0 - w_outer);
        let mut rho = Op4::zero();
        for (i, bi) in [0, 3].into_iter().enumerate() {
            for (j, bj) in [0, 3].into_iter().enumerate() {
                rho[(bi, bj)] = outer[(i, j)];
            }
        }
        for (i, bi) in [1, 2].into_iter().enumerate() {
            for (j, bj) in [1, 2].into_iter().enumerate() {
                rho[(bi, bj)] = inner[(i, j)];
            }
        }
        rho
    }

    #[test]
    fn bell_z_distribution() {
        let d = pauli_joint_distribution(&bell_phi_plus(), PauliAxis::Z);
        for (x, y) in d.joint.iter().zip([0.5, 0.0, 0.0, 0.5]) {
            assert!((x - y).abs() < 1e-15);
        }
    }

    #[test]
    fn maximally_mixed_distribution() {
        let rho = Op4::identity().scale(0.25);
        for axis in PauliAxis::ALL {
            let d = pauli_joint_distribution(&rho, axis);
            assert!(d.joint.iter().all(|&p| (p - 0.25).abs() < 1e-15));
            assert!(d.marginal_a.iter().all(|&p| (p - 0.5).abs() < 1e-15));
        }
    }

    #[test]
    fn distribution_matches_rank_one_projectors() {
        let p = crate::model::ModelParams {
            b1: 2.0,
            b2: 1.0,
            jx: 1.0,
            jy: 2.0,
            jz: 2.0,
            dz: 1.0,
            kz: 1.0,
        };
        let rho = crate::model::thermal_state(&p, 0.5).unwrap().rho;
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = [c(h, 0.0), c(h, 0.0)];
        let minus = [c(h, 0.0), c(-h, 0.0)];
        let basis = [plus, minus];
        let d = pauli_joint_distribution(&rho, PauliAxis::X);
        for a in 0..2 {
            for b in 0..2 {
                let v: [C64; 4] = std::array::from_fn(|k| basis[a][k / 2] * basis[b][k % 2]);
                let proj = Op4::outer(&v, &v);
                let p = (rho * proj).trace().re;
                assert!((d.joint[2 * a + b] - p).abs() <= 1e-12);
            }
        }
        for m in 0..2 {
            assert!((d.marginal_a[m] - d.joint[2 * m] - d.joint[2 * m + 1]).abs() <= 1e-12);
        }
    }

    #[test]
    fn conditional_entropy_examples() {
        let s = conditional_entropy_sum(&bell_phi_plus(), Direction::AtoB).unwrap();
        assert!(s.abs() < 1e-12);
        let s = conditional_entropy_sum(&Op4::identity().scale(0.25), Direction::AtoB).unwrap();
        assert!((s - 3.0).abs() < 1e-12);
    }

    #[test]
    fn product_state_conditional_entropy_factorizes() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..200 {
            let ra = random_qubit_state(&mut rng);
            let rb = random_qubit_state(&mut rng);
            let rho = kron(&ra, &rb);
            let sum = conditional_entropy_sum(&rho, Direction::AtoB).unwrap();
            // Bob's outcome entropies, computed on his qubit alone.
            let direct: f64 = PauliAxis::ALL
                .iter()
                .map(|axis| {
                    let [pp, pm] = axis.projectors();
                    let p = [rb.expectation(&pp), rb.expectation(&pm)];
                    shannon_entropy(&p).unwrap()
                })
                .sum();
            assert!((sum - direct).abs() <= 1e-10);
            assert!(sum >= 2.0 - 1e-10);
            assert!(partial_trace(&rho, Qubit::Second).max_abs() > 0.0);
        }
    }

    #[test]
    fn bell_state_steers_both_ways() {
        let r = steering(&bell_phi_plus()).unwrap();
        assert!((r.s_ab - 1.0).abs() < 1e-10 && (r.s_ba - 1.0).abs() < 1e-10);
        assert_eq!(r.class, SteeringClass::TwoWay);
        assert_eq!(r.delta12, (r.s_ab - r.s_ba).abs());
    }

    #[test]
    fn mixed_state_is_unsteerable() {
        let r = steering(&Op4::identity().scale(0.25)).unwrap();
        assert_eq!((r.s_ab, r.s_ba), (0.0, 0.0));
        assert_eq!(r.class, SteeringClass::NoWay);
    }

    #[test]
    fn classification_follows_sign_pattern() {
        assert_eq!(SteeringClass::classify(0.3, 0.0), SteeringClass::OneWayAtoB);
        assert_eq!(SteeringClass::classify(0.0, 0.2), SteeringClass::OneWayBtoA);
        assert_eq!(SteeringClass::classify(1e-10, 1e-10), SteeringClass::NoWay);
        assert_eq!(SteeringClass::classify(0.1, 0.1), SteeringClass::TwoWay);
    }

    #[test]
    fn concurrence_examples() {
        assert!((concurrence_x(&bell_phi_plus()).unwrap() - 1.0).abs() < 1e-12);
        assert!((concurrence_wootters(&bell_phi_plus()).unwrap() - 1.0).abs() < 1e-10);
        let diag = Op4::from_real_diagonal([0.1, 0.2, 0.3, 0.4]);
        assert_eq!(concurrence_x(&diag).unwrap(), 0.0);

        let p = 0.8;
        let werner = bell_phi_plus().scale(p) + Op4::identity().scale((1.0 - p) / 4.0);
        let expected = (3.0 * p - 1.0) / 2.0;
        assert!((concurrence_x(&werner).unwrap() - expected).abs() < 1e-12);
        assert!((concurrence_wootters(&werner).unwrap() - expected).abs() < 1e-10);
        assert!((expected - 0.7).abs() < 1e-15);
    }

    #[test]
    fn product_pure_state_has_zero_concurrence() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let a = [c(h, 0.0), c(0.0, h)];
        let b = [c(0.6, 0.0), c(0.8, 0.0)];
        let v: [C64; 4] = std::array::from_fn(|k| a[k / 2] * b[k % 2]);
        let rho = Op4::outer(&v, &v);
        assert!(concurrence_wootters(&rho).unwrap() < 1e-7);
    }

    #[test]
    fn concurrence_x_rejects_general_states() {
        let mut rho = Op4::identity().scale(0.25);
        rho[(0, 1)] = c(0.1, 0.0);
        rho[(1, 0)] = c(0.1, 0.0);
        assert!(matches!(
            concurrence_x(&rho),
            Err(Error::NotXState { row: 0, col: 1, .. })
        ));
    }

    #[test]
    fn random_x_states_agree_between_routes() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..500 {
            let rho = random_x_state(&mut rng);
            let a = concurrence_x(&rho).unwrap();
            let b = concurrence_wootters(&rho).unwrap();
            assert!((a - b).abs() <= 1e-10, "{a} vs {b}");
            let s = steering(&rho).unwrap();
            for v in [s.s_ab, s.s_ba, a] {
                assert!((0.0..=1.0).contains(&v));
            }
        }
    }
}
