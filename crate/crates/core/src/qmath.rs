//! Dense complex operators on one- and two-qubit Hilbert spaces.
//!
//! Everything here is fixed-size: [`Op2`] for a single qubit and [`Op4`] for
//! the pair, ordered in the computational basis `{|00⟩, |01⟩, |10⟩, |11⟩}`
//! with qubit 1 as the most significant bit. Matrix functions (Gibbs weights,
//! logarithms inside entropies, square roots) all go through
//! [`eigen_hermitian`].

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

pub type C64 = Complex64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

/// Square complex matrix of fixed dimension `N`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Op<const N: usize>(pub [[C64; N]; N]);

pub type Op2 = Op<2>;
pub type Op4 = Op<4>;

impl<const N: usize> Default for Op<N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const N: usize> Op<N> {
    pub fn zero() -> Self {
        Op([[ZERO; N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.0[i][i] = ONE;
        }
        m
    }

    pub fn from_real_diagonal(d: [f64; N]) -> Self {
        let mut m = Self::zero();
        for (i, x) in d.into_iter().enumerate() {
            m.0[i][i] = C64::new(x, 0.0);
        }
        m
    }

    /// `|v⟩⟨w|`
    pub fn outer(v: &[C64; N], w: &[C64; N]) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = v[i] * w[j].conj();
            }
        }
        m
    }

    pub fn dagger(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    /// Entrywise complex conjugate in the computational basis.
    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for z in row.iter_mut() {
                *z = f(*z);
            }
        }
        m
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn trace(&self) -> C64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    pub fn diagonal_re(&self) -> [f64; N] {
        std::array::from_fn(|i| self.0[i][i].re)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn hermiticity_defect(&self) -> f64 {
        (*self - self.dagger()).max_abs()
    }

    pub fn is_hermitian(&self, atol: f64) -> bool {
        self.hermiticity_defect() <= atol
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> [C64; N] {
        std::array::from_fn(|i| self.0[i][j])
    }

    /// `(A + A†) / 2`
    pub fn hermitian_part(&self) -> Self {
        (*self + self.dagger()).scale(0.5)
    }

    /// Re Tr[self · other]
    pub fn expectation(&self, other: &Self) -> f64 {
        let mut acc = ZERO;
        for i in 0..N {
            for k in 0..N {
                acc += self.0[i][k] * other.0[k][i];
            }
        }
        acc.re
    }
}

impl<const N: usize> Index<(usize, usize)> for Op<N> {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.0[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for Op<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.0[i][j]
    }
}

impl<const N: usize> Add for Op<N> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.0[i][j] += rhs.0[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Sub for Op<N> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.0[i][j] -= rhs.0[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Mul for Op<N> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for k in 0..N {
                let a = self.0[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..N {
                    m.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        m
    }
}

impl<const N: usize> Mul<C64> for Op<N> {
    type Output = Self;

    fn mul(self, rhs: C64) -> Self {
        self.map(|z| z * rhs)
    }
}

/// Single-qubit Pauli operators.
pub mod pauli {
    use super::{Op2, I, ONE, ZERO};

    pub fn identity() -> Op2 {
        Op2::identity()
    }

    pub fn x() -> Op2 {
        super::Op([[ZERO, ONE], [ONE, ZERO]])
    }

    pub fn y() -> Op2 {
        super::Op([[ZERO, -I], [I, ZERO]])
    }

    pub fn z() -> Op2 {
        super::Op([[ONE, ZERO], [ZERO, -ONE]])
    }
}

/// Kronecker product `a ⊗ b`, with `a` acting on qubit 1.
pub fn kron(a: &Op2, b: &Op2) -> Op4 {
    let mut m = Op4::zero();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    m.0[2 * i + k][2 * j + l] = a.0[i][j] * b.0[k][l];
                }
            }
        }
    }
    m
}

/// Eigenvalues in ascending order with the matching orthonormal eigenvectors
/// stored as the columns of `vectors`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenSystem<const N: usize> {
    pub values: [f64; N],
    pub vectors: Op<N>,
}

pub type EigenSystem4 = EigenSystem<4>;

impl<const N: usize> EigenSystem<N> {
    pub fn vector(&self, j: usize) -> [C64; N] {
        self.vectors.column(j)
    }

    /// `Σ_j f(λ_j) |ψ_j⟩⟨ψ_j|`
    pub fn apply_fn(&self, f: impl Fn(f64) -> f64) -> Op<N> {
        let mut m = Op::zero();
        for j in 0..N {
            let w = f(self.values[j]);
            if w == 0.0 {
                continue;
            }
            let v = self.vector(j);
            m = m + Op::outer(&v, &v).scale(w);
        }
        m
    }

    /// `V · diag(λ) · V†`
    pub fn reconstruct(&self) -> Op<N> {
        self.apply_fn(|x| x)
    }

    /// `max |V†V - 1|`
    pub fn orthonormality_defect(&self) -> f64 {
        (self.vectors.dagger() * self.vectors - Op::identity()).max_abs()
    }
}

const MAX_SWEEPS: usize = 64;

/// Diagonalizes a Hermitian operator with cyclic complex Jacobi rotations.
///
/// Output ordering is ascending; eigenvectors inside a cluster of eigenvalues
/// closer than [`tol::DEGENERACY_GAP`] are re-orthonormalized by Gram–Schmidt
/// in their ascending column order, so identical inputs always give
/// identical outputs.
pub fn eigen_hermitian<const N: usize>(h: &Op<N>) -> Result<EigenSystem<N>> {
    let deviation = h.hermiticity_defect();
    if !(deviation <= tol::ATOL_HERM) {
        return Err(Error::NonHermitianInput { deviation });
    }
    let mut a = h.hermitian_part();
    let mut v = Op::<N>::identity();
    let norm = frobenius(&a);

    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(&a);
        if off == 0.0 || off <= 1e-20 * norm {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: [usize; N] = std::array::from_fn(|i| i);
    order.sort_by(|&i, &j| a.0[i][i].re.total_cmp(&a.0[j][j].re));
    let values: [f64; N] = std::array::from_fn(|k| a.0[order[k]][order[k]].re);
    let mut vectors = Op::<N>::zero();
    for (k, &src) in order.iter().enumerate() {
        for i in 0..N {
            vectors.0[i][k] = v.0[i][src];
        }
    }

    let mut start = 0;
    while start < N {
        let mut end = start + 1;
        while end < N && values[end] - values[end - 1] < tol::DEGENERACY_GAP {
            end += 1;
        }
        if end - start > 1 {
            gram_schmidt(&mut vectors, start, end);
        }
        start = end;
    }

    Ok(EigenSystem { values, vectors })
}

fn frobenius<const N: usize>(a: &Op<N>) -> f64 {
    a.0.iter()
        .flatten()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt()
}

fn off_diagonal_norm<const N: usize>(a: &Op<N>) -> f64 {
    let mut s = 0.0;
    for i in 0..N {
        for j in 0..N {
            if i != j {
                s += a.0[i][j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

// Zeroes a[p][q] with U = diag(1, e^{-iφ}) · [[c, s], [-s, c]] on the (p, q) plane.
fn rotate<const N: usize>(a: &mut Op<N>, v: &mut Op<N>, p: usize, q: usize) {
    let b = a.0[p][q];
    let abs_b = b.norm();
    if abs_b == 0.0 {
        return;
    }
    let phase = b / abs_b;
    let theta = (a.0[q][q].re - a.0[p][p].re) / (2.0 * abs_b);
    let t = if theta.is_infinite() {
        0.0
    } else {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (theta.abs() + theta.hypot(1.0))
    };
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    let u_pp = C64::new(c, 0.0);
    let u_pq = C64::new(s, 0.0);
    let u_qp = -phase.conj() * s;
    let u_qq = phase.conj() * c;

    // A <- A U
    for i in 0..N {
        let aip = a.0[i][p];
        let aiq = a.0[i][q];
        a.0[i][p] = aip * u_pp + aiq * u_qp;
        a.0[i][q] = aip * u_pq + aiq * u_qq;
    }
    // A <- U† A
    for j in 0..N {
        let apj = a.0[p][j];
        let aqj = a.0[q][j];
        a.0[p][j] = u_pp.conj() * apj + u_qp.conj() * aqj;
        a.0[q][j] = u_pq.conj() * apj + u_qq.conj() * aqj;
    }
    a.0[p][q] = ZERO;
    a.0[q][p] = ZERO;
    a.0[p][p] = C64::new(a.0[p][p].re, 0.0);
    a.0[q][q] = C64::new(a.0[q][q].re, 0.0);

    for i in 0..N {
        let vip = v.0[i][p];
        let viq = v.0[i][q];
        v.0[i][p] = vip * u_pp + viq * u_qp;
        v.0[i][q] = vip * u_pq + viq * u_qq;
    }
}

fn gram_schmidt<const N: usize>(m: &mut Op<N>, start: usize, end: usize) {
    for k in start..end {
        let mut col = m.column(k);
        for prev in start..k {
            let u = m.column(prev);
            let overlap: C64 = (0..N).map(|i| u[i].conj() * col[i]).sum();
            for i in 0..N {
                col[i] -= overlap * u[i];
            }
        }
        let n = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for i in 0..N {
            m.0[i][k] = col[i] / n;
        }
    }
}

/// Which qubit of the pair to keep in a partial trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Qubit {
    First,
    Second,
}

/// Reduced state of the kept qubit.
pub fn partial_trace(rho: &Op4, keep: Qubit) -> Op2 {
    let mut r = Op2::zero();
    for i in 0..2 {
        for j in 0..2 {
            r.0[i][j] = match keep {
                Qubit::First => (0..2).map(|k| rho.0[2 * i + k][2 * j + k]).sum(),
                Qubit::Second => (0..2).map(|k| rho.0[2 * k + i][2 * k + j]).sum(),
            };
        }
    }
    r
}

/// Logarithm base for entropies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LogBase {
    /// Bits.
    Two,
    /// Nats.
    E,
}

impl LogBase {
    fn log(self, x: f64) -> f64 {
        match self {
            LogBase::Two => x.log2(),
            LogBase::E => x.ln(),
        }
    }
}

/// `-Σ x log x` with `0 log 0 = 0`.
pub(crate) fn entropy_of(values: impl IntoIterator<Item = f64>, base: LogBase) -> f64 {
    let s: f64 = values
        .into_iter()
        .filter(|&x| x > 0.0)
        .map(|x| -x * base.log(x))
        .sum();
    s.max(0.0)
}

pub fn von_neumann_entropy<const N: usize>(rho: &Op<N>, base: LogBase) -> Result<f64> {
    let eig = eigen_hermitian(rho)?;
    if let Some(&value) = eig.values.iter().find(|&&x| x < -tol::EIG_NEGATIVE) {
        return Err(Error::NegativeEigenvalue { value });
    }
    Ok(entropy_of(eig.values, base))
}

/// Shannon entropy in bits.
pub fn shannon_entropy(p: &[f64]) -> Result<f64> {
    if let Some(&x) = p.iter().find(|&&x| !(x >= -tol::PROB_NEGATIVE)) {
        return Err(Error::NotADistribution(format!("entry {x:e} is negative")));
    }
    let sum: f64 = p.iter().sum();
    if !((sum - 1.0).abs() <= tol::ATOL_PROB) {
        return Err(Error::NotADistribution(format!("entries sum to {sum}")));
    }
    Ok(entropy_of(p.iter().copied(), LogBase::Two))
}
