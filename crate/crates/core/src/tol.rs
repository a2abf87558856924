//! Numerical tolerances shared by every module and by the test suites.

/// Max `|A - A†|` entry accepted by input validation.
pub const ATOL_HERM: f64 = 1e-9;

/// Reconstruction and orthonormality bound for eigen-decompositions.
pub const ATOL_NUM: f64 = 1e-10;

/// Allowed deviation of a probability vector's sum from one.
pub const ATOL_PROB: f64 = 1e-9;

/// Eigenvalues in `[-EIG_CLAMP, 0)` are treated as exact zeros.
pub const EIG_CLAMP: f64 = 1e-12;

/// Eigenvalues below `-EIG_NEGATIVE` make a density matrix invalid.
pub const EIG_NEGATIVE: f64 = 1e-9;

/// Probability entries below `-PROB_NEGATIVE` are rejected.
pub const PROB_NEGATIVE: f64 = 1e-12;

/// Eigenvalues closer than this form one degenerate cluster.
pub const DEGENERACY_GAP: f64 = 1e-9;

/// Largest off-X entry tolerated by the X-state concurrence formula.
pub const X_PATTERN: f64 = 1e-9;

/// A steering value above this counts as nonzero.
pub const STEERING_FLOOR: f64 = 1e-9;

/// Minimum interaction-energy cost for which an efficiency is reported.
pub const ETA_DENOMINATOR_FLOOR: f64 = 1e-12;
