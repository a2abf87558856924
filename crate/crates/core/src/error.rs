use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operator is not Hermitian (max |A - A^dagger| = {deviation:e})")]
    NonHermitianInput { deviation: f64 },

    #[error("eigenvalue {value:e} is negative beyond tolerance")]
    NegativeEigenvalue { value: f64 },

    #[error("not a probability distribution: {0}")]
    NotADistribution(String),

    #[error("temperature must be positive, got {0}")]
    NonPositiveTemperature(f64),

    #[error("parameter `{name}` is not finite ({value})")]
    NonFiniteParameter { name: &'static str, value: f64 },

    #[error("state is not of X form: |rho[{row}][{col}]| = {magnitude:e}")]
    NotXState {
        row: usize,
        col: usize,
        magnitude: f64,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid configuration: {0}")]
    Validation(String),

    #[error("unknown figure preset `{0}`")]
    UnknownPreset(String),

    #[error("at series `{series}`, {axis} = {value}: {source}")]
    AtGridPoint {
        series: String,
        axis: &'static str,
        value: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("{quantity} is not finite at series `{series}`, {axis} = {value}")]
    NonFiniteValue {
        quantity: &'static str,
        series: String,
        axis: &'static str,
        value: f64,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures caused by the filesystem rather than by the inputs.
    pub fn is_io(&self) -> bool {
        match self {
            Error::Io(_) => true,
            Error::AtGridPoint { source, .. } => source.is_io(),
            _ => false,
        }
    }
}
