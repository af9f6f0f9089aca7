use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Input outside the domain of the method (no bound state, bad parameter, ...).
    Domain,
    /// A numerical search failed to converge or to isolate the requested state.
    Convergence,
    /// The caller violated an ordering contract.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("W0^2 - V0^2 + (l+1/2)^2 = {discriminant} is negative: no regular bound state")]
    NegativeDiscriminant { discriminant: f64 },

    #[error("no bound state: m^2 - E0^2 = {mu_sq} is not positive")]
    NoBoundState { mu_sq: f64 },

    #[error("V0 = W0 = 0: the potential has no Coulomb singularity at the origin")]
    NoCoulombSingularity,

    #[error("coupling series of order {order} is too short, order {required} is required")]
    SeriesTooShort { order: usize, required: usize },

    #[error("Laurent coefficient C^{k}_{i} is required but has not been computed")]
    MissingDependency { k: usize, i: usize },

    #[error("energy correction E_{j} is required but has not been computed")]
    MissingEnergy { j: usize },

    #[error("non-finite value while building order {order} of the Laurent table")]
    DivergentTable { order: usize },

    #[error("screening lambda = {lambda} is not below the critical value {critical}")]
    AboveCritical { lambda: f64, critical: f64 },

    #[error(
        "screening lambda = {lambda} exceeds the binding threshold {threshold}: \
         the s-wave root has a negative decay rate"
    )]
    Unbound { lambda: f64, threshold: f64 },

    #[error("critical screening undefined: sqrt(N^2 + a^2) - b = {denominator} is not positive")]
    NoCritical { denominator: f64 },

    #[error("polynomial system is singular at coefficient {index}")]
    SingularSystem { index: usize },

    #[error("outward Numerov sweep became non-finite near r = {radius}; the grid is too coarse for this r_max")]
    GridUnderflow { radius: f64 },

    #[error("no {n}-node window in the energy bracket (node counts {lo_nodes} .. {hi_nodes})")]
    BracketFailure {
        n: u32,
        lo_nodes: u32,
        hi_nodes: u32,
    },

    #[error("eigenvalue search did not converge after {iterations} iterations")]
    ConvergenceFailure { iterations: usize },

    #[error("percentage error against a zero reference value")]
    ZeroReference,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::MissingDependency { .. } | Error::MissingEnergy { .. } => ErrorKind::Internal,
            Error::GridUnderflow { .. }
            | Error::BracketFailure { .. }
            | Error::ConvergenceFailure { .. }
            | Error::DivergentTable { .. } => ErrorKind::Convergence,
            _ => ErrorKind::Domain,
        }
    }
}
