use thiserror::Error;

/// Errors produced by the cavity radiation library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the domain of the operation.
    #[error("invalid {name} = {value}: {reason}")]
    Domain {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// The rod density was requested too close to a transverse mode threshold,
    /// where the pointwise density diverges.
    #[error(
        "threshold singularity at omega = {omega:e} rad/s: transverse mode ({n1}, {n2}) \
         has threshold {threshold:e} rad/s"
    )]
    ThresholdSingularity {
        omega: f64,
        n1: i64,
        n2: i64,
        threshold: f64,
    },

    /// The requested cutoff implies a lattice scan larger than the configured cap.
    #[error("cutoff requires {required} lattice points, cap is {cap}")]
    ResourceLimit { required: u128, cap: u64 },

    /// A mode list violated one of its structural invariants.
    #[error("invalid mode list: {0}")]
    InvalidModeList(String),

    /// An iterative numerical procedure did not converge.
    #[error("no convergence after {levels} refinements: last estimates {last:e} and {previous:e}")]
    NonConvergence {
        levels: usize,
        last: f64,
        previous: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(name: &'static str, value: f64, reason: &'static str) -> Error {
    Error::Domain {
        name,
        value,
        reason,
    }
}
