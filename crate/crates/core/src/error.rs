use thiserror::Error;

/// Errors raised by constructors and contract-checked operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SedeonError {
    #[error("unit index ({n}, {k}) out of range; both indices must be in 0..=3")]
    IndexOutOfRange { n: usize, k: usize },

    #[error("operand must be a pure sedeon-vector, found scalar content of magnitude {magnitude:e}")]
    NotPureVector { magnitude: f64 },

    #[error("axis must be a unit 3-vector; norm {norm} is more than 1e-9 from 1")]
    NonUnitAxis { norm: f64 },

    #[error("velocity ratio must satisfy |v/c| < 1, got {beta}")]
    SpeedLimit { beta: f64 },

    #[error("speed of light must be positive, got {c}")]
    NonPositiveLightSpeed { c: f64 },

    #[error("mass coefficient must be non-negative, got {value}")]
    NegativeMass { value: f64 },

    #[error("sedeon is not event-shaped; stray component of magnitude {magnitude:e}")]
    NotEventShaped { magnitude: f64 },

    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    #[error("grid needs at least 5 samples, got {count}")]
    GridTooSmall { count: usize },

    #[error("grid field must vary along x only; wave vector has transverse components")]
    GridNotAxial,

    #[error("wave vector must be nonzero")]
    ZeroWaveVector,
}
