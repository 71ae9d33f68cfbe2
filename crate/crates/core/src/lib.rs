//! Sixteen-component noncommutative space-time algebra ("sedeons") with
//! space rotations, space-time inversions and Lorentz boosts, matrix
//! representations, and a plane-wave field lab that checks the massive wave
//! equation, its Maxwell limit and the first-order Dirac-type equation by
//! residual evaluation.

pub mod algebra;
pub mod error;
pub mod field_lab;
pub mod matrix_rep;
pub mod report;
pub mod sample;
pub mod suites;
pub mod transforms;

pub use algebra::{
    linear_combine, scalar_product, unit_product, vector_product, Complex64, Sedeon, SedeonIndex,
    StructureTable, UnitBasis, UnitCoeff,
};
pub use error::SedeonError;
pub use field_lab::{PhaseSign, PlaneWaveField, WaveOperatorParams};
pub use report::{ResidualEntry, ResidualReport};
pub use transforms::{Boost, EventVector, Inversion, Rotor};
