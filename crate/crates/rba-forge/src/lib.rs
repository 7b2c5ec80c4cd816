//! Exact construction, verification, and search of reality-based algebra
//! (RBA) bases of finite-dimensional semisimple algebras.
//!
//! All correctness paths run in exact arithmetic over the ring of rational
//! linear combinations of square roots of square-free positive integers;
//! floating point never appears outside decimal display rendering. Values
//! are immutable after construction and all operations are pure, so
//! presentations and bases can be verified concurrently without shared
//! state.

pub mod constructions;
pub mod error;
pub mod exact;
pub mod json;
pub mod latex;
pub mod model;
pub mod rba;
pub mod scan;

pub use error::{Error, Result};
pub use exact::{RadicalNumber, Rational};
pub use model::{BlockMat, BlockShape, Mat, MatrixBasis};
pub use rba::{DegreeMap, InvolutionPerm, RbaPresentation, StructureTensor, VerificationReport};
