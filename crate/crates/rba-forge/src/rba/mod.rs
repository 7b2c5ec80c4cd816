//! Abstract presentations of reality-based algebras: structure tensors,
//! involutions, degree maps, the axiom verifier, and the circle product.

pub mod circle;
pub mod degree;
pub mod involution;
pub mod presentation;
pub mod tensor;
pub mod verify;

pub use circle::{circle_product, circle_product_with_idempotent, CircleProduct};
pub use degree::{
    degree_candidate, standard_trace, standardize, verify_degree_map, DegreeCheck, DegreeMap,
};
pub use involution::InvolutionPerm;
pub use presentation::RbaPresentation;
pub use tensor::StructureTensor;
pub use verify::{verify_rba, AxiomCheck, AxiomFailure, TensorFlags, VerificationReport};
