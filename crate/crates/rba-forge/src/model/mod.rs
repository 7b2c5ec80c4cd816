//! Concrete realizations of bases as block-matrix tuples over the exact
//! scalar ring, with blockwise transpose as the involution: structure
//! constant extraction, character data, and the quadratic identities of
//! shape (1, 2) bases.

pub mod chars;
pub mod extract;
pub mod mat;
pub mod quadratic;
pub mod solve;

pub use chars::{character_data, CharacterData, CharacterInfo};
pub use extract::{extract_structure_constants, involution_on_indices};
pub use mat::{conjugate_basis, BlockMat, BlockShape, Mat, MatrixBasis};
pub use quadratic::{quadratic_coeffs, EigenPair, QuadraticData};
