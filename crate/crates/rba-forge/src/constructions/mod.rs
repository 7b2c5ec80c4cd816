//! Basis constructions: small diagonal bases and character tables, the
//! affine-plane table algebra, the off-diagonal lift to full matrix
//! algebras, circle-product assemblies of semisimple algebras, the
//! five-dimensional two-block family, and the equal-degree basis of
//! ℂ ⊕ M_m.

pub mod affine;
pub mod cm;
pub mod diagonal;
pub mod dim5;
pub mod lift;
pub mod semisimple;

pub use affine::affine_plane_ta;
pub use cm::{
    check_p1_conditions, cm_basis, cm_reflected_matrices, cm_seed_matrices, CmParams, P1Report,
};
pub use diagonal::{character_table_to_diag, diag_basis_small, CharacterTable};
pub use dim5::{
    dim5_distinct_entries, dim5_family, dim5_lambda_table, dim5_presentation, dim5_star, Dim5Params,
};
pub use lift::{lift_diag_to_full, rational_basis_mn};
pub use semisimple::{
    adjoin_scalar_component, attach_realization, semisimple_rational_rba,
    semisimple_rational_realization,
};
