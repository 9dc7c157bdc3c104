//! Leibniz cohomology `HL*(L, M)`, second cohomology with trivial
//! coefficients, central extensions and derivations.

mod cochain;
mod derivations;
mod second;

pub use cochain::{
    basis_cochain_parity, check_d_squared, coboundary, coboundary_at, coboundary_matrix,
    cochain_dim, cocycle_space, hl_dim, hl_dims, tuple_index, tuple_of, Cochain, CohomologyDims,
};
pub use derivations::{
    derivation_space, endo_coordinates, endo_from_coordinates, inner_derivation_space,
    is_derivation, right_inner_derivation,
};
pub use second::{
    are_equivalent, central_sum, extension_from_cocycle, is_cocycle, skew_hl2_dim, z2_b2,
    CentralExtension, CocycleSpace,
};
