//! Functors and concrete builders.

mod free;
mod functors;
mod loops;
mod matrix;
pub mod random;

pub(crate) use functors::require;

pub use free::{free_leibniz_super, free_super_dialgebra, FreeDialgebra, FreeLeibniz, FreeWord};
pub use functors::{
    associativize, dialgebra_to_leibniz, dialgebra_to_right_leibniz,
    from_differential_superalgebra, ideal_closure, lieize, tensor_dialgebra,
};
pub use loops::{current_algebra, loop_leibniz, tensor_square_leibniz, LoopAlgebra};
pub use matrix::{
    check_stl_relations, gl_leibniz, index_parity, matrix_dialgebra, matrix_superalgebra,
    sl_leibniz, tau, StlRelation,
};
