//! ℤ₂-graded structures and their identity checks.

mod algebra;
mod check;
mod module;
mod parity;
mod table;

pub use algebra::{AssociativeSuperalgebra, BilinearForm, LeibnizSuperalgebra, SuperDialgebra};
pub use check::{
    center, check_associative, check_dialgebra, check_dialgebra_where, check_grading,
    check_invariant_form, check_leibniz, check_leibniz_where, check_lie_super, check_module,
    check_right_leibniz, derived_subalgebra, invariant_form_report, lie_super_report, CheckReport,
    Failure, GradedStructure,
};
pub use module::LeibnizModule;
pub use parity::{koszul_sign, sign, GradedBasis, Parity};
pub use table::Table;
