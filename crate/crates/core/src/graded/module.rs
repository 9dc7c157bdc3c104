use super::algebra::LeibnizSuperalgebra;
use super::parity::{GradedBasis, Parity};
use super::table::Table;
use crate::error::{Error, Result};
use crate::linalg::SparseVec;

/// A graded module `M` over a Leibniz superalgebra `L` with actions
/// `[x, m]` and `[m, x]`.
#[derive(Clone, Debug)]
pub struct LeibnizModule<'a> {
    algebra: &'a LeibnizSuperalgebra,
    basis: GradedBasis,
    // (algebra i, module m)
    left: Table,
    // (module m, algebra i)
    right: Table,
}

impl<'a> LeibnizModule<'a> {
    pub fn new(
        algebra: &'a LeibnizSuperalgebra,
        basis: GradedBasis,
        left: Table,
        right: Table,
    ) -> Result<Self> {
        let (a, m) = (algebra.dim(), basis.dim());
        for (expected, found) in [
            (a, left.rows()),
            (m, left.cols()),
            (m, left.out_dim()),
            (m, right.rows()),
            (a, right.cols()),
            (m, right.out_dim()),
        ] {
            if expected != found {
                return Err(Error::DimensionMismatch { expected, found });
            }
        }
        Ok(Self {
            algebra,
            basis,
            left,
            right,
        })
    }

    /// `M = L` with both actions the bracket.
    pub fn adjoint(algebra: &'a LeibnizSuperalgebra) -> Self {
        Self {
            algebra,
            basis: algebra.basis().clone(),
            left: algebra.table().clone(),
            right: algebra.table().clone(),
        }
    }

    /// Both actions zero.
    pub fn trivial(algebra: &'a LeibnizSuperalgebra, basis: GradedBasis) -> Self {
        let (a, m) = (algebra.dim(), basis.dim());
        Self {
            algebra,
            basis,
            left: Table::zero(a, m, m),
            right: Table::zero(m, a, m),
        }
    }

    /// `ℚ^dim`, all even, trivial actions.
    pub fn trivial_even(algebra: &'a LeibnizSuperalgebra, dim: usize) -> Self {
        let names: Vec<String> = (0..dim).map(|i| format!("c{i}")).collect();
        let basis =
            GradedBasis::new(names.into_iter().map(|n| (n, Parity::Even))).expect("distinct names");
        Self::trivial(algebra, basis)
    }

    pub fn algebra(&self) -> &'a LeibnizSuperalgebra {
        self.algebra
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn parity(&self, m: usize) -> Parity {
        self.basis.parity(m)
    }

    pub fn left_table(&self) -> &Table {
        &self.left
    }

    pub fn right_table(&self) -> &Table {
        &self.right
    }

    /// `[e_i, m]` for an algebra basis index and a module vector.
    pub fn act_left(&self, i: usize, m: &SparseVec) -> SparseVec {
        self.left.apply_right(i, m)
    }

    /// `[m, e_i]`
    pub fn act_right(&self, m: &SparseVec, i: usize) -> SparseVec {
        self.right.apply_left(m, i)
    }

    pub fn act_left_vec(&self, x: &SparseVec, m: &SparseVec) -> SparseVec {
        self.left.apply(x, m)
    }

    pub fn act_right_vec(&self, m: &SparseVec, x: &SparseVec) -> SparseVec {
        self.right.apply(m, x)
    }

    pub fn is_trivial(&self) -> bool {
        self.left.is_zero() && self.right.is_zero()
    }

    /// Same module with every right action entry negated.
    pub fn with_negated_right(&self) -> Self {
        let (a, m) = (self.algebra.dim(), self.dim());
        let right = Table::from_fn(m, a, m, |p, i| -self.right.get(p, i)).expect("same shape");
        Self {
            right,
            ..self.clone()
        }
    }
}
