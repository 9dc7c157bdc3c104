use num_traits::Zero;

use super::parity::{GradedBasis, Parity};
use super::table::Table;
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Scalar, SparseVec, Subspace};

/// A ℤ₂-graded space with a bracket, given by structure constants.
/// Whether the bracket satisfies the Leibniz identity is checked by
/// [`check_leibniz`](super::check_leibniz), not assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizSuperalgebra {
    basis: GradedBasis,
    bracket: Table,
}

impl LeibnizSuperalgebra {
    pub fn new(basis: GradedBasis, bracket: Table) -> Result<Self> {
        let d = basis.dim();
        for (expected, found) in [
            (d, bracket.rows()),
            (d, bracket.cols()),
            (d, bracket.out_dim()),
        ] {
            if expected != found {
                return Err(Error::DimensionMismatch { expected, found });
            }
        }
        Ok(Self { basis, bracket })
    }

    pub fn from_fn(basis: GradedBasis, f: impl FnMut(usize, usize) -> SparseVec) -> Result<Self> {
        let d = basis.dim();
        let bracket = Table::from_fn(d, d, d, f)?;
        Ok(Self { basis, bracket })
    }

    pub fn abelian(basis: GradedBasis) -> Self {
        let d = basis.dim();
        Self {
            basis,
            bracket: Table::zero(d, d, d),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis.parity(i)
    }

    pub fn table(&self) -> &Table {
        &self.bracket
    }

    /// `[e_i, e_j]`
    pub fn bracket(&self, i: usize, j: usize) -> &SparseVec {
        self.bracket.get(i, j)
    }

    pub fn bracket_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.bracket.apply(x, y)
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, v: SparseVec) -> Result<()> {
        self.bracket.set(i, j, v)
    }

    /// Looks up `[a, b]` by basis names.
    pub fn bracket_named(&self, a: &str, b: &str) -> Result<&SparseVec> {
        Ok(self.bracket(self.basis.index(a)?, self.basis.index(b)?))
    }

    /// Left multiplication `ad z = [z, -]`.
    pub fn ad(&self, z: &SparseVec) -> LinearMap {
        let cols = (0..self.dim())
            .map(|j| self.bracket.apply_left(z, j))
            .collect();
        LinearMap::from_columns(cols, self.dim()).expect("bracket values are in range")
    }

    /// Right multiplication `[-, z]`.
    pub fn right_mul(&self, z: &SparseVec) -> LinearMap {
        let cols = (0..self.dim())
            .map(|i| self.bracket.apply_right(i, z))
            .collect();
        LinearMap::from_columns(cols, self.dim()).expect("bracket values are in range")
    }

    /// The subalgebra carried by `s`, with basis the echelon rows of `s`.
    /// Fails if a row is not homogeneous or `s` is not closed.
    pub fn subalgebra(&self, s: &Subspace, names: Vec<String>) -> Result<Self> {
        if names.len() != s.dim() {
            return Err(Error::DimensionMismatch {
                expected: s.dim(),
                found: names.len(),
            });
        }
        let parities = s
            .basis()
            .iter()
            .map(|r| Ok(self.basis.parity_of(r)?.unwrap_or_default()))
            .collect::<Result<Vec<_>>>()?;
        let basis = GradedBasis::new(names.into_iter().zip(parities))?;
        let rows = s.basis();
        Self::try_from_fn(basis, |i, j| {
            s.coordinates(&self.bracket_vec(&rows[i], &rows[j]))
                .ok_or(Error::NotASubspace)
        })
    }

    /// `self / ideal`, on the non-pivot basis vectors of `ideal`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Self> {
        let keep = ideal.complement_indices();
        let basis = GradedBasis::new(
            keep.iter()
                .map(|i| (self.basis.name(*i).to_string(), self.parity(*i))),
        )?;
        Self::from_fn(basis, |a, b| {
            ideal.quotient_coordinates(self.bracket(keep[a], keep[b]))
        })
    }

    pub fn try_from_fn(
        basis: GradedBasis,
        mut f: impl FnMut(usize, usize) -> Result<SparseVec>,
    ) -> Result<Self> {
        let d = basis.dim();
        let mut bracket = Table::zero(d, d, d);
        for i in 0..d {
            for j in 0..d {
                bracket.set(i, j, f(i, j)?)?;
            }
        }
        Ok(Self { basis, bracket })
    }

    /// `self ⊕ other` with componentwise bracket.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let n = self.dim();
        let basis = self.basis.concat(&other.basis, |s| s.to_string())?;
        Self::from_fn(basis, |i, j| match (i < n, j < n) {
            (true, true) => self.bracket(i, j).clone(),
            (false, false) => other.bracket(i - n, j - n).shifted(n),
            _ => SparseVec::zero(),
        })
    }
}

/// A ℤ₂-graded space with two products `⊣` (left) and `⊢` (right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperDialgebra {
    basis: GradedBasis,
    left: Table,
    right: Table,
    bar_unit: Option<SparseVec>,
}

impl SuperDialgebra {
    pub fn new(basis: GradedBasis, left: Table, right: Table) -> Result<Self> {
        let d = basis.dim();
        for t in [&left, &right] {
            for (expected, found) in [(d, t.rows()), (d, t.cols()), (d, t.out_dim())] {
                if expected != found {
                    return Err(Error::DimensionMismatch { expected, found });
                }
            }
        }
        Ok(Self {
            basis,
            left,
            right,
            bar_unit: None,
        })
    }

    pub fn from_fns(
        basis: GradedBasis,
        left: impl FnMut(usize, usize) -> SparseVec,
        right: impl FnMut(usize, usize) -> SparseVec,
    ) -> Result<Self> {
        let d = basis.dim();
        let left = Table::from_fn(d, d, d, left)?;
        let right = Table::from_fn(d, d, d, right)?;
        Self::new(basis, left, right)
    }

    /// Attaches a bar-unit after checking `1 ⊢ a = a = a ⊣ 1` on the basis.
    pub fn with_bar_unit(mut self, unit: SparseVec) -> Result<Self> {
        for a in 0..self.dim() {
            let e = SparseVec::unit(a);
            if self.right_vec(&unit, &e) != e || self.left_vec(&e, &unit) != e {
                return Err(Error::NoBarUnit);
            }
        }
        self.bar_unit = Some(unit);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis.parity(i)
    }

    pub fn bar_unit(&self) -> Option<&SparseVec> {
        self.bar_unit.as_ref()
    }

    pub fn left_table(&self) -> &Table {
        &self.left
    }

    pub fn right_table(&self) -> &Table {
        &self.right
    }

    /// `e_i ⊣ e_j`
    pub fn left(&self, i: usize, j: usize) -> &SparseVec {
        self.left.get(i, j)
    }

    /// `e_i ⊢ e_j`
    pub fn right(&self, i: usize, j: usize) -> &SparseVec {
        self.right.get(i, j)
    }

    pub fn left_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.left.apply(x, y)
    }

    pub fn right_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.right.apply(x, y)
    }

    pub fn set_left(&mut self, i: usize, j: usize, v: SparseVec) -> Result<()> {
        self.left.set(i, j, v)
    }

    pub fn set_right(&mut self, i: usize, j: usize, v: SparseVec) -> Result<()> {
        self.right.set(i, j, v)
    }

    /// `a ⊣ b = (-1)^{|a||b|} b ⊢ a` on all basis pairs.
    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|a| {
            (0..self.dim()).all(|b| {
                let rhs = if self.parity(a).koszul(self.parity(b)) {
                    -self.right(b, a)
                } else {
                    self.right(b, a).clone()
                };
                *self.left(a, b) == rhs
            })
        })
    }

    /// `⊣ = ⊢`
    pub fn is_associative_type(&self) -> bool {
        self.left == self.right
    }

    pub fn find_bar_unit(&self) -> Option<SparseVec> {
        let d = self.dim();
        // unknown u: (u ⊢ e_a) = e_a and (e_a ⊣ u) = e_a, linear in u
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for a in 0..d {
            for k in 0..d {
                let r1 = SparseVec::from_entries((0..d).map(|u| (u, self.right(u, a).coeff(k))));
                let r2 = SparseVec::from_entries((0..d).map(|u| (u, self.left(a, u).coeff(k))));
                let target = if a == k {
                    Scalar::from_integer(1.into())
                } else {
                    Scalar::zero()
                };
                rows.push(r1);
                rhs.push(target.clone());
                rows.push(r2);
                rhs.push(target);
            }
        }
        crate::linalg::solve(
            &rows,
            d,
            &SparseVec::from_entries(rhs.into_iter().enumerate()),
        )
        .ok()
    }
}

/// A ℤ₂-graded algebra with a single product, assumed associative only
/// after [`check_associative`](super::check_associative).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativeSuperalgebra {
    basis: GradedBasis,
    mul: Table,
    unit: Option<SparseVec>,
}

impl AssociativeSuperalgebra {
    pub fn from_fn(basis: GradedBasis, f: impl FnMut(usize, usize) -> SparseVec) -> Result<Self> {
        let d = basis.dim();
        let mul = Table::from_fn(d, d, d, f)?;
        Ok(Self {
            basis,
            mul,
            unit: None,
        })
    }

    pub fn with_unit(mut self, unit: SparseVec) -> Result<Self> {
        for a in 0..self.dim() {
            let e = SparseVec::unit(a);
            if self.mul_vec(&unit, &e) != e || self.mul_vec(&e, &unit) != e {
                return Err(Error::Unsupported("not a two-sided unit".into()));
            }
        }
        self.unit = Some(unit);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis.parity(i)
    }

    pub fn unit(&self) -> Option<&SparseVec> {
        self.unit.as_ref()
    }

    pub fn table(&self) -> &Table {
        &self.mul
    }

    pub fn mul(&self, i: usize, j: usize) -> &SparseVec {
        self.mul.get(i, j)
    }

    pub fn mul_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.mul.apply(x, y)
    }

    /// Super commutator `xy - (-1)^{|x||y|} yx` on basis elements.
    pub fn commutator(&self, i: usize, j: usize) -> SparseVec {
        let mut out = self.mul(i, j).clone();
        let s = super::parity::koszul_sign(self.parity(i), self.parity(j));
        out.add_scaled(&-s, self.mul(j, i));
        out
    }

    pub fn as_dialgebra(&self) -> SuperDialgebra {
        SuperDialgebra {
            basis: self.basis.clone(),
            left: self.mul.clone(),
            right: self.mul.clone(),
            bar_unit: self.unit.clone(),
        }
    }

    /// The super commutator algebra.
    pub fn commutator_algebra(&self) -> LeibnizSuperalgebra {
        LeibnizSuperalgebra::from_fn(self.basis.clone(), |i, j| self.commutator(i, j))
            .expect("commutator values are in range")
    }
}

/// A bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    dim: usize,
    gram: Vec<Scalar>,
}

impl BilinearForm {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            gram: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut g = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                g.gram[i * dim + j] = f(i, j);
            }
        }
        g
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.gram[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: Scalar) {
        self.gram[i * self.dim + j] = c;
    }

    pub fn eval(&self, x: &SparseVec, y: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let g = self.get(i, j);
                if !g.is_zero() {
                    acc += a * b * g;
                }
            }
        }
        acc
    }

    /// `(e_i, e_j) = 0` across parities and `(e_i, e_j) = (-1)^{|i||j|} (e_j, e_i)`.
    pub fn is_even_supersymmetric(&self, basis: &GradedBasis) -> bool {
        if basis.dim() != self.dim {
            return false;
        }
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let g = self.get(i, j);
                if basis.parity(i) != basis.parity(j) {
                    return g.is_zero();
                }
                let s = super::parity::koszul_sign(basis.parity(i), basis.parity(j));
                *g == s * self.get(j, i)
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.gram
            .iter()
            .enumerate()
            .map(move |(k, c)| (k / self.dim, k % self.dim, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn quotient_and_subalgebra_shapes() {
        let b = GradedBasis::even(&["x", "y", "z"]).unwrap();
        // Heisenberg: [x, y] = z
        let l = LeibnizSuperalgebra::from_fn(b, |i, j| match (i, j) {
            (0, 1) => SparseVec::unit(2),
            (1, 0) => SparseVec::single(2, int(-1)),
            _ => SparseVec::zero(),
        })
        .unwrap();
        let z = Subspace::from_rows([SparseVec::unit(2)].iter(), 3).unwrap();
        let q = l.quotient(&z).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.table().is_zero());
        let s = l.subalgebra(&z, vec!["c".into()]).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(l
            .subalgebra(
                &Subspace::from_rows([SparseVec::unit(0), SparseVec::unit(1)].iter(), 3).unwrap(),
                vec!["a".into(), "b".into()]
            )
            .is_err());
    }

    #[test]
    fn bar_unit_detection() {
        let b = GradedBasis::even(&["1", "t"]).unwrap();
        let a = AssociativeSuperalgebra::from_fn(b, |i, j| {
            if i + j < 2 {
                SparseVec::unit(i + j)
            } else {
                SparseVec::zero()
            }
        })
        .unwrap();
        let d = a.as_dialgebra();
        assert_eq!(d.find_bar_unit(), Some(SparseVec::unit(0)));
        assert!(d.clone().with_bar_unit(SparseVec::unit(1)).is_err());
        assert!(d.is_commutative());
    }
}
