use super::scalar::Scalar;
use super::sparse::SparseVec;
use super::subspace::{kernel, rref, solve, Subspace};
use crate::error::{Error, Result};

/// A linear map `Q^dim_in -> Q^dim_out`, stored by the images of the
/// input basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    dim_in: usize,
    dim_out: usize,
    columns: Vec<SparseVec>,
}

impl LinearMap {
    pub fn from_columns(columns: Vec<SparseVec>, dim_out: usize) -> Result<Self> {
        for c in &columns {
            if let Some(m) = c.max_index() {
                if m >= dim_out {
                    return Err(Error::IndexOutOfRange {
                        index: m,
                        dim: dim_out,
                    });
                }
            }
        }
        Ok(Self {
            dim_in: columns.len(),
            dim_out,
            columns,
        })
    }

    pub fn zero(dim_in: usize, dim_out: usize) -> Self {
        Self {
            dim_in,
            dim_out,
            columns: vec![SparseVec::zero(); dim_in],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim_in: dim,
            dim_out: dim,
            columns: (0..dim).map(SparseVec::unit).collect(),
        }
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn column(&self, i: usize) -> &SparseVec {
        &self.columns[i]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (i, c) in v.iter() {
            if let Some(col) = self.columns.get(i) {
                out.add_scaled(c, col);
            }
        }
        out
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if inner.dim_out != self.dim_in {
            return Err(Error::DimensionMismatch {
                expected: self.dim_in,
                found: inner.dim_out,
            });
        }
        Ok(LinearMap {
            dim_in: inner.dim_in,
            dim_out: self.dim_out,
            columns: inner.columns.iter().map(|c| self.apply(c)).collect(),
        })
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            dim_in: self.dim_in,
            dim_out: self.dim_out,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scaled(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            dim_in: self.dim_in,
            dim_out: self.dim_out,
            columns: self.columns.iter().map(|v| v.scaled(c)).collect(),
        }
    }

    /// Matrix rows, i.e. the columns of the transpose.
    pub fn rows(&self) -> Vec<SparseVec> {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.dim_out];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col.iter() {
                rows[i].push((j, c.clone()));
            }
        }
        rows.into_iter().map(SparseVec::from_entries).collect()
    }

    pub fn transpose(&self) -> LinearMap {
        LinearMap {
            dim_in: self.dim_out,
            dim_out: self.dim_in,
            columns: self.rows(),
        }
    }

    pub fn kernel(&self) -> Subspace {
        kernel(&self.rows(), self.dim_in).expect("map columns are in range")
    }

    pub fn image(&self) -> Subspace {
        rref(&self.columns, self.dim_out).expect("map columns are in range")
    }

    pub fn rank(&self) -> usize {
        self.image().dim()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    /// Some `x` with `self(x) = y`.
    pub fn preimage(&self, y: &SparseVec) -> Result<SparseVec> {
        solve(&self.rows(), self.dim_in, y)
    }

    pub fn is_bijective(&self) -> bool {
        self.dim_in == self.dim_out && self.rank() == self.dim_in
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        if !self.is_bijective() {
            return Err(Error::NotAnAutomorphism("map is not invertible".into()));
        }
        let rows = self.rows();
        let columns = (0..self.dim_out)
            .map(|i| solve(&rows, self.dim_in, &SparseVec::unit(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearMap {
            dim_in: self.dim_out,
            dim_out: self.dim_in,
            columns,
        })
    }

    /// Restriction of the codomain reading coordinates in `target`'s basis.
    pub fn corestrict(&self, target: &Subspace) -> Result<LinearMap> {
        let columns = self
            .columns
            .iter()
            .map(|c| target.coordinates(c).ok_or(Error::NotASubspace))
            .collect::<Result<Vec<_>>>()?;
        LinearMap::from_columns(columns, target.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    fn v(xs: &[i64]) -> SparseVec {
        SparseVec::from_entries(xs.iter().enumerate().map(|(i, x)| (i, int(*x))))
    }

    #[test]
    fn kernel_image_rank_nullity() {
        let m = LinearMap::from_columns(vec![v(&[1, 2]), v(&[2, 4]), v(&[0, 1])], 2).unwrap();
        assert_eq!(m.rank() + m.kernel().dim(), 3);
        for k in m.kernel().basis() {
            assert!(m.apply(k).is_zero());
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = LinearMap::from_columns(vec![v(&[2, 1]), v(&[1, 1])], 2).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv).unwrap(), LinearMap::identity(2));
        assert!(LinearMap::zero(2, 2).inverse().is_err());
    }

    #[test]
    fn preimage_substitutes() {
        let m = LinearMap::from_columns(vec![v(&[1, 0]), v(&[1, 0])], 2).unwrap();
        let x = m.preimage(&v(&[3])).unwrap();
        assert_eq!(m.apply(&x), v(&[3]));
        assert!(m.preimage(&v(&[0, 1])).is_err());
    }
}
