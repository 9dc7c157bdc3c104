use crate::error::{Error, Result};
use crate::linalg::SparseVec;

/// Structure constants of a bilinear map `Q^rows × Q^cols -> Q^out`.
/// Missing entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    rows: usize,
    cols: usize,
    out: usize,
    entries: Vec<SparseVec>,
}

impl Table {
    pub fn zero(rows: usize, cols: usize, out: usize) -> Self {
        Self {
            rows,
            cols,
            out,
            entries: vec![SparseVec::zero(); rows * cols],
        }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        out: usize,
        mut f: impl FnMut(usize, usize) -> SparseVec,
    ) -> Result<Self> {
        let mut t = Self::zero(rows, cols, out);
        for i in 0..rows {
            for j in 0..cols {
                t.set(i, j, f(i, j))?;
            }
        }
        Ok(t)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn out_dim(&self) -> usize {
        self.out
    }

    pub fn get(&self, i: usize, j: usize) -> &SparseVec {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: SparseVec) -> Result<()> {
        if i >= self.rows {
            return Err(Error::IndexOutOfRange {
                index: i,
                dim: self.rows,
            });
        }
        if j >= self.cols {
            return Err(Error::IndexOutOfRange {
                index: j,
                dim: self.cols,
            });
        }
        if let Some(m) = v.max_index() {
            if m >= self.out {
                return Err(Error::IndexOutOfRange {
                    index: m,
                    dim: self.out,
                });
            }
        }
        self.entries[i * self.cols + j] = v;
        Ok(())
    }

    /// Bilinear extension to arbitrary vectors.
    pub fn apply(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let e = self.get(i, j);
                if !e.is_zero() {
                    out.add_scaled(&(a * b), e);
                }
            }
        }
        out
    }

    /// `x * e_j`
    pub fn apply_left(&self, x: &SparseVec, j: usize) -> SparseVec {
        let mut out = SparseVec::zero();
        for (i, a) in x.iter() {
            out.add_scaled(a, self.get(i, j));
        }
        out
    }

    /// `e_i * y`
    pub fn apply_right(&self, i: usize, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (j, b) in y.iter() {
            out.add_scaled(b, self.get(i, j));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(SparseVec::is_zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &SparseVec)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }
}
