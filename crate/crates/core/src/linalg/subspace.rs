use num_traits::{One, Zero};

use super::scalar::Scalar;
use super::sparse::SparseVec;
use crate::error::{Error, Result};

const NO_ROW: usize = usize::MAX;

/// A linear subspace of `Q^ambient_dim`, held in canonical reduced row
/// echelon form: every row has leading coefficient 1 at its pivot, pivots
/// strictly increase, and each pivot column is zero in every other row.
///
/// Two generating sets of the same subspace produce identical `Subspace`
/// values, so `==` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    // column -> position in `rows`, NO_ROW if not a pivot
    pivot_row: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![NO_ROW; ambient_dim],
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let mut s = Self::zero(ambient_dim);
        for i in 0..ambient_dim {
            s.rows.push(SparseVec::unit(i));
            s.pivots.push(i);
            s.pivot_row[i] = i;
        }
        s
    }

    /// Row space of `rows`. Fails if an index is `>= ambient_dim`.
    pub fn from_rows<'a, I>(rows: I, ambient_dim: usize) -> Result<Self>
    where
        I: IntoIterator<Item = &'a SparseVec>,
    {
        let mut s = Self::zero(ambient_dim);
        for r in rows {
            s.insert(r)?;
        }
        Ok(s)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient_dim
    }

    fn check_range(&self, v: &SparseVec) -> Result<()> {
        match v.max_index() {
            Some(m) if m >= self.ambient_dim => Err(Error::IndexOutOfRange {
                index: m,
                dim: self.ambient_dim,
            }),
            _ => Ok(()),
        }
    }

    /// Canonical remainder of `v` modulo this subspace: the unique vector
    /// `v - s` (with `s` in the subspace) that vanishes on every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter_map(|(i, c)| {
                let r = *self.pivot_row.get(i)?;
                (r != NO_ROW).then(|| (r, c.clone()))
            })
            .collect();
        if hits.is_empty() {
            return v.clone();
        }
        // Rows are fully reduced, so subtracting a row never reintroduces a
        // pivot column; one pass over the hits suffices.
        let fill: usize = v.nnz() + hits.iter().map(|(r, _)| self.rows[*r].nnz()).sum::<usize>();
        if 2 * fill > self.ambient_dim && hits.len() > 1 {
            let mut dense = v.to_dense(self.ambient_dim);
            for (r, c) in &hits {
                for (j, x) in self.rows[*r].iter() {
                    dense[j] -= c * x;
                }
            }
            SparseVec::from_dense(&dense)
        } else {
            let mut out = v.clone();
            for (r, c) in &hits {
                out.add_scaled(&-c, &self.rows[*r]);
            }
            out
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` with respect to `basis()`, or `None` if `v` is not
    /// in the subspace. In RREF the coordinate on row `r` is `v[pivot_r]`.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.contains(v) {
            return None;
        }
        Some(SparseVec::from_entries(
            self.pivots
                .iter()
                .enumerate()
                .map(|(r, p)| (r, v.coeff(*p))),
        ))
    }

    /// Inverse of [`coordinates`](Self::coordinates).
    pub fn combine(&self, coords: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (r, c) in coords.iter() {
            out.add_scaled(c, &self.rows[r]);
        }
        out
    }

    /// Adds `v` to the spanning set, keeping canonical form. Returns whether
    /// the dimension grew.
    pub fn insert(&mut self, v: &SparseVec) -> Result<bool> {
        self.check_range(v)?;
        let mut r = self.reduce(v);
        let (q, lead) = match r.leading() {
            None => return Ok(false),
            Some((q, c)) => (q, c.clone()),
        };
        if !lead.is_one() {
            r.scale_mut(&lead.recip());
        }
        for row in &mut self.rows {
            if let Some(c) = row.get(q).cloned() {
                row.add_scaled(&-c, &r);
            }
        }
        let pos = self.pivots.partition_point(|p| *p < q);
        self.rows.insert(pos, r);
        self.pivots.insert(pos, q);
        for (k, p) in self.pivots.iter().enumerate().skip(pos) {
            self.pivot_row[*p] = k;
        }
        Ok(true)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r)?;
        }
        Ok(s)
    }

    /// Indices of the non-pivot columns. The corresponding unit vectors form
    /// a complement and index the coordinates of the quotient space.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|i| self.pivot_row[*i] == NO_ROW)
            .collect()
    }

    /// Coordinates of the class of `v` in `ambient / self`, indexed by
    /// position in [`complement_indices`](Self::complement_indices).
    pub fn quotient_coordinates(&self, v: &SparseVec) -> SparseVec {
        let rem = self.reduce(v);
        SparseVec::from_entries(
            rem.iter()
                .map(|(i, c)| (self.pivots.partition_point(|p| *p < i), i, c))
                .map(|(npiv, i, c)| (i - npiv, c.clone())),
        )
    }

    /// Embeds into a larger ambient space by shifting every index by `offset`.
    pub fn embed(&self, offset: usize, ambient_dim: usize) -> Result<Subspace> {
        let rows: Vec<SparseVec> = self.rows.iter().map(|r| r.shifted(offset)).collect();
        Subspace::from_rows(rows.iter(), ambient_dim)
    }
}

/// Canonical reduced echelon form of the row space of `rows`.
pub fn rref(rows: &[SparseVec], ambient_dim: usize) -> Result<Subspace> {
    Subspace::from_rows(rows.iter(), ambient_dim)
}

/// Null space `{x : A x = 0}` of the matrix whose rows are `rows`.
pub fn kernel(rows: &[SparseVec], ncols: usize) -> Result<Subspace> {
    let echelon = rref(rows, ncols)?;
    let mut out = Subspace::zero(ncols);
    for f in echelon.complement_indices() {
        let mut v = SparseVec::unit(f);
        for (row, p) in echelon.rows.iter().zip(&echelon.pivots) {
            if let Some(c) = row.get(f) {
                v.add_scaled(&-c.clone(), &SparseVec::unit(*p));
            }
        }
        out.insert(&v)?;
    }
    Ok(out)
}

/// Some `x` with `A x = rhs`, where `A` has rows `rows` and `ncols` columns.
/// Free variables are set to zero.
pub fn solve(rows: &[SparseVec], ncols: usize, rhs: &SparseVec) -> Result<SparseVec> {
    if let Some(m) = rhs.max_index() {
        if m >= rows.len() {
            return Err(Error::DimensionMismatch {
                expected: rows.len(),
                found: m + 1,
            });
        }
    }
    let augmented: Vec<SparseVec> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut a = r.clone();
            if let Some(b) = rhs.get(i) {
                a.add_scaled(&Scalar::one(), &SparseVec::single(ncols, b.clone()));
            }
            a
        })
        .collect();
    for a in &augmented {
        if let Some(m) = a.max_index() {
            if m > ncols {
                return Err(Error::IndexOutOfRange {
                    index: m,
                    dim: ncols,
                });
            }
        }
    }
    let echelon = rref(&augmented, ncols + 1)?;
    if echelon.pivots.last() == Some(&ncols) {
        return Err(Error::Inconsistent);
    }
    Ok(SparseVec::from_entries(
        echelon
            .rows
            .iter()
            .zip(&echelon.pivots)
            .map(|(row, p)| (*p, row.coeff(ncols))),
    ))
}

/// `dim(sup) - dim(sub)`, after checking `sub ⊆ sup`.
pub fn quotient_dim(sub: &Subspace, sup: &Subspace) -> Result<usize> {
    if !sub.is_subspace_of(sup) {
        return Err(Error::NotASubspace);
    }
    Ok(sup.dim() - sub.dim())
}

/// `u ∩ v` by the Zassenhaus construction: row-reduce `[u | u]` stacked on
/// `[v | 0]`; rows whose left half vanishes carry the intersection.
pub fn intersect(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    let n = u.ambient_dim;
    if v.ambient_dim != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.ambient_dim,
        });
    }
    let mut big = Subspace::zero(2 * n);
    for r in &u.rows {
        let mut row = r.clone();
        row.add_scaled(&Scalar::one(), &r.shifted(n));
        big.insert(&row)?;
    }
    for r in &v.rows {
        big.insert(r)?;
    }
    let mut out = Subspace::zero(n);
    for (row, p) in big.rows.iter().zip(&big.pivots) {
        if *p >= n {
            out.insert(&SparseVec::from_entries(
                row.iter().map(|(i, c)| (i - n, c.clone())),
            ))?;
        }
    }
    Ok(out)
}

impl Subspace {
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        intersect(self, other)
    }

    /// Whether every stored row has a zero at `i`.
    pub fn vanishes_on(&self, i: usize) -> bool {
        self.rows.iter().all(|r| r.get(i).is_none_or(Zero::is_zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{int, rat};

    fn v(xs: &[i64]) -> SparseVec {
        SparseVec::from_entries(xs.iter().enumerate().map(|(i, x)| (i, int(*x))))
    }

    #[test]
    fn rref_proportional_rows() {
        let s = rref(&[v(&[1, 2]), v(&[2, 4])], 2).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis()[0], v(&[1, 2]));
    }

    #[test]
    fn rref_empty_and_identity() {
        assert_eq!(rref(&[], 4).unwrap().dim(), 0);
        let id = rref(&[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])], 3).unwrap();
        assert_eq!(id, Subspace::full(3));
    }

    #[test]
    fn rref_rejects_out_of_range() {
        let err = rref(&[SparseVec::unit(5)], 3).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { index: 5, dim: 3 }));
    }

    #[test]
    fn rref_is_idempotent() {
        let s = rref(&[v(&[0, 2, 4, 1]), v(&[3, 1, 0, 0]), v(&[3, 3, 4, 1])], 4).unwrap();
        let again = rref(s.basis(), 4).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel(&[v(&[1, 2]), v(&[2, 4])], 2).unwrap();
        assert_eq!(k, rref(&[v(&[-2, 1])], 2).unwrap());
        assert!(kernel(&[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])], 3)
            .unwrap()
            .is_zero());
        assert_eq!(
            kernel(&[v(&[0, 0]), v(&[0, 0])], 2).unwrap(),
            Subspace::full(2)
        );
    }

    #[test]
    fn solve_examples() {
        let x = solve(&[v(&[2])], 1, &v(&[1])).unwrap();
        assert_eq!(x.coeff(0), rat(1, 2));
        assert!(matches!(
            solve(&[v(&[1]), v(&[1])], 1, &v(&[1, 2])),
            Err(Error::Inconsistent)
        ));
        let x = solve(&[v(&[1, 1])], 2, &v(&[3])).unwrap();
        assert_eq!(v(&[1, 1]).dot(&x), int(3));
    }

    #[test]
    fn quotient_dim_examples() {
        let full = Subspace::full(3);
        assert_eq!(quotient_dim(&Subspace::zero(3), &full).unwrap(), 3);
        assert_eq!(quotient_dim(&full, &full).unwrap(), 0);
        let line = rref(&[v(&[1, 0])], 2).unwrap();
        assert_eq!(quotient_dim(&line, &Subspace::full(2)).unwrap(), 1);
        let other = rref(&[v(&[0, 1])], 2).unwrap();
        assert!(matches!(
            quotient_dim(&line, &other),
            Err(Error::NotASubspace)
        ));
    }

    #[test]
    fn intersect_examples() {
        let a = rref(&[v(&[1, 0])], 2).unwrap();
        let b = rref(&[v(&[0, 1])], 2).unwrap();
        assert_eq!(intersect(&a, &a).unwrap(), a);
        assert!(intersect(&a, &b).unwrap().is_zero());
        let diag = rref(&[v(&[1, 1])], 2).unwrap();
        assert_eq!(intersect(&Subspace::full(2), &diag).unwrap(), diag);
        assert!(intersect(&a, &Subspace::full(3)).is_err());
    }

    #[test]
    fn quotient_coordinates_use_non_pivots() {
        let s = rref(&[v(&[1, 1, 0])], 3).unwrap();
        assert_eq!(s.complement_indices(), vec![1, 2]);
        // e0 ≡ -e1 modulo span{e0 + e1}
        assert_eq!(
            s.quotient_coordinates(&v(&[1])),
            SparseVec::single(0, int(-1))
        );
        assert_eq!(
            s.quotient_coordinates(&v(&[0, 0, 5])),
            SparseVec::single(1, int(5))
        );
    }

    #[test]
    fn coordinates_round_trip() {
        let s = rref(&[v(&[1, 2, 3]), v(&[0, 1, 1])], 3).unwrap();
        let x = v(&[2, 5, 7]);
        let c = s.coordinates(&x).unwrap();
        assert_eq!(s.combine(&c), x);
        assert!(s.coordinates(&v(&[0, 0, 1])).is_none());
    }
}
