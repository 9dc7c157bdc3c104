use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{format_scalar, is_negative, Scalar};

/// A vector stored as index-sorted `(index, coefficient)` pairs.
///
/// No stored coefficient is zero, so structural equality is mathematical
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self {
            entries: vec![(i, Scalar::one())],
        }
    }

    pub fn single(i: usize, c: Scalar) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                entries: vec![(i, c)],
            }
        }
    }

    /// Builds a vector from arbitrary `(index, value)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_entries<I: IntoIterator<Item = (usize, Scalar)>>(iter: I) -> Self {
        let mut raw: Vec<(usize, Scalar)> = iter.into_iter().collect();
        raw.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(raw.len());
        for (i, c) in raw {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc += c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        Self { entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        Self {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|(i, _)| *i)
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    /// First nonzero entry.
    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    pub fn scale_mut(&mut self, c: &Scalar) {
        if c.is_zero() {
            self.entries.clear();
        } else {
            for (_, x) in &mut self.entries {
                *x *= c;
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.scaled(c);
            return;
        }
        let mut merged = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => merged.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, y) = b.next().unwrap();
                    merged.push((*j, y * c));
                }
                (Some(_), Some(_)) => {
                    let (i, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = x + y * c;
                    if !s.is_zero() {
                        merged.push((i, s));
                    }
                }
                (Some(_), None) => merged.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, y) = b.next().unwrap();
                    merged.push((*j, y * c));
                }
                (None, None) => break,
            }
        }
        self.entries = merged;
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        let (mut p, mut q) = (0, 0);
        while p < self.entries.len() && q < other.entries.len() {
            let (i, x) = &self.entries[p];
            let (j, y) = &other.entries[q];
            match i.cmp(j) {
                std::cmp::Ordering::Less => p += 1,
                std::cmp::Ordering::Greater => q += 1,
                std::cmp::Ordering::Equal => {
                    acc += x * y;
                    p += 1;
                    q += 1;
                }
            }
        }
        acc
    }

    /// Reindexes every entry through `f`; `f` must be injective on the support.
    pub fn remap(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::from_entries(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }

    pub fn shifted(&self, offset: usize) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .map(|(i, c)| (i + offset, c.clone()))
                .collect(),
        }
    }

    /// Keeps only the entries whose index satisfies `keep`.
    pub fn filtered(&self, keep: impl Fn(usize) -> bool) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| keep(*i))
                .cloned()
                .collect(),
        }
    }

    /// Human-readable linear combination, e.g. `2 H + -1/2 x+`.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (i, c)) in self.entries.iter().enumerate() {
            let name = names.get(*i).map(String::as_str).unwrap_or("?");
            if k > 0 {
                out.push_str(if is_negative(c) { " - " } else { " + " });
            } else if is_negative(c) {
                out.push('-');
            }
            let mag = if is_negative(c) {
                -c.clone()
            } else {
                c.clone()
            };
            if mag.is_one() {
                out.push_str(name);
            } else {
                out.push_str(&format!("{} {}", format_scalar(&mag), name));
            }
        }
        out
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, (i, c)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", i, format_scalar(c))?;
        }
        write!(f, "]")
    }
}

impl Add for &SparseVec {
    type Output = SparseVec;
    fn add(self, rhs: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl Sub for &SparseVec {
    type Output = SparseVec;
    fn sub(self, rhs: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

impl Neg for &SparseVec {
    type Output = SparseVec;
    fn neg(self) -> SparseVec {
        self.scaled(&-Scalar::one())
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<I: IntoIterator<Item = (usize, Scalar)>>(iter: I) -> Self {
        Self::from_entries(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{int, rat};

    #[test]
    fn from_entries_merges_and_drops_zeros() {
        let v = SparseVec::from_entries([(3, int(1)), (1, int(2)), (3, int(-1)), (0, int(0))]);
        assert_eq!(v.nnz(), 1);
        assert_eq!(v.coeff(1), int(2));
        assert!(v.get(3).is_none());
    }

    #[test]
    fn add_scaled_cancels() {
        let mut v = SparseVec::from_entries([(0, int(1)), (2, rat(1, 2))]);
        let w = SparseVec::from_entries([(2, int(1)), (5, int(4))]);
        v.add_scaled(&rat(-1, 2), &w);
        assert_eq!(v, SparseVec::from_entries([(0, int(1)), (5, int(-2))]));
    }

    #[test]
    fn dot_and_format() {
        let v = SparseVec::from_entries([(0, int(2)), (1, int(-1))]);
        let w = SparseVec::from_entries([(1, int(3)), (2, int(7))]);
        assert_eq!(v.dot(&w), int(-3));
        let names = vec!["a".to_string(), "b".to_string()];
        assert_eq!(v.format_with(&names), "2 a - b");
    }
}
