use std::collections::HashMap;
use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{Scalar, SparseVec};

/// Element of ℤ₂.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> u8 {
        self as u8
    }

    /// Whether `(-1)^{|a||b|}` is `-1`.
    pub fn koszul(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.is_odd() != rhs.is_odd())
    }
}

impl Sum for Parity {
    fn sum<I: Iterator<Item = Parity>>(iter: I) -> Parity {
        iter.fold(Parity::Even, Add::add)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// `-1` if `negative`, else `1`.
pub fn sign(negative: bool) -> Scalar {
    if negative {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

/// `(-1)^{|a||b|}`
pub fn koszul_sign(a: Parity, b: Parity) -> Scalar {
    sign(a.koszul(b))
}

/// Ordered, named, homogeneous basis of a ℤ₂-graded space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    names: Vec<String>,
    parities: Vec<Parity>,
    lookup: HashMap<String, usize>,
}

impl GradedBasis {
    pub fn new<S: Into<String>>(elements: impl IntoIterator<Item = (S, Parity)>) -> Result<Self> {
        let mut names = Vec::new();
        let mut parities = Vec::new();
        let mut lookup = HashMap::new();
        for (name, p) in elements {
            let name = name.into();
            if lookup.insert(name.clone(), names.len()).is_some() {
                return Err(Error::DuplicateName(name));
            }
            names.push(name);
            parities.push(p);
        }
        Ok(Self {
            names,
            parities,
            lookup,
        })
    }

    pub fn even(names: &[&str]) -> Result<Self> {
        Self::new(names.iter().map(|n| (*n, Parity::Even)))
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn is_purely_even(&self) -> bool {
        self.parities.iter().all(|p| !p.is_odd())
    }

    /// Parity of a homogeneous vector; `None` for zero.
    pub fn parity_of(&self, v: &SparseVec) -> Result<Option<Parity>> {
        let mut found = None;
        for i in v.indices() {
            let p = *self.parities.get(i).ok_or(Error::IndexOutOfRange {
                index: i,
                dim: self.dim(),
            })?;
            match found {
                None => found = Some(p),
                Some(q) if q != p => return Err(Error::MixedParity),
                _ => {}
            }
        }
        Ok(found)
    }

    /// `self ⊕ other`, with `other`'s names passed through `rename`.
    pub fn concat(&self, other: &GradedBasis, rename: impl Fn(&str) -> String) -> Result<Self> {
        Self::new(
            self.names
                .iter()
                .cloned()
                .zip(self.parities.iter().copied())
                .chain(
                    other
                        .names
                        .iter()
                        .map(|n| rename(n))
                        .zip(other.parities.iter().copied()),
                ),
        )
    }

    /// Basis of `self ⊗ other` in lexicographic order, index `i * other.dim() + j`.
    pub fn tensor(&self, other: &GradedBasis, join: impl Fn(&str, &str) -> String) -> Result<Self> {
        let mut elems = Vec::with_capacity(self.dim() * other.dim());
        for i in 0..self.dim() {
            for j in 0..other.dim() {
                elems.push((
                    join(self.name(i), other.name(j)),
                    self.parity(i) + other.parity(j),
                ));
            }
        }
        Self::new(elems)
    }

    pub fn format(&self, v: &SparseVec) -> String {
        v.format_with(&self.names)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn parity_arithmetic() {
        assert_eq!(Parity::Even + Parity::Odd, Parity::Odd);
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
        assert_eq!(
            [Parity::Odd, Parity::Odd, Parity::Odd]
                .into_iter()
                .sum::<Parity>(),
            Parity::Odd
        );
        assert_eq!(koszul_sign(Parity::Odd, Parity::Odd), int(-1));
        assert_eq!(koszul_sign(Parity::Even, Parity::Odd), int(1));
    }

    #[test]
    fn basis_rejects_duplicates_and_mixed_vectors() {
        assert!(GradedBasis::even(&["a", "a"]).is_err());
        let b = GradedBasis::new([("a", Parity::Even), ("b", Parity::Odd)]).unwrap();
        let mixed = SparseVec::from_entries([(0, int(1)), (1, int(1))]);
        assert_eq!(b.parity_of(&mixed), Err(Error::MixedParity));
        assert_eq!(b.parity_of(&SparseVec::unit(1)), Ok(Some(Parity::Odd)));
        assert_eq!(b.index("b"), Ok(1));
    }
}
