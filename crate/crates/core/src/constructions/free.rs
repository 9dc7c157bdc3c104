use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graded::{
    check_dialgebra_where, check_leibniz_where, CheckReport, GradedBasis, LeibnizSuperalgebra,
    Parity, SuperDialgebra, Table,
};
use crate::linalg::{LinearMap, SparseVec};

/// All words of length `1..=max_degree` over `k` letters, shortest first,
/// then lexicographic.
fn words(k: usize, max_degree: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_degree {
        let next: Vec<Vec<usize>> = layer
            .iter()
            .flat_map(|w| {
                (0..k).map(move |v| {
                    let mut w = w.clone();
                    w.push(v);
                    w
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn generator_name(i: usize) -> String {
    format!("x{}", i + 1)
}

fn word_parity(parities: &[Parity], w: &[usize]) -> Parity {
    w.iter().map(|v| parities[*v]).sum()
}

/// The tensor words of length `<= max_degree` with the free Leibniz bracket.
#[derive(Clone, Debug)]
pub struct FreeLeibniz {
    pub algebra: LeibnizSuperalgebra,
    pub words: Vec<Vec<usize>>,
    pub generator_parities: Vec<Parity>,
    pub max_degree: usize,
}

impl FreeLeibniz {
    pub fn degree(&self, i: usize) -> usize {
        self.words[i].len()
    }

    pub fn index_of(&self, word: &[usize]) -> Option<usize> {
        self.words.iter().position(|w| w == word)
    }

    /// Leibniz identity on every triple whose total degree stays in range.
    pub fn check(&self) -> CheckReport {
        check_leibniz_where(&self.algebra, |a, b, c| {
            self.degree(a) + self.degree(b) + self.degree(c) <= self.max_degree
        })
    }

    /// The map induced by `phi` (images of the generators) into `target`,
    /// right-normed: `f(v_1 ⊗ w) = [φ(v_1), f(w)]`.
    pub fn induced_map(
        &self,
        target: &LeibnizSuperalgebra,
        phi: &[SparseVec],
    ) -> Result<LinearMap> {
        if phi.len() != self.generator_parities.len() {
            return Err(Error::DimensionMismatch {
                expected: self.generator_parities.len(),
                found: phi.len(),
            });
        }
        let mut cols: Vec<SparseVec> = Vec::with_capacity(self.words.len());
        let lookup: HashMap<&[usize], usize> = self
            .words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.as_slice(), i))
            .collect();
        for w in &self.words {
            let v = if w.len() == 1 {
                phi[w[0]].clone()
            } else {
                let rest = lookup[&w[1..]];
                target.bracket_vec(&phi[w[0]], &cols[rest])
            };
            cols.push(v);
        }
        LinearMap::from_columns(cols, target.dim())
    }

    /// `f([a, b]) = [f(a), f(b)]` on every in-range pair.
    pub fn check_homomorphism(&self, target: &LeibnizSuperalgebra, f: &LinearMap) -> CheckReport {
        let n = self.algebra.dim();
        let mut rep = CheckReport::default();
        for a in 0..n {
            for b in 0..n {
                if self.degree(a) + self.degree(b) > self.max_degree {
                    rep.skipped += 1;
                    continue;
                }
                let lhs = f.apply(self.algebra.bracket(a, b));
                let rhs = target.bracket_vec(f.column(a), f.column(b));
                rep.record("homomorphism", &[a, b], &lhs - &rhs);
            }
        }
        rep
    }
}

/// Free Leibniz superalgebra on generators of the given parities, truncated
/// at `max_degree`. The bracket is `[v, x] = v ⊗ x` for a generator `v` and
/// `[v ⊗ y, x] = v ⊗ [y, x] - (-1)^{|v||y|} [y, v ⊗ x]`; terms of degree
/// above `max_degree` are dropped.
pub fn free_leibniz_super(parities: &[Parity], max_degree: usize) -> Result<FreeLeibniz> {
    if parities.is_empty() || max_degree == 0 {
        return Err(Error::Unsupported(
            "need at least one generator and max_degree >= 1".into(),
        ));
    }
    let ws = words(parities.len(), max_degree);
    let lookup: HashMap<Vec<usize>, usize> =
        ws.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let n = ws.len();
    let mut table = Table::zero(n, n, n);
    // ws is sorted by length, so [y', -] with |y'| < |y| is already filled
    for (yi, y) in ws.iter().enumerate() {
        for (xi, x) in ws.iter().enumerate() {
            if y.len() + x.len() > max_degree {
                continue;
            }
            let value = if y.len() == 1 {
                let mut w = y.clone();
                w.extend_from_slice(x);
                SparseVec::unit(lookup[&w])
            } else {
                let v = y[0];
                let rest = lookup[&y[1..]];
                let prefix = |s: &SparseVec| {
                    s.remap(|k| {
                        let mut w = vec![v];
                        w.extend_from_slice(&ws[k]);
                        lookup[&w]
                    })
                };
                let mut out = prefix(table.get(rest, xi));
                let mut vx = vec![v];
                vx.extend_from_slice(x);
                let sign = parities[v].koszul(word_parity(parities, &y[1..]));
                let second = table.get(rest, lookup[&vx]);
                out.add_scaled(&crate::graded::sign(!sign), second);
                out
            };
            table.set(yi, xi, value)?;
        }
    }
    let basis = GradedBasis::new(ws.iter().map(|w| {
        (
            w.iter()
                .map(|v| generator_name(*v))
                .collect::<Vec<_>>()
                .join("."),
            word_parity(parities, w),
        )
    }))?;
    Ok(FreeLeibniz {
        algebra: LeibnizSuperalgebra::new(basis, table)?,
        words: ws,
        generator_parities: parities.to_vec(),
        max_degree,
    })
}

/// A planar word with a distinguished middle letter: `letters[center - 1]`
/// is the `V` factor of `T(V) ⊗ V ⊗ T(V)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeWord {
    pub letters: Vec<usize>,
    pub center: usize,
}

impl FreeWord {
    pub fn parity(&self, parities: &[Parity]) -> Parity {
        word_parity(parities, &self.letters)
    }

    pub fn name(&self) -> String {
        self.letters
            .iter()
            .enumerate()
            .map(|(k, v)| {
                if k + 1 == self.center {
                    format!("({})", generator_name(*v))
                } else {
                    generator_name(*v)
                }
            })
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Truncated free super dialgebra.
#[derive(Clone, Debug)]
pub struct FreeDialgebra {
    pub dialgebra: SuperDialgebra,
    pub words: Vec<FreeWord>,
    pub max_degree: usize,
}

impl FreeDialgebra {
    pub fn degree(&self, i: usize) -> usize {
        self.words[i].letters.len()
    }

    pub fn index_of(&self, w: &FreeWord) -> Option<usize> {
        self.words.iter().position(|x| x == w)
    }

    pub fn check(&self) -> CheckReport {
        check_dialgebra_where(&self.dialgebra, |a, b, c| {
            self.degree(a) + self.degree(b) + self.degree(c) <= self.max_degree
        })
    }
}

/// `u ⊣ w` concatenates and keeps the center of `u`; `u ⊢ w` concatenates
/// and keeps the center of `w`. Words longer than `max_degree` become zero.
pub fn free_super_dialgebra(parities: &[Parity], max_degree: usize) -> Result<FreeDialgebra> {
    if parities.is_empty() || max_degree == 0 {
        return Err(Error::Unsupported(
            "need at least one generator and max_degree >= 1".into(),
        ));
    }
    let mut fw = Vec::new();
    for w in words(parities.len(), max_degree) {
        for c in 1..=w.len() {
            fw.push(FreeWord {
                letters: w.clone(),
                center: c,
            });
        }
    }
    let lookup: HashMap<FreeWord, usize> =
        fw.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let concat = |u: &FreeWord, w: &FreeWord, keep_left: bool| -> SparseVec {
        if u.letters.len() + w.letters.len() > max_degree {
            return SparseVec::zero();
        }
        let mut letters = u.letters.clone();
        letters.extend_from_slice(&w.letters);
        let center = if keep_left {
            u.center
        } else {
            u.letters.len() + w.center
        };
        SparseVec::unit(lookup[&FreeWord { letters, center }])
    };
    let basis = GradedBasis::new(fw.iter().map(|w| (w.name(), w.parity(parities))))?;
    let dialgebra = SuperDialgebra::from_fns(
        basis,
        |a, b| concat(&fw[a], &fw[b], true),
        |a, b| concat(&fw[a], &fw[b], false),
    )?;
    Ok(FreeDialgebra {
        dialgebra,
        words: fw,
        max_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn generators_bracket_to_words() {
        let f = free_leibniz_super(&[Parity::Even, Parity::Odd], 3).unwrap();
        let vw = f.index_of(&[0, 1]).unwrap();
        assert_eq!(*f.algebra.bracket(0, 1), SparseVec::unit(vw));
    }

    #[test]
    fn one_even_generator_degree_two() {
        let f = free_leibniz_super(&[Parity::Even], 3).unwrap();
        assert_eq!(f.algebra.dim(), 3);
        // [v⊗v, v] = v⊗v⊗v - v⊗v⊗v = 0
        let vv = f.index_of(&[0, 0]).unwrap();
        assert!(f.algebra.bracket(vv, 0).is_zero());
        assert!(f.check().passed());
    }

    #[test]
    fn odd_generator_signs() {
        let f = free_leibniz_super(&[Parity::Odd], 3).unwrap();
        let vv = f.index_of(&[0, 0]).unwrap();
        let vvv = f.index_of(&[0, 0, 0]).unwrap();
        assert_eq!(*f.algebra.bracket(vv, 0), SparseVec::single(vvv, int(2)));
        let rep = f.check();
        assert!(rep.passed());
        assert!(rep.skipped > 0);
    }

    #[test]
    fn free_dialgebra_products() {
        let f = free_super_dialgebra(&[Parity::Even], 2).unwrap();
        assert_eq!(f.dialgebra.dim(), 3);
        let left = FreeWord {
            letters: vec![0, 0],
            center: 1,
        };
        let right = FreeWord {
            letters: vec![0, 0],
            center: 2,
        };
        assert_eq!(
            *f.dialgebra.left(0, 0),
            SparseVec::unit(f.index_of(&left).unwrap())
        );
        assert_eq!(
            *f.dialgebra.right(0, 0),
            SparseVec::unit(f.index_of(&right).unwrap())
        );
        assert!(f.check().passed());
    }
}
