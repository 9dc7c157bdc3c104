use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graded::{LeibnizModule, Parity};
use crate::linalg::{LinearMap, Scalar, SparseVec, Subspace};

/// A homogeneous multilinear map `L^{⊗n} -> M`, stored by its values on
/// basis tuples. Tuple `(x_1, …, x_n)` is keyed by the base-`dim L` number
/// `x_1 x_2 … x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub arity: usize,
    pub parity: Parity,
    pub values: BTreeMap<usize, SparseVec>,
}

impl Cochain {
    pub fn zero(arity: usize, parity: Parity) -> Self {
        Self {
            arity,
            parity,
            values: BTreeMap::new(),
        }
    }

    /// A module element seen as a 0-cochain.
    pub fn from_element(m: &LeibnizModule<'_>, v: SparseVec) -> Result<Self> {
        let parity = m.basis().parity_of(&v)?.unwrap_or_default();
        let mut c = Self::zero(0, parity);
        c.set(0, v);
        Ok(c)
    }

    pub fn get(&self, tuple: usize) -> Option<&SparseVec> {
        self.values.get(&tuple)
    }

    pub fn set(&mut self, tuple: usize, v: SparseVec) {
        if v.is_zero() {
            self.values.remove(&tuple);
        } else {
            self.values.insert(tuple, v);
        }
    }

    pub fn add_at(&mut self, tuple: usize, c: &Scalar, v: &SparseVec) {
        let e = self.values.entry(tuple).or_default();
        e.add_scaled(c, v);
        if e.is_zero() {
            self.values.remove(&tuple);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Flattened coordinates: value coordinate `p` of tuple `t` sits at `t * dim M + p`.
    pub fn to_coordinates(&self, module_dim: usize) -> SparseVec {
        SparseVec::from_entries(
            self.values
                .iter()
                .flat_map(|(t, v)| v.iter().map(move |(p, c)| (t * module_dim + p, c.clone()))),
        )
    }

    pub fn from_coordinates(
        arity: usize,
        parity: Parity,
        module_dim: usize,
        v: &SparseVec,
    ) -> Self {
        let mut c = Self::zero(arity, parity);
        for (i, x) in v.iter() {
            c.add_at(
                i / module_dim.max(1),
                x,
                &SparseVec::unit(i % module_dim.max(1)),
            );
        }
        c
    }

    /// Checks that every value has parity `|f| + Σ|x_i|`.
    pub fn check_homogeneous(&self, m: &LeibnizModule<'_>) -> Result<()> {
        let l = m.algebra();
        for (t, v) in &self.values {
            let tuple = tuple_of(*t, self.arity, l.dim());
            let expected: Parity = self.parity + tuple.iter().map(|x| l.parity(*x)).sum();
            if let Some(p) = m.basis().parity_of(v)? {
                if p != expected {
                    return Err(Error::MixedParity);
                }
            }
        }
        Ok(())
    }
}

pub fn tuple_index(t: &[usize], dim: usize) -> usize {
    t.iter().fold(0, |acc, x| acc * dim + x)
}

pub fn tuple_of(mut index: usize, arity: usize, dim: usize) -> Vec<usize> {
    let mut t = vec![0; arity];
    for k in (0..arity).rev() {
        t[k] = index % dim;
        index /= dim;
    }
    t
}

fn pow(d: usize, n: usize) -> usize {
    d.checked_pow(n as u32).expect("cochain space too large")
}

/// `dim C^n(L, M) = dim(L)^n · dim(M)`
pub fn cochain_dim(m: &LeibnizModule<'_>, n: usize) -> usize {
    pow(m.algebra().dim(), n) * m.dim()
}

fn sgn(negative: bool) -> Scalar {
    crate::graded::sign(negative)
}

/// Nonzero `(a, b, [a,b]_k)` grouped by `k`.
fn bracket_preimages(m: &LeibnizModule<'_>) -> Vec<Vec<(usize, usize, Scalar)>> {
    let l = m.algebra();
    let mut pre = vec![Vec::new(); l.dim()];
    for (a, b, v) in l.table().iter() {
        for (k, c) in v.iter() {
            pre[k].push((a, b, c.clone()));
        }
    }
    pre
}

/// `d^n f`, for `f` of arity `n`:
///
/// `(d f)(x_1..x_{n+1}) = Σ_{i≤n} (-1)^{(|f|+|x_1|+…+|x_{i-1}|)|x_i|} (-1)^{i-1} [x_i, f(…x̂_i…)]`
/// `- (-1)^n [f(x_1..x_n), x_{n+1}]`
/// `+ Σ_{i<j} (-1)^{|x_i|(|x_{i+1}|+…+|x_{j-1}|)} (-1)^i f(…x̂_i…, [x_i, x_j], …)`.
///
/// Evaluated by scattering each nonzero value of `f` to the output tuples
/// it contributes to.
pub fn coboundary(m: &LeibnizModule<'_>, f: &Cochain) -> Cochain {
    let pre = bracket_preimages(m);
    coboundary_with(m, f, &pre)
}

fn coboundary_with(
    m: &LeibnizModule<'_>,
    f: &Cochain,
    pre: &[Vec<(usize, usize, Scalar)>],
) -> Cochain {
    let l = m.algebra();
    let d = l.dim();
    let n = f.arity;
    let mut out = Cochain::zero(n + 1, f.parity);
    for (t, v) in &f.values {
        let t = tuple_of(*t, n, d);
        // prefix parities of t
        let mut prefix = vec![Parity::Even; n + 1];
        for k in 0..n {
            prefix[k + 1] = prefix[k] + l.parity(t[k]);
        }
        // [x_i, f(...)] with x_i inserted at position i < n
        for z in 0..d {
            let act = m.act_left(z, v);
            if act.is_zero() {
                continue;
            }
            for (i, pre) in prefix.iter().enumerate().take(n) {
                let s = (f.parity + *pre).koszul(l.parity(z)) ^ (i % 2 == 1);
                let mut y = t.clone();
                y.insert(i, z);
                out.add_at(tuple_index(&y, d), &sgn(s), &act);
            }
        }
        // -(-1)^n [f(x_1..x_n), x_{n+1}]
        for z in 0..d {
            let act = m.act_right(v, z);
            if act.is_zero() {
                continue;
            }
            let mut y = t.clone();
            y.push(z);
            out.add_at(tuple_index(&y, d), &sgn(n.is_multiple_of(2)), &act);
        }
        // f(…x̂_i…, [x_i, x_j] at slot j-1, …)
        for p in 0..n {
            for (a, b, c) in &pre[t[p]] {
                for i in 0..=p {
                    let between = prefix[p] + prefix[i];
                    let s = l.parity(*a).koszul(between) ^ (i % 2 == 0);
                    let mut y = t.clone();
                    y[p] = *b;
                    y.insert(i, *a);
                    out.add_at(tuple_index(&y, d), &(c * sgn(s)), v);
                }
            }
        }
    }
    out
}

/// `(d f)(y)` evaluated directly from the formula at one output tuple.
pub fn coboundary_at(m: &LeibnizModule<'_>, f: &Cochain, y: &[usize]) -> SparseVec {
    let l = m.algebra();
    let d = l.dim();
    let n = f.arity;
    assert_eq!(y.len(), n + 1, "output tuple has arity n + 1");
    let eval = |t: &[usize]| f.get(tuple_index(t, d)).cloned().unwrap_or_default();
    let mut out = SparseVec::zero();
    let mut prefix = Parity::Even;
    for i in 0..n {
        let mut rest = y.to_vec();
        rest.remove(i);
        let s = (f.parity + prefix).koszul(l.parity(y[i])) ^ (i % 2 == 1);
        out.add_scaled(&sgn(s), &m.act_left(y[i], &eval(&rest)));
        prefix = prefix + l.parity(y[i]);
    }
    out.add_scaled(
        &sgn(n.is_multiple_of(2)),
        &m.act_right(&eval(&y[..n]), y[n]),
    );
    for i in 0..=n {
        for j in i + 1..=n {
            let between: Parity = y[i + 1..j].iter().map(|x| l.parity(*x)).sum();
            let s = l.parity(y[i]).koszul(between) ^ (i % 2 == 0);
            for (k, c) in l.bracket(y[i], y[j]).iter() {
                let mut t = y.to_vec();
                t[j] = k;
                t.remove(i);
                out.add_scaled(&(c * sgn(s)), &eval(&t));
            }
        }
    }
    out
}

/// Parity of the basis cochain at flattened coordinate `i` of `C^n`.
pub fn basis_cochain_parity(m: &LeibnizModule<'_>, n: usize, i: usize) -> Parity {
    let l = m.algebra();
    let k = m.dim();
    let tuple = tuple_of(i / k, n, l.dim());
    m.parity(i % k) + tuple.iter().map(|x| l.parity(*x)).sum()
}

/// `d^n: C^n -> C^{n+1}` in flattened coordinates.
pub fn coboundary_matrix(m: &LeibnizModule<'_>, n: usize) -> LinearMap {
    let k = m.dim();
    let pre = bracket_preimages(m);
    let cols = (0..cochain_dim(m, n))
        .map(|i| {
            let mut f = Cochain::zero(n, basis_cochain_parity(m, n, i));
            f.set(i / k, SparseVec::unit(i % k));
            coboundary_with(m, &f, &pre).to_coordinates(k)
        })
        .collect();
    LinearMap::from_columns(cols, cochain_dim(m, n + 1)).expect("coboundary values are in range")
}

/// `d^{n+1} ∘ d^n = 0` on a full basis of `C^n`.
pub fn check_d_squared(m: &LeibnizModule<'_>, n: usize) -> bool {
    let k = m.dim();
    let pre = bracket_preimages(m);
    (0..cochain_dim(m, n)).all(|i| {
        let mut f = Cochain::zero(n, basis_cochain_parity(m, n, i));
        f.set(i / k, SparseVec::unit(i % k));
        let df = coboundary_with(m, &f, &pre);
        coboundary_with(m, &df, &pre).is_zero()
    })
}

/// `dim Z^n`, `dim B^n` and `dim HL^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CohomologyDims {
    pub cochains: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub hl: usize,
}

fn image_dim(map: &LinearMap, keep: impl Fn(usize) -> bool) -> usize {
    let cols: Vec<SparseVec> = (0..map.dim_in())
        .filter(|i| keep(*i))
        .map(|i| map.column(i).clone())
        .collect();
    crate::linalg::rref(&cols, map.dim_out())
        .expect("in range")
        .dim()
}

/// Cohomology dimensions, optionally restricted to cochains of one parity.
pub fn hl_dims(m: &LeibnizModule<'_>, n: usize, parity: Option<Parity>) -> CohomologyDims {
    let keep =
        |deg: usize| move |i: usize| parity.is_none_or(|p| basis_cochain_parity(m, deg, i) == p);
    let dn = coboundary_matrix(m, n);
    let cochains = (0..cochain_dim(m, n)).filter(|i| keep(n)(*i)).count();
    let cocycles = cochains - image_dim(&dn, keep(n));
    let coboundaries = if n == 0 {
        0
    } else {
        image_dim(&coboundary_matrix(m, n - 1), keep(n - 1))
    };
    CohomologyDims {
        cochains,
        cocycles,
        coboundaries,
        hl: cocycles - coboundaries,
    }
}

/// `dim HL^n(L, M) = dim ker d^n - dim im d^{n-1}`
pub fn hl_dim(m: &LeibnizModule<'_>, n: usize) -> usize {
    hl_dims(m, n, None).hl
}

/// Kernel of `d^n` as a subspace of `C^n`.
pub fn cocycle_space(m: &LeibnizModule<'_>, n: usize) -> Subspace {
    coboundary_matrix(m, n).kernel()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{GradedBasis, LeibnizSuperalgebra};
    use crate::linalg::int;

    fn heisenberg_super() -> LeibnizSuperalgebra {
        // odd p, q with [p, q] = [q, p] = z; a small Lie superalgebra
        let b = GradedBasis::new([("p", Parity::Odd), ("q", Parity::Odd), ("z", Parity::Even)])
            .unwrap();
        LeibnizSuperalgebra::from_fn(b, |i, j| match (i, j) {
            (0, 1) | (1, 0) => SparseVec::unit(2),
            _ => SparseVec::zero(),
        })
        .unwrap()
    }

    #[test]
    fn tuple_round_trip() {
        assert_eq!(tuple_of(tuple_index(&[2, 0, 1], 3), 3, 3), vec![2, 0, 1]);
        assert_eq!(tuple_index(&[], 5), 0);
    }

    #[test]
    fn scatter_matches_gather() {
        let l = heisenberg_super();
        let m = LeibnizModule::adjoint(&l);
        for n in 0..3 {
            for i in 0..cochain_dim(&m, n) {
                let mut f = Cochain::zero(n, basis_cochain_parity(&m, n, i));
                f.set(i / 3, SparseVec::unit(i % 3));
                let df = coboundary(&m, &f);
                for t in 0..pow(3, n + 1) {
                    let y = tuple_of(t, n + 1, 3);
                    assert_eq!(
                        df.get(t).cloned().unwrap_or_default(),
                        coboundary_at(&m, &f, &y)
                    );
                }
            }
        }
    }

    #[test]
    fn d_zero_on_elements() {
        let l = heisenberg_super();
        let m = LeibnizModule::adjoint(&l);
        let f = Cochain::from_element(&m, SparseVec::unit(0)).unwrap();
        let df = coboundary(&m, &f);
        // (d⁰p)(q) = -[p, q] = -z
        assert_eq!(df.get(1).cloned().unwrap(), SparseVec::single(2, int(-1)));
        let trivial = LeibnizModule::trivial_even(&l, 1);
        assert!(coboundary(
            &trivial,
            &Cochain::from_element(&trivial, SparseVec::unit(0)).unwrap()
        )
        .is_zero());
    }

    #[test]
    fn d_squared_small() {
        let l = heisenberg_super();
        for n in 0..3 {
            assert!(check_d_squared(&LeibnizModule::adjoint(&l), n));
            assert!(check_d_squared(&LeibnizModule::trivial_even(&l, 1), n));
        }
    }

    #[test]
    fn hl0_trivial_is_one() {
        let l = heisenberg_super();
        assert_eq!(hl_dim(&LeibnizModule::trivial_even(&l, 1), 0), 1);
    }
}
