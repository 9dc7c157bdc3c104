use crate::error::{Error, Result};
use crate::graded::{check_leibniz, koszul_sign, GradedBasis, LeibnizSuperalgebra, Parity};
use crate::linalg::{intersect, solve, LinearMap, SparseVec, Subspace};

use super::cochain::Cochain;

/// Even bilinear maps `L × L -> ℚ^c` in the coordinates
/// `ψ(e_x, e_y)_k ↦ (x·dim L + y)·c + k`.
#[derive(Clone, Debug)]
pub struct CocycleSpace {
    pub dim: usize,
    pub c_dim: usize,
    pub z2: Subspace,
    pub b2: Subspace,
    pub hl2_dim: usize,
}

impl CocycleSpace {
    pub fn coordinate(&self, x: usize, y: usize, k: usize) -> usize {
        (x * self.dim + y) * self.c_dim + k
    }

    pub fn contains_cocycle(&self, psi: &Cochain) -> bool {
        psi.arity == 2 && self.z2.contains(&psi.to_coordinates(self.c_dim))
    }
}

fn coord(d: usize, c: usize, x: usize, y: usize, k: usize) -> usize {
    (x * d + y) * c + k
}

/// Rows forcing `ψ(x, y) = 0` whenever `|x| + |y|` is odd.
fn odd_pair_rows(l: &LeibnizSuperalgebra, c: usize) -> Vec<SparseVec> {
    let d = l.dim();
    let mut rows = Vec::new();
    for x in 0..d {
        for y in 0..d {
            if (l.parity(x) + l.parity(y)).is_odd() {
                rows.extend((0..c).map(|k| SparseVec::unit(coord(d, c, x, y, k))));
            }
        }
    }
    rows
}

/// `ψ([a,b],c) - ψ(a,[b,c]) + (-1)^{|a||b|} ψ(b,[a,c]) = 0` for all basis triples.
fn cocycle_rows(l: &LeibnizSuperalgebra, c: usize) -> Vec<SparseVec> {
    let d = l.dim();
    let mut rows = odd_pair_rows(l, c);
    for a in 0..d {
        for b in 0..d {
            let s = koszul_sign(l.parity(a), l.parity(b));
            for z in 0..d {
                for k in 0..c {
                    let mut r = SparseVec::zero();
                    for (w, e) in l.bracket(a, b).iter() {
                        r.add_scaled(e, &SparseVec::unit(coord(d, c, w, z, k)));
                    }
                    for (w, e) in l.bracket(b, z).iter() {
                        r.add_scaled(&-e, &SparseVec::unit(coord(d, c, a, w, k)));
                    }
                    for (w, e) in l.bracket(a, z).iter() {
                        r.add_scaled(&(e * &s), &SparseVec::unit(coord(d, c, b, w, k)));
                    }
                    if !r.is_zero() {
                        rows.push(r);
                    }
                }
            }
        }
    }
    rows
}

fn kernel_subspace(rows: &[SparseVec], n: usize) -> Subspace {
    crate::linalg::kernel(rows, n).expect("rows are in range")
}

/// `Z²(L, ℚ^c)` and `B²(L, ℚ^c)` restricted to even maps.
pub fn z2_b2(l: &LeibnizSuperalgebra, c_dim: usize) -> CocycleSpace {
    let d = l.dim();
    let n = d * d * c_dim;
    let z2 = kernel_subspace(&cocycle_rows(l, c_dim), n);
    let mut gens = Vec::new();
    for z in (0..d).filter(|z| l.parity(*z) == Parity::Even) {
        for k in 0..c_dim {
            // ψ = g ∘ [-,-] with g(e_z) = e_k
            let mut v = SparseVec::zero();
            for (x, y, w) in l.table().iter() {
                if let Some(e) = w.get(z) {
                    v.add_scaled(e, &SparseVec::unit(coord(d, c_dim, x, y, k)));
                }
            }
            gens.push(v);
        }
    }
    let b2 = Subspace::from_rows(&gens, n).expect("in range");
    let hl2_dim = z2.dim() - b2.dim();
    CocycleSpace {
        dim: d,
        c_dim,
        z2,
        b2,
        hl2_dim,
    }
}

/// Super-antisymmetric cocycles modulo the coboundaries among them:
/// `dim (Z² ∩ Skew) - dim (B² ∩ Skew)`.
pub fn skew_hl2_dim(l: &LeibnizSuperalgebra, c_dim: usize) -> usize {
    let space = z2_b2(l, c_dim);
    let d = l.dim();
    let n = d * d * c_dim;
    let mut rows = Vec::new();
    for x in 0..d {
        for y in x..d {
            let s = koszul_sign(l.parity(x), l.parity(y));
            for k in 0..c_dim {
                // ψ(x,y) + (-1)^{|x||y|} ψ(y,x) = 0
                let mut r = SparseVec::unit(coord(d, c_dim, x, y, k));
                r.add_scaled(&s, &SparseVec::unit(coord(d, c_dim, y, x, k)));
                if !r.is_zero() {
                    rows.push(r);
                }
            }
        }
    }
    let skew = kernel_subspace(&rows, n);
    let z = intersect(&space.z2, &skew).expect("same ambient");
    let b = intersect(&space.b2, &skew).expect("same ambient");
    z.dim() - b.dim()
}

/// Evaluates `ψ([a,b],c) - ψ(a,[b,c]) + (-1)^{|a||b|} ψ(b,[a,c])` on every
/// basis triple and checks that `ψ` is even.
pub fn is_cocycle(l: &LeibnizSuperalgebra, psi: &Cochain) -> bool {
    let d = l.dim();
    if psi.arity != 2 || psi.parity != Parity::Even {
        return false;
    }
    let val = |x: &SparseVec, y: usize, left: bool| {
        let mut out = SparseVec::zero();
        for (w, e) in x.iter() {
            let v = if left {
                value(psi, d, w, y)
            } else {
                value(psi, d, y, w)
            };
            out.add_scaled(e, &v);
        }
        out
    };
    let odd_pairs_vanish = psi
        .values
        .keys()
        .all(|t| !(l.parity(t / d) + l.parity(t % d)).is_odd());
    odd_pairs_vanish
        && (0..d).all(|a| {
            (0..d).all(|b| {
                let s = koszul_sign(l.parity(a), l.parity(b));
                (0..d).all(|c| {
                    let mut r = val(l.bracket(a, b), c, true);
                    r.add_scaled(&-crate::linalg::one(), &val(l.bracket(b, c), a, false));
                    r.add_scaled(&s, &val(l.bracket(a, c), b, false));
                    r.is_zero()
                })
            })
        })
}

/// Cochain value `ψ(e_x, e_y)`.
fn value(psi: &Cochain, d: usize, x: usize, y: usize) -> SparseVec {
    psi.get(x * d + y).cloned().unwrap_or_default()
}

/// A central extension `0 -> C -> total -> base -> 0`.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    pub total: LeibnizSuperalgebra,
    pub projection: LinearMap,
    pub kernel: Subspace,
    pub cocycle: Option<Cochain>,
}

impl CentralExtension {
    /// Homomorphism, surjectivity, kernel equal to `ker π` and central.
    pub fn verify(&self, base: &LeibnizSuperalgebra) -> Result<()> {
        let t = &self.total;
        let p = &self.projection;
        if p.dim_in() != t.dim() || p.dim_out() != base.dim() {
            return Err(Error::DimensionMismatch {
                expected: base.dim(),
                found: p.dim_out(),
            });
        }
        for i in 0..t.dim() {
            for j in 0..t.dim() {
                if p.apply(t.bracket(i, j)) != base.bracket_vec(p.column(i), p.column(j)) {
                    return Err(Error::AxiomFailure {
                        structure: "central extension".into(),
                        axiom: "homomorphism".into(),
                        failures: 1,
                    });
                }
            }
        }
        if p.rank() != base.dim() || p.kernel() != self.kernel {
            return Err(Error::NoFactorization);
        }
        for v in self.kernel.basis() {
            for i in 0..t.dim() {
                let e = SparseVec::unit(i);
                if !t.bracket_vec(v, &e).is_zero() || !t.bracket_vec(&e, v).is_zero() {
                    return Err(Error::AxiomFailure {
                        structure: "central extension".into(),
                        axiom: "central kernel".into(),
                        failures: 1,
                    });
                }
            }
        }
        Ok(())
    }
}

/// `L ⊕ ℚ^c` with `[x + u, y + v] = [x, y] + ψ(x, y)`, without checking the
/// Leibniz identity.
pub fn central_sum(
    l: &LeibnizSuperalgebra,
    psi: &Cochain,
    c_dim: usize,
) -> Result<LeibnizSuperalgebra> {
    let d = l.dim();
    let names: Vec<String> = (0..c_dim).map(|k| format!("c{k}")).collect();
    let c = GradedBasis::new(names.into_iter().map(|n| (n, Parity::Even)))?;
    let basis = l.basis().concat(&c, |s| s.to_string())?;
    LeibnizSuperalgebra::from_fn(basis, |i, j| {
        if i >= d || j >= d {
            return SparseVec::zero();
        }
        let mut v = l.bracket(i, j).clone();
        v.add_scaled(&crate::linalg::one(), &value(psi, d, i, j).shifted(d));
        v
    })
}

/// The extension defined by a 2-cocycle.
pub fn extension_from_cocycle(
    l: &LeibnizSuperalgebra,
    psi: &Cochain,
    c_dim: usize,
) -> Result<CentralExtension> {
    if !is_cocycle(l, psi) {
        return Err(Error::NotACocycle);
    }
    let total = central_sum(l, psi, c_dim)?;
    crate::constructions::require(check_leibniz(&total), "central extension")?;
    let d = l.dim();
    let cols = (0..d + c_dim)
        .map(|i| {
            if i < d {
                SparseVec::unit(i)
            } else {
                SparseVec::zero()
            }
        })
        .collect();
    let projection = LinearMap::from_columns(cols, d)?;
    let units: Vec<SparseVec> = (d..d + c_dim).map(SparseVec::unit).collect();
    let kernel = Subspace::from_rows(&units, d + c_dim)?;
    Ok(CentralExtension {
        total,
        projection,
        kernel,
        cocycle: Some(psi.clone()),
    })
}

/// `g: L -> ℚ^c` with `ψ - ψ' = g ∘ [-,-]`, if the extensions are equivalent.
pub fn are_equivalent(
    l: &LeibnizSuperalgebra,
    psi: &Cochain,
    psi2: &Cochain,
    c_dim: usize,
) -> Option<LinearMap> {
    let d = l.dim();
    // unknown g(e_z)_k at z * c + k
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for x in 0..d {
        for y in 0..d {
            let diff = &value(psi, d, x, y) - &value(psi2, d, x, y);
            for k in 0..c_dim {
                let row = SparseVec::from_entries(
                    l.bracket(x, y)
                        .iter()
                        .map(|(z, e)| (z * c_dim + k, e.clone())),
                );
                rows.push(row);
                rhs.push(diff.coeff(k));
            }
        }
    }
    let sol = solve(&rows, d * c_dim, &SparseVec::from_dense(&rhs)).ok()?;
    let cols = (0..d)
        .map(|z| SparseVec::from_entries((0..c_dim).map(|k| (k, sol.coeff(z * c_dim + k)))))
        .collect();
    LinearMap::from_columns(cols, c_dim).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn abelian_even(n: usize) -> LeibnizSuperalgebra {
        let names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        LeibnizSuperalgebra::abelian(GradedBasis::even(&refs).unwrap())
    }

    #[test]
    fn abelian_every_even_map_is_a_cocycle() {
        let l = abelian_even(2);
        let s = z2_b2(&l, 1);
        assert_eq!(s.z2.dim(), 4);
        assert_eq!(s.b2.dim(), 0);
        assert_eq!(s.hl2_dim, 4);
        assert_eq!(skew_hl2_dim(&l, 1), 1);
    }

    #[test]
    fn heisenberg_from_cocycle() {
        let l = abelian_even(2);
        let mut psi = Cochain::zero(2, Parity::Even);
        psi.set(1, SparseVec::unit(0));
        psi.set(2, SparseVec::single(0, int(-1)));
        let ext = extension_from_cocycle(&l, &psi, 1).unwrap();
        ext.verify(&l).unwrap();
        assert_eq!(ext.total.dim(), 3);
        assert!(are_equivalent(&l, &psi, &psi, 1).is_some());
        assert!(are_equivalent(&l, &psi, &Cochain::zero(2, Parity::Even), 1).is_none());
    }

    #[test]
    fn coboundary_extensions_are_trivial() {
        let b = GradedBasis::even(&["x", "y", "z"]).unwrap();
        let l = LeibnizSuperalgebra::from_fn(b, |i, j| match (i, j) {
            (0, 1) => SparseVec::unit(2),
            (1, 0) => SparseVec::single(2, int(-1)),
            _ => SparseVec::zero(),
        })
        .unwrap();
        let s = z2_b2(&l, 1);
        for v in s.b2.basis() {
            let psi = Cochain::from_coordinates(2, Parity::Even, 1, v);
            let g = are_equivalent(&l, &psi, &Cochain::zero(2, Parity::Even), 1).unwrap();
            let psi_again: SparseVec = (0..9)
                .filter_map(|t| {
                    let c = g.apply(l.bracket(t / 3, t % 3)).coeff(0);
                    (c != int(0)).then_some((t, c))
                })
                .collect();
            assert_eq!(&psi_again, v);
        }
    }
}
