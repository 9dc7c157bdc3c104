use super::functors::{require, tensor_dialgebra};
use crate::error::{Error, Result};
use crate::graded::{
    check_dialgebra, derived_subalgebra, AssociativeSuperalgebra, CheckReport, GradedBasis,
    LeibnizSuperalgebra, Parity, SuperDialgebra,
};
use crate::linalg::{Scalar, SparseVec};

/// Parity of row/column index `i` of an `(m|n)` block matrix.
pub fn index_parity(m: usize, i: usize) -> Parity {
    Parity::from_bit(i >= m)
}

/// `τ_ij = p(i) + p(j)`
pub fn tau(m: usize, i: usize, j: usize) -> Parity {
    index_parity(m, i) + index_parity(m, j)
}

fn unit_name(size: usize, i: usize, j: usize) -> String {
    if size < 10 {
        format!("E{}{}", i + 1, j + 1)
    } else {
        format!("E{},{}", i + 1, j + 1)
    }
}

/// `M_{m+n}(ℚ)` with the block grading, basis `E_ij` at index `i*(m+n)+j`.
pub fn matrix_superalgebra(m: usize, n: usize) -> Result<AssociativeSuperalgebra> {
    let s = m + n;
    if s == 0 {
        return Err(Error::Unsupported("m + n must be positive".into()));
    }
    let basis =
        GradedBasis::new((0..s * s).map(|k| (unit_name(s, k / s, k % s), tau(m, k / s, k % s))))?;
    let a = AssociativeSuperalgebra::from_fn(basis, |x, y| {
        let (i, j, k, l) = (x / s, x % s, y / s, y % s);
        if j == k {
            SparseVec::unit(i * s + l)
        } else {
            SparseVec::zero()
        }
    })?;
    let unit = SparseVec::from_entries((0..s).map(|i| (i * s + i, Scalar::from_integer(1.into()))));
    a.with_unit(unit)
}

fn coefficient_name(unit: &str, coeff: &str) -> String {
    format!("{unit}({coeff})")
}

/// `M_{m+n}(D) = M_{m+n}(ℚ) ⊗ D`; basis `E_ij(d_k)` at index
/// `(i*(m+n)+j)*dim(D) + k`, parity `τ_ij + |d_k|`.
pub fn matrix_dialgebra(m: usize, n: usize, d: &SuperDialgebra) -> Result<SuperDialgebra> {
    let mat = matrix_superalgebra(m, n)?.as_dialgebra();
    let t = tensor_dialgebra(&mat, d)?;
    rename(t, |x| {
        let (u, c) = (x / d.dim(), x % d.dim());
        coefficient_name(mat.basis().name(u), d.basis().name(c))
    })
}

fn rename(d: SuperDialgebra, name: impl Fn(usize) -> String) -> Result<SuperDialgebra> {
    let basis = GradedBasis::new((0..d.dim()).map(|i| (name(i), d.parity(i))))?;
    let out = SuperDialgebra::new(basis, d.left_table().clone(), d.right_table().clone())?;
    match d.bar_unit() {
        Some(u) => out.with_bar_unit(u.clone()),
        None => Ok(out),
    }
}

/// `gl(m, n, D)`:
/// `[E_ij(a), E_kl(b)] = δ_jk E_il(a ⊢ b) - (-1)^{τ_ij τ_kl} δ_li E_kj(b ⊣ a)`,
/// with the Koszul factors `(-1)^{|a|τ_kl}` and `(-1)^{|b|τ_ij}` for odd
/// coefficients.
pub fn gl_leibniz(m: usize, n: usize, d: &SuperDialgebra) -> Result<LeibnizSuperalgebra> {
    let s = m + n;
    if s < 2 {
        return Err(Error::Unsupported("gl needs m + n >= 2".into()));
    }
    require(check_dialgebra(d), "coefficient dialgebra")?;
    let q = d.dim();
    let basis = GradedBasis::new((0..s * s * q).map(|x| {
        let (u, c) = (x / q, x % q);
        (
            coefficient_name(&unit_name(s, u / s, u % s), d.basis().name(c)),
            tau(m, u / s, u % s) + d.parity(c),
        )
    }))?;
    LeibnizSuperalgebra::from_fn(basis, |x, y| {
        let (u, a) = (x / q, x % q);
        let (v, b) = (y / q, y % q);
        let (i, j, k, l) = (u / s, u % s, v / s, v % s);
        let (t_ij, t_kl) = (tau(m, i, j), tau(m, k, l));
        let mut out = SparseVec::zero();
        if j == k {
            let sign = if d.parity(a).koszul(t_kl) { -1 } else { 1 };
            let base = (i * s + l) * q;
            for (c, e) in d.right(a, b).iter() {
                out.add_scaled(
                    &(e * Scalar::from_integer(sign.into())),
                    &SparseVec::unit(base + c),
                );
            }
        }
        if l == i {
            // -(-1)^{|x||y|} (-1)^{|b| τ_ij} E_kj(b ⊣ a)
            let xy = (t_ij + d.parity(a)).koszul(t_kl + d.parity(b));
            let neg = !(xy ^ d.parity(b).koszul(t_ij));
            let sign = if neg { -1 } else { 1 };
            let base = (k * s + j) * q;
            for (c, e) in d.left(b, a).iter() {
                out.add_scaled(
                    &(e * Scalar::from_integer(sign.into())),
                    &SparseVec::unit(base + c),
                );
            }
        }
        out
    })
}

/// `sl(m, n, D) = [gl, gl]`, on the echelon basis of the derived subspace.
/// Returns the algebra and the embedding rows in `gl` coordinates.
pub fn sl_leibniz(
    m: usize,
    n: usize,
    d: &SuperDialgebra,
) -> Result<(LeibnizSuperalgebra, Vec<SparseVec>)> {
    let gl = gl_leibniz(m, n, d)?;
    let derived = derived_subalgebra(&gl);
    let names = derived
        .basis()
        .iter()
        .map(|r| {
            if r.nnz() == 1
                && r.leading()
                    .map(|(_, c)| *c == Scalar::from_integer(1.into()))
                    .unwrap_or(false)
            {
                gl.basis().name(r.leading().unwrap().0).to_string()
            } else {
                gl.basis().format(r).replace(' ', "")
            }
        })
        .collect();
    let sl = gl.subalgebra(&derived, names)?;
    Ok((sl, derived.basis().to_vec()))
}

/// The four Steinberg relation families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StlRelation {
    Linearity,
    Commuting,
    Composition,
    ReverseComposition,
}

impl StlRelation {
    pub fn name(self) -> &'static str {
        match self {
            StlRelation::Linearity => "linearity",
            StlRelation::Commuting => "commuting",
            StlRelation::Composition => "composition",
            StlRelation::ReverseComposition => "reverse-composition",
        }
    }
}

/// Checks that `v_ij(a) ↦ E_ij(a)` respects every Steinberg relation inside
/// `sl(m, n, D)`. Each failure's `axiom` is a [`StlRelation::name`].
pub fn check_stl_relations(m: usize, n: usize, d: &SuperDialgebra) -> Result<CheckReport> {
    let s = m + n;
    if s < 3 {
        return Err(Error::Unsupported(
            "Steinberg relations need m + n >= 3".into(),
        ));
    }
    let gl = gl_leibniz(m, n, d)?;
    let (_, rows) = sl_leibniz(m, n, d)?;
    let sl_space = crate::linalg::rref(&rows, gl.dim())?;
    let q = d.dim();
    // E_ij(v) for a coefficient vector v
    let e = |i: usize, j: usize, v: &SparseVec| v.shifted((i * s + j) * q);
    let off: Vec<(usize, usize)> = (0..s)
        .flat_map(|i| (0..s).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    let mut rep = CheckReport::default();
    let two = Scalar::from_integer(2.into());
    let minus_three = Scalar::from_integer((-3).into());
    for &(i, j) in &off {
        for a in 0..q {
            // generators lie in sl
            let g = e(i, j, &SparseVec::unit(a));
            rep.record("membership", &[i, j, a], sl_space.reduce(&g));
            for b in 0..q {
                let mut combo = SparseVec::unit(a).scaled(&two);
                combo.add_scaled(&minus_three, &SparseVec::unit(b));
                let mut res = e(i, j, &combo);
                res.add_scaled(&-two.clone(), &e(i, j, &SparseVec::unit(a)));
                res.add_scaled(&-minus_three.clone(), &e(i, j, &SparseVec::unit(b)));
                rep.record(StlRelation::Linearity.name(), &[i, j, a, b], res);
            }
        }
    }
    for &(i, j) in &off {
        for &(k, l) in &off {
            let (t_ij, t_kl) = (tau(m, i, j), tau(m, k, l));
            for a in 0..q {
                for b in 0..q {
                    let lhs = gl
                        .bracket_vec(&e(i, j, &SparseVec::unit(a)), &e(k, l, &SparseVec::unit(b)));
                    let idx = [i, j, k, l, a, b];
                    if i != l && j != k {
                        rep.record(StlRelation::Commuting.name(), &idx, lhs);
                    } else if i != l && j == k {
                        let sign = d.parity(a).koszul(t_kl);
                        let mut rhs = e(i, l, d.right(a, b));
                        if sign {
                            rhs = -&rhs;
                        }
                        rep.record(StlRelation::Composition.name(), &idx, &lhs - &rhs);
                    } else if i == l && j != k {
                        let xy = (t_ij + d.parity(a)).koszul(t_kl + d.parity(b));
                        let neg = !(xy ^ d.parity(b).koszul(t_ij));
                        let mut rhs = e(k, j, d.left(b, a));
                        if neg {
                            rhs = -&rhs;
                        }
                        rep.record(StlRelation::ReverseComposition.name(), &idx, &lhs - &rhs);
                    }
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::dialgebra_to_leibniz;
    use crate::graded::{check_leibniz, check_lie_super};
    use crate::linalg::int;

    fn rationals() -> SuperDialgebra {
        AssociativeSuperalgebra::from_fn(GradedBasis::even(&["1"]).unwrap(), |_, _| {
            SparseVec::unit(0)
        })
        .unwrap()
        .with_unit(SparseVec::unit(0))
        .unwrap()
        .as_dialgebra()
    }

    #[test]
    fn gl11_bracket_of_odd_units() {
        let gl = gl_leibniz(1, 1, &rationals()).unwrap();
        assert!(check_lie_super(&gl));
        let v = gl.bracket_named("E12(1)", "E21(1)").unwrap();
        let expected = SparseVec::from_entries([(0, int(1)), (3, int(1))]);
        assert_eq!(*v, expected);
    }

    #[test]
    fn gl_matches_functor_on_matrices() {
        let d = rationals();
        let gl = gl_leibniz(2, 1, &d).unwrap();
        let viaf = dialgebra_to_leibniz(&matrix_dialgebra(2, 1, &d).unwrap()).unwrap();
        assert_eq!(gl.table(), viaf.table());
        assert!(check_leibniz(&gl).passed());
    }

    #[test]
    fn sl_dimensions() {
        let d = rationals();
        let (sl11, _) = sl_leibniz(1, 1, &d).unwrap();
        assert_eq!(sl11.dim(), 3);
        assert!(sl11.basis().index_of("E11(1)+E22(1)").is_some());
        assert_eq!(sl_leibniz(2, 0, &d).unwrap().0.dim(), 3);
        assert_eq!(sl_leibniz(2, 1, &d).unwrap().0.dim(), 8);
    }

    #[test]
    fn stl_over_rationals() {
        let rep = check_stl_relations(2, 1, &rationals()).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures.first());
        assert!(check_stl_relations(1, 1, &rationals()).is_err());
    }

    #[test]
    fn matrix_dialgebra_trivial_size() {
        let d = rationals();
        assert_eq!(matrix_dialgebra(0, 1, &d).unwrap().dim(), 1);
        let m11 = matrix_dialgebra(1, 1, &d).unwrap();
        assert_eq!(m11.dim(), 4);
        assert!(m11.is_associative_type());
    }
}
