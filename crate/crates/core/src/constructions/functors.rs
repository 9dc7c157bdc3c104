use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graded::{
    check_associative, check_dialgebra, koszul_sign, AssociativeSuperalgebra, CheckReport,
    GradedBasis, LeibnizSuperalgebra, SuperDialgebra, Table,
};
use crate::linalg::{LinearMap, SparseVec, Subspace};

pub(crate) fn require(rep: CheckReport, structure: &str) -> Result<()> {
    match rep.failures.first() {
        None => Ok(()),
        Some(f) => Err(Error::AxiomFailure {
            structure: structure.to_string(),
            axiom: f.axiom.clone(),
            failures: rep.failures.len(),
        }),
    }
}

fn signed(v: &SparseVec, negative: bool) -> SparseVec {
    if negative {
        -v
    } else {
        v.clone()
    }
}

/// `[x, y] = x ⊢ y - (-1)^{|x||y|} y ⊣ x`
pub fn dialgebra_to_leibniz(d: &SuperDialgebra) -> Result<LeibnizSuperalgebra> {
    require(check_dialgebra(d), "dialgebra")?;
    LeibnizSuperalgebra::from_fn(d.basis().clone(), |x, y| {
        let mut out = d.right(x, y).clone();
        out.add_scaled(&-koszul_sign(d.parity(x), d.parity(y)), d.left(y, x));
        out
    })
}

/// `[x, y] = x ⊣ y - (-1)^{|x||y|} y ⊢ x`, a right Leibniz bracket. The
/// result is stored in a [`LeibnizSuperalgebra`] container and satisfies
/// [`check_right_leibniz`](crate::graded::check_right_leibniz).
pub fn dialgebra_to_right_leibniz(d: &SuperDialgebra) -> Result<LeibnizSuperalgebra> {
    require(check_dialgebra(d), "dialgebra")?;
    LeibnizSuperalgebra::from_fn(d.basis().clone(), |x, y| {
        let mut out = d.left(x, y).clone();
        out.add_scaled(&-koszul_sign(d.parity(x), d.parity(y)), d.right(y, x));
        out
    })
}

/// `x ⊣ y = x·d(y)`, `x ⊢ y = d(x)·y` for an even square-zero derivation `d`.
pub fn from_differential_superalgebra(
    a: &AssociativeSuperalgebra,
    d: &LinearMap,
) -> Result<SuperDialgebra> {
    let n = a.dim();
    if d.dim_in() != n || d.dim_out() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: d.dim_in(),
        });
    }
    if !check_associative(a).passed() {
        return Err(Error::NotAssociative);
    }
    for i in 0..n {
        match a.basis().parity_of(d.column(i))? {
            Some(p) if p != a.parity(i) => return Err(Error::NotADerivation),
            _ => {}
        }
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = d.apply(a.mul(i, j));
            let rhs = &a.mul_vec(d.column(i), &SparseVec::unit(j))
                + &a.mul_vec(&SparseVec::unit(i), d.column(j));
            if lhs != rhs {
                return Err(Error::NotADerivation);
            }
        }
    }
    if !d.compose(d)?.is_zero() {
        return Err(Error::NotSquareZero);
    }
    let dd = SuperDialgebra::from_fns(
        a.basis().clone(),
        |x, y| a.mul_vec(&SparseVec::unit(x), d.column(y)),
        |x, y| a.mul_vec(d.column(x), &SparseVec::unit(y)),
    )?;
    require(check_dialgebra(&dd), "differential dialgebra")?;
    Ok(dd)
}

/// `(a ⊗ a') ⋆ (b ⊗ b') = (-1)^{|a'||b|} (a ⋆ b) ⊗ (a' ⋆ b')` on the basis
/// `a_i ⊗ b_j` with index `i * dim(d2) + j`.
pub fn tensor_dialgebra(d1: &SuperDialgebra, d2: &SuperDialgebra) -> Result<SuperDialgebra> {
    require(check_dialgebra(d1), "left tensor factor")?;
    require(check_dialgebra(d2), "right tensor factor")?;
    let m = d2.dim();
    let basis = d1.basis().tensor(d2.basis(), |a, b| format!("{a}⊗{b}"))?;
    let prod = |t1: &Table, t2: &Table, x: usize, y: usize| {
        let (a, a2) = (x / m, x % m);
        let (b, b2) = (y / m, y % m);
        let neg = d2.parity(a2).koszul(d1.parity(b));
        let mut out = Vec::new();
        for (i, c) in t1.get(a, b).iter() {
            for (j, e) in t2.get(a2, b2).iter() {
                out.push((i * m + j, c * e));
            }
        }
        signed(&SparseVec::from_entries(out), neg)
    };
    let dd = SuperDialgebra::from_fns(
        basis,
        |x, y| prod(d1.left_table(), d2.left_table(), x, y),
        |x, y| prod(d1.right_table(), d2.right_table(), x, y),
    )?;
    match (d1.bar_unit(), d2.bar_unit()) {
        (Some(u1), Some(u2)) => {
            let mut u = Vec::new();
            for (i, c) in u1.iter() {
                for (j, e) in u2.iter() {
                    u.push((i * m + j, c * e));
                }
            }
            dd.with_bar_unit(SparseVec::from_entries(u))
        }
        _ => Ok(dd),
    }
}

/// Smallest subspace containing `gens` and closed under `t(v, e_k)` and
/// `t(e_k, v)` for every table `t` and basis vector `e_k`.
pub fn ideal_closure(gens: &Subspace, tables: &[&Table]) -> Subspace {
    let n = gens.ambient_dim();
    let mut ideal = gens.clone();
    let mut queue: VecDeque<SparseVec> = gens.basis().iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        for t in tables {
            for k in 0..n {
                let e = SparseVec::unit(k);
                for w in [t.apply(&v, &e), t.apply(&e, &v)] {
                    if ideal.insert(&w).expect("products are in range") {
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    ideal
}

/// `S / (x ⊣ y - x ⊢ y)`, an associative superalgebra.
pub fn associativize(d: &SuperDialgebra) -> Result<AssociativeSuperalgebra> {
    let n = d.dim();
    let diffs: Vec<SparseVec> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| d.left(x, y) - d.right(x, y))
        .collect();
    let gens = Subspace::from_rows(diffs.iter(), n)?;
    let ideal = ideal_closure(&gens, &[d.left_table(), d.right_table()]);
    let keep = ideal.complement_indices();
    let basis = GradedBasis::new(
        keep.iter()
            .map(|i| (d.basis().name(*i).to_string(), d.parity(*i))),
    )?;
    let a = AssociativeSuperalgebra::from_fn(basis, |x, y| {
        ideal.quotient_coordinates(d.left(keep[x], keep[y]))
    })?;
    match d.bar_unit() {
        Some(u) => a.with_unit(ideal.quotient_coordinates(u)),
        None => Ok(a),
    }
}

/// `L / ([x, y] + (-1)^{|x||y|} [y, x])`, a Lie superalgebra.
pub fn lieize(l: &LeibnizSuperalgebra) -> Result<LeibnizSuperalgebra> {
    let n = l.dim();
    let mut sym = Vec::new();
    for x in 0..n {
        for y in x..n {
            let mut v = l.bracket(x, y).clone();
            v.add_scaled(&koszul_sign(l.parity(x), l.parity(y)), l.bracket(y, x));
            sym.push(v);
        }
    }
    let gens = Subspace::from_rows(sym.iter(), n)?;
    let ideal = ideal_closure(&gens, &[l.table()]);
    l.quotient(&ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{check_leibniz, check_lie_super, check_right_leibniz, Parity};
    use crate::linalg::int;

    fn upper_triangular() -> (AssociativeSuperalgebra, LinearMap) {
        // E11, E12, E22
        let b = GradedBasis::even(&["E11", "E12", "E22"]).unwrap();
        let a = AssociativeSuperalgebra::from_fn(b, |i, j| match (i, j) {
            (0, 0) => SparseVec::unit(0),
            (0, 1) => SparseVec::unit(1),
            (1, 2) => SparseVec::unit(1),
            (2, 2) => SparseVec::unit(2),
            _ => SparseVec::zero(),
        })
        .unwrap();
        let d = LinearMap::from_columns(
            vec![
                SparseVec::single(1, int(-1)),
                SparseVec::zero(),
                SparseVec::unit(1),
            ],
            3,
        )
        .unwrap();
        (a, d)
    }

    #[test]
    fn upper_triangular_differential_dialgebra() {
        let (a, d) = upper_triangular();
        let dd = from_differential_superalgebra(&a, &d).unwrap();
        assert!(check_dialgebra(&dd).passed());
        assert!(!dd.is_associative_type());
        let l = dialgebra_to_leibniz(&dd).unwrap();
        assert!(check_leibniz(&l).passed());
        assert!(!check_lie_super(&l));
        let r = dialgebra_to_right_leibniz(&dd).unwrap();
        assert!(check_right_leibniz(&r).passed());
    }

    #[test]
    fn differential_preconditions() {
        let (a, _) = upper_triangular();
        let not_der = LinearMap::identity(3);
        assert_eq!(
            from_differential_superalgebra(&a, &not_der),
            Err(Error::NotADerivation)
        );
        let zero = LinearMap::zero(3, 3);
        let dd = from_differential_superalgebra(&a, &zero).unwrap();
        assert!(dd.left_table().is_zero() && dd.right_table().is_zero());
    }

    #[test]
    fn grassmann_with_zero_differential() {
        let b = GradedBasis::new([("1", Parity::Even), ("ξ", Parity::Odd)]).unwrap();
        let a = AssociativeSuperalgebra::from_fn(b, |i, j| {
            if i + j < 2 {
                SparseVec::unit(i + j)
            } else {
                SparseVec::zero()
            }
        })
        .unwrap();
        let dd = from_differential_superalgebra(&a, &LinearMap::zero(2, 2)).unwrap();
        assert!(crate::graded::check_grading(&dd).passed());
    }

    #[test]
    fn associativize_of_associative_is_identity() {
        let (a, _) = upper_triangular();
        let q = associativize(&a.as_dialgebra()).unwrap();
        assert_eq!(q.dim(), 3);
    }

    #[test]
    fn lieize_kills_symmetric_part() {
        let (a, d) = upper_triangular();
        let l = dialgebra_to_leibniz(&from_differential_superalgebra(&a, &d).unwrap()).unwrap();
        let q = lieize(&l).unwrap();
        assert!(check_lie_super(&q));
        assert!(q.dim() < l.dim());
    }
}
