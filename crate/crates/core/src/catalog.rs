//! Named algebras: osp(1,2), sl₂, sl(m,n), truncated polynomial
//! dialgebras, current algebras over them, and the loop-algebra cocycle
//! with its relation checks.

use crate::cohomology::{is_cocycle, CentralExtension, Cochain};
use crate::constructions::{
    current_algebra, free_leibniz_super, free_super_dialgebra, gl_leibniz, loop_leibniz,
    matrix_superalgebra, tensor_dialgebra, FreeDialgebra, FreeLeibniz, LoopAlgebra,
};
use crate::differentials::{omega, DifferentialModule};
use crate::error::{Error, Result};
use crate::graded::{
    check_dialgebra, check_leibniz, AssociativeSuperalgebra, BilinearForm, CheckReport,
    GradedBasis, LeibnizSuperalgebra, Parity, SuperDialgebra,
};
use crate::linalg::{int, rat, LinearMap, Scalar, SparseVec, Subspace};

/// Basis order of osp(1,2).
pub const OSP_X_PLUS: usize = 0;
pub const OSP_ODD_PLUS: usize = 1;
pub const OSP_H: usize = 2;
pub const OSP_ODD_MINUS: usize = 3;
pub const OSP_X_MINUS: usize = 4;

fn table_from(
    basis: GradedBasis,
    entries: &[(usize, usize, usize, Scalar)],
) -> LeibnizSuperalgebra {
    let mut l = LeibnizSuperalgebra::abelian(basis);
    for (i, j, k, c) in entries {
        l.set_bracket(*i, *j, SparseVec::single(*k, c.clone()))
            .expect("in range");
    }
    l
}

/// osp(1,2) on `X+, x+, H, x-, X-` with `|x±| = 1`, and its invariant form.
pub fn osp12() -> (LeibnizSuperalgebra, BilinearForm) {
    let (xp, op, h, om, xm) = (OSP_X_PLUS, OSP_ODD_PLUS, OSP_H, OSP_ODD_MINUS, OSP_X_MINUS);
    let basis = GradedBasis::new([
        ("X+", Parity::Even),
        ("x+", Parity::Odd),
        ("H", Parity::Even),
        ("x-", Parity::Odd),
        ("X-", Parity::Even),
    ])
    .expect("distinct names");
    let l = table_from(
        basis,
        &[
            (h, xp, xp, int(4)),
            (xp, h, xp, int(-4)),
            (h, xm, xm, int(-4)),
            (xm, h, xm, int(4)),
            (h, op, op, int(2)),
            (op, h, op, int(-2)),
            (h, om, om, int(-2)),
            (om, h, om, int(2)),
            (xp, xm, h, rat(1, 2)),
            (xm, xp, h, rat(-1, 2)),
            (op, om, h, int(1)),
            (om, op, h, int(1)),
            (op, op, xp, int(4)),
            (om, om, xm, int(-4)),
            (xp, om, op, int(-1)),
            (om, xp, op, int(1)),
            (xm, op, om, int(-1)),
            (op, xm, om, int(1)),
        ],
    );
    let form = BilinearForm::from_fn(5, |i, j| match (i, j) {
        (OSP_H, OSP_H) => int(2),
        (OSP_ODD_PLUS, OSP_ODD_MINUS) => int(1),
        (OSP_ODD_MINUS, OSP_ODD_PLUS) => int(-1),
        (OSP_X_PLUS, OSP_X_MINUS) | (OSP_X_MINUS, OSP_X_PLUS) => rat(1, 4),
        _ => int(0),
    });
    (l, form)
}

/// sl₂ on `e, h, f` with the trace form of the defining representation.
pub fn sl2() -> (LeibnizSuperalgebra, BilinearForm) {
    let basis = GradedBasis::even(&["e", "h", "f"]).expect("distinct names");
    let l = table_from(
        basis,
        &[
            (1, 0, 0, int(2)),
            (0, 1, 0, int(-2)),
            (1, 2, 2, int(-2)),
            (2, 1, 2, int(2)),
            (0, 2, 1, int(1)),
            (2, 0, 1, int(-1)),
        ],
    );
    let form = BilinearForm::from_fn(3, |i, j| match (i, j) {
        (1, 1) => int(2),
        (0, 2) | (2, 0) => int(1),
        _ => int(0),
    });
    (l, form)
}

fn supertrace(m: usize, s: usize, v: &SparseVec) -> Scalar {
    let mut out = int(0);
    for i in 0..s {
        let c = v.coeff(i * s + i);
        if i < m {
            out += c;
        } else {
            out -= c;
        }
    }
    out
}

/// Supertrace-zero `(m|n)` matrices with the super commutator and
/// `(x, y) = str(xy)`. Basis: off-diagonal units `Eij`, then `Hi`, where
/// `Hi = Eii - Ei+1,i+1` inside a block and `Hm = Emm + Em+1,m+1`.
pub fn sl_mn(m: usize, n: usize) -> Result<(LeibnizSuperalgebra, BilinearForm)> {
    if m == n {
        return Err(Error::ExcludedType);
    }
    if m + n < 2 {
        return Err(Error::Unsupported("sl(m,n) needs m + n >= 2".into()));
    }
    let s = m + n;
    let a = matrix_superalgebra(m, n)?;
    let mut elems: Vec<(String, SparseVec)> = Vec::new();
    for i in 0..s {
        for j in 0..s {
            if i != j {
                elems.push((
                    a.basis().name(i * s + j).to_string(),
                    SparseVec::unit(i * s + j),
                ));
            }
        }
    }
    for i in 0..s - 1 {
        let c = if i + 1 == m { int(1) } else { int(-1) };
        let v = SparseVec::from_entries([(i * s + i, int(1)), ((i + 1) * s + i + 1, c)]);
        elems.push((format!("H{}", i + 1), v));
    }
    let gl = a.commutator_algebra();
    let embed = LinearMap::from_columns(elems.iter().map(|(_, v)| v.clone()).collect(), s * s)?;
    let basis = GradedBasis::new(elems.iter().map(|(name, v)| {
        (
            name.clone(),
            a.basis().parity_of(v).ok().flatten().unwrap_or_default(),
        )
    }))?;
    let l = LeibnizSuperalgebra::try_from_fn(basis, |i, j| {
        embed.preimage(&gl.bracket_vec(embed.column(i), embed.column(j)))
    })?;
    let form = BilinearForm::from_fn(l.dim(), |i, j| {
        supertrace(m, s, &a.mul_vec(embed.column(i), embed.column(j)))
    });
    Ok((l, form))
}

/// Abelian and purely even on `a1..an`.
pub fn abelian(n: usize) -> LeibnizSuperalgebra {
    let names: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    LeibnizSuperalgebra::abelian(
        GradedBasis::new(names.into_iter().map(|s| (s, Parity::Even))).expect("distinct"),
    )
}

/// `ℚ[t]/(t^N)` as a commutative dialgebra on `1, t, t2, …` with bar unit `1`.
pub fn trunc_poly(n: usize) -> Result<SuperDialgebra> {
    if n == 0 {
        return Err(Error::Unsupported("ℚ[t]/(t^0) is zero".into()));
    }
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t{i}"),
        })
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let a = AssociativeSuperalgebra::from_fn(GradedBasis::even(&refs)?, |i, j| {
        if i + j < n {
            SparseVec::unit(i + j)
        } else {
            SparseVec::zero()
        }
    })?
    .with_unit(SparseVec::unit(0))?;
    Ok(a.as_dialgebra())
}

/// `θ(x ⊗ t^k) = c^k x ⊗ t^k` on `g ⊗ ℚ[t]/(t^N)`.
pub fn poly_scaling(g_dim: usize, n: usize, c: &Scalar) -> LinearMap {
    let cols = (0..g_dim * n)
        .map(|i| {
            let k = (i % n) as i32;
            SparseVec::single(i, c.pow(k))
        })
        .collect();
    LinearMap::from_columns(cols, g_dim * n).expect("in range")
}

/// `t ∂_t`: `x ⊗ t^k ↦ k x ⊗ t^k`.
pub fn poly_euler_derivation(g_dim: usize, n: usize) -> LinearMap {
    let cols = (0..g_dim * n)
        .map(|i| SparseVec::from_entries([(i, int((i % n) as i64))]))
        .collect();
    LinearMap::from_columns(cols, g_dim * n).expect("in range")
}

/// `ψ(X ⊗ a, Y ⊗ b) = (X, Y) · b ⊣ da` in `Ω` coordinates, on the basis of
/// `current_algebra(g, d)`.
pub fn theorem51_cocycle(
    g: &LeibnizSuperalgebra,
    form: &BilinearForm,
    d: &SuperDialgebra,
    omega: &DifferentialModule,
) -> Result<Cochain> {
    if !d.is_commutative() {
        return Err(Error::NotCommutative);
    }
    if !d.basis().is_purely_even() {
        return Err(Error::Unsupported(
            "coefficients must be purely even".into(),
        ));
    }
    let q = d.dim();
    let n = g.dim() * q;
    let mut psi = Cochain::zero(2, Parity::Even);
    for (x, y, c) in form.iter() {
        for a in 0..q {
            for b in 0..q {
                let p = omega
                    .pairing(&SparseVec::unit(a), &SparseVec::unit(b))
                    .scaled(c);
                psi.set((x * q + a) * n + y * q + b, p);
            }
        }
    }
    let l = current_algebra(g, d)?;
    if !is_cocycle(&l, &psi) {
        return Err(Error::NotACocycle);
    }
    Ok(psi)
}

/// `g ⊗ D ⊕ Ω` as a central extension of `g ⊗ D`.
pub struct LoopExtension {
    pub omega: DifferentialModule,
    pub current: LeibnizSuperalgebra,
    pub loop_algebra: LoopAlgebra,
    pub extension: CentralExtension,
}

pub fn loop_extension(
    g: &LeibnizSuperalgebra,
    form: &BilinearForm,
    d: &SuperDialgebra,
) -> Result<LoopExtension> {
    let om = omega(d)?;
    let current = current_algebra(g, d)?;
    let loop_algebra = loop_leibniz(g, form, d, &om)?;
    let total = loop_algebra.algebra.clone();
    let base = loop_algebra.base_dim;
    let units: Vec<SparseVec> = (base..total.dim()).map(SparseVec::unit).collect();
    let extension = CentralExtension {
        projection: loop_algebra.projection(),
        kernel: Subspace::from_rows(&units, total.dim())?,
        total,
        cocycle: None,
    };
    extension.verify(&current)?;
    Ok(LoopExtension {
        omega: om,
        current,
        loop_algebra,
        extension,
    })
}

/// `{a ⊢ b, c} = {a, b ⊢ c} + {b, a ⊢ c}` over all basis triples of `D`.
pub fn verify_52(d: &SuperDialgebra) -> Result<CheckReport> {
    let om = omega(d)?;
    let q = d.dim();
    let mut rep = CheckReport::default();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let (ea, eb, ec) = (SparseVec::unit(a), SparseVec::unit(b), SparseVec::unit(c));
                let lhs = om.pairing(d.right(a, b), &ec);
                let mut rhs = om.pairing(&ea, d.right(b, c));
                rhs.add_scaled(&int(1), &om.pairing(&eb, d.right(a, c)));
                rep.record("pairing", &[a, b, c], &lhs - &rhs);
            }
        }
    }
    Ok(rep)
}

/// Checks each bracket relation of `osp(1,2) ⊗ D ⊕ Ω` over all basis pairs
/// of `D`, with `{a, b} = b ⊣ da`.
pub fn verify_osp_loop_relations(d: &SuperDialgebra) -> Result<CheckReport> {
    let (g, form) = osp12();
    let om = omega(d)?;
    let lp = loop_leibniz(&g, &form, d, &om)?;
    let q = d.dim();
    let base = lp.base_dim;
    let t = &lp.algebra;
    let (xp, op, h, on, xm) = (OSP_X_PLUS, OSP_ODD_PLUS, OSP_H, OSP_ODD_MINUS, OSP_X_MINUS);
    let mut rep = CheckReport::default();
    for a in 0..q {
        for b in 0..q {
            let e = |x: usize, k: usize| SparseVec::unit(x * q + k);
            let ab = d.right(a, b);
            // Y ⊗ (a ⊢ b)
            let y_ab = |y: usize| ab.remap(|k| y * q + k);
            let pair = om
                .pairing(&SparseVec::unit(a), &SparseVec::unit(b))
                .shifted(base);
            let br = |x: usize, y: usize| t.bracket_vec(&e(x, a), &e(y, b));
            let mut check = |name: &str, x: usize, y: usize, expected: SparseVec| {
                rep.record(name, &[x, a, y, b], &br(x, y) - &expected);
            };
            for (y, beta) in [(xp, 4), (xm, -4), (op, 2), (on, -2)] {
                check("F1", h, y, y_ab(y).scaled(&int(beta)));
                check("F1", y, h, y_ab(y).scaled(&int(-beta)));
            }
            check("F2", op, on, &y_ab(h) + &pair);
            check("F2", on, op, &y_ab(h) - &pair);
            check("F2", h, h, pair.scaled(&int(2)));
            check("F3", op, op, y_ab(xp).scaled(&int(4)));
            check("F3", on, on, y_ab(xm).scaled(&int(-4)));
            check("F4", xp, on, y_ab(op).scaled(&int(-1)));
            check("F4", xm, op, y_ab(on).scaled(&int(-1)));
            check("F4", op, xm, y_ab(on));
            check("F4", on, xp, y_ab(op));
            let quarter = pair.scaled(&rat(1, 4));
            check("F5", xp, xm, &y_ab(h).scaled(&rat(1, 2)) + &quarter);
            check("F5", xm, xp, &y_ab(h).scaled(&rat(-1, 2)) + &quarter);
            for (x, y) in [(xp, op), (op, xp), (xm, on), (on, xm), (xp, xp), (xm, xm)] {
                check("F6", x, y, SparseVec::zero());
            }
        }
    }
    Ok(rep)
}

/// A structure addressable by catalog name.
#[derive(Clone, Debug)]
pub enum Structure {
    Leibniz {
        algebra: LeibnizSuperalgebra,
        form: Option<BilinearForm>,
        /// Coefficient dialgebra of a current algebra `g ⊗ D`.
        coefficients: Option<SuperDialgebra>,
    },
    Dialgebra(SuperDialgebra),
    FreeLeibniz(FreeLeibniz),
    FreeDialgebra(FreeDialgebra),
}

/// `(name pattern, description)` for every catalog family.
pub const ENTRIES: &[(&str, &str)] = &[
    ("osp12", "osp(1,2) with its invariant form"),
    ("sl2", "sl2 with the trace form"),
    ("sl_mn:m:n", "supertrace-zero (m|n) matrices, m != n"),
    ("gl_mn:m:n", "gl(m,n) over the rationals"),
    ("abelian:n", "n-dimensional abelian, purely even"),
    ("trunc_poly:N", "Q[t]/(t^N) as a commutative dialgebra"),
    ("tensor:A,B", "tensor product of two dialgebra entries"),
    (
        "<g>xPoly:N",
        "current algebra g ⊗ Q[t]/(t^N) for g in osp12, sl2, sl_mn:m:n",
    ),
    (
        "free_leibniz:P:k",
        "free Leibniz superalgebra on generators of parities P (e.g. 01), degree <= k",
    ),
    (
        "free_dias:P:k",
        "free super dialgebra on generators of parities P, degree <= k",
    ),
];

fn number(name: &str, s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::UnknownCatalog(name.to_string()))
}

fn parities(name: &str, s: &str) -> Result<Vec<Parity>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(Parity::Even),
            '1' => Ok(Parity::Odd),
            _ => Err(Error::UnknownCatalog(name.to_string())),
        })
        .collect()
}

fn lie_with_form(name: &str) -> Result<(LeibnizSuperalgebra, BilinearForm)> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["osp12"] => Ok(osp12()),
        ["sl2"] => Ok(sl2()),
        ["sl_mn", m, n] => sl_mn(number(name, m)?, number(name, n)?),
        _ => Err(Error::UnknownCatalog(name.to_string())),
    }
}

fn dialgebra(name: &str) -> Result<SuperDialgebra> {
    match lookup(name)? {
        Structure::Dialgebra(d) => Ok(d),
        Structure::FreeDialgebra(f) => Ok(f.dialgebra),
        _ => Err(Error::UnknownCatalog(name.to_string())),
    }
}

/// Builds a catalog entry by name.
pub fn lookup(name: &str) -> Result<Structure> {
    let name = name.trim();
    if let Some(rest) = name.strip_prefix("tensor:") {
        let (a, b) = rest
            .split_once(',')
            .ok_or_else(|| Error::UnknownCatalog(name.to_string()))?;
        return Ok(Structure::Dialgebra(tensor_dialgebra(
            &dialgebra(a)?,
            &dialgebra(b)?,
        )?));
    }
    if let Some((g, n)) = name.split_once("xPoly:") {
        let (g, _) = lie_with_form(g)?;
        let d = trunc_poly(number(name, n)?)?;
        return Ok(Structure::Leibniz {
            algebra: current_algebra(&g, &d)?,
            form: None,
            coefficients: Some(d),
        });
    }
    let parts: Vec<&str> = name.split(':').collect();
    let s = match parts.as_slice() {
        ["osp12"] | ["sl2"] | ["sl_mn", _, _] => {
            let (algebra, form) = lie_with_form(name)?;
            Structure::Leibniz {
                algebra,
                form: Some(form),
                coefficients: None,
            }
        }
        ["gl_mn", m, n] => Structure::Leibniz {
            algebra: gl_leibniz(number(name, m)?, number(name, n)?, &trunc_poly(1)?)?,
            form: None,
            coefficients: None,
        },
        ["abelian", n] => Structure::Leibniz {
            algebra: abelian(number(name, n)?),
            form: None,
            coefficients: None,
        },
        ["trunc_poly", n] => Structure::Dialgebra(trunc_poly(number(name, n)?)?),
        ["free_leibniz", p, k] => {
            Structure::FreeLeibniz(free_leibniz_super(&parities(name, p)?, number(name, k)?)?)
        }
        ["free_dias", p, k] => {
            Structure::FreeDialgebra(free_super_dialgebra(&parities(name, p)?, number(name, k)?)?)
        }
        _ => return Err(Error::UnknownCatalog(name.to_string())),
    };
    Ok(s)
}

/// Axiom checks a catalog entry passes on construction.
pub fn entry_report(s: &Structure) -> CheckReport {
    match s {
        Structure::Leibniz { algebra, form, .. } => {
            let mut rep = check_leibniz(algebra);
            if let Some(f) = form {
                rep.merge(crate::graded::invariant_form_report(algebra, f));
                rep.merge(crate::graded::lie_super_report(algebra));
            }
            rep
        }
        Structure::Dialgebra(d) => check_dialgebra(d),
        Structure::FreeLeibniz(f) => f.check(),
        Structure::FreeDialgebra(f) => f.check(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{check_grading, check_invariant_form, check_lie_super};

    #[test]
    fn osp12_table() {
        let (l, form) = osp12();
        assert_eq!(
            *l.bracket_named("x+", "x-").unwrap(),
            SparseVec::unit(OSP_H)
        );
        assert_eq!(
            *l.bracket_named("x+", "x+").unwrap(),
            SparseVec::single(OSP_X_PLUS, int(4))
        );
        assert!(check_leibniz(&l).passed());
        assert!(check_lie_super(&l));
        assert!(check_grading(&l).passed());
        assert!(check_invariant_form(&l, &form));
        assert!(form.is_even_supersymmetric(l.basis()));
    }

    #[test]
    fn sl2_table() {
        let (l, form) = sl2();
        assert_eq!(
            *l.bracket_named("h", "e").unwrap(),
            SparseVec::single(0, int(2))
        );
        assert_eq!(*l.bracket_named("e", "f").unwrap(), SparseVec::unit(1));
        assert!(check_invariant_form(&l, &form));
    }

    #[test]
    fn sl21() {
        let (l, form) = sl_mn(2, 1).unwrap();
        assert_eq!(l.dim(), 8);
        assert!(check_lie_super(&l));
        assert!(check_invariant_form(&l, &form));
        assert!(form.is_even_supersymmetric(l.basis()));
        assert_eq!(sl_mn(1, 1).unwrap_err(), Error::ExcludedType);
    }

    #[test]
    fn truncated_polynomials() {
        let d = trunc_poly(3).unwrap();
        assert!(check_dialgebra(&d).passed());
        assert!(d.is_commutative());
        assert_eq!(d.basis().names(), ["1", "t", "t2"]);
    }

    #[test]
    fn cocycle_diagonal_value() {
        let (g, form) = sl2();
        let d = trunc_poly(3).unwrap();
        let om = omega(&d).unwrap();
        let psi = theorem51_cocycle(&g, &form, &d, &om).unwrap();
        // ψ(h⊗t, h⊗t) = 2 t·dt
        let ht = 3 + 1;
        let v = psi.get(ht * 9 + ht).unwrap();
        let tdt = om.names().iter().position(|n| n == "t·dt").unwrap();
        assert_eq!(*v, SparseVec::single(tdt, int(2)));
        // ψ(X⊗1, Y⊗b) = 0
        assert!((0..9).all(|j| psi.get(3 * 9 + j).is_none()));
    }

    #[test]
    fn relations_hold() {
        for n in 1..=3 {
            let d = trunc_poly(n).unwrap();
            assert!(verify_52(&d).unwrap().passed());
            let rep = verify_osp_loop_relations(&d).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures.first());
        }
    }

    #[test]
    fn lookup_names() {
        assert!(matches!(
            lookup("osp12").unwrap(),
            Structure::Leibniz { .. }
        ));
        assert!(matches!(
            lookup("trunc_poly:3").unwrap(),
            Structure::Dialgebra(_)
        ));
        assert!(
            matches!(lookup("tensor:trunc_poly:2,trunc_poly:2").unwrap(), Structure::Dialgebra(d) if d.dim() == 4)
        );
        assert!(
            matches!(lookup("sl2xPoly:3").unwrap(), Structure::Leibniz { algebra, .. } if algebra.dim() == 9)
        );
        assert!(matches!(
            lookup("free_leibniz:01:3"),
            Ok(Structure::FreeLeibniz(_))
        ));
        assert_eq!(
            lookup("nope").unwrap_err(),
            Error::UnknownCatalog("nope".into())
        );
        assert_eq!(
            lookup("abelian:x").unwrap_err(),
            Error::UnknownCatalog("abelian:x".into())
        );
    }
}
