use super::functors::require;
use crate::differentials::DifferentialModule;
use crate::error::{Error, Result};
use crate::graded::{
    check_dialgebra, check_invariant_form, check_leibniz, check_lie_super, koszul_sign,
    BilinearForm, LeibnizSuperalgebra, SuperDialgebra,
};
use crate::linalg::SparseVec;

/// `g ⊗ D` with `[x ⊗ a, y ⊗ b] = (-1)^{|a||y|} [x, y] ⊗ (a ⊢ b)`; basis
/// `x ⊗ a` at index `x * dim(D) + a`.
pub fn current_algebra(g: &LeibnizSuperalgebra, d: &SuperDialgebra) -> Result<LeibnizSuperalgebra> {
    require(check_dialgebra(d), "coefficient dialgebra")?;
    let q = d.dim();
    let basis = g.basis().tensor(d.basis(), |x, a| format!("{x}⊗{a}"))?;
    let l = LeibnizSuperalgebra::from_fn(basis, |u, v| {
        let (x, a, y, b) = (u / q, u % q, v / q, v % q);
        tensor_bracket(g, d, x, a, y, b)
    })?;
    require(check_leibniz(&l), "current algebra")?;
    Ok(l)
}

fn tensor_bracket(
    g: &LeibnizSuperalgebra,
    d: &SuperDialgebra,
    x: usize,
    a: usize,
    y: usize,
    b: usize,
) -> SparseVec {
    let q = d.dim();
    let s = koszul_sign(d.parity(a), g.parity(y));
    let mut out = Vec::new();
    for (z, c) in g.bracket(x, y).iter() {
        for (k, e) in d.right(a, b).iter() {
            out.push((z * q + k, c * e * &s));
        }
    }
    SparseVec::from_entries(out)
}

/// `g̃ = g ⊗ D ⊕ Ω` with the bracket
/// `[x ⊗ a, y ⊗ b] = [x, y] ⊗ (a ⊢ b) + (x, y) b ⊣ da` and `Ω` central.
#[derive(Clone, Debug)]
pub struct LoopAlgebra {
    pub algebra: LeibnizSuperalgebra,
    /// `dim(g ⊗ D)`; `Ω` occupies the indices from here on.
    pub base_dim: usize,
    pub omega_dim: usize,
}

impl LoopAlgebra {
    /// Index of `x ⊗ a`.
    pub fn index(&self, x: usize, a: usize, dim_d: usize) -> usize {
        x * dim_d + a
    }

    /// The projection `g̃ -> g ⊗ D`.
    pub fn projection(&self) -> crate::linalg::LinearMap {
        let cols = (0..self.algebra.dim())
            .map(|i| {
                if i < self.base_dim {
                    SparseVec::unit(i)
                } else {
                    SparseVec::zero()
                }
            })
            .collect();
        crate::linalg::LinearMap::from_columns(cols, self.base_dim).expect("in range")
    }
}

pub fn loop_leibniz(
    g: &LeibnizSuperalgebra,
    form: &BilinearForm,
    d: &SuperDialgebra,
    omega: &DifferentialModule,
) -> Result<LoopAlgebra> {
    if !check_lie_super(g) {
        return Err(Error::NotLieSuper);
    }
    if !check_invariant_form(g, form) {
        return Err(Error::FormNotInvariant);
    }
    if !d.is_commutative() {
        return Err(Error::NotCommutative);
    }
    if !d.basis().is_purely_even() {
        return Err(Error::Unsupported(
            "loop algebras need purely even coefficients".into(),
        ));
    }
    if omega.dialgebra() != d {
        return Err(Error::Unsupported(
            "Ω belongs to a different dialgebra".into(),
        ));
    }
    let q = d.dim();
    let base_dim = g.dim() * q;
    let w = omega.dim();
    let base = g.basis().tensor(d.basis(), |x, a| format!("{x}⊗{a}"))?;
    let om = crate::graded::GradedBasis::new(
        omega
            .names()
            .iter()
            .map(|n| (n.clone(), crate::graded::Parity::Even)),
    )?;
    let basis = base.concat(&om, |s| s.to_string())?;
    let algebra = LeibnizSuperalgebra::from_fn(basis, |u, v| {
        if u >= base_dim || v >= base_dim {
            return SparseVec::zero();
        }
        let (x, a, y, b) = (u / q, u % q, v / q, v % q);
        let mut out = tensor_bracket(g, d, x, a, y, b);
        let c = form.get(x, y);
        if *c != crate::linalg::zero() {
            let p = omega.pairing(&SparseVec::unit(a), &SparseVec::unit(b));
            out.add_scaled(c, &p.shifted(base_dim));
        }
        out
    })?;
    require(check_leibniz(&algebra), "loop algebra")?;
    Ok(LoopAlgebra {
        algebra,
        base_dim,
        omega_dim: w,
    })
}

/// `g ⊗ g` with
/// `[x ⊗ y, a ⊗ b] = [[x, y], a] ⊗ b + (-1)^{(|x|+|y|)|a|} a ⊗ [[x, y], b]`.
pub fn tensor_square_leibniz(g: &LeibnizSuperalgebra) -> Result<LeibnizSuperalgebra> {
    if !check_lie_super(g) {
        return Err(Error::NotLieSuper);
    }
    let n = g.dim();
    let basis = g.basis().tensor(g.basis(), |x, y| format!("{x}⊗{y}"))?;
    let l = LeibnizSuperalgebra::from_fn(basis, |u, v| {
        let (x, y, a, b) = (u / n, u % n, v / n, v % n);
        let xy = g.bracket(x, y);
        let mut out = Vec::new();
        for (k, c) in g.table().apply_left(xy, a).iter() {
            out.push((k * n + b, c.clone()));
        }
        let s = koszul_sign(g.parity(x) + g.parity(y), g.parity(a));
        for (k, c) in g.table().apply_left(xy, b).iter() {
            out.push((a * n + k, c * &s));
        }
        SparseVec::from_entries(out)
    })?;
    require(check_leibniz(&l), "tensor square")?;
    Ok(l)
}
