//! Exhaustive identity checks over basis tuples.

use num_traits::One;

use super::algebra::{AssociativeSuperalgebra, BilinearForm, LeibnizSuperalgebra, SuperDialgebra};
use super::module::LeibnizModule;
use super::parity::{koszul_sign, GradedBasis};
use super::table::Table;
use crate::linalg::{kernel, rref, Scalar, SparseVec, Subspace};

/// One failing instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub residual: SparseVec,
}

/// Outcome of an identity sweep. Failures are listed in index order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, axiom: &str, indices: &[usize], residual: SparseVec) {
        self.checked += 1;
        if !residual.is_zero() {
            self.failures.push(Failure {
                axiom: axiom.to_string(),
                indices: indices.to_vec(),
                residual,
            });
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
    }

    pub fn failures_of(&self, axiom: &str) -> impl Iterator<Item = &Failure> + '_ {
        let axiom = axiom.to_string();
        self.failures.iter().filter(move |f| f.axiom == axiom)
    }
}

fn combo(terms: &[(Scalar, SparseVec)]) -> SparseVec {
    let mut out = SparseVec::zero();
    for (c, v) in terms {
        out.add_scaled(c, v);
    }
    out
}

fn pos() -> Scalar {
    Scalar::one()
}

fn neg() -> Scalar {
    -Scalar::one()
}

/// The five dialgebra axioms on every basis triple, plus the bar-unit law
/// when a bar-unit is attached.
pub fn check_dialgebra(d: &SuperDialgebra) -> CheckReport {
    check_dialgebra_where(d, |_, _, _| true)
}

/// As [`check_dialgebra`], restricted to triples accepted by `keep`;
/// rejected triples are counted in `skipped`.
pub fn check_dialgebra_where(
    d: &SuperDialgebra,
    keep: impl Fn(usize, usize, usize) -> bool,
) -> CheckReport {
    let n = d.dim();
    let (l, r) = (d.left_table(), d.right_table());
    let mut rep = CheckReport::default();
    for a in 0..n {
        for b in 0..n {
            let ab_l = l.get(a, b);
            let ab_r = r.get(a, b);
            for c in 0..n {
                if !keep(a, b, c) {
                    rep.skipped += 5;
                    continue;
                }
                let idx = [a, b, c];
                // (a ⊣ b) ⊣ c
                let ll = l.apply_left(ab_l, c);
                // (a ⊢ b) ⊣ c
                let rl = l.apply_left(ab_r, c);
                // (a ⊢ b) ⊢ c
                let rr = r.apply_left(ab_r, c);
                // (a ⊣ b) ⊢ c
                let lr = r.apply_left(ab_l, c);
                let a_l_bc_l = l.apply_right(a, l.get(b, c));
                let a_l_bc_r = l.apply_right(a, r.get(b, c));
                let a_r_bc_l = r.apply_right(a, l.get(b, c));
                let a_r_bc_r = r.apply_right(a, r.get(b, c));
                rep.record("D1", &idx, &a_l_bc_l - &ll);
                rep.record("D2", &idx, &ll - &a_l_bc_r);
                rep.record("D3", &idx, &rl - &a_r_bc_l);
                rep.record("D4", &idx, &rr - &a_r_bc_r);
                rep.record("D5", &idx, &a_r_bc_r - &lr);
            }
        }
    }
    if let Some(u) = d.bar_unit() {
        for a in 0..n {
            let e = SparseVec::unit(a);
            rep.record("bar-unit-right", &[a], &d.right_vec(u, &e) - &e);
            rep.record("bar-unit-left", &[a], &d.left_vec(&e, u) - &e);
        }
    }
    rep
}

fn grading_of_table(basis: &GradedBasis, name: &str, t: &Table, rep: &mut CheckReport) {
    for (i, j, v) in t.iter() {
        let p = basis.parity(i) + basis.parity(j);
        let wrong = v.filtered(|k| basis.parity(k) != p);
        rep.record(name, &[i, j], wrong);
    }
}

/// Structures whose products must respect a ℤ₂-grading.
pub trait GradedStructure {
    fn graded_basis(&self) -> &GradedBasis;
    fn product_tables(&self) -> Vec<(&'static str, &Table)>;
}

impl GradedStructure for LeibnizSuperalgebra {
    fn graded_basis(&self) -> &GradedBasis {
        self.basis()
    }
    fn product_tables(&self) -> Vec<(&'static str, &Table)> {
        vec![("grading:bracket", self.table())]
    }
}

impl GradedStructure for SuperDialgebra {
    fn graded_basis(&self) -> &GradedBasis {
        self.basis()
    }
    fn product_tables(&self) -> Vec<(&'static str, &Table)> {
        vec![
            ("grading:left", self.left_table()),
            ("grading:right", self.right_table()),
        ]
    }
}

impl GradedStructure for AssociativeSuperalgebra {
    fn graded_basis(&self) -> &GradedBasis {
        self.basis()
    }
    fn product_tables(&self) -> Vec<(&'static str, &Table)> {
        vec![("grading:product", self.table())]
    }
}

/// Every product of basis elements lies in the span of the sum parity.
/// The residual of a failure is the wrong-parity part.
pub fn check_grading<S: GradedStructure>(s: &S) -> CheckReport {
    let mut rep = CheckReport::default();
    for (name, t) in s.product_tables() {
        grading_of_table(s.graded_basis(), name, t, &mut rep);
    }
    rep
}

/// `[[a,b],c] = [a,[b,c]] - (-1)^{|a||b|} [b,[a,c]]` on every basis triple.
pub fn check_leibniz(l: &LeibnizSuperalgebra) -> CheckReport {
    check_leibniz_where(l, |_, _, _| true)
}

pub fn check_leibniz_where(
    l: &LeibnizSuperalgebra,
    keep: impl Fn(usize, usize, usize) -> bool,
) -> CheckReport {
    let n = l.dim();
    let t = l.table();
    let mut rep = CheckReport::default();
    for a in 0..n {
        for b in 0..n {
            let s = koszul_sign(l.parity(a), l.parity(b));
            for c in 0..n {
                if !keep(a, b, c) {
                    rep.skipped += 1;
                    continue;
                }
                let lhs = t.apply_left(l.bracket(a, b), c);
                let r1 = t.apply_right(a, l.bracket(b, c));
                let r2 = t.apply_right(b, l.bracket(a, c));
                rep.record(
                    "leibniz",
                    &[a, b, c],
                    combo(&[(pos(), lhs), (neg(), r1), (s.clone(), r2)]),
                );
            }
        }
    }
    rep
}

/// `[a,[b,c]] = [[a,b],c] - (-1)^{|b||c|} [[a,c],b]`, the right Leibniz identity.
pub fn check_right_leibniz(l: &LeibnizSuperalgebra) -> CheckReport {
    let n = l.dim();
    let t = l.table();
    let mut rep = CheckReport::default();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let s = koszul_sign(l.parity(b), l.parity(c));
                let lhs = t.apply_right(a, l.bracket(b, c));
                let r1 = t.apply_left(l.bracket(a, b), c);
                let r2 = t.apply_left(l.bracket(a, c), b);
                rep.record(
                    "right-leibniz",
                    &[a, b, c],
                    combo(&[(pos(), lhs), (neg(), r1), (s, r2)]),
                );
            }
        }
    }
    rep
}

/// `[a,b] + (-1)^{|a||b|} [b,a] = 0` on every basis pair.
pub fn lie_super_report(l: &LeibnizSuperalgebra) -> CheckReport {
    let n = l.dim();
    let mut rep = CheckReport::default();
    for a in 0..n {
        for b in a..n {
            let s = koszul_sign(l.parity(a), l.parity(b));
            let mut r = l.bracket(a, b).clone();
            r.add_scaled(&s, l.bracket(b, a));
            rep.record("antisymmetry", &[a, b], r);
        }
    }
    rep
}

pub fn check_lie_super(l: &LeibnizSuperalgebra) -> bool {
    lie_super_report(l).passed()
}

/// The three module axioms over all index triples, each in its own slot order.
pub fn check_module(m: &LeibnizModule<'_>) -> CheckReport {
    let l = m.algebra();
    let (n, k) = (l.dim(), m.dim());
    let mut rep = CheckReport::default();
    for x in 0..n {
        for y in 0..n {
            let s = koszul_sign(l.parity(x), l.parity(y));
            for p in 0..k {
                let e = SparseVec::unit(p);
                let lhs = m.act_left_vec(l.bracket(x, y), &e);
                let r1 = m.act_left(x, &m.act_left(y, &e));
                let r2 = m.act_left(y, &m.act_left(x, &e));
                rep.record(
                    "SLLM",
                    &[x, y, p],
                    combo(&[(pos(), lhs), (neg(), r1), (s.clone(), r2)]),
                );
            }
        }
    }
    for x in 0..n {
        for p in 0..k {
            let e = SparseVec::unit(p);
            let s = koszul_sign(l.parity(x), m.parity(p));
            let xm = m.act_left(x, &e);
            for y in 0..n {
                let lhs = m.act_right(&xm, y);
                let r1 = m.act_left(x, &m.act_right(&e, y));
                let r2 = m.act_right_vec(&e, l.bracket(x, y));
                rep.record(
                    "SLML",
                    &[x, p, y],
                    combo(&[(pos(), lhs), (neg(), r1), (s.clone(), r2)]),
                );
            }
        }
    }
    for p in 0..k {
        let e = SparseVec::unit(p);
        for x in 0..n {
            let s = koszul_sign(m.parity(p), l.parity(x));
            let mx = m.act_right(&e, x);
            for y in 0..n {
                let lhs = m.act_right(&mx, y);
                let r1 = m.act_right_vec(&e, l.bracket(x, y));
                let r2 = m.act_left(x, &m.act_right(&e, y));
                rep.record(
                    "SMLL",
                    &[p, x, y],
                    combo(&[(pos(), lhs), (neg(), r1), (s.clone(), r2)]),
                );
            }
        }
    }
    rep
}

/// `(ab)c = a(bc)` on every basis triple.
pub fn check_associative(a: &AssociativeSuperalgebra) -> CheckReport {
    let n = a.dim();
    let t = a.table();
    let mut rep = CheckReport::default();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = t.apply_left(a.mul(i, j), k);
                let rhs = t.apply_right(i, a.mul(j, k));
                rep.record("associativity", &[i, j, k], &lhs - &rhs);
            }
        }
    }
    rep
}

/// Span of all brackets of basis pairs.
pub fn derived_subalgebra(l: &LeibnizSuperalgebra) -> Subspace {
    let values: Vec<SparseVec> = l.table().iter().map(|(_, _, v)| v.clone()).collect();
    rref(&values, l.dim()).expect("bracket values are in range")
}

/// `{z : [z, e_j] = 0 = [e_j, z] for all j}`
pub fn center(l: &LeibnizSuperalgebra) -> Subspace {
    let n = l.dim();
    let mut rows = Vec::with_capacity(2 * n * n);
    for j in 0..n {
        let mut left = vec![Vec::new(); n];
        let mut right = vec![Vec::new(); n];
        for z in 0..n {
            for (k, c) in l.bracket(z, j).iter() {
                left[k].push((z, c.clone()));
            }
            for (k, c) in l.bracket(j, z).iter() {
                right[k].push((z, c.clone()));
            }
        }
        rows.extend(
            left.into_iter()
                .chain(right)
                .map(SparseVec::from_entries)
                .filter(|r| !r.is_zero()),
        );
    }
    kernel(&rows, n).expect("indices are in range")
}

/// `([e_i,e_j], e_k) = (e_i, [e_j,e_k])` on every basis triple. Failures
/// carry the scalar defect as a one-entry residual.
pub fn invariant_form_report(l: &LeibnizSuperalgebra, f: &BilinearForm) -> CheckReport {
    let n = l.dim();
    let mut rep = CheckReport::default();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = f.eval(l.bracket(i, j), &SparseVec::unit(k));
                let rhs = f.eval(&SparseVec::unit(i), l.bracket(j, k));
                rep.record("invariance", &[i, j, k], SparseVec::single(0, lhs - rhs));
            }
        }
    }
    rep
}

/// True iff `f` is even, supersymmetric and invariant.
pub fn check_invariant_form(l: &LeibnizSuperalgebra, f: &BilinearForm) -> bool {
    f.dim() == l.dim()
        && f.is_even_supersymmetric(l.basis())
        && invariant_form_report(l, f).passed()
}
