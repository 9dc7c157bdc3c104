//! Kähler differentials of commutative dialgebras.
//!
//! `F` has basis `[i, j] = a_i ⊣ d̃a_j` (index `i * dim + j`) and `d̃x` is
//! `1 ⊣ d̃x`. The four actions of `D` on `F` operate on the first slot:
//! `c ⊣ [a, b] = [c ⊣ a, b]`, `c ⊢ [a, b] = [c ⊢ a, b]`,
//! `[a, b] ⊣ c = [a ⊣ c, b]`, `[a, b] ⊢ c = [a ⊢ c, b]`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graded::{check_dialgebra, CheckReport, SuperDialgebra, Table};
use crate::linalg::{kernel, LinearMap, SparseVec, Subspace};

/// The four ways `D` acts on a bimodule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    /// `c ⊣ m`
    LeftDash,
    /// `c ⊢ m`
    LeftVdash,
    /// `m ⊣ c`
    RightDash,
    /// `m ⊢ c`
    RightVdash,
}

pub const ACTIONS: [Action; 4] = [
    Action::LeftDash,
    Action::LeftVdash,
    Action::RightDash,
    Action::RightVdash,
];

/// A bimodule `M` over a dialgebra `D`. Tables are indexed
/// `(algebra, module)` for left actions and `(module, algebra)` for right
/// actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DialgebraBimodule {
    pub dim: usize,
    pub left_dash: Table,
    pub left_vdash: Table,
    pub right_dash: Table,
    pub right_vdash: Table,
}

impl DialgebraBimodule {
    pub fn regular(d: &SuperDialgebra) -> Self {
        Self {
            dim: d.dim(),
            left_dash: d.left_table().clone(),
            left_vdash: d.right_table().clone(),
            right_dash: d.left_table().clone(),
            right_vdash: d.right_table().clone(),
        }
    }

    pub fn zero(d: &SuperDialgebra, dim: usize) -> Self {
        let n = d.dim();
        Self {
            dim,
            left_dash: Table::zero(n, dim, dim),
            left_vdash: Table::zero(n, dim, dim),
            right_dash: Table::zero(dim, n, dim),
            right_vdash: Table::zero(dim, n, dim),
        }
    }

    /// `D / I` where `I` is the two-sided ideal generated by `gens`.
    pub fn regular_quotient(d: &SuperDialgebra, gens: &[SparseVec]) -> Result<Self> {
        let span = Subspace::from_rows(gens.iter(), d.dim())?;
        let ideal = crate::constructions::ideal_closure(&span, &[d.left_table(), d.right_table()]);
        let keep = ideal.complement_indices();
        let k = keep.len();
        let n = d.dim();
        let q = |v: &SparseVec| ideal.quotient_coordinates(v);
        Ok(Self {
            dim: k,
            left_dash: Table::from_fn(n, k, k, |c, m| q(d.left(c, keep[m])))?,
            left_vdash: Table::from_fn(n, k, k, |c, m| q(d.right(c, keep[m])))?,
            right_dash: Table::from_fn(k, n, k, |m, c| q(d.left(keep[m], c)))?,
            right_vdash: Table::from_fn(k, n, k, |m, c| q(d.right(keep[m], c)))?,
        })
    }

    /// `c ⋆ m` or `m ⋆ c` for basis `c` and vector `m`.
    pub fn act(&self, action: Action, c: usize, m: &SparseVec) -> SparseVec {
        match action {
            Action::LeftDash => self.left_dash.apply_right(c, m),
            Action::LeftVdash => self.left_vdash.apply_right(c, m),
            Action::RightDash => self.right_dash.apply_left(m, c),
            Action::RightVdash => self.right_vdash.apply_left(m, c),
        }
    }

    /// `x ⋆ m` / `m ⋆ x` for an algebra vector `x`.
    pub fn act_vec(&self, action: Action, x: &SparseVec, m: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (c, a) in x.iter() {
            out.add_scaled(a, &self.act(action, c, m));
        }
        out
    }

    /// The dialgebra axioms with one argument in `M`, in every position.
    pub fn check(&self, d: &SuperDialgebra) -> CheckReport {
        // element of D ⊕ M tagged by side
        #[derive(Clone)]
        enum E {
            A(SparseVec),
            M(SparseVec),
        }
        let dl = |x: &E, y: &E| match (x, y) {
            (E::A(a), E::A(b)) => E::A(d.left_vec(a, b)),
            (E::A(a), E::M(m)) => E::M(self.act_vec(Action::LeftDash, a, m)),
            (E::M(m), E::A(a)) => E::M(self.act_vec(Action::RightDash, a, m)),
            (E::M(_), E::M(_)) => unreachable!("one module argument"),
        };
        let dr = |x: &E, y: &E| match (x, y) {
            (E::A(a), E::A(b)) => E::A(d.right_vec(a, b)),
            (E::A(a), E::M(m)) => E::M(self.act_vec(Action::LeftVdash, a, m)),
            (E::M(m), E::A(a)) => E::M(self.act_vec(Action::RightVdash, a, m)),
            (E::M(_), E::M(_)) => unreachable!("one module argument"),
        };
        let unwrap = |e: E| match e {
            E::M(m) => m,
            E::A(_) => unreachable!("one module argument"),
        };
        let mut rep = CheckReport::default();
        let n = d.dim();
        for pos in 0..3 {
            for x in 0..n {
                for y in 0..n {
                    for m in 0..self.dim {
                        let mut args = vec![E::A(SparseVec::unit(x)), E::A(SparseVec::unit(y))];
                        args.insert(pos, E::M(SparseVec::unit(m)));
                        let (a, b, c) = (&args[0], &args[1], &args[2]);
                        let idx = [pos, x, y, m];
                        let ll = unwrap(dl(&dl(a, b), c));
                        let rl = unwrap(dl(&dr(a, b), c));
                        let rr = unwrap(dr(&dr(a, b), c));
                        let lr = unwrap(dr(&dl(a, b), c));
                        let a_l_bc_l = unwrap(dl(a, &dl(b, c)));
                        let a_l_bc_r = unwrap(dl(a, &dr(b, c)));
                        let a_r_bc_l = unwrap(dr(a, &dl(b, c)));
                        let a_r_bc_r = unwrap(dr(a, &dr(b, c)));
                        rep.record("D1", &idx, &a_l_bc_l - &ll);
                        rep.record("D2", &idx, &ll - &a_l_bc_r);
                        rep.record("D3", &idx, &rl - &a_r_bc_l);
                        rep.record("D4", &idx, &rr - &a_r_bc_r);
                        rep.record("D5", &idx, &a_r_bc_r - &lr);
                    }
                }
            }
        }
        rep
    }
}

/// `Ω¹_D = F / N` together with `d: D -> Ω` and the induced actions.
#[derive(Clone, Debug)]
pub struct DifferentialModule {
    dialgebra: SuperDialgebra,
    unit: SparseVec,
    relations: Subspace,
    representatives: Vec<usize>,
    names: Vec<String>,
}

impl DifferentialModule {
    pub fn dialgebra(&self) -> &SuperDialgebra {
        &self.dialgebra
    }

    /// `dim F = dim(D)²`
    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    /// The relation submodule `N ⊆ F`.
    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Indices in `F` of the coset representatives.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn n(&self) -> usize {
        self.dialgebra.dim()
    }

    /// `[a, b]` in `F` for vectors `a`, `b` of `D`.
    pub fn free_element(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let n = self.n();
        let mut out = Vec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.push((i * n + j, x * y));
            }
        }
        SparseVec::from_entries(out)
    }

    /// Class in `Ω` of an element of `F`.
    pub fn class(&self, f: &SparseVec) -> SparseVec {
        self.relations.quotient_coordinates(f)
    }

    /// Lift of an `Ω` vector to `F` through the representatives.
    pub fn lift(&self, w: &SparseVec) -> SparseVec {
        w.remap(|k| self.representatives[k])
    }

    /// `da`
    pub fn differential(&self, a: &SparseVec) -> SparseVec {
        self.class(&self.free_element(&self.unit, a))
    }

    /// `{a, b} = b ⊣ da`
    pub fn pairing(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.class(&self.free_element(b, a))
    }

    /// Action on `F` through the first slot.
    fn act_free(&self, action: Action, c: usize, f: &SparseVec) -> SparseVec {
        let n = self.n();
        let d = &self.dialgebra;
        let mut out = SparseVec::zero();
        for (k, x) in f.iter() {
            let (a, b) = (k / n, k % n);
            let first = match action {
                Action::LeftDash => d.left(c, a),
                Action::LeftVdash => d.right(c, a),
                Action::RightDash => d.left(a, c),
                Action::RightVdash => d.right(a, c),
            };
            for (i, y) in first.iter() {
                out.add_scaled(&(x * y), &SparseVec::unit(i * n + b));
            }
        }
        out
    }

    /// Induced action of basis `c` on a class in `Ω`.
    pub fn act(&self, action: Action, c: usize, w: &SparseVec) -> SparseVec {
        self.class(&self.act_free(action, c, &self.lift(w)))
    }

    /// `Ω` as a bimodule over `D`.
    pub fn as_bimodule(&self) -> DialgebraBimodule {
        let (n, k) = (self.n(), self.dim());
        let left = |a: Action| {
            Table::from_fn(n, k, k, |c, m| self.act(a, c, &SparseVec::unit(m))).expect("in range")
        };
        let right = |a: Action| {
            Table::from_fn(k, n, k, |m, c| self.act(a, c, &SparseVec::unit(m))).expect("in range")
        };
        DialgebraBimodule {
            dim: k,
            left_dash: left(Action::LeftDash),
            left_vdash: left(Action::LeftVdash),
            right_dash: right(Action::RightDash),
            right_vdash: right(Action::RightVdash),
        }
    }

    /// `d` as a linear map `D -> Ω`.
    pub fn differential_map(&self) -> LinearMap {
        let cols = (0..self.n())
            .map(|a| self.differential(&SparseVec::unit(a)))
            .collect();
        LinearMap::from_columns(cols, self.dim()).expect("in range")
    }

    /// `d(a ⋆ b) = (da) ⋆ b + a ⋆ (db)` for both products on all basis pairs.
    pub fn check_leibniz_rule(&self) -> CheckReport {
        let n = self.n();
        let d = &self.dialgebra;
        let mut rep = CheckReport::default();
        for a in 0..n {
            let da = self.differential(&SparseVec::unit(a));
            for b in 0..n {
                let db = self.differential(&SparseVec::unit(b));
                let l = &self.act(Action::RightDash, b, &da) + &self.act(Action::LeftDash, a, &db);
                rep.record("d-left", &[a, b], &self.differential(d.left(a, b)) - &l);
                let r =
                    &self.act(Action::RightVdash, b, &da) + &self.act(Action::LeftVdash, a, &db);
                rep.record("d-right", &[a, b], &self.differential(d.right(a, b)) - &r);
            }
        }
        rep
    }

    /// `b ⊣ da = da ⊢ b` and `b ⊢ da = da ⊣ b` on all basis pairs.
    pub fn check_symmetry(&self) -> CheckReport {
        let n = self.n();
        let mut rep = CheckReport::default();
        for a in 0..n {
            let da = self.differential(&SparseVec::unit(a));
            for b in 0..n {
                rep.record(
                    "dash-vdash",
                    &[a, b],
                    &self.act(Action::LeftDash, b, &da) - &self.act(Action::RightVdash, b, &da),
                );
                rep.record(
                    "vdash-dash",
                    &[a, b],
                    &self.act(Action::LeftVdash, b, &da) - &self.act(Action::RightDash, b, &da),
                );
            }
        }
        rep
    }

    /// The map `Ω -> Ω` induced by a unit-preserving dialgebra automorphism.
    pub fn pushforward(&self, theta: &LinearMap) -> Result<LinearMap> {
        let d = &self.dialgebra;
        let n = self.n();
        if theta.dim_in() != n || theta.dim_out() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: theta.dim_in(),
            });
        }
        for a in 0..n {
            for b in 0..n {
                let t = |v: &SparseVec| theta.apply(v);
                if t(d.left(a, b)) != d.left_vec(theta.column(a), theta.column(b))
                    || t(d.right(a, b)) != d.right_vec(theta.column(a), theta.column(b))
                {
                    return Err(Error::NotAnAutomorphism(
                        "does not preserve the products".into(),
                    ));
                }
            }
        }
        if theta.apply(&self.unit) != self.unit {
            return Err(Error::NotAnAutomorphism("does not fix the bar-unit".into()));
        }
        let cols = self
            .representatives
            .iter()
            .map(|r| self.class(&self.free_element(theta.column(r / n), theta.column(r % n))))
            .collect();
        LinearMap::from_columns(cols, self.dim())
    }
}

/// `Ω¹_D = F / N` for a commutative dialgebra with bar-unit.
pub fn omega(d: &SuperDialgebra) -> Result<DifferentialModule> {
    if !check_dialgebra(d).passed() {
        return Err(Error::AxiomFailure {
            structure: "dialgebra".into(),
            axiom: "D".into(),
            failures: check_dialgebra(d).failures.len(),
        });
    }
    if !d.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let unit = match d.bar_unit() {
        Some(u) => u.clone(),
        None => d.find_bar_unit().ok_or(Error::NoBarUnit)?,
    };
    let n = d.dim();
    let mut dm = DifferentialModule {
        dialgebra: d.clone(),
        unit,
        relations: Subspace::zero(n * n),
        representatives: Vec::new(),
        names: Vec::new(),
    };
    let e = SparseVec::unit;
    let mut gens = Vec::new();
    for a in 0..n {
        for b in 0..n {
            // d̃(a ⊣ b) - (1 ⊣ b) ⊣ d̃a - (a ⊣ 1) ⊣ d̃b
            let mut r = dm.free_element(&dm.unit, d.left(a, b));
            r.add_scaled(
                &-crate::linalg::one(),
                &dm.free_element(&d.left_vec(&dm.unit, &e(b)), &e(a)),
            );
            r.add_scaled(
                &-crate::linalg::one(),
                &dm.free_element(&d.left_vec(&e(a), &dm.unit), &e(b)),
            );
            gens.push(r);
            // d̃(a ⊢ b) - (1 ⊢ b) ⊣ d̃a - (a ⊢ 1) ⊣ d̃b
            let mut r = dm.free_element(&dm.unit, d.right(a, b));
            r.add_scaled(
                &-crate::linalg::one(),
                &dm.free_element(&d.right_vec(&dm.unit, &e(b)), &e(a)),
            );
            r.add_scaled(
                &-crate::linalg::one(),
                &dm.free_element(&d.right_vec(&e(a), &dm.unit), &e(b)),
            );
            gens.push(r);
        }
    }
    // close under the four actions
    let mut relations = Subspace::zero(n * n);
    let mut queue: VecDeque<SparseVec> = VecDeque::new();
    for g in gens {
        if relations.insert(&g)? {
            queue.push_back(g);
        }
    }
    while let Some(v) = queue.pop_front() {
        for action in ACTIONS {
            for c in 0..n {
                let w = dm.act_free(action, c, &v);
                if relations.insert(&w)? {
                    queue.push_back(w);
                }
            }
        }
    }
    let reps = relations.complement_indices();
    let unit_index = match dm.unit.leading() {
        Some((i, c)) if dm.unit.nnz() == 1 && *c == crate::linalg::one() => Some(i),
        _ => None,
    };
    let names = reps
        .iter()
        .map(|r| {
            let (i, j) = (r / n, r % n);
            if Some(i) == unit_index {
                format!("d{}", d.basis().name(j))
            } else {
                format!("{}·d{}", d.basis().name(i), d.basis().name(j))
            }
        })
        .collect();
    dm.relations = relations;
    dm.representatives = reps;
    dm.names = names;
    Ok(dm)
}

/// `Ω / dD` and its dimension.
#[derive(Clone, Debug)]
pub struct OmegaModD {
    pub exact: Subspace,
    pub dim: usize,
}

pub fn omega_mod_d(dm: &DifferentialModule) -> OmegaModD {
    let exact = dm.differential_map().image();
    OmegaModD {
        dim: dm.dim() - exact.dim(),
        exact,
    }
}

/// Both sides of `Der(D, M) ≅ Hom_D(Ω, M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalProperty {
    pub der_dim: usize,
    pub hom_dim: usize,
    /// `g ↦ g ∘ d` sends `Hom_D(Ω, M)` injectively into `Der(D, M)`.
    pub composition_injective: bool,
    pub holds: bool,
}

/// Solves the derivation condition and the module-map conditions
/// independently and compares.
pub fn check_universal_property(
    dm: &DifferentialModule,
    m: &DialgebraBimodule,
) -> UniversalProperty {
    let d = dm.dialgebra();
    let (n, k, w) = (d.dim(), m.dim, dm.dim());
    // derivations δ: D -> M, unknown δ(e_a)_p at a * k + p
    let mut rows = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for (prod, right_on_a, left_on_b) in [
                (d.left(a, b), Action::RightDash, Action::LeftDash),
                (d.right(a, b), Action::RightVdash, Action::LeftVdash),
            ] {
                // δ(a ⋆ b) - δ(a) ⋆ b - a ⋆ δ(b), coordinate q
                let mut per_q: Vec<Vec<(usize, crate::linalg::Scalar)>> = vec![Vec::new(); k];
                for (c, x) in prod.iter() {
                    for (q, row) in per_q.iter_mut().enumerate() {
                        row.push((c * k + q, x.clone()));
                    }
                }
                for p in 0..k {
                    for (q, y) in m.act(right_on_a, b, &SparseVec::unit(p)).iter() {
                        per_q[q].push((a * k + p, -y.clone()));
                    }
                    for (q, y) in m.act(left_on_b, a, &SparseVec::unit(p)).iter() {
                        per_q[q].push((b * k + p, -y.clone()));
                    }
                }
                rows.extend(per_q.into_iter().map(SparseVec::from_entries));
            }
        }
    }
    let der = kernel(&rows, n * k).expect("in range");
    // module maps φ: Ω -> M, unknown φ(ω_r)_p at r * k + p
    let mut rows = Vec::new();
    for action in ACTIONS {
        for c in 0..n {
            for r in 0..w {
                // φ(c ⋆ ω_r) - c ⋆ φ(ω_r)
                let mut per_q: Vec<Vec<(usize, crate::linalg::Scalar)>> = vec![Vec::new(); k];
                for (s, x) in dm.act(action, c, &SparseVec::unit(r)).iter() {
                    for (q, row) in per_q.iter_mut().enumerate() {
                        row.push((s * k + q, x.clone()));
                    }
                }
                for p in 0..k {
                    for (q, y) in m.act(action, c, &SparseVec::unit(p)).iter() {
                        per_q[q].push((r * k + p, -y.clone()));
                    }
                }
                rows.extend(per_q.into_iter().map(SparseVec::from_entries));
            }
        }
    }
    let hom = kernel(&rows, w * k).expect("in range");
    // g ↦ g ∘ d in coordinates: (g∘d)(e_a)_p = Σ_r d(e_a)_r g_{r,p}
    let dmap = dm.differential_map();
    let compose = |g: &SparseVec| {
        let mut out = Vec::new();
        for a in 0..n {
            for (r, x) in dmap.column(a).iter() {
                for p in 0..k {
                    if let Some(y) = g.get(r * k + p) {
                        out.push((a * k + p, x * y));
                    }
                }
            }
        }
        SparseVec::from_entries(out)
    };
    let images: Vec<SparseVec> = hom.basis().iter().map(compose).collect();
    let injective = crate::linalg::rref(&images, n * k).expect("in range").dim() == hom.dim()
        && images.iter().all(|v| der.contains(v));
    UniversalProperty {
        der_dim: der.dim(),
        hom_dim: hom.dim(),
        composition_injective: injective,
        holds: der.dim() == hom.dim() && injective,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{AssociativeSuperalgebra, GradedBasis};
    use crate::linalg::int;

    fn trunc(n: usize) -> SuperDialgebra {
        let names: Vec<String> = (0..n)
            .map(|i| if i == 0 { "1".into() } else { format!("t{i}") })
            .collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        AssociativeSuperalgebra::from_fn(GradedBasis::even(&refs).unwrap(), |i, j| {
            if i + j < n {
                SparseVec::unit(i + j)
            } else {
                SparseVec::zero()
            }
        })
        .unwrap()
        .with_unit(SparseVec::unit(0))
        .unwrap()
        .as_dialgebra()
    }

    #[test]
    fn truncated_polynomial_dimensions() {
        for n in 1..=5 {
            let dm = omega(&trunc(n)).unwrap();
            assert_eq!(dm.dim(), n - 1);
            assert_eq!(omega_mod_d(&dm).dim, 0);
            assert_eq!(dm.ambient_dim() - dm.relations().dim(), dm.dim());
        }
    }

    #[test]
    fn t_squared_differential() {
        let dm = omega(&trunc(3)).unwrap();
        assert_eq!(dm.names(), ["dt1", "t1·dt1"]);
        let dt2 = dm.differential(&SparseVec::unit(2));
        assert_eq!(dt2, SparseVec::single(1, int(2)));
        assert!(dm.differential(&SparseVec::unit(0)).is_zero());
        assert!(dm.check_leibniz_rule().passed());
        assert!(dm.check_symmetry().passed());
    }

    #[test]
    fn universal_property_small() {
        let d = trunc(3);
        let dm = omega(&d).unwrap();
        let up = check_universal_property(&dm, &DialgebraBimodule::regular(&d));
        assert_eq!((up.der_dim, up.hom_dim), (2, 2));
        assert!(up.holds);
        let zero = check_universal_property(&dm, &DialgebraBimodule::zero(&d, 2));
        assert_eq!((zero.der_dim, zero.hom_dim), (0, 0));
        assert!(check_universal_property(&dm, &dm.as_bimodule()).holds);
    }

    #[test]
    fn bimodules_satisfy_axioms() {
        let d = trunc(3);
        let dm = omega(&d).unwrap();
        assert!(DialgebraBimodule::regular(&d).check(&d).passed());
        assert!(dm.as_bimodule().check(&d).passed());
        let q = DialgebraBimodule::regular_quotient(&d, &[SparseVec::unit(2)]).unwrap();
        assert_eq!(q.dim, 2);
        assert!(q.check(&d).passed());
    }
}
