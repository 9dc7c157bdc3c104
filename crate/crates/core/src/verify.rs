//! The acceptance suite as library functions, shared by the `verify-paper`
//! command and the `acceptance` test target.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::{
    loop_extension, osp12, poly_euler_derivation, poly_scaling, sl2, trunc_poly, verify_52,
    verify_osp_loop_relations,
};
use crate::cohomology::{check_d_squared, skew_hl2_dim, z2_b2};
use crate::constructions::{
    check_stl_relations, current_algebra, dialgebra_to_leibniz, free_leibniz_super,
    free_super_dialgebra, gl_leibniz, matrix_dialgebra, random::random_leibniz_superalgebra,
    tensor_dialgebra,
};
use crate::differentials::{check_universal_property, omega, omega_mod_d, DialgebraBimodule};
use crate::error::Result;
use crate::graded::{
    center, check_grading, check_invariant_form, check_leibniz, check_lie_super, BilinearForm,
    LeibnizModule, LeibnizSuperalgebra, Parity,
};
use crate::linalg::{int, LinearMap, SparseVec};
use crate::uce::{check_universality, is_perfect, lift_automorphism, lift_derivation, uce};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

struct Log {
    passed: bool,
    details: Vec<String>,
}

impl Log {
    fn new() -> Self {
        Self {
            passed: true,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        self.details
            .push(format!("{} {what}", if ok { "ok  " } else { "FAIL" }));
        self.passed &= ok;
    }

    fn result(&mut self, r: Result<bool>, what: impl Into<String>) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => self.check(false, format!("{}: {e}", what.into())),
        }
    }

    fn finish(self, id: usize, name: &'static str) -> Criterion {
        Criterion {
            id,
            name,
            passed: self.passed,
            details: self.details,
        }
    }
}

/// The `(g, N)` pairs used for second cohomology and UCE comparisons.
pub fn test_pairs() -> Vec<(&'static str, LeibnizSuperalgebra, BilinearForm, usize)> {
    let (s, sf) = sl2();
    let (o, of) = osp12();
    vec![
        ("sl2", s.clone(), sf.clone(), 2),
        ("sl2", s, sf, 3),
        ("osp12", o, of, 2),
    ]
}

/// `dim Ω` of `ℚ[t]/(t^N)` from the free module on the symbols `t^c dt^k`
/// modulo `t^c d(t^i t^j) = t^{c+i} dt^j + t^{c+j} dt^i`.
pub fn omega_dim_oracle(n: usize) -> usize {
    let sym = |c: usize, k: usize| (c < n && k < n).then_some(c * n + k);
    let mut rows = Vec::new();
    for c in 0..n {
        for i in 0..n {
            for j in 0..n {
                let mut r = SparseVec::zero();
                if let Some(x) = sym(c, i + j) {
                    r.add_scaled(&int(1), &SparseVec::unit(x));
                }
                for (u, v) in [(c + i, j), (c + j, i)] {
                    if let Some(x) = sym(u, v) {
                        r.add_scaled(&int(-1), &SparseVec::unit(x));
                    }
                }
                rows.push(r);
            }
        }
    }
    n * n - crate::linalg::rref(&rows, n * n).expect("in range").dim()
}

pub fn criterion_1() -> Criterion {
    let mut log = Log::new();
    let (l, form) = osp12();
    log.check(check_leibniz(&l).passed(), "osp(1,2) Leibniz identity");
    log.check(check_lie_super(&l), "osp(1,2) super antisymmetry");
    log.check(check_grading(&l).passed(), "osp(1,2) grading");
    log.check(check_invariant_form(&l, &form), "osp(1,2) form invariant");
    log.check(
        form.is_even_supersymmetric(l.basis()),
        "osp(1,2) form even supersymmetric",
    );
    log.finish(1, "osp(1,2) integrity")
}

pub fn criterion_2() -> Criterion {
    let mut log = Log::new();
    let (o, _) = osp12();
    let (s, _) = sl2();
    let current =
        current_algebra(&s, &trunc_poly(2).expect("N >= 1")).expect("valid current algebra");
    for n in 0..=2 {
        log.check(
            check_d_squared(&LeibnizModule::adjoint(&o), n),
            format!("osp(1,2) adjoint, n = {n}"),
        );
        log.check(
            check_d_squared(&LeibnizModule::trivial_even(&o, 1), n),
            format!("osp(1,2) trivial, n = {n}"),
        );
        log.check(
            check_d_squared(&LeibnizModule::trivial_even(&current, 1), n),
            format!("sl2⊗Q[t]/(t^2) trivial, n = {n}"),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut ok = 0;
    for _ in 0..20 {
        let l = random_leibniz_superalgebra(&mut rng);
        if (0..=2).all(|n| {
            check_d_squared(&LeibnizModule::adjoint(&l), n)
                && check_d_squared(&LeibnizModule::trivial_even(&l, 1), n)
        }) {
            ok += 1;
        }
    }
    log.check(ok == 20, format!("random Leibniz superalgebras: {ok}/20"));
    log.finish(2, "d² = 0")
}

pub fn criterion_3() -> Criterion {
    let mut log = Log::new();
    for n in 2..=6 {
        let d = trunc_poly(n).expect("N >= 1");
        log.result(
            omega(&d).map(|om| {
                let q = omega_mod_d(&om).dim;
                om.dim() == n - 1 && om.dim() == omega_dim_oracle(n) && q == 0
            }),
            format!("N = {n}: dim Ω = {}, dim Ω/dD = 0", n - 1),
        );
    }
    let t2 = trunc_poly(2).expect("N >= 1");
    let t3 = trunc_poly(3).expect("N >= 1");
    let tt = tensor_dialgebra(&t2, &t2).expect("dialgebras");
    for (name, d) in [
        ("Q[t]/(t^2)", t2.clone()),
        ("Q[t]/(t^3)", t3),
        ("Q[t]/(t^2)⊗Q[s]/(s^2)", tt),
    ] {
        let om = match omega(&d) {
            Ok(om) => om,
            Err(e) => {
                log.check(false, format!("{name}: {e}"));
                continue;
            }
        };
        let top = SparseVec::unit(d.dim() - 1);
        let mut modules = vec![
            ("regular", DialgebraBimodule::regular(&d)),
            ("zero", DialgebraBimodule::zero(&d, 1)),
            ("Ω", om.as_bimodule()),
        ];
        if let Ok(q) = DialgebraBimodule::regular_quotient(&d, &[top]) {
            modules.push(("quotient", q));
        }
        for (mname, m) in modules {
            let up = check_universal_property(&om, &m);
            log.check(
                up.holds,
                format!(
                    "{name}, M = {mname}: dim Der = {}, dim Hom = {}",
                    up.der_dim, up.hom_dim
                ),
            );
        }
    }
    log.finish(3, "Kähler differentials")
}

pub fn criterion_4() -> Criterion {
    let mut log = Log::new();
    for (g, l, _, n) in test_pairs() {
        let d = trunc_poly(n).expect("N >= 1");
        let r = current_algebra(&l, &d).and_then(|cur| {
            let hl2 = z2_b2(&cur, 1).hl2_dim;
            let om = omega(&d)?.dim();
            Ok((hl2, om))
        });
        match r {
            Ok((hl2, om)) => log.check(
                hl2 == n - 1 && hl2 == om,
                format!("{g}⊗Q[t]/(t^{n}): HL² = {hl2}, dim Ω = {om}"),
            ),
            Err(e) => log.check(false, format!("{g}⊗Q[t]/(t^{n}): {e}")),
        }
    }
    log.finish(4, "HL² of current algebras")
}

pub fn criterion_5() -> Criterion {
    let mut log = Log::new();
    for (g, l, form, n) in test_pairs() {
        let d = trunc_poly(n).expect("N >= 1");
        let r = (|| {
            let le = loop_extension(&l, &form, &d)?;
            let u = uce(&le.current)?;
            let f = check_universality(&u, &le.extension)?;
            Ok::<_, crate::Error>((
                u.kernel_dim(),
                le.omega.dim(),
                f.unique,
                f.gamma.is_bijective(),
            ))
        })();
        match r {
            Ok((k, om, unique, bij)) => log.check(
                k == om && unique && bij,
                format!(
                    "{g}⊗Q[t]/(t^{n}): kernel {k}, dim Ω {om}, γ unique {unique}, bijective {bij}"
                ),
            ),
            Err(e) => log.check(false, format!("{g}⊗Q[t]/(t^{n}): {e}")),
        }
    }
    log.finish(5, "universal central extension")
}

pub fn criterion_6() -> Criterion {
    let mut log = Log::new();
    for (g, l, _, n) in test_pairs() {
        let d = trunc_poly(n).expect("N >= 1");
        let r = (|| {
            let cur = current_algebra(&l, &d)?;
            let om = omega(&d)?;
            Ok::<_, crate::Error>((
                skew_hl2_dim(&cur, 1),
                omega_mod_d(&om).dim,
                z2_b2(&cur, 1).hl2_dim,
            ))
        })();
        match r {
            Ok((skew, q, full)) => log.check(
                skew == 0 && q == 0 && full == n - 1,
                format!("{g}⊗Q[t]/(t^{n}): skew part {skew}, dim Ω/dD {q}, HL² {full}"),
            ),
            Err(e) => log.check(false, format!("{g}⊗Q[t]/(t^{n}): {e}")),
        }
    }
    log.finish(6, "Leibniz versus Lie second cohomology")
}

pub fn criterion_7() -> Criterion {
    let mut log = Log::new();
    let (s, form) = sl2();
    let n = 3;
    let r = (|| {
        let d = trunc_poly(n)?;
        let le = loop_extension(&s, &form, &d)?;
        let l = &le.current;
        let u = uce(l)?;
        let total = u.total();
        let central = u.extension.kernel.is_subspace_of(&center(total));
        log.check(
            is_perfect(total) && central,
            format!("L̂ perfect, kernel of dim {} central", u.kernel_dim()),
        );
        // ad z lifts to ad of any preimage
        let mut ad_ok = true;
        for z in 0..l.dim() {
            let lifted = lift_derivation(&u, &l.ad(&SparseVec::unit(z)), l.parity(z))?;
            let pre = u.extension.projection.preimage(&SparseVec::unit(z))?;
            ad_ok &= lifted == total.ad(&pre);
        }
        log.check(ad_ok, "ad z lifts to ad of a preimage for every basis z");
        let euler = lift_derivation(&u, &poly_euler_derivation(s.dim(), n), Parity::Even)?;
        log.check(
            crate::cohomology::is_derivation(total, &euler, Parity::Even),
            "t∂t lifts to a derivation of L̂",
        );
        let theta = poly_scaling(s.dim(), n, &int(2));
        let lifted = lift_automorphism(&u, &theta)?;
        // compare with θ ⊕ (induced map on Ω) on the loop algebra through γ
        let gamma = check_universality(&u, &le.extension)?.gamma;
        let theta_d = LinearMap::from_columns(
            (0..n).map(|k| SparseVec::single(k, int(1 << k))).collect(),
            n,
        )?;
        let on_omega = le.omega.pushforward(&theta_d)?;
        let base = le.loop_algebra.base_dim;
        let mut cols: Vec<SparseVec> = (0..base).map(|i| theta.column(i).clone()).collect();
        cols.extend((0..on_omega.dim_in()).map(|i| on_omega.column(i).shifted(base)));
        let theta_loop = LinearMap::from_columns(cols, le.loop_algebra.algebra.dim())?;
        log.check(
            gamma.compose(&lifted)? == theta_loop.compose(&gamma)?,
            "t ↦ 2t lift acts on the kernel as the induced map on Ω",
        );
        let id = lift_automorphism(&u, &LinearMap::identity(l.dim()))?;
        log.check(
            id == LinearMap::identity(total.dim()),
            "identity lifts to identity",
        );
        Ok::<_, crate::Error>(())
    })();
    if let Err(e) = r {
        log.check(false, format!("sl2⊗Q[t]/(t^3): {e}"));
    }
    log.finish(7, "lifting derivations and automorphisms")
}

pub fn criterion_8() -> Criterion {
    let mut log = Log::new();
    for n in [1, 2] {
        let d = trunc_poly(n).expect("N >= 1");
        let r = (|| {
            let gl = gl_leibniz(2, 1, &d)?;
            let via = dialgebra_to_leibniz(&matrix_dialgebra(2, 1, &d)?)?;
            Ok::<_, crate::Error>((
                gl.table() == via.table(),
                check_lie_super(&gl),
                check_stl_relations(2, 1, &d)?.passed(),
            ))
        })();
        match r {
            Ok((eq, lie, stl)) => {
                log.check(eq, format!("gl(2,1,Q[t]/(t^{n})) tables agree"));
                log.check(lie, format!("gl(2,1,Q[t]/(t^{n})) is a Lie superalgebra"));
                log.check(stl, format!("Steinberg relations over Q[t]/(t^{n})"));
            }
            Err(e) => log.check(false, format!("Q[t]/(t^{n}): {e}")),
        }
    }
    log.finish(8, "functor coherence")
}

pub fn criterion_9() -> Criterion {
    let mut log = Log::new();
    let parities = [Parity::Even, Parity::Odd];
    match free_leibniz_super(&parities, 4) {
        Ok(f) => {
            let rep = f.check();
            log.check(
                rep.passed(),
                format!(
                    "free Leibniz (1|1), degree 4: {} checked, {} skipped",
                    rep.checked, rep.skipped
                ),
            );
        }
        Err(e) => log.check(false, format!("free Leibniz: {e}")),
    }
    match free_super_dialgebra(&parities, 4) {
        Ok(f) => {
            let rep = f.check();
            log.check(
                rep.passed(),
                format!(
                    "free dialgebra (1|1), degree 4: {} checked, {} skipped",
                    rep.checked, rep.skipped
                ),
            );
        }
        Err(e) => log.check(false, format!("free dialgebra: {e}")),
    }
    log.finish(9, "free objects")
}

pub fn criterion_10() -> Criterion {
    let mut log = Log::new();
    for n in 1..=4 {
        let d = trunc_poly(n).expect("N >= 1");
        log.result(
            verify_52(&d).map(|r| r.passed()),
            format!("pairing identity, N = {n}"),
        );
        log.result(
            verify_osp_loop_relations(&d).map(|r| r.passed()),
            format!("F1–F6, N = {n}"),
        );
    }
    log.finish(10, "osp(1,2) loop relations")
}

pub fn run_all() -> Vec<Criterion> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_small_cases() {
        assert_eq!(omega_dim_oracle(1), 0);
        assert_eq!(omega_dim_oracle(2), 1);
        assert_eq!(omega_dim_oracle(5), 4);
    }
}
