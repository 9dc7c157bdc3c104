//! Universal central extensions: `W = L⊗L / I`, `L_w = L ⊕ W`,
//! `L̂ = [L_w, L_w]` and the kernel `C = W ∩ L̂`.

use crate::cohomology::{is_derivation, CentralExtension, Cochain};
use crate::error::{Error, Result};
use crate::graded::{
    check_leibniz, derived_subalgebra, koszul_sign, GradedBasis, LeibnizSuperalgebra, Parity,
};
use crate::linalg::{solve, LinearMap, SparseVec, Subspace};

#[derive(Clone, Debug)]
pub struct UceResult {
    pub base: LeibnizSuperalgebra,
    pub extension: CentralExtension,
    pub w_dim: usize,
    /// `w(x, y)` in `W` coordinates.
    pub universal_cocycle: Cochain,
    /// `I ⊆ L⊗L`, pairs `(x, y)` at `x·dim L + y`.
    pub relations: Subspace,
    /// `L_w`, with `W` after the `L` coordinates.
    pub l_w: LeibnizSuperalgebra,
    /// `L̂` inside `L_w`; row `i` is basis vector `i` of `extension.total`.
    pub hat: Subspace,
}

impl UceResult {
    pub fn kernel_dim(&self) -> usize {
        self.extension.kernel.dim()
    }

    pub fn total(&self) -> &LeibnizSuperalgebra {
        &self.extension.total
    }

    /// Class of `v ∈ L⊗L` in `W`.
    pub fn w_class(&self, v: &SparseVec) -> SparseVec {
        self.relations.quotient_coordinates(v)
    }

    /// Coordinates in `L̂` of an element of `L_w`.
    fn hat_coordinates(&self, v: &SparseVec) -> Result<SparseVec> {
        self.hat.coordinates(v).ok_or(Error::NotASubspace)
    }

    /// `L̂` basis vectors embedded in `L_w`.
    fn hat_rows(&self) -> &[SparseVec] {
        self.hat.basis()
    }
}

pub fn is_perfect(l: &LeibnizSuperalgebra) -> bool {
    derived_subalgebra(l).dim() == l.dim()
}

/// `[a,b]⊗c - a⊗[b,c] + (-1)^{|a||b|} b⊗[a,c]` for all basis triples.
fn relation_span(l: &LeibnizSuperalgebra) -> Subspace {
    let d = l.dim();
    let mut s = Subspace::zero(d * d);
    for a in 0..d {
        for b in 0..d {
            let sign = koszul_sign(l.parity(a), l.parity(b));
            for c in 0..d {
                let mut r = SparseVec::zero();
                for (k, e) in l.bracket(a, b).iter() {
                    r.add_scaled(e, &SparseVec::unit(k * d + c));
                }
                for (k, e) in l.bracket(b, c).iter() {
                    r.add_scaled(&-e, &SparseVec::unit(a * d + k));
                }
                for (k, e) in l.bracket(a, c).iter() {
                    r.add_scaled(&(e * &sign), &SparseVec::unit(b * d + k));
                }
                if !r.is_zero() {
                    s.insert(&r).expect("in range");
                }
            }
        }
    }
    s
}

fn tensor_vec(d: usize, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(x.nnz() * y.nnz());
    for (i, a) in x.iter() {
        for (j, b) in y.iter() {
            out.push((i * d + j, a * b));
        }
    }
    SparseVec::from_entries(out)
}

pub fn uce(l: &LeibnizSuperalgebra) -> Result<UceResult> {
    if !is_perfect(l) {
        return Err(Error::NotPerfect);
    }
    let d = l.dim();
    let relations = relation_span(l);
    let keep = relations.complement_indices();
    let w_dim = keep.len();
    let w_basis = GradedBasis::new(keep.iter().map(|j| {
        let (a, b) = (j / d, j % d);
        (
            format!("w({},{})", l.basis().name(a), l.basis().name(b)),
            l.parity(a) + l.parity(b),
        )
    }))?;
    let mut universal_cocycle = Cochain::zero(2, Parity::Even);
    for t in 0..d * d {
        universal_cocycle.set(t, relations.quotient_coordinates(&SparseVec::unit(t)));
    }
    let l_w =
        LeibnizSuperalgebra::from_fn(l.basis().concat(&w_basis, |s| s.to_string())?, |i, j| {
            if i >= d || j >= d {
                return SparseVec::zero();
            }
            let mut v = l.bracket(i, j).clone();
            if let Some(w) = universal_cocycle.get(i * d + j) {
                v.add_scaled(&crate::linalg::one(), &w.shifted(d));
            }
            v
        })?;
    let hat = derived_subalgebra(&l_w);
    let names: Vec<String> = hat
        .pivots()
        .iter()
        .map(|p| {
            if *p < d {
                format!("{}^", l_w.basis().name(*p))
            } else {
                l_w.basis().name(*p).to_string()
            }
        })
        .collect();
    let total = l_w.subalgebra(&hat, names)?;
    crate::constructions::require(check_leibniz(&total), "universal central extension")?;
    let n = total.dim();
    let cols = hat.basis().iter().map(|r| r.filtered(|k| k < d)).collect();
    let projection = LinearMap::from_columns(cols, d)?;
    let kernel_rows: Vec<SparseVec> = hat
        .pivots()
        .iter()
        .enumerate()
        .filter(|(_, p)| **p >= d)
        .map(|(i, _)| SparseVec::unit(i))
        .collect();
    let kernel = Subspace::from_rows(&kernel_rows, n)?;
    let extension = CentralExtension {
        total,
        projection,
        kernel,
        cocycle: None,
    };
    extension.verify(l)?;
    if !is_perfect(&extension.total) {
        return Err(Error::NotPerfect);
    }
    Ok(UceResult {
        base: l.clone(),
        extension,
        w_dim,
        universal_cocycle,
        relations,
        l_w,
        hat,
    })
}

/// A factorization `γ: L̂ -> E` with `β ∘ γ = α`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub gamma: LinearMap,
    pub unique: bool,
}

/// Solves for the bracket homomorphism `γ = s∘α + c`, where `s` is a linear
/// section of `β` and `c` takes values in `ker β`.
pub fn check_universality(u: &UceResult, e: &CentralExtension) -> Result<Factorization> {
    let base = &u.base;
    e.verify(base)?;
    let hat = &u.extension.total;
    let alpha = &u.extension.projection;
    let beta = &e.projection;
    let t = &e.total;
    let section_cols = (0..base.dim())
        .map(|i| beta.preimage(&SparseVec::unit(i)))
        .collect::<Result<Vec<_>>>()?;
    let section = LinearMap::from_columns(section_cols, t.dim())?;
    let g0 = section.compose(alpha)?;
    let n = hat.dim();
    let z = &e.kernel;
    let k = z.dim();
    // unknown c(e_m) = Σ_j c_{m,j} z_j at m * k + j
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let mut r = t.bracket_vec(g0.column(x), g0.column(y));
            r.add_scaled(&-crate::linalg::one(), &g0.apply(hat.bracket(x, y)));
            let coords = z.coordinates(&r).ok_or(Error::NoFactorization)?;
            for j in 0..k {
                rows.push(SparseVec::from_entries(
                    hat.bracket(x, y)
                        .iter()
                        .map(|(m, c)| (m * k + j, c.clone())),
                ));
                rhs.push(coords.coeff(j));
            }
        }
    }
    let sol = if k == 0 {
        SparseVec::zero()
    } else {
        solve(&rows, n * k, &SparseVec::from_dense(&rhs)).map_err(|_| Error::NoFactorization)?
    };
    let unique = k == 0 || crate::linalg::rref(&rows, n * k)?.dim() == n * k;
    let cols = (0..n)
        .map(|m| {
            let mut v = g0.column(m).clone();
            let c: SparseVec = (0..k)
                .map(|j| (j, sol.coeff(m * k + j)))
                .filter(|(_, c)| *c != crate::linalg::zero())
                .collect();
            v.add_scaled(&crate::linalg::one(), &z.combine(&c));
            v
        })
        .collect();
    let gamma = LinearMap::from_columns(cols, t.dim())?;
    if beta.compose(&gamma)? != *alpha || !is_homomorphism(hat, t, &gamma) {
        return Err(Error::NoFactorization);
    }
    Ok(Factorization { gamma, unique })
}

/// `f([e_i, e_j]) = [f e_i, f e_j]` on all basis pairs.
pub fn is_homomorphism(
    src: &LeibnizSuperalgebra,
    dst: &LeibnizSuperalgebra,
    f: &LinearMap,
) -> bool {
    (0..src.dim()).all(|i| {
        (0..src.dim())
            .all(|j| f.apply(src.bracket(i, j)) == dst.bracket_vec(f.column(i), f.column(j)))
    })
}

fn preserves_parity(l: &LeibnizSuperalgebra, f: &LinearMap) -> bool {
    (0..l.dim()).all(|i| match l.basis().parity_of(f.column(i)) {
        Ok(p) => p.is_none_or(|p| p == l.parity(i)),
        Err(_) => false,
    })
}

/// Extends `f_L` on `L` and `f_W` on `L⊗L` to `L_w`, restricted to `L̂`.
fn restrict_to_hat(
    u: &UceResult,
    on_l: &LinearMap,
    on_tensor: impl Fn(usize, usize) -> SparseVec,
) -> Result<LinearMap> {
    let d = u.base.dim();
    let w_of = |v: &SparseVec| u.w_class(v).shifted(d);
    let keep = u.relations.complement_indices();
    // image of each L_w basis vector
    let mut images: Vec<SparseVec> = (0..d).map(|i| on_l.column(i).clone()).collect();
    images.extend(keep.iter().map(|j| w_of(&on_tensor(j / d, j % d))));
    let lw_map = LinearMap::from_columns(images, d + u.w_dim)?;
    let cols = u
        .hat_rows()
        .iter()
        .map(|r| u.hat_coordinates(&lw_map.apply(r)))
        .collect::<Result<Vec<_>>>()?;
    LinearMap::from_columns(cols, u.total().dim())
}

/// `μ(x⊗y) = μx⊗y + (-1)^{|μ||x|} x⊗μy` on `W`, extended to `L̂`.
pub fn lift_derivation(u: &UceResult, mu: &LinearMap, parity: Parity) -> Result<LinearMap> {
    let l = &u.base;
    let d = l.dim();
    if !is_derivation(l, mu, parity) {
        return Err(Error::NotADerivation);
    }
    let on_tensor = |x: usize, y: usize| {
        let mut v = tensor_vec(d, mu.column(x), &SparseVec::unit(y));
        v.add_scaled(
            &koszul_sign(parity, l.parity(x)),
            &tensor_vec(d, &SparseVec::unit(x), mu.column(y)),
        );
        v
    };
    let induced = |v: &SparseVec| {
        let mut out = SparseVec::zero();
        for (t, c) in v.iter() {
            out.add_scaled(c, &on_tensor(t / d, t % d));
        }
        out
    };
    if !u
        .relations
        .basis()
        .iter()
        .all(|r| u.relations.contains(&induced(r)))
    {
        return Err(Error::DoesNotStabilize);
    }
    let lifted = restrict_to_hat(u, mu, on_tensor)?;
    if !is_derivation(u.total(), &lifted, parity) {
        return Err(Error::NotADerivation);
    }
    Ok(lifted)
}

/// `θ_W(x⊗y) = θx⊗θy` on `W`, extended to `L̂`.
pub fn lift_automorphism(u: &UceResult, theta: &LinearMap) -> Result<LinearMap> {
    let l = &u.base;
    let d = l.dim();
    if theta.dim_in() != d || theta.dim_out() != d || !theta.is_bijective() {
        return Err(Error::NotAnAutomorphism("not bijective".into()));
    }
    if !preserves_parity(l, theta) {
        return Err(Error::NotAnAutomorphism("not parity preserving".into()));
    }
    if !is_homomorphism(l, l, theta) {
        return Err(Error::NotAnAutomorphism(
            "does not preserve the bracket".into(),
        ));
    }
    let on_tensor = |x: usize, y: usize| tensor_vec(d, theta.column(x), theta.column(y));
    let induced = |v: &SparseVec| {
        let mut out = SparseVec::zero();
        for (t, c) in v.iter() {
            out.add_scaled(c, &on_tensor(t / d, t % d));
        }
        out
    };
    if !u
        .relations
        .basis()
        .iter()
        .all(|r| u.relations.contains(&induced(r)))
    {
        return Err(Error::DoesNotStabilize);
    }
    let lifted = restrict_to_hat(u, theta, on_tensor)?;
    if !lifted.is_bijective() || !is_homomorphism(u.total(), u.total(), &lifted) {
        return Err(Error::NotAnAutomorphism(
            "lift is not an automorphism".into(),
        ));
    }
    if u.extension.projection.compose(&lifted)? != theta.compose(&u.extension.projection)? {
        return Err(Error::NotAnAutomorphism("lift does not cover θ".into()));
    }
    Ok(lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn sl2() -> LeibnizSuperalgebra {
        let b = GradedBasis::even(&["e", "h", "f"]).unwrap();
        LeibnizSuperalgebra::from_fn(b, |i, j| match (i, j) {
            (1, 0) => SparseVec::single(0, int(2)),
            (0, 1) => SparseVec::single(0, int(-2)),
            (1, 2) => SparseVec::single(2, int(-2)),
            (2, 1) => SparseVec::single(2, int(2)),
            (0, 2) => SparseVec::unit(1),
            (2, 0) => SparseVec::single(1, int(-1)),
            _ => SparseVec::zero(),
        })
        .unwrap()
    }

    #[test]
    fn sl2_is_centrally_closed() {
        let u = uce(&sl2()).unwrap();
        assert_eq!(u.kernel_dim(), 0);
        assert_eq!(u.total().dim(), 3);
    }

    #[test]
    fn abelian_is_rejected() {
        let l = LeibnizSuperalgebra::abelian(GradedBasis::even(&["a", "b"]).unwrap());
        assert_eq!(uce(&l).unwrap_err(), Error::NotPerfect);
        assert!(!is_perfect(&l));
    }

    #[test]
    fn identity_and_ad_lifts() {
        let l = sl2();
        let u = uce(&l).unwrap();
        let id = lift_automorphism(&u, &LinearMap::identity(3)).unwrap();
        assert_eq!(id, LinearMap::identity(3));
        let zero = lift_derivation(&u, &LinearMap::zero(3, 3), Parity::Even).unwrap();
        assert!(zero.is_zero());
        let ad = l.ad(&SparseVec::unit(0));
        assert!(lift_derivation(&u, &ad, Parity::Even).is_ok());
    }
}
