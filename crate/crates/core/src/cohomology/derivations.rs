use crate::graded::{koszul_sign, LeibnizSuperalgebra, Parity};
use crate::linalg::{LinearMap, SparseVec, Subspace};

/// Endomorphisms of `L` in the coordinates `μ(e_z)_w ↦ z·dim L + w`.
pub fn endo_coordinates(mu: &LinearMap) -> SparseVec {
    let d = mu.dim_out();
    SparseVec::from_entries(
        mu.columns()
            .iter()
            .enumerate()
            .flat_map(|(z, col)| col.iter().map(move |(w, c)| (z * d + w, c.clone()))),
    )
}

pub fn endo_from_coordinates(d: usize, v: &SparseVec) -> LinearMap {
    let mut cols = vec![SparseVec::zero(); d];
    for (i, c) in v.iter() {
        cols[i / d].add_scaled(c, &SparseVec::unit(i % d));
    }
    LinearMap::from_columns(cols, d).expect("in range")
}

/// `μ([a, b]) = [μa, b] + (-1)^{s|a|} [a, μb]`
pub fn is_derivation(l: &LeibnizSuperalgebra, mu: &LinearMap, s: Parity) -> bool {
    let d = l.dim();
    (0..d).all(|a| {
        (0..d).all(|b| {
            let lhs = mu.apply(l.bracket(a, b));
            let mut rhs = l.bracket_vec(mu.column(a), &SparseVec::unit(b));
            rhs.add_scaled(
                &koszul_sign(s, l.parity(a)),
                &l.bracket_vec(&SparseVec::unit(a), mu.column(b)),
            );
            lhs == rhs
        })
    })
}

/// Derivations of parity `s` as a subspace of `End(L)`.
pub fn derivation_space(l: &LeibnizSuperalgebra, s: Parity) -> Subspace {
    let d = l.dim();
    let at = |z: usize, w: usize| z * d + w;
    let mut rows = Vec::new();
    for z in 0..d {
        for w in 0..d {
            if l.parity(w) != l.parity(z) + s {
                rows.push(SparseVec::unit(at(z, w)));
            }
        }
    }
    for a in 0..d {
        let sa = koszul_sign(s, l.parity(a));
        for b in 0..d {
            for k in 0..d {
                let mut r = SparseVec::zero();
                for (z, c) in l.bracket(a, b).iter() {
                    r.add_scaled(c, &SparseVec::unit(at(z, k)));
                }
                for w in 0..d {
                    let c = l.bracket(w, b).coeff(k);
                    if c != crate::linalg::zero() {
                        r.add_scaled(&-c, &SparseVec::unit(at(a, w)));
                    }
                    let c = l.bracket(a, w).coeff(k);
                    if c != crate::linalg::zero() {
                        r.add_scaled(&-(c * &sa), &SparseVec::unit(at(b, w)));
                    }
                }
                if !r.is_zero() {
                    rows.push(r);
                }
            }
        }
    }
    crate::linalg::kernel(&rows, d * d).expect("in range")
}

/// `ad z = [z, -]` for every basis `z`, spanned in `End(L)`.
pub fn inner_derivation_space(l: &LeibnizSuperalgebra) -> Subspace {
    let gens: Vec<SparseVec> = (0..l.dim())
        .map(|z| endo_coordinates(&l.ad(&SparseVec::unit(z))))
        .collect();
    Subspace::from_rows(&gens, l.dim() * l.dim()).expect("in range")
}

/// On a right Leibniz superalgebra, `x ↦ -(-1)^{|x||z|} [x, z]` for homogeneous `z`.
pub fn right_inner_derivation(l: &LeibnizSuperalgebra, z: usize) -> LinearMap {
    let cols = (0..l.dim())
        .map(|x| {
            l.bracket(x, z)
                .scaled(&-koszul_sign(l.parity(x), l.parity(z)))
        })
        .collect();
    LinearMap::from_columns(cols, l.dim()).expect("in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        dialgebra_to_right_leibniz, from_differential_superalgebra, random,
    };

    #[test]
    fn inner_derivations_are_derivations() {
        let x = random::upper_triangular();
        let d = from_differential_superalgebra(&x.algebra, &x.d).unwrap();
        let l = crate::constructions::dialgebra_to_leibniz(&d).unwrap();
        let der = derivation_space(&l, Parity::Even);
        let inn = inner_derivation_space(&l);
        assert!(inn.is_subspace_of(&der));
        for z in 0..l.dim() {
            assert!(is_derivation(&l, &l.ad(&SparseVec::unit(z)), l.parity(z)));
        }
        for v in der.basis() {
            assert!(is_derivation(
                &l,
                &endo_from_coordinates(l.dim(), v),
                Parity::Even
            ));
        }
    }

    #[test]
    fn right_variant_on_right_leibniz() {
        let x = random::tensor(&random::upper_triangular(), &random::grassmann());
        let d = from_differential_superalgebra(&x.algebra, &x.d).unwrap();
        let r = dialgebra_to_right_leibniz(&d).unwrap();
        for z in 0..r.dim() {
            assert!(is_derivation(
                &r,
                &right_inner_derivation(&r, z),
                r.parity(z)
            ));
        }
    }
}
