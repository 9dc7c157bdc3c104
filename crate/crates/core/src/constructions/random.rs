//! Randomized differential dialgebras for property tests.

use rand::seq::SliceRandom;
use rand::Rng;

use super::functors::{dialgebra_to_leibniz, from_differential_superalgebra};
use crate::graded::{
    koszul_sign, AssociativeSuperalgebra, GradedBasis, LeibnizSuperalgebra, Parity, SuperDialgebra,
};
use crate::linalg::{int, rat, LinearMap, Scalar, SparseVec};

/// An associative superalgebra with an even square-zero derivation.
#[derive(Clone, Debug)]
pub struct DifferentialAlgebra {
    pub algebra: AssociativeSuperalgebra,
    pub d: LinearMap,
}

fn build(
    names: &[(&str, Parity)],
    mul: impl Fn(usize, usize) -> SparseVec,
    d: Vec<SparseVec>,
) -> DifferentialAlgebra {
    let basis =
        GradedBasis::new(names.iter().map(|(n, p)| (n.to_string(), *p))).expect("distinct names");
    let n = basis.dim();
    DifferentialAlgebra {
        algebra: AssociativeSuperalgebra::from_fn(basis, mul).expect("in range"),
        d: LinearMap::from_columns(d, n).expect("in range"),
    }
}

/// `{e, n}` with `e² = e`, `en = n`, others zero, `d = [n, -]`.
pub fn idempotent_nilpotent() -> DifferentialAlgebra {
    build(
        &[("e", Parity::Even), ("n", Parity::Even)],
        |i, j| match (i, j) {
            (0, 0) => SparseVec::unit(0),
            (0, 1) => SparseVec::unit(1),
            _ => SparseVec::zero(),
        },
        vec![SparseVec::single(1, int(-1)), SparseVec::zero()],
    )
}

/// Upper-triangular 2×2 matrices `{E11, E12, E22}`, `d = [E12, -]`.
pub fn upper_triangular() -> DifferentialAlgebra {
    build(
        &[
            ("E11", Parity::Even),
            ("E12", Parity::Even),
            ("E22", Parity::Even),
        ],
        |i, j| match (i, j) {
            (0, 0) => SparseVec::unit(0),
            (0, 1) => SparseVec::unit(1),
            (1, 2) => SparseVec::unit(1),
            (2, 2) => SparseVec::unit(2),
            _ => SparseVec::zero(),
        },
        vec![
            SparseVec::single(1, int(-1)),
            SparseVec::zero(),
            SparseVec::unit(1),
        ],
    )
}

/// `ℚ` with `d = 0`.
pub fn rationals() -> DifferentialAlgebra {
    build(
        &[("1", Parity::Even)],
        |_, _| SparseVec::unit(0),
        vec![SparseVec::zero()],
    )
}

/// Grassmann algebra `Λ(ξ)` with `d = 0`.
pub fn grassmann() -> DifferentialAlgebra {
    build(
        &[("1", Parity::Even), ("ξ", Parity::Odd)],
        |i, j| {
            if i + j < 2 {
                SparseVec::unit(i + j)
            } else {
                SparseVec::zero()
            }
        },
        vec![SparseVec::zero(), SparseVec::zero()],
    )
}

fn prefixed(b: &GradedBasis, p: &str) -> Vec<(String, Parity)> {
    (0..b.dim())
        .map(|i| (format!("{p}{}", b.name(i)), b.parity(i)))
        .collect()
}

/// `A ⊕ B` with `d_A ⊕ d_B`.
pub fn direct_sum(a: &DifferentialAlgebra, b: &DifferentialAlgebra) -> DifferentialAlgebra {
    let (n, m) = (a.algebra.dim(), b.algebra.dim());
    let mut names = prefixed(a.algebra.basis(), "a.");
    names.extend(prefixed(b.algebra.basis(), "b."));
    let basis = GradedBasis::new(names).expect("prefixes keep names distinct");
    let algebra = AssociativeSuperalgebra::from_fn(basis, |i, j| match (i < n, j < n) {
        (true, true) => a.algebra.mul(i, j).clone(),
        (false, false) => b.algebra.mul(i - n, j - n).shifted(n),
        _ => SparseVec::zero(),
    })
    .expect("in range");
    let cols = (0..n + m)
        .map(|i| {
            if i < n {
                a.d.column(i).clone()
            } else {
                b.d.column(i - n).shifted(n)
            }
        })
        .collect();
    DifferentialAlgebra {
        algebra,
        d: LinearMap::from_columns(cols, n + m).expect("in range"),
    }
}

/// `A ⊗ B` with Koszul-signed product and `d_A ⊗ 1`.
pub fn tensor(a: &DifferentialAlgebra, b: &DifferentialAlgebra) -> DifferentialAlgebra {
    let m = b.algebra.dim();
    let basis = a
        .algebra
        .basis()
        .tensor(b.algebra.basis(), |x, y| format!("{x}⊗{y}"))
        .expect("distinct");
    let algebra = AssociativeSuperalgebra::from_fn(basis, |x, y| {
        let (i, i2, j, j2) = (x / m, x % m, y / m, y % m);
        let s = koszul_sign(b.algebra.parity(i2), a.algebra.parity(j));
        let mut out = Vec::new();
        for (p, c) in a.algebra.mul(i, j).iter() {
            for (q, e) in b.algebra.mul(i2, j2).iter() {
                out.push((p * m + q, c * e * &s));
            }
        }
        SparseVec::from_entries(out)
    })
    .expect("in range");
    let n = a.algebra.dim() * m;
    let cols = (0..n)
        .map(|x| a.d.column(x / m).remap(|p| p * m + x % m))
        .collect();
    DifferentialAlgebra {
        algebra,
        d: LinearMap::from_columns(cols, n).expect("in range"),
    }
}

fn random_scalar<R: Rng>(rng: &mut R) -> Scalar {
    rat(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

/// Rewrites structure constants in a random basis reached by a few
/// parity-preserving moves `e_i += c e_j` with small integer `c`, so the
/// change of basis and its inverse stay integral.
pub fn random_basis_change<R: Rng>(x: &DifferentialAlgebra, rng: &mut R) -> DifferentialAlgebra {
    let n = x.algebra.dim();
    let basis = x.algebra.basis();
    let mut p = LinearMap::identity(n);
    for _ in 0..n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j || basis.parity(i) != basis.parity(j) {
            continue;
        }
        let c = [-2, -1, 1, 2].choose(rng).copied().expect("nonempty");
        let mut cols: Vec<SparseVec> = p.columns().to_vec();
        let add = cols[j].scaled(&int(c));
        cols[i].add_scaled(&int(1), &add);
        p = LinearMap::from_columns(cols, n).expect("in range");
    }
    let pinv = p.inverse().expect("unimodular");
    let algebra = AssociativeSuperalgebra::from_fn(basis.clone(), |i, j| {
        pinv.apply(&x.algebra.mul_vec(p.column(i), p.column(j)))
    })
    .expect("in range");
    let d = pinv
        .compose(&x.d.compose(&p).expect("square"))
        .expect("square");
    DifferentialAlgebra { algebra, d }
}

/// A random differential superalgebra of dimension 2 to 5, with `d`
/// rescaled by a random nonzero rational and a random basis change.
pub fn random_differential_algebra<R: Rng>(rng: &mut R) -> DifferentialAlgebra {
    let b2 = idempotent_nilpotent();
    let t2 = upper_triangular();
    let q = rationals();
    let g = grassmann();
    let candidates = [
        b2.clone(),
        t2.clone(),
        direct_sum(&b2, &q),
        direct_sum(&t2, &q),
        direct_sum(&b2, &b2),
        direct_sum(&b2, &t2),
        direct_sum(&t2, &g),
        tensor(&b2, &g),
        direct_sum(&tensor(&b2, &g), &q),
        direct_sum(&g, &q),
        g.clone(),
    ];
    let base = candidates.choose(rng).expect("nonempty").clone();
    let c = loop {
        let c = random_scalar(rng);
        if c != int(0) {
            break c;
        }
    };
    let scaled = DifferentialAlgebra {
        d: base.d.scaled(&c),
        algebra: base.algebra,
    };
    random_basis_change(&scaled, rng)
}

/// `x ⊣ y = x·dy`, `x ⊢ y = dx·y` on a random differential superalgebra.
pub fn random_differential_dialgebra<R: Rng>(rng: &mut R) -> SuperDialgebra {
    let x = random_differential_algebra(rng);
    from_differential_superalgebra(&x.algebra, &x.d).expect("valid differential algebra")
}

/// The Leibniz superalgebra of a random differential dialgebra.
pub fn random_leibniz_superalgebra<R: Rng>(rng: &mut R) -> LeibnizSuperalgebra {
    dialgebra_to_leibniz(&random_differential_dialgebra(rng)).expect("dialgebra axioms hold")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::check_associative;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn building_blocks_are_valid() {
        for x in [
            idempotent_nilpotent(),
            upper_triangular(),
            rationals(),
            grassmann(),
            tensor(&idempotent_nilpotent(), &grassmann()),
        ] {
            assert!(check_associative(&x.algebra).passed());
            assert!(from_differential_superalgebra(&x.algebra, &x.d).is_ok());
        }
    }

    #[test]
    fn random_dimensions_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let d = random_differential_dialgebra(&mut rng);
            assert!((1..=5).contains(&d.dim()));
        }
    }
}
