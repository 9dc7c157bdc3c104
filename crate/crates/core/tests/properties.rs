use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use superleib::catalog::{
    osp12, sl2, sl_mn, trunc_poly, Structure, OSP_H, OSP_ODD_MINUS, OSP_ODD_PLUS, OSP_X_MINUS,
    OSP_X_PLUS,
};
use superleib::cohomology::{central_sum, is_cocycle, z2_b2, Cochain};
use superleib::constructions::random::{
    random_differential_dialgebra, random_leibniz_superalgebra,
};
use superleib::constructions::{current_algebra, dialgebra_to_leibniz, free_leibniz_super};
use superleib::differentials::omega;
use superleib::format;
use superleib::graded::{check_dialgebra, check_leibniz, Parity};
use superleib::linalg::{int, intersect, rat, rref, solve, SparseVec};
use superleib::uce::uce;

fn rows_strategy(max_rows: usize, ncols: usize) -> impl Strategy<Value = Vec<SparseVec>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, ncols), 0..=max_rows).prop_map(|rows| {
        rows.into_iter()
            .map(|r| SparseVec::from_dense(&r.into_iter().map(int).collect::<Vec<_>>()))
            .collect()
    })
}

fn mat_apply(rows: &[SparseVec], x: &SparseVec) -> SparseVec {
    SparseVec::from_entries(rows.iter().enumerate().map(|(i, r)| (i, r.dot(x))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_canonical(rows in rows_strategy(5, 6), mix in prop::collection::vec(-2i64..=2, 5)) {
        let a = rref(&rows, 6).unwrap();
        // same row space: echelon rows, reversed order, plus a combination
        let mut other: Vec<SparseVec> = rows.iter().rev().cloned().collect();
        let mut combo = SparseVec::zero();
        for (r, c) in rows.iter().zip(&mix) {
            combo.add_scaled(&int(*c), r);
        }
        other.push(combo);
        let b = rref(&other, 6).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&a, &rref(a.basis(), 6).unwrap());
    }

    #[test]
    fn dimension_formula(u in rows_strategy(4, 5), v in rows_strategy(4, 5)) {
        let u = rref(&u, 5).unwrap();
        let v = rref(&v, 5).unwrap();
        let sum = u.sum(&v).unwrap();
        let cap = intersect(&u, &v).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), u.dim() + v.dim());
        prop_assert!(cap.is_subspace_of(&u) && cap.is_subspace_of(&v));
    }

    #[test]
    fn solve_substitutes_back(rows in rows_strategy(5, 4), x in prop::collection::vec(-3i64..=3, 4)) {
        let x = SparseVec::from_dense(&x.into_iter().map(int).collect::<Vec<_>>());
        let rhs = mat_apply(&rows, &x);
        let y = solve(&rows, 4, &rhs).unwrap();
        prop_assert_eq!(mat_apply(&rows, &y), rhs);
    }

    #[test]
    fn algebra_file_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_differential_dialgebra(&mut rng);
        let s = Structure::Dialgebra(d.clone());
        let Structure::Dialgebra(back) = format::parse(&format::serialize(&s)).unwrap() else { panic!() };
        prop_assert_eq!(back, d);
        let l = random_leibniz_superalgebra(&mut rng);
        let text = format::serialize_leibniz(&l, None);
        let Structure::Leibniz { algebra, .. } = format::parse(&text).unwrap() else { panic!() };
        prop_assert_eq!(format::serialize_leibniz(&algebra, None), text);
        prop_assert_eq!(algebra, l);
    }

    #[test]
    fn central_sum_is_leibniz_iff_cocycle(
        seed in any::<u64>(),
        from_z2 in any::<bool>(),
        coeffs in prop::collection::vec(-2i64..=2, 64),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_leibniz_superalgebra(&mut rng);
        let d = l.dim();
        let space = z2_b2(&l, 1);
        let psi = if from_z2 {
            let mut v = SparseVec::zero();
            for (row, c) in space.z2.basis().iter().zip(&coeffs) {
                v.add_scaled(&int(*c), row);
            }
            Cochain::from_coordinates(2, Parity::Even, 1, &v)
        } else {
            let mut psi = Cochain::zero(2, Parity::Even);
            for (t, c) in coeffs.iter().enumerate().take(d * d) {
                if l.parity(t / d) == l.parity(t % d) && *c != 0 {
                    psi.set(t, SparseVec::single(0, int(*c)));
                }
            }
            psi
        };
        let ext = central_sum(&l, &psi, 1).unwrap();
        let cocycle = is_cocycle(&l, &psi);
        prop_assert_eq!(check_leibniz(&ext).passed(), cocycle);
        prop_assert_eq!(space.contains_cocycle(&psi), cocycle);
        if from_z2 {
            prop_assert!(cocycle);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dialgebras_give_leibniz_superalgebras(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_differential_dialgebra(&mut rng);
        prop_assert!(check_dialgebra(&d).passed());
        let l = dialgebra_to_leibniz(&d).unwrap();
        prop_assert!(check_leibniz(&l).passed());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn free_leibniz_maps_into_osp12(
        even in prop::collection::vec(-2i64..=2, 3),
        odd in prop::collection::vec(-2i64..=2, 2),
        den in 1i64..=3,
    ) {
        let (target, _) = osp12();
        let x = SparseVec::from_entries([OSP_X_PLUS, OSP_H, OSP_X_MINUS].into_iter().zip(even.iter().map(|c| rat(*c, den))));
        let y = SparseVec::from_entries([OSP_ODD_PLUS, OSP_ODD_MINUS].into_iter().zip(odd.iter().map(|c| int(*c))));
        let free = free_leibniz_super(&[Parity::Even, Parity::Odd], 4).unwrap();
        let f = free.induced_map(&target, &[x.clone(), y.clone()]).unwrap();
        prop_assert_eq!(f.column(0), &x);
        prop_assert_eq!(f.column(1), &y);
        prop_assert!(free.check_homomorphism(&target, &f).passed());
    }
}

#[test]
fn uce_of_uce_is_trivial() {
    let (g, _) = sl2();
    let first = uce(&current_algebra(&g, &trunc_poly(2).unwrap()).unwrap()).unwrap();
    assert_eq!(first.kernel_dim(), 1);
    let second = uce(first.total()).unwrap();
    assert_eq!(second.kernel_dim(), 0);
}

#[test]
fn sl21_current_kernel_is_omega() {
    let (g, _) = sl_mn(2, 1).unwrap();
    for n in 1..=3 {
        let d = trunc_poly(n).unwrap();
        let u = uce(&current_algebra(&g, &d).unwrap()).unwrap();
        assert_eq!(u.kernel_dim(), omega(&d).unwrap().dim(), "N = {n}");
    }
}
