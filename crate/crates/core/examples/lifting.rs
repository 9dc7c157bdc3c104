//! Derivations and automorphisms of a perfect algebra lift to its
//! universal central extension.

use superleib::catalog::{poly_euler_derivation, poly_scaling, sl2, trunc_poly};
use superleib::cohomology::is_derivation;
use superleib::constructions::current_algebra;
use superleib::graded::Parity;
use superleib::linalg::{int, SparseVec};
use superleib::uce::{is_homomorphism, lift_automorphism, lift_derivation, uce};

fn main() -> superleib::Result<()> {
    let (s, _) = sl2();
    let n = 3;
    let l = current_algebra(&s, &trunc_poly(n)?)?;
    let u = uce(&l)?;
    let total = u.total();
    println!(
        "sl2 ⊗ Q[t]/(t^{n}): dim L = {}, dim L̂ = {}",
        l.dim(),
        total.dim()
    );

    let euler = lift_derivation(&u, &poly_euler_derivation(s.dim(), n), Parity::Even)?;
    println!(
        "t d/dt lifts to a derivation: {}",
        is_derivation(total, &euler, Parity::Even)
    );

    let ad = lift_derivation(&u, &l.ad(&SparseVec::unit(0)), l.parity(0))?;
    println!(
        "ad of {} lifts to a derivation: {}",
        l.basis().name(0),
        is_derivation(total, &ad, l.parity(0))
    );

    let theta = poly_scaling(s.dim(), n, &int(3));
    let lifted = lift_automorphism(&u, &theta)?;
    println!(
        "t ↦ 3t lifts to an automorphism: {}",
        lifted.is_bijective() && is_homomorphism(total, total, &lifted)
    );
    Ok(())
}
