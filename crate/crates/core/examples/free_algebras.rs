//! Truncated free Leibniz superalgebras and free dialgebras, and the map
//! from a free algebra induced by images of the generators.

use superleib::catalog::{osp12, OSP_H, OSP_ODD_PLUS};
use superleib::constructions::{free_leibniz_super, free_super_dialgebra};
use superleib::graded::Parity;
use superleib::linalg::SparseVec;

fn main() -> superleib::Result<()> {
    let parities = [Parity::Even, Parity::Odd];
    for k in 2..=4 {
        let f = free_leibniz_super(&parities, k)?;
        let rep = f.check();
        println!(
            "free Leibniz (1|1), degree <= {k}: dim {}, {} triples checked, {} skipped, pass {}",
            f.algebra.dim(),
            rep.checked,
            rep.skipped,
            rep.passed()
        );
    }
    let fd = free_super_dialgebra(&parities, 3)?;
    let rep = fd.check();
    println!(
        "free dialgebra (1|1), degree <= 3: dim {}, pass {}",
        fd.dialgebra.dim(),
        rep.passed()
    );

    let (target, _) = osp12();
    let f = free_leibniz_super(&parities, 4)?;
    let phi = f.induced_map(
        &target,
        &[SparseVec::unit(OSP_H), SparseVec::unit(OSP_ODD_PLUS)],
    )?;
    println!(
        "x1 ↦ H, x2 ↦ x+ extends to a homomorphism: {}",
        f.check_homomorphism(&target, &phi).passed()
    );
    Ok(())
}
