//! HL^n with trivial and adjoint coefficients, d² = 0, and the gap
//! between Leibniz and Lie second cohomology on current algebras.

use superleib::catalog::{osp12, sl2, trunc_poly};
use superleib::cohomology::{check_d_squared, hl_dims, skew_hl2_dim, z2_b2};
use superleib::constructions::current_algebra;
use superleib::graded::LeibnizModule;

fn main() -> superleib::Result<()> {
    let (o, _) = osp12();
    for n in 0..=2 {
        let adj = hl_dims(&LeibnizModule::adjoint(&o), n, None);
        let triv = hl_dims(&LeibnizModule::trivial_even(&o, 1), n, None);
        println!(
            "osp(1,2): HL{n}(adjoint) = {}, HL{n}(trivial) = {}",
            adj.hl, triv.hl
        );
    }
    println!(
        "d² = 0 on osp(1,2) adjoint cochains of degree 2: {}",
        check_d_squared(&LeibnizModule::adjoint(&o), 2)
    );

    let (s, _) = sl2();
    for n in 1..=4 {
        let cur = current_algebra(&s, &trunc_poly(n)?)?;
        let space = z2_b2(&cur, 1);
        println!(
            "sl2 ⊗ Q[t]/(t^{n}): dim Z² = {}, dim B² = {}, HL² = {}, skew part = {}",
            space.z2.dim(),
            space.b2.dim(),
            space.hl2_dim,
            skew_hl2_dim(&cur, 1)
        );
    }
    Ok(())
}
