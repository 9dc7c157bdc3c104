//! Ω¹ of truncated polynomial dialgebras and the universal property
//! Der(D, M) ≅ Hom_D(Ω, M).

use superleib::catalog::trunc_poly;
use superleib::constructions::tensor_dialgebra;
use superleib::differentials::{check_universal_property, omega, omega_mod_d, DialgebraBimodule};

fn main() -> superleib::Result<()> {
    for n in 1..=5 {
        let d = trunc_poly(n)?;
        let om = omega(&d)?;
        println!(
            "Q[t]/(t^{n}): dim Ω = {}, dim Ω/dD = {}, basis [{}]",
            om.dim(),
            omega_mod_d(&om).dim,
            om.names().join(", ")
        );
    }

    let t2 = trunc_poly(2)?;
    let d = tensor_dialgebra(&t2, &t2)?;
    let om = omega(&d)?;
    println!(
        "Q[t]/(t^2) ⊗ Q[s]/(s^2): dim Ω = {}, dim Ω/dD = {}",
        om.dim(),
        omega_mod_d(&om).dim
    );
    for (name, m) in [
        ("regular", DialgebraBimodule::regular(&d)),
        ("zero", DialgebraBimodule::zero(&d, 2)),
        ("Ω itself", om.as_bimodule()),
    ] {
        let up = check_universal_property(&om, &m);
        println!(
            "  M = {name}: dim Der = {}, dim Hom = {}, holds {}",
            up.der_dim, up.hom_dim, up.holds
        );
    }
    Ok(())
}
