//! The universal central extension of g ⊗ Q[t]/(t^N), compared with the
//! explicit extension by Ω and checked for universality.

use superleib::catalog::{loop_extension, osp12, sl2, trunc_poly};
use superleib::uce::{check_universality, uce};

fn main() -> superleib::Result<()> {
    for (name, (g, form)) in [("sl2", sl2()), ("osp(1,2)", osp12())] {
        for n in 1..=3 {
            let d = trunc_poly(n)?;
            let le = loop_extension(&g, &form, &d)?;
            let u = uce(&le.current)?;
            let f = check_universality(&u, &le.extension)?;
            println!(
                "{name} ⊗ Q[t]/(t^{n}): dim L̂ = {}, kernel {}, dim Ω {}, γ unique {}, γ bijective {}",
                u.total().dim(),
                u.kernel_dim(),
                le.omega.dim(),
                f.unique,
                f.gamma.is_bijective()
            );
        }
    }

    let (o, _) = osp12();
    let u = uce(&o)?;
    println!("osp(1,2) itself: kernel {}", u.kernel_dim());
    let kernel_names: Vec<&str> = (u.base.dim()..u.total().dim())
        .map(|i| u.total().basis().name(i))
        .collect();
    println!("  kernel basis: [{}]", kernel_names.join(", "));
    Ok(())
}
