//! The pairing identity on Q[t]/(t^N) and the bracket relations of the
//! osp(1,2) loop extension, checked formula by formula.

use superleib::catalog::{trunc_poly, verify_52, verify_osp_loop_relations};

fn main() -> superleib::Result<()> {
    for n in 1..=4 {
        let d = trunc_poly(n)?;
        let pairing = verify_52(&d)?;
        let loops = verify_osp_loop_relations(&d)?;
        println!(
            "N = {n}: pairing {} instances pass {}, loop relations {} instances pass {}",
            pairing.checked,
            pairing.passed(),
            loops.checked,
            loops.passed()
        );
        for f in loops.failures.iter().take(3) {
            println!("  {} at {:?}", f.axiom, f.indices);
        }
    }
    Ok(())
}
