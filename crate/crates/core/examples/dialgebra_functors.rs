//! From a differential superalgebra to a dialgebra to a Leibniz
//! superalgebra, and back down to Lie by killing squares.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use superleib::constructions::random::{grassmann, random_differential_dialgebra};
use superleib::constructions::{
    associativize, dialgebra_to_leibniz, from_differential_superalgebra, lieize,
};
use superleib::graded::{check_dialgebra, check_leibniz, check_lie_super};

fn main() -> superleib::Result<()> {
    // Λ(ε) with dε = 1 gives x ⊣ y = x·dy, x ⊢ y = dx·y
    let g = grassmann();
    let d = from_differential_superalgebra(&g.algebra, &g.d)?;
    println!(
        "Grassmann dialgebra: dim {}, axioms pass: {}",
        d.dim(),
        check_dialgebra(&d).passed()
    );

    let l = dialgebra_to_leibniz(&d)?;
    println!("  Leibniz image passes: {}", check_leibniz(&l).passed());
    println!("  Lie: {}", check_lie_super(&l));
    println!("  associativization dim: {}", associativize(&d)?.dim());

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..5 {
        let d = random_differential_dialgebra(&mut rng);
        let l = dialgebra_to_leibniz(&d)?;
        let lie = lieize(&l)?;
        println!(
            "random #{k}: dim {}, dialgebra ok {}, Leibniz ok {}, Lie quotient dim {}",
            d.dim(),
            check_dialgebra(&d).passed(),
            check_leibniz(&l).passed(),
            lie.dim()
        );
    }
    Ok(())
}
