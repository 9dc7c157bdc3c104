//! Build osp(1,2), print its bracket table and run every identity check.
//!
//! ```bash
//! cargo run --example osp12_integrity
//! ```

use superleib::catalog::osp12;
use superleib::graded::{check_grading, check_invariant_form, check_leibniz, check_lie_super};

fn main() {
    let (l, form) = osp12();
    let names = l.basis().names();
    println!("osp(1,2), basis {}", names.join(" "));
    for (i, j, v) in l.table().iter() {
        if !v.is_zero() {
            println!("  [{}, {}] = {}", names[i], names[j], v.format_with(names));
        }
    }

    let leibniz = check_leibniz(&l);
    println!(
        "Leibniz identity: {} triples, {} failures",
        leibniz.checked,
        leibniz.failures.len()
    );
    println!("super antisymmetric: {}", check_lie_super(&l));
    println!("grading respected: {}", check_grading(&l).passed());
    println!("form invariant: {}", check_invariant_form(&l, &form));
}
