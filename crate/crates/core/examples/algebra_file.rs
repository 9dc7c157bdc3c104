//! Read and write the AlgebraFile text format.

use superleib::catalog::{lookup, Structure};
use superleib::format::{parse, serialize};
use superleib::graded::check_leibniz;

const CORRUPTED: &str = "\
format 1
kind leibniz
basis e:0 h:0 f:0
bracket h e = 2 e
bracket e h = -2 e
bracket h f = -2 f
bracket f h = 2 f
bracket e f = 1 h
bracket f e = -1 h
bracket e e = 1/3 f
";

fn main() -> superleib::Result<()> {
    let osp = lookup("osp12")?;
    let text = serialize(&osp);
    print!("{text}");
    let back = parse(&text)?;
    println!("round trip identical: {}", serialize(&back) == text);

    if let Structure::Leibniz { algebra, .. } = parse(CORRUPTED)? {
        let rep = check_leibniz(&algebra);
        let names = algebra.basis().names();
        for f in rep.failures.iter().take(3) {
            let idx: Vec<&str> = f.indices.iter().map(|i| names[*i].as_str()).collect();
            println!(
                "fails at ({}): residual {}",
                idx.join(", "),
                f.residual.format_with(names)
            );
        }
    }

    match parse("format 1\nkind leibniz\nbasis a:0\nbracket a a = 0.5 a\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
