//! One line per acceptance criterion followed by its details. Exits
//! nonzero if any criterion fails or the suite takes 5 minutes or more.

use std::time::Instant;

use superleib::verify;

fn main() {
    let start = Instant::now();
    let criteria: [fn() -> verify::Criterion; 10] = [
        verify::criterion_1,
        verify::criterion_2,
        verify::criterion_3,
        verify::criterion_4,
        verify::criterion_5,
        verify::criterion_6,
        verify::criterion_7,
        verify::criterion_8,
        verify::criterion_9,
        verify::criterion_10,
    ];
    let mut failed = Vec::new();
    for run in criteria {
        let t = Instant::now();
        let c = run();
        let verdict = if c.passed { "PASS" } else { "FAIL" };
        println!(
            "[{verdict}] criterion {:>2}: {} ({:.1?})",
            c.id,
            c.name,
            t.elapsed()
        );
        for d in &c.details {
            println!("         {d}");
        }
        if !c.passed {
            failed.push(c.id);
        }
    }
    let total = start.elapsed();
    println!("total {total:.1?}");
    if total.as_secs() >= 300 {
        println!("suite exceeded 5 minutes");
        std::process::exit(1);
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
