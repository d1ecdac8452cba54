//! Run every symbolic and series check and print a PASS/FAIL line for each.
//!
//! `cargo run --release --example verify -- 20`

use jacobi_gmd::verify::run_verify;

fn main() {
    let order: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    let report = run_verify(order).unwrap();
    for c in &report.checks {
        println!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
    }
    for r in &report.series.residuals {
        println!("{} {}", if r.passed { "PASS" } else { "FAIL" }, r.name);
    }
    match report.first_failure() {
        None => println!("all checks passed"),
        Some(name) => println!("first failure: {name}"),
    }
}
