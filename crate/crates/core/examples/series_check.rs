//! Verify the q-expansion identities for the normalized tuple.
//!
//! Usage: `cargo run --release --example series_check -- [order]`

use std::time::Instant;

use jacobi_gmd::jacobi_series::verify_all;

fn main() {
    let order: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    let start = Instant::now();
    let report = verify_all(order).expect("sign search succeeds");
    println!("order {order}, signs {}", report.signs);
    for r in &report.residuals {
        match &r.first_nonzero {
            None => println!("  ok    {}", r.name),
            Some((n, c)) => println!("  FAIL  {} at q^{n}: {c}", r.name),
        }
    }
    println!("{} ms", start.elapsed().as_millis());
}
