//! Eisenstein series and the Jacobi-type generator J1 as exact q-expansions.
//!
//! `cargo run --example eisenstein -- 6`

use jacobi_gmd::jacobi_series::{divisor_sum, eisenstein, j1_series};

fn main() {
    let order: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for k in [2, 4, 6] {
        println!("E{k} = {}", eisenstein(k, order).unwrap());
    }
    println!("sigma_3(1..=6) = {:?}", (1..=6).map(|n| divisor_sum(3, n)).collect::<Vec<_>>());
    let j1 = j1_series(order.min(3));
    for n in 0..=j1.order() {
        println!("J1 [q^{n}] = {}", j1.coeff(n));
    }
}
