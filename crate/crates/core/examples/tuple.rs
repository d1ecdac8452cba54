//! The normalized tuple (a, b, c, t1, t2, t3) as q-series with rational-function
//! coefficients in zeta, and the sign pinning behind it.
//!
//! `cargo run --example tuple -- 3`

use jacobi_gmd::algebra::Var;
use jacobi_gmd::jacobi_series::{normalized_tuple, pin_signs};

fn main() {
    let order: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let pin = pin_signs();
    for s in &pin.solutions {
        println!("sign solution: {s}");
    }
    let tup = normalized_tuple(order).unwrap();
    println!("chosen: {}", tup.signs);
    for v in Var::ALL {
        println!("{v} = {}", tup.get(v));
    }
    println!("t3 = {}", tup.t3);
}
