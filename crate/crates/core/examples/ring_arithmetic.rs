//! Exact arithmetic in the localized ring Q[a, b, c, t1, t2][1/a, 1/b, 1/Delta].
//!
//! `cargo run --example ring_arithmetic`

use jacobi_gmd::algebra::{delta_poly, parse_ring_elem, t3_poly, Var};

fn main() {
    println!("t3    = {}", t3_poly());
    println!("Delta = {}", delta_poly());

    let f = parse_ring_elem("(c - b/(2*a))^2 / Delta").unwrap();
    println!("f     = {f}");
    for v in Var::ALL {
        println!("df/d{v} = {}", f.derive(v));
    }

    // cancellation against the localized denominators is exact
    let g = parse_ring_elem("Delta * a^3 * b").unwrap();
    println!("f*g   = {}", &f * &g);
}
