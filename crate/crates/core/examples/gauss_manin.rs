//! Build the connection matrices in both frames, check that they agree under the
//! universal frame change and that the connection is flat.
//!
//! `cargo run --example gauss_manin -- [omega|alpha]`

use jacobi_gmd::algebra::Var;
use jacobi_gmd::gauss_manin::{build_a, build_b, change_basis, decompose, is_flat, FrameChange};

fn main() {
    let basis = std::env::args().nth(1).unwrap_or_else(|| "alpha".into());
    let b = build_b();
    let a = change_basis(&b, &FrameChange::universal());
    assert_eq!(a, build_a());

    let m = if basis == "omega" { &b } else { &a };
    println!("{basis} frame, flat: {}", is_flat(m));
    // Delta * (coefficient of dv), so the entries print as polynomials in a, b, c, t1, t2
    for (v, block) in Var::ALL.iter().zip(decompose(m)) {
        println!("Delta * A_{v}:");
        print!("{block}");
    }
}
