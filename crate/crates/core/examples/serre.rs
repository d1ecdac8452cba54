//! Serre derivative on quasi-modular polynomials and the Serre-Jacobi derivative
//! on the full ring.
//!
//! `cargo run --example serre -- "t1^2 - t2/12"`

use jacobi_gmd::algebra::parse_ring_elem;
use jacobi_gmd::vector_fields::{serre_derivative, serre_jacobi, GradedPoly, QuasiModular};

fn main() {
    let input = std::env::args().nth(1).unwrap_or_else(|| "t3".into());
    let f = GradedPoly::new(parse_ring_elem(&input).unwrap()).unwrap();
    println!("f = {} (weight {})", f.value, f.weight);

    match serre_derivative(&f) {
        Ok(d) => println!("d^S f = {} (weight {})", QuasiModular::from_ring_elem(&d.value).unwrap(), d.weight),
        Err(e) => println!("d^S f: {e}"),
    }
    let j = serre_jacobi(&f);
    println!("d^J f = {} (weight {})", j.value, j.weight);

    for g in ["a", "b", "c"] {
        let d = serre_jacobi(&GradedPoly::new(parse_ring_elem(g).unwrap()).unwrap());
        println!("d^J {g} = {}", d.value);
    }
}
