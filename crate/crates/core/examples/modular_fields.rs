//! Recover the two modular vector fields from their constant matrices and check
//! that they commute.
//!
//! `cargo run --release --example modular_fields`

use std::time::Instant;

use jacobi_gmd::algebra::{parse_ring_elem, Var};
use jacobi_gmd::gauss_manin::tau_locus_constants;
use jacobi_gmd::vector_fields::{is_admissible, lie_bracket, r_tau, r_z, solve_modular};

fn main() {
    let (c_tau, c_z) = tau_locus_constants();
    let start = Instant::now();
    let rt = solve_modular(&c_tau).unwrap();
    let rz = solve_modular(&c_z).unwrap();
    println!("solved in {:?}", start.elapsed());
    println!("R_tau = {}", rt.to_text());
    println!("R_z   = {}", rz.to_text());
    assert_eq!(rt, r_tau());
    assert_eq!(rz, r_z());
    println!("[R_tau, R_z] = 0: {}", lie_bracket(&rt, &rz).is_zero());

    let t3 = parse_ring_elem("t3").unwrap();
    println!("R_tau(t3) = {}", rt.apply(&t3));
    println!("R_z(c)    = {}", rz.apply(&parse_ring_elem("c").unwrap()));
    println!("R_tau(a)  = {}", rt.get(Var::A));

    let mut bad = c_tau;
    bad[0][0] = jacobi_gmd::algebra::rat(1, 1);
    println!("perturbed matrix admissible: {}", is_admissible(&bad));
    println!("solve on it: {}", solve_modular(&bad).unwrap_err());
}
