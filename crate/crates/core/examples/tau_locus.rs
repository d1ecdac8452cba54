//! Constant matrices of the two derivations along the tau-locus, from the period
//! matrix over Z[tau, z].
//!
//! `cargo run --example tau_locus`

use jacobi_gmd::gauss_manin::{rational_to_strings, tau_locus_constants};

fn main() {
    let (c_tau, c_z) = tau_locus_constants();
    for (name, m) in [("C_tau", c_tau), ("C_z", c_z)] {
        println!("{name}:");
        for row in rational_to_strings(&m) {
            println!("  [{}]", row.join(", "));
        }
    }
}
