//! The right action of the algebraic group on parameter points.
//!
//! `cargo run --example group_action`

use jacobi_gmd::algebra::{rat, Rational};
use jacobi_gmd::gauss_manin::{group_act, GroupElement};

fn show(t: &[Rational; 5]) -> String {
    t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn main() {
    let t = [rat(1, 1), rat(2, 1), rat(0, 1), rat(1, 3), rat(5, 1)];
    let g = GroupElement::new(rat(2, 1), rat(1, 2), rat(-1, 1)).unwrap();
    let h = GroupElement::new(rat(-1, 3), rat(0, 1), rat(4, 1)).unwrap();

    println!("t         = ({})", show(&t));
    println!("t.g       = ({})", show(&group_act(&t, &g).unwrap()));
    let twice = group_act(&group_act(&t, &g).unwrap(), &h).unwrap();
    let once = group_act(&t, &g.compose(&h)).unwrap();
    println!("(t.g).h   = ({})", show(&twice));
    println!("t.(gh)    = ({})", show(&once));
    assert_eq!(once, twice);
    println!("g preserves the pairing: {}", g.preserves_phi());

    // Delta = 0 here: 4a^3 - t2 a - b^2 = 0 and t2 = 0
    let singular = [rat(1, 1), rat(2, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
    println!("degenerate point: {}", group_act(&singular, &g).unwrap_err());
    println!("k = 0: {}", GroupElement::new(rat(0, 1), rat(0, 1), rat(0, 1)).unwrap_err());
}
