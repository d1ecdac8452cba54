#![allow(dead_code)]

use jacobi_gmd::algebra::{rat, Monomial, Poly, Rational, RingElem, Var};
use jacobi_gmd::vector_fields::VectorField;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational<R: Rng>(r: &mut R) -> Rational {
    rat(r.gen_range(-9..=9), r.gen_range(1..=4))
}

pub fn nonzero_rational<R: Rng>(r: &mut R) -> Rational {
    loop {
        let x = small_rational(r);
        if x != rat(0, 1) {
            return x;
        }
    }
}

pub fn random_poly<R: Rng>(r: &mut R, terms: usize, max_exp: u32) -> Poly {
    let mut p = Poly::zero();
    for _ in 0..r.gen_range(1..=terms) {
        let m = Monomial(std::array::from_fn(|_| r.gen_range(0..=max_exp)));
        p.add_term(m, small_rational(r));
    }
    p
}

/// Random element with small numerator and denominator `a^p b^q Delta^r`, `r <= 1`.
pub fn random_elem<R: Rng>(r: &mut R) -> RingElem {
    let p = random_poly(r, 3, 2);
    let delta = if r.gen_bool(0.2) { 1 } else { 0 };
    RingElem::new(p, r.gen_range(0..=1), r.gen_range(0..=1), delta)
}

/// Point with `a, b, Delta` nonzero.
pub fn admissible_point<R: Rng>(r: &mut R) -> [Rational; 5] {
    loop {
        let t: [Rational; 5] = std::array::from_fn(|_| small_rational(r));
        if t[0] != rat(0, 1) && t[1] != rat(0, 1) && RingElem::delta().eval(&t).is_ok_and(|d| d != rat(0, 1)) {
            return t;
        }
    }
}

/// All monomials in `a, b, c, t1, t2` of the given weight.
pub fn monomials_of_weight(w: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let ws = Var::ALL.map(Var::weight);
    let mut e = [0u32; 5];
    fn rec(i: usize, left: i64, ws: &[i64; 5], e: &mut [u32; 5], out: &mut Vec<Monomial>) {
        if i == 5 {
            if left == 0 {
                out.push(Monomial(*e));
            }
            return;
        }
        let mut k = 0;
        while k as i64 * ws[i] <= left {
            e[i] = k;
            rec(i + 1, left - k as i64 * ws[i], ws, e, out);
            k += 1;
        }
        e[i] = 0;
    }
    rec(0, w, &ws, &mut e, &mut out);
    out
}

/// Random weight-homogeneous polynomial of weight `w`, restricted to `allowed` monomials.
pub fn random_homogeneous<R: Rng>(r: &mut R, w: i64, allowed: impl Fn(&Monomial) -> bool) -> Poly {
    let ms: Vec<Monomial> = monomials_of_weight(w).into_iter().filter(|m| allowed(m)).collect();
    let mut p = Poly::zero();
    if ms.is_empty() {
        return p;
    }
    for _ in 0..r.gen_range(1..=4) {
        p.add_term(ms[r.gen_range(0..ms.len())], nonzero_rational(r));
    }
    p
}

pub fn random_field<R: Rng>(r: &mut R) -> VectorField {
    VectorField::new(std::array::from_fn(|_| {
        if r.gen_bool(0.4) {
            RingElem::zero()
        } else {
            RingElem::from_poly(random_poly(r, 2, 2))
        }
    }))
}
