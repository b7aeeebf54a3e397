//! Irreducible polynomials with exactly two non-real roots, and rational
//! shifts prescribing the signs of the real roots.
//!
//! cargo run --example number_fields

use kaclie::numfield::{construct_two_nonreal, default_params, primitive_shift, sturm_count, RatPoly};

fn main() -> kaclie::Result<()> {
    for n in [2, 3, 5, 8] {
        let (k, ks) = default_params(n);
        let r = construct_two_nonreal(n, k, &ks)?;
        println!(
            "degree {n}: h = {}  (q = {}, {} real roots, Eisenstein at 2: {})",
            r.h, r.q, r.real_roots, r.eisenstein_at_2
        );
    }

    let p = RatPoly::from_ints(&[0, -4, 0, 1]);
    println!("{p} has {} real roots", sturm_count(&p, None, None)?);
    let s = primitive_shift(&p, 1, 2)?;
    println!("shift by {}: {} has 1 positive and 2 negative roots", s.r, s.shifted);
    Ok(())
}
