//! Poincaré polynomials attached to sets of simple roots, coefficient
//! supports, and cycle degrees of oriented involutions.
//!
//! cargo run --release --example poincare_polynomials

use kaclie::cohomology::{check_zero_pattern, coefficient_support, poincare_factored, th2_report};
use kaclie::rootsys::{build_root_system, SimpleType};

fn main() -> kaclie::Result<()> {
    let e6 = build_root_system(SimpleType::parse("E6")?)?;
    let f = poincare_factored(&e6, &[3])?;
    println!("E6 {{psi4}}: {f}\n  = {}", f.expand());

    let c8 = build_root_system(SimpleType::parse("C8")?)?;
    println!("C8 degree 28: {:?}", coefficient_support(&c8, 28)?.labels());

    let r = th2_report(SimpleType::parse("F4")?)?;
    for row in &r.rows {
        println!("F4 degrees {}/{}: {:?}", row.degree, row.dual_degree, row.support.labels());
    }

    let z = check_zero_pattern(6)?;
    println!("(1+t)(1+t^3)...(1+t^13) vanishes exactly in degrees {:?}", z.zero_degrees);
    Ok(())
}
