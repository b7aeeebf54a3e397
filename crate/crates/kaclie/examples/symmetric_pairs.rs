//! Involutions, their symmetric pairs and the orientation condition.
//!
//! cargo run --release --example symmetric_pairs

use kaclie::rootsys::SimpleType;
use kaclie::symspace::{
    condition_or, hermitian_tube_classify, involution, involution_classes, strongly_orthogonal_set,
};

fn main() -> kaclie::Result<()> {
    for name in ["A3", "C4", "D6", "E6", "E7", "F4"] {
        for c in involution_classes(SimpleType::parse(name)?)? {
            let inv = involution(&c)?;
            let so = strongly_orthogonal_set(&inv);
            let v = condition_or(&inv)?;
            println!(
                "{name}{:<18} {:<24} dims {:>3}/{:<3} r = {} {:?}: {}",
                c.label(),
                inv.names.1,
                inv.dim_u0,
                inv.dim_u1,
                so.r(),
                hermitian_tube_classify(&inv, &so),
                if v.satisfied { "oriented" } else { "not oriented" }
            );
        }
    }
    Ok(())
}
