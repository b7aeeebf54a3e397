//! Finite-order automorphisms from Kac coordinates: order, fixed subalgebra
//! and eigenspace dimensions, plus the structure of a diagram fold.
//!
//! cargo run --example kac_automorphisms

use kaclie::kacauto::{
    affine_diagram, classes_of_order, eigenspace_dimensions, fixed_subalgebra, kac_automorphism, verify_fold_structure,
    KacCoordinates,
};
use kaclie::rootsys::SimpleType;

fn main() -> kaclie::Result<()> {
    let cases: [(&str, u32, &[u64]); 4] = [
        ("A5", 2, &[1, 0, 0, 0]),
        ("E6", 2, &[1, 0, 0, 0, 0]),
        ("D4", 3, &[1, 0, 0]),
        ("E8", 1, &[0, 1, 0, 0, 0, 0, 0, 0, 0]),
    ];
    for (t, k, s) in cases {
        let d = affine_diagram(SimpleType::parse(t)?, k)?;
        let c = KacCoordinates::new(&d, s)?;
        let auto = kac_automorphism(&c)?;
        let fixed = fixed_subalgebra(&c)?;
        let dims = eigenspace_dimensions(&auto)?;
        println!("{t}{}: order {}, fixed {} , eigenspaces {dims:?}", c.label(), auto.order(), fixed.describe());
    }

    let d = affine_diagram(SimpleType::parse("E7")?, 1)?;
    println!("E7 involution classes: {:?}", classes_of_order(&d, 2));

    let fold = verify_fold_structure(SimpleType::parse("A4")?, 2)?;
    println!(
        "A4 fold: highest root in residue {}, orbit matrix {:?} (det {})",
        fold.highest_root_residue, fold.orbit_matrix, fold.orbit_matrix_det
    );
    Ok(())
}
