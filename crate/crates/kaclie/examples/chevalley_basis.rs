//! Chevalley structure constants from extraspecial pairs, checked
//! exhaustively (Jacobi identity on every basis triple).
//!
//! cargo run --release --example chevalley_basis

use kaclie::chevalley::{structure_constants, verify_chevalley, verify_compact_form};
use kaclie::rootsys::{build_root_system, SimpleType};

fn main() -> kaclie::Result<()> {
    let rs = build_root_system(SimpleType::parse("G2")?)?;
    let sc = structure_constants(&rs)?;
    let (a, b) = (rs.root(0).to_vec(), rs.root(1).to_vec());
    println!("G2: N(alpha1, alpha2) = {}", sc.get(&a, &b)?);

    for name in ["B4", "F4", "E6", "E8"] {
        let sc = structure_constants(&build_root_system(SimpleType::parse(name)?)?)?;
        let rep = verify_chevalley(&sc);
        let compact = verify_compact_form(&sc)?;
        println!(
            "{name}: {} triples checked, ok = {}, {compact} compact-form brackets integral",
            rep.triples_checked,
            rep.ok()
        );
    }
    Ok(())
}
