//! Builds root systems, prints their Cartan data and transports a positive
//! system back to the standard one by a reduced Weyl word.
//!
//! cargo run --example root_systems

use kaclie::rootsys::{build_root_system, transport_to_positive, SimpleType};

fn main() -> kaclie::Result<()> {
    for name in ["A3", "B3", "G2", "E8"] {
        let t = SimpleType::parse(name)?;
        let rs = build_root_system(t)?;
        println!(
            "{t}: {} positive roots, dim {}, exponents {:?}, highest root {:?}",
            rs.num_positive(),
            t.dim(),
            t.exponents(),
            rs.highest_root()
        );
    }

    let rs = build_root_system(SimpleType::parse("B3")?)?;
    println!("B3 Cartan matrix: {:?}", rs.cartan);
    // apply s_1 s_2 s_3 to the positive roots, then recover a reduced word
    let mut image = rs.positive_roots().to_vec();
    for i in [0, 1, 2] {
        let b = rs.root(i).to_vec();
        image = image.iter().map(|x| rs.reflect(&b, x)).collect();
    }
    let tr = transport_to_positive(&rs, &image)?;
    println!("transport word {:?}, sign {}", tr.word, tr.sign);
    Ok(())
}
