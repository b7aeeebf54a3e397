use kaclie::chevalley::*;
use kaclie::rootsys::{build_root_system, SimpleType};

fn types_up_to_rank(r: usize) -> Vec<SimpleType> {
    let mut v = Vec::new();
    for n in 1..=r {
        v.push(format!("A{n}"));
        if n >= 2 {
            v.push(format!("B{n}"));
        }
        if n >= 3 {
            v.push(format!("C{n}"));
        }
        if n >= 4 {
            v.push(format!("D{n}"));
        }
    }
    v.extend(["E6", "E7", "E8", "F4", "G2"].map(String::from));
    v.iter().map(|s| SimpleType::parse(s).unwrap()).filter(|t| t.rank <= r).collect()
}

#[test]
fn jacobi_holds_exhaustively_up_to_rank_5() {
    for t in types_up_to_rank(5) {
        let sc = structure_constants(&build_root_system(t).unwrap()).unwrap();
        let rep = verify_chevalley(&sc);
        assert!(rep.ok(), "{t}: {:?}", rep.first_failure);
    }
}

#[test]
fn flipping_one_sign_breaks_jacobi() {
    for t in ["A3", "B3", "G2"] {
        let sc = structure_constants(&build_root_system(SimpleType::parse(t).unwrap()).unwrap()).unwrap();
        let rs = sc.root_system();
        // psi_1 + psi_2 is a root in each of these
        let x = rs.index_of(rs.root(0)).unwrap();
        let y = rs.index_of(rs.root(1)).unwrap();
        let bad = sc.with_sign_flipped(x, y).unwrap();
        let rep = verify_chevalley(&bad);
        assert!(rep.magnitudes_ok && rep.antisymmetry_ok, "{t}");
        assert!(!rep.jacobi_ok, "{t}: sign flip not detected");
    }
}

#[test]
fn compact_real_form_is_integral() {
    for t in ["A2", "B2", "G2", "A4", "D4"] {
        let sc = structure_constants(&build_root_system(SimpleType::parse(t).unwrap()).unwrap()).unwrap();
        assert!(verify_compact_form(&sc).is_ok(), "{t}");
    }
}

#[test]
fn extraspecial_pairs_are_positive() {
    for t in types_up_to_rank(8) {
        let sc = structure_constants(&build_root_system(t).unwrap()).unwrap();
        let rs = sc.root_system();
        for j in rs.rank()..rs.num_positive() {
            // the extraspecial pair of a non-simple positive root uses the least simple root
            let xi = rs.root(j);
            let (i, eta) = (0..rs.rank())
                .find_map(|i| {
                    let mut e = xi.to_vec();
                    e[i] -= 1;
                    rs.index_of(&e).filter(|&k| rs.is_positive(k)).map(|k| (i, k))
                })
                .unwrap();
            let _ = eta;
            let mut e = xi.to_vec();
            e[i] -= 1;
            assert!(sc.get(rs.root(i), &e).unwrap() > 0, "{t} {xi:?}");
        }
    }
}
