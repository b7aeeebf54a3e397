#![allow(clippy::needless_range_loop)]

use kaclie::linalg::{q, solve};
use kaclie::rootsys::*;
use num::rational::BigRational;
use num::traits::ToPrimitive;
use std::collections::HashSet;

fn ty(s: &str) -> SimpleType {
    SimpleType::parse(s).unwrap()
}

/// E8 roots in the even coordinate model, doubled to stay integral.
fn e8_model_roots() -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            for (a, b) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                let mut v = vec![0; 8];
                v[i] = a;
                v[j] = b;
                out.push(v);
            }
        }
    }
    for m in 0u32..256 {
        if m.count_ones() % 2 == 0 {
            out.push((0..8).map(|i| if m >> i & 1 == 1 { -1 } else { 1 }).collect());
        }
    }
    out
}

#[test]
fn e8_matches_coordinate_model() {
    let mut simple = vec![vec![1, -1, -1, -1, -1, -1, -1, 1]];
    let mut a2 = vec![0; 8];
    a2[0] = 2;
    a2[1] = 2;
    simple.push(a2);
    for i in 0..6 {
        let mut v = vec![0; 8];
        v[i] = -2;
        v[i + 1] = 2;
        simple.push(v);
    }
    // columns = simple roots
    let m: Vec<Vec<BigRational>> = (0..8).map(|r| (0..8).map(|c| q(simple[c][r])).collect()).collect();
    let model: HashSet<Vec<i64>> = e8_model_roots()
        .iter()
        .map(|v| {
            let b: Vec<BigRational> = v.iter().map(|&x| q(x)).collect();
            solve(&m, &b, 8).unwrap().iter().map(|c| c.to_integer().to_i64().unwrap()).collect()
        })
        .collect();
    assert_eq!(model.len(), 240);
    let rs = build_root_system(ty("E8")).unwrap();
    let ours: HashSet<Vec<i64>> = rs.roots().iter().cloned().collect();
    assert_eq!(ours, model);
    assert_eq!(rs.highest_root(), &[2, 3, 4, 6, 5, 4, 3, 2]);
}

#[test]
fn root_counts_and_dimensions() {
    for (t, pos, dim) in [
        ("A1", 1, 3),
        ("A7", 28, 63),
        ("B5", 25, 55),
        ("C6", 36, 78),
        ("D7", 42, 91),
        ("E6", 36, 78),
        ("E7", 63, 133),
        ("E8", 120, 248),
        ("F4", 24, 52),
        ("G2", 6, 14),
    ] {
        let rs = build_root_system(ty(t)).unwrap();
        assert_eq!(rs.num_positive(), pos, "{t}");
        assert_eq!(ty(t).dim(), dim, "{t}");
        assert_eq!(rs.roots().len(), 2 * pos);
    }
}

#[test]
fn cartan_pairings() {
    let rs = build_root_system(ty("G2")).unwrap();
    // short simple root psi1, long psi2
    assert_eq!(rs.cartan_pairing(&[0, 1], &[1, 0]).unwrap(), -3);
    assert_eq!(rs.cartan_pairing(&[1, 0], &[0, 1]).unwrap(), -1);
    assert_eq!(rs.root_string(&[1, 0], &[0, 1]).unwrap(), (0, 3));
    assert!(rs.cartan_pairing(&[2, 0], &[0, 1]).is_err());
    let b3 = build_root_system(ty("B3")).unwrap();
    assert_eq!(b3.cartan_pairing(&[0, 1, 0], &[0, 0, 1]).unwrap(), -2);
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
}

#[test]
fn a2_and_a3_transport_by_brute_force() {
    // roots e_i - e_j,  coefficient vector on psi_k = e_k - e_{k+1}
    for n in [3usize, 4] {
        let rs = build_root_system(ty(&format!("A{}", n - 1))).unwrap();
        let coeffs = |i: usize, j: usize| -> Vec<i64> {
            let mut v = vec![0; n - 1];
            let (lo, hi, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
            for k in lo..hi {
                v[k] = s;
            }
            v
        };
        let mut perms: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &perms {
                for x in (0..n).filter(|x| !p.contains(x)) {
                    let mut q = p.clone();
                    q.push(x);
                    next.push(q);
                }
            }
            perms = next;
        }
        for p in perms {
            let image: Vec<Vec<i64>> =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| coeffs(p[i], p[j])).collect();
            let t = transport_to_positive(&rs, &image).unwrap();
            assert_eq!(t.word.len(), inversions(&p), "{p:?}");
            assert_eq!(t.sign, if inversions(&p).is_multiple_of(2) { 1 } else { -1 });
        }
    }
}

#[test]
fn diagram_automorphism_counts() {
    for (t, n) in [("A1", 1), ("A4", 2), ("D4", 6), ("D5", 2), ("E6", 2), ("E7", 1), ("B3", 1), ("G2", 1)] {
        let rs = build_root_system(ty(t)).unwrap();
        assert_eq!(rs.diagram_automorphisms().len(), n, "{t}");
    }
}

#[test]
fn reflections_permute_roots() {
    for t in ["B4", "C4", "F4", "G2", "E6"] {
        let rs = build_root_system(ty(t)).unwrap();
        let set: HashSet<&[i64]> = rs.roots().iter().map(|r| r.as_slice()).collect();
        for i in 0..rs.rank() {
            for r in rs.roots() {
                assert!(set.contains(rs.reflect(rs.root(i), r).as_slice()));
            }
        }
    }
}

mod transport_properties {
    use kaclie::rootsys::{build_root_system, transport_to_positive, SimpleType};
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn transport_undoes_random_words(
            t in prop::sample::select(vec!["A4", "B3", "C4", "D5", "E6", "F4", "G2"]),
            word in prop::collection::vec(0usize..8, 0..24),
        ) {
            let rs = build_root_system(SimpleType::parse(t).unwrap()).unwrap();
            let n = rs.rank();
            let mut image: Vec<Vec<i64>> = rs.positive_roots().to_vec();
            for &i in word.iter().filter(|&&i| i < n) {
                let b = rs.root(i).to_vec();
                image = image.iter().map(|x| rs.reflect(&b, x)).collect();
            }
            let tr = transport_to_positive(&rs, &image).unwrap();
            // reduced: length equals the number of positive roots made negative
            let flipped = image.iter().filter(|x| x.iter().any(|&c| c < 0)).count();
            prop_assert_eq!(tr.word.len(), flipped);
            prop_assert_eq!(tr.sign, if flipped % 2 == 0 { 1 } else { -1 });
            let mut back = image.clone();
            for &i in &tr.word {
                let b = rs.root(i).to_vec();
                back = back.iter().map(|x| rs.reflect(&b, x)).collect();
            }
            back.sort();
            let mut pos = rs.positive_roots().to_vec();
            pos.sort();
            prop_assert_eq!(back, pos);
        }
    }
}
