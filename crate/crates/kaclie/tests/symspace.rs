use kaclie::kacauto::affine_diagram;
use kaclie::rootsys::{Series, SimpleType};
use kaclie::symspace::*;

fn ty(s: &str) -> SimpleType {
    SimpleType::parse(s).unwrap()
}

fn ones(s: &[u64]) -> Vec<usize> {
    (0..s.len()).filter(|&i| s[i] > 0).collect()
}

/// Expected verdicts, restated from the classification rules case by case.
fn expected(spec: &RowSpec) -> bool {
    let b = spec.base;
    let o = ones(&spec.s);
    match (b.series, spec.k) {
        (Series::A, 1) => {
            let n = b.rank + 1;
            let p = o[1] - o[0];
            !(n % 4 == 2 && 2 * p == n)
        }
        (Series::A, 2) => {
            let n = b.rank + 1;
            n % 2 == 1 || o[0] == 0
        }
        (Series::D, 2) if b.rank == 3 => o[0] == 0,
        (Series::C, 1) => {
            let n = b.rank;
            if o.len() == 2 {
                n.is_multiple_of(4) || n % 4 == 3
            } else {
                !(n % 4 == 2 && 2 * o[0] == n)
            }
        }
        (Series::B, 1) => false,
        (Series::D, 1) => {
            let n = b.rank;
            if o == [0, n] {
                n % 4 != 2
            } else if o == [0, 1] {
                true
            } else {
                !(n % 4 == 2 && 2 * o[0] == n)
            }
        }
        (Series::D, 2) => {
            let n = b.rank;
            !(n % 4 == 3 && 2 * o[0] + 1 == n)
        }
        (Series::E, _) if b.rank == 7 => o == [1],
        _ => true,
    }
}

#[test]
fn orientation_table_matches_classification() {
    let mut bad = Vec::new();
    for spec in table_row_specs(12) {
        let row = evaluate_row(&spec).unwrap();
        if row.satisfied != expected(&spec) {
            bad.push(format!("{} {} -> {}", row.algebra, row.label, row.satisfied));
        }
    }
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn shortcuts_agree_with_exhaustive_check() {
    for spec in table_row_specs(8) {
        let inv = involution_of_type(spec.base, spec.k, &spec.s).unwrap();
        let fast = condition_or(&inv).unwrap();
        let full = condition_or_full(&inv).unwrap();
        assert_eq!(fast.satisfied, full.satisfied, "{} {:?}", spec.base, spec.s);
        for w in &full.witnesses {
            assert!(verify_certificate(&inv, &w.certificate));
            assert_eq!(w.det, w.det_matrix);
        }
    }
}

#[test]
fn strongly_orthogonal_sets_are_maximal_abelian() {
    for spec in table_row_specs(7) {
        let inv = involution_of_type(spec.base, spec.k, &spec.s).unwrap();
        for tie in [TieBreak::Standard, TieBreak::Reversed] {
            let so = strongly_orthogonal_set_with(&inv, tie);
            assert_eq!(centralizer_dim_in_u1(&inv, &so), so.abelian_dim(), "{} {:?}", spec.base, spec.s);
        }
    }
}

#[test]
fn verdict_does_not_depend_on_tie_break() {
    for spec in table_row_specs(8) {
        let inv = involution_of_type(spec.base, spec.k, &spec.s).unwrap();
        let a = condition_or_with(&inv, &strongly_orthogonal_set_with(&inv, TieBreak::Standard)).unwrap();
        let b = condition_or_with(&inv, &strongly_orthogonal_set_with(&inv, TieBreak::Reversed)).unwrap();
        assert_eq!(a.satisfied, b.satisfied, "{} {:?}", spec.base, spec.s);
        assert_eq!(a.r, b.r);
    }
}

#[test]
fn classical_dimensions() {
    for spec in table_row_specs(12) {
        let inv = involution_of_type(spec.base, spec.k, &spec.s).unwrap();
        let o = ones(&spec.s);
        let (d0, d1) = match (spec.base.series, spec.k) {
            (Series::A, 1) => {
                let (n, p) = (spec.base.rank + 1, o[1] - o[0]);
                (p * p + (n - p) * (n - p) - 1, 2 * p * (n - p))
            }
            (Series::A, 2) => {
                let n = spec.base.rank + 1;
                if n % 2 == 0 && o[0] <= 1 {
                    (n * (n + 1) / 2, (n - 2) * (n + 1) / 2)
                } else {
                    (n * (n - 1) / 2, (n - 1) * (n + 2) / 2)
                }
            }
            (Series::C, 1) => {
                let n = spec.base.rank;
                if o.len() == 2 {
                    (n * n, n * (n + 1))
                } else {
                    let p = o[0];
                    (p * (2 * p + 1) + (n - p) * (2 * n - 2 * p + 1), 4 * p * (n - p))
                }
            }
            (Series::D, 1) if o == [0, spec.base.rank] => {
                let n = spec.base.rank;
                (n * n, n * (n - 1))
            }
            (Series::B, 1) | (Series::D, _) => {
                let n2 = 2 * spec.base.rank + (spec.base.series == Series::B) as usize;
                let p = match (spec.base.series, spec.k) {
                    (_, 2) => 2 * o[0] + 1,
                    _ if o.len() == 2 => 2,
                    _ => 2 * o[0],
                };
                (p * (p - 1) / 2 + (n2 - p) * (n2 - p - 1) / 2, p * (n2 - p))
            }
            _ => continue,
        };
        assert_eq!((inv.dim_u0, inv.dim_u1), (d0, d1), "{} {:?}", spec.base, spec.s);
    }
}

#[test]
fn exceptional_dimensions_and_names() {
    let cases = [
        ("E6", 1, vec![1, 1, 0, 0, 0, 0, 0], 46, 32, "(e6(-14), so(10)+R)"),
        ("E6", 1, vec![0, 0, 1, 0, 0, 0, 0], 38, 40, "(e6(2), su(2)+su(6))"),
        ("E6", 2, vec![1, 0, 0, 0, 0], 52, 26, "(e6(-26), f4)"),
        ("E6", 2, vec![0, 1, 0, 0, 0], 36, 42, "(e6(6), sp(4))"),
        ("E7", 1, vec![0, 1, 0, 0, 0, 0, 0, 0], 69, 64, "(e7(-5), su(2)+so(12))"),
        ("E8", 1, vec![0, 1, 0, 0, 0, 0, 0, 0, 0], 120, 128, "(e8(8), so(16))"),
        ("E8", 1, vec![0, 0, 0, 0, 0, 0, 0, 0, 1], 136, 112, "(e8(-24), su(2)+e7)"),
        ("F4", 1, vec![0, 1, 0, 0, 0], 24, 28, "(f4(4), su(2)+sp(3))"),
        ("F4", 1, vec![0, 0, 0, 0, 1], 36, 16, "(f4(-20), so(9))"),
        ("G2", 1, vec![0, 0, 1], 6, 8, "(g2(2), su(2)+su(2))"),
    ];
    for (t, k, s, d0, d1, name) in cases {
        let inv = involution_of_type(ty(t), k, &s).unwrap();
        assert_eq!((inv.dim_u0, inv.dim_u1), (d0, d1), "{t} {s:?}");
        assert_eq!(inv.names.1, name, "{t} {s:?}");
    }
}

#[test]
fn hermitian_classification() {
    // su(p, q) is of tube type iff p = q
    for (n, p, tube) in [(4, 2, true), (5, 2, false), (6, 3, true), (6, 1, false)] {
        let mut s = vec![0u64; n];
        s[0] = 1;
        s[p] = 1;
        let inv = involution_of_type(ty(&format!("A{}", n - 1)), 1, &s).unwrap();
        let so = strongly_orthogonal_set(&inv);
        let want = if tube { HermitianKind::Tube } else { HermitianKind::NonTube };
        assert_eq!(hermitian_tube_classify(&inv, &so), want, "su({p},{})", n - p);
    }
    let inv = involution_of_type(ty("C3"), 1, &[1, 0, 0, 1]).unwrap();
    assert_eq!(hermitian_tube_classify(&inv, &strongly_orthogonal_set(&inv)), HermitianKind::Tube);
    let inv = involution_of_type(ty("E6"), 1, &[1, 1, 0, 0, 0, 0, 0]).unwrap();
    assert_eq!(hermitian_tube_classify(&inv, &strongly_orthogonal_set(&inv)), HermitianKind::NonTube);
    let inv = involution_of_type(ty("B3"), 1, &[0, 0, 0, 1]).unwrap();
    assert_eq!(hermitian_tube_classify(&inv, &strongly_orthogonal_set(&inv)), HermitianKind::NotHermitian);
}

#[test]
fn involution_class_counts() {
    // inner + outer classes of involutions
    for (t, count) in [
        ("A3", 4),
        ("A4", 3),
        ("B3", 3),
        ("C4", 3),
        ("D4", 4),
        ("D5", 6),
        ("E6", 4),
        ("E7", 3),
        ("E8", 2),
        ("F4", 2),
        ("G2", 1),
    ] {
        let c = involution_classes(ty(t)).unwrap();
        assert_eq!(c.len(), count, "{t}: {:?}", c.iter().map(|c| c.label()).collect::<Vec<_>>());
    }
    assert!(affine_diagram(ty("E7"), 2).is_err());
}
