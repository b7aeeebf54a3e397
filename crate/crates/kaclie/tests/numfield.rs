use num::{BigInt, BigRational, One, Zero};
use proptest::prelude::*;

use kaclie::numfield::*;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn qf(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn sturm_counts() {
    // (x^2 + 2)(x - 2)(x - 4)
    let p = &RatPoly::from_ints(&[2, 0, 1]) * &RatPoly::from_roots(&[q(2), q(4)]);
    assert_eq!(sturm_count(&p, None, None).unwrap(), 2);
    assert_eq!(sturm_count(&p, Some(&q(2)), Some(&q(4))).unwrap(), 1);
    assert_eq!(sturm_count(&p, Some(&q(1)), Some(&q(2))).unwrap(), 1);
    assert_eq!(sturm_count(&p, Some(&q(5)), None).unwrap(), 0);
    assert!(sturm_count(&RatPoly::from_roots(&[q(1), q(1)]), None, None).is_err());
}

#[test]
fn eisenstein_examples() {
    assert!(eisenstein(&RatPoly::from_ints(&[2, 2, 0, 1]), 2).unwrap());
    assert!(!eisenstein(&RatPoly::from_ints(&[4, 0, 1]), 2).unwrap());
    assert!(!eisenstein(&RatPoly::from_ints(&[2, 1, 1]), 2).unwrap());
    assert!(eisenstein(&RatPoly::new(vec![qf(1, 2), q(1)]), 2).is_err());
}

#[test]
fn root_isolation() {
    let p = RatPoly::from_roots(&[q(-3), qf(1, 3), qf(1, 2), q(7)]);
    let iv = isolate_real_roots(&p).unwrap();
    assert_eq!(iv.len(), 4);
    for ((lo, hi), r) in iv.iter().zip([q(-3), qf(1, 3), qf(1, 2), q(7)]) {
        assert!(*lo < r && r <= *hi);
    }
}

#[test]
fn construction_for_small_degrees() {
    for n in 2..=12 {
        let (k, ks) = default_params(n);
        let r = construct_two_nonreal(n, k, &ks).unwrap();
        assert!(r.ok(), "degree {n}: {}", r.h);
        assert_eq!(r.h.degree(), Some(n));
        assert_eq!(sturm_count(&r.h, None, None).unwrap(), n - 2);
        if let Some(e) = &r.epsilon {
            // q is the least odd integer with 2/q < epsilon
            let two = q(2);
            assert!(&two / BigRational::from_integer(r.q.clone()) < *e);
            if r.q > BigInt::one() {
                let prev = BigRational::from_integer(&r.q - BigInt::from(2));
                assert!(!(&two / prev < *e));
            }
        } else {
            assert_eq!(r.q, BigInt::one());
        }
    }
}

#[test]
fn construction_rejects_bad_parameters() {
    assert!(construct_two_nonreal(1, 2, &[]).is_err());
    assert!(construct_two_nonreal(4, 2, &[2]).is_err());
    assert!(construct_two_nonreal(4, 3, &[2, 4]).is_err());
    assert!(construct_two_nonreal(4, 2, &[4, 2]).is_err());
    assert!(construct_two_nonreal(4, 2, &[2, 2]).is_err());
}

#[test]
fn degree_two_default_avoids_four() {
    // k = 2 gives h = q x^2 + 2q + 2 with 4 | 2q + 2 for odd q
    let r = construct_two_nonreal(2, 2, &[]).unwrap();
    assert!(!r.eisenstein_at_2);
    assert!(construct_two_nonreal(2, 4, &[]).unwrap().ok());
}

#[test]
fn primitive_shifts() {
    let p = RatPoly::from_ints(&[-2, 0, 1]);
    let r = primitive_shift(&p, 1, 1).unwrap();
    assert!(r.r.is_zero());
    let r = primitive_shift(&p, 2, 0).unwrap();
    // simplest r below -sqrt 2
    assert_eq!(r.r, q(-2));
    assert_eq!((r.positive_roots, r.negative_roots), (2, 0));
    let r = primitive_shift(&p, 0, 2).unwrap();
    assert_eq!(r.r, q(2));
    // x (x^2 - 4): roots -2, 0, 2
    let c = RatPoly::from_ints(&[0, -4, 0, 1]);
    let r = primitive_shift(&c, 1, 2).unwrap();
    assert_eq!(r.r, q(1));
    assert_eq!(sturm_count(&r.shifted, Some(&q(0)), None).unwrap(), 1);
    assert!(primitive_shift(&p, 2, 1).is_err());
}

#[test]
fn simplest_shift_in_narrow_gap() {
    // roots 1/3 and 1/2: the gap (1/3, 1/2) has simplest element 2/5
    let p = RatPoly::from_roots(&[qf(1, 3), qf(1, 2)]);
    let r = primitive_shift(&p, 1, 1).unwrap();
    assert_eq!(r.r, qf(2, 5));
}

proptest! {
    #[test]
    fn construction_with_random_parameters(n in 3usize..8, k in 1i64..5, steps in prop::collection::vec(1i64..4, 6)) {
        let mut ks = Vec::new();
        let mut cur = 0;
        for s in steps.iter().take(n - 2) {
            cur += 2 * s;
            ks.push(cur);
        }
        let r = construct_two_nonreal(n, 2 * k, &ks).unwrap();
        prop_assert_eq!(sturm_count(&r.h, None, None).unwrap(), n - 2);
        prop_assert_eq!(r.real_roots, n - 2);
    }

    #[test]
    fn shift_moves_roots(roots in prop::collection::btree_set(-20i64..20, 1..6), split in 0usize..6) {
        let roots: Vec<BigRational> = roots.into_iter().map(q).collect();
        let l = split.min(roots.len());
        let p = RatPoly::from_roots(&roots);
        let r = primitive_shift(&p, roots.len() - l, l).unwrap();
        prop_assert_eq!(r.negative_roots, l);
        prop_assert_eq!(r.positive_roots, roots.len() - l);
        prop_assert!(r.shifted.eval(&BigRational::zero()) != BigRational::zero());
        prop_assert_eq!(r.shifted, p.shift(&r.r));
    }
}
