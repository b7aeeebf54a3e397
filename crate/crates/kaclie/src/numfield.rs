//! Exact real-root counting and the polynomial constructions used to build
//! number fields with a prescribed number of real places.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::Integer;
use serde::Serialize;

use crate::error::{domain, internal, Result};

/// Polynomial in `x` with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> RatPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> RatPoly {
        RatPoly::new(c.iter().map(|&v| rat(v)).collect())
    }

    pub fn constant(c: BigRational) -> RatPoly {
        RatPoly::new(vec![c])
    }

    /// `x - a`.
    pub fn linear_root(a: BigRational) -> RatPoly {
        RatPoly::new(vec![-a, BigRational::one()])
    }

    /// `prod (x - r)` over the given roots.
    pub fn from_roots(roots: &[BigRational]) -> RatPoly {
        roots.iter().fold(RatPoly::from_ints(&[1]), |acc, r| &acc * &RatPoly::linear_root(r.clone()))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * rat(i as i64)).collect())
    }

    pub fn scale(&self, s: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> RatPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(BigRational::one() / self.leading()))
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (RatPoly::new(vec![]), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        let lead = d.leading();
        for i in (dd..r.len()).rev() {
            let c = &r[i] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i - dd + j] -= &c * dc;
            }
            q[i - dd] = c;
        }
        r.truncate(dd);
        (RatPoly::new(q), RatPoly::new(r))
    }

    pub fn gcd(&self, o: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> RatPoly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// `p(x + r)`.
    pub fn shift(&self, r: &BigRational) -> RatPoly {
        let lin = RatPoly::new(vec![r.clone(), BigRational::one()]);
        self.coeffs.iter().rev().fold(RatPoly::new(vec![]), |acc, c| &(&acc * &lin) + &RatPoly::constant(c.clone()))
    }

    /// Integer coefficients, if all coefficients are integers.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    /// Every real root has absolute value below this bound.
    pub fn root_bound(&self) -> BigRational {
        let lead = self.leading().abs();
        let m = self.coeffs.iter().map(|c| c.abs() / &lead).fold(BigRational::zero(), |a, b| if b > a { b } else { a });
        m + BigRational::one()
    }
}

impl std::ops::Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = BigRational::zero();
        RatPoly::new((0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z)).collect())
    }
}

impl std::ops::Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::new(vec![]);
        }
        let mut c = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        RatPoly::new(c)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            let coef = if a.is_one() && i > 0 { String::new() } else { a.to_string() };
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{coef}x")?,
                _ => write!(f, "{coef}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for RatPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

/// The Sturm chain of a squarefree polynomial.
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(p: &RatPoly) -> Result<SturmChain> {
        if p.degree().unwrap_or(0) == 0 {
            return domain("Sturm counting needs a polynomial of positive degree");
        }
        if !p.is_squarefree() {
            return domain(format!("{p} is not squarefree; divide by gcd(p, p') first"));
        }
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(r.scale(&rat(-1)));
        }
        Ok(SturmChain { chain })
    }

    fn changes(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0;
        let mut n = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
        n
    }

    /// Sign variations at `x`, or at `-inf`/`+inf` for `None` with `neg_inf`.
    fn variations(&self, x: Option<&BigRational>, neg_inf: bool) -> usize {
        let sgn = |v: &BigRational| -> i8 {
            if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            }
        };
        match x {
            Some(x) => Self::changes(self.chain.iter().map(|p| sgn(&p.eval(x)))),
            None => Self::changes(self.chain.iter().map(|p| {
                let s = sgn(&p.leading());
                if neg_inf && p.degree().unwrap_or(0) % 2 == 1 {
                    -s
                } else {
                    s
                }
            })),
        }
    }

    /// Number of distinct real roots in `(lo, hi]`; `None` is unbounded.
    pub fn count(&self, lo: Option<&BigRational>, hi: Option<&BigRational>) -> usize {
        let a = self.variations(lo, true);
        let b = self.variations(hi, false);
        a.saturating_sub(b)
    }
}

/// Real roots of a squarefree `p` in `(lo, hi]`.
pub fn sturm_count(p: &RatPoly, lo: Option<&BigRational>, hi: Option<&BigRational>) -> Result<usize> {
    if let (Some(a), Some(b)) = (lo, hi) {
        if a > b {
            return domain("empty interval");
        }
    }
    Ok(SturmChain::new(p)?.count(lo, hi))
}

/// Eisenstein's criterion at `prime`.
pub fn eisenstein(p: &RatPoly, prime: u64) -> Result<bool> {
    let Some(c) = p.integer_coeffs() else {
        return domain("Eisenstein's criterion needs integer coefficients");
    };
    if c.len() < 2 {
        return Ok(false);
    }
    let pr = BigInt::from(prime);
    let divides = |x: &BigInt| x.is_multiple_of(&pr);
    let n = c.len() - 1;
    Ok(!divides(&c[n]) && c[..n].iter().all(divides) && !c[0].is_multiple_of(&(&pr * &pr)))
}

/// Closed rational interval.
#[derive(Clone, Debug)]
struct Iv(BigRational, BigRational);

impl Iv {
    fn mul(&self, o: &Iv) -> Iv {
        let c = [&self.0 * &o.0, &self.0 * &o.1, &self.1 * &o.0, &self.1 * &o.1];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Iv(lo, hi)
    }
}

/// Interval Horner evaluation: an enclosure of `p([a, b])`.
fn enclose(p: &RatPoly, a: &BigRational, b: &BigRational) -> Iv {
    let x = Iv(a.clone(), b.clone());
    let mut acc = Iv(BigRational::zero(), BigRational::zero());
    for c in p.coeffs.iter().rev() {
        let m = acc.mul(&x);
        acc = Iv(m.0 + c, m.1 + c);
    }
    acc
}

/// Isolating intervals `(a, b]`, one real root each, in increasing order.
pub fn isolate_real_roots(p: &RatPoly) -> Result<Vec<(BigRational, BigRational)>> {
    let s = SturmChain::new(p)?;
    let b = p.root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = s.count(Some(&lo), Some(&hi));
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / rat(2);
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort();
    Ok(out)
}

/// Certified positive lower bound on `|f|` at the real critical points of `f`,
/// or `None` when `f` has none.
pub fn critical_value_bound(f: &RatPoly) -> Result<Option<BigRational>> {
    let g = f.derivative();
    if g.degree().unwrap_or(0) == 0 {
        return Ok(None);
    }
    let g = g.squarefree_part();
    let s = SturmChain::new(&g)?;
    let mut best: Option<BigRational> = None;
    for (mut lo, mut hi) in isolate_real_roots(&g)? {
        let bound = loop {
            if g.eval(&hi).is_zero() {
                break f.eval(&hi).abs();
            }
            let e = enclose(f, &lo, &hi);
            if e.0.is_positive() || e.1.is_negative() {
                break if e.0.is_positive() { e.0 } else { -e.1 };
            }
            let mid = (&lo + &hi) / rat(2);
            if s.count(Some(&lo), Some(&mid)) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        };
        if bound.is_zero() {
            return internal("f vanishes at a critical point: f is not squarefree");
        }
        best = Some(match best {
            Some(b) if b < bound => b,
            _ => bound,
        });
    }
    Ok(best)
}

/// Output of the "exactly two non-real roots" construction.
#[derive(Clone, Debug, Serialize)]
pub struct TwoNonreal {
    pub degree: usize,
    pub k: i64,
    pub ks: Vec<i64>,
    /// `f = (x^2 + k)(x - k_1)...(x - k_{n-2})`.
    pub f: RatPoly,
    /// Certified lower bound on `|f|` at the real critical points; `None`
    /// when `f` is monotone on the real line.
    #[serde(serialize_with = "ser_opt_rat")]
    pub epsilon: Option<BigRational>,
    /// Least odd integer with `2/q < epsilon` (`1` without critical points).
    #[serde(serialize_with = "ser_int")]
    pub q: BigInt,
    /// `h = q f + 2`.
    pub h: RatPoly,
    pub real_roots: usize,
    pub eisenstein_at_2: bool,
}

fn ser_rat<S: serde::Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_opt_rat<S: serde::Serializer>(v: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

fn ser_int<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl TwoNonreal {
    pub fn ok(&self) -> bool {
        self.real_roots + 2 == self.degree && self.eisenstein_at_2
    }
}

/// Default parameters: `k_i = 2i` and `k = 2`, except `k = 4` in degree 2
/// where `k = 2` would make the constant term of `h` divisible by 4.
pub fn default_params(n: usize) -> (i64, Vec<i64>) {
    let k = if n == 2 { 4 } else { 2 };
    (k, (1..=n.saturating_sub(2)).map(|i| 2 * i as i64).collect())
}

/// Builds `h = q f + 2` of degree `n` with exactly `n - 2` real roots.
pub fn construct_two_nonreal(n: usize, k: i64, ks: &[i64]) -> Result<TwoNonreal> {
    if n < 2 {
        return domain("degree must be at least 2");
    }
    if ks.len() != n - 2 {
        return domain(format!("degree {n} needs {} real parameters, got {}", n - 2, ks.len()));
    }
    if k <= 0 || k % 2 != 0 || ks.iter().any(|&x| x <= 0 || x % 2 != 0) {
        return domain("parameters must be even and positive");
    }
    if ks.windows(2).any(|w| w[0] >= w[1]) {
        return domain("parameters k_1 < ... < k_{n-2} must be strictly increasing");
    }
    let roots: Vec<BigRational> = ks.iter().map(|&x| rat(x)).collect();
    let f = &RatPoly::from_ints(&[k, 0, 1]) * &RatPoly::from_roots(&roots);
    let epsilon = critical_value_bound(&f)?;
    let two = rat(2);
    // least odd q with q > 2 / epsilon; any odd q when f is monotone
    let q = match &epsilon {
        Some(e) => {
            let mut q = (&two / e).floor().to_integer() + BigInt::one();
            if q.is_even() {
                q += BigInt::one();
            }
            if !(&two / BigRational::from_integer(q.clone()) < *e) {
                return internal("q does not satisfy 2/q < epsilon");
            }
            q
        }
        None => BigInt::one(),
    };
    let h = &f.scale(&BigRational::from_integer(q.clone())) + &RatPoly::constant(two);
    let real_roots = sturm_count(&h, None, None)?;
    let eisenstein_at_2 = eisenstein(&h, 2)?;
    Ok(TwoNonreal { degree: n, k, ks: ks.to_vec(), f, epsilon, q, h, real_roots, eisenstein_at_2 })
}

/// Simplest rational `c` (smallest denominator, then numerator) with
/// `test(c) == Equal`, where `test` is `Less` left of a single open gap and
/// `Greater` right of it.
fn simplest_in_gap(test: &dyn Fn(&BigRational) -> Ordering) -> BigRational {
    let zero = BigRational::zero();
    match test(&zero) {
        Ordering::Equal => zero,
        Ordering::Less => simplest_positive(test),
        Ordering::Greater => {
            let flipped = |c: &BigRational| test(&-c).reverse();
            -simplest_positive(&flipped)
        }
    }
}

/// Stern-Brocot descent with runs found by exponential and binary search.
fn simplest_positive(test: &dyn Fn(&BigRational) -> Ordering) -> BigRational {
    let (mut a, mut b, mut c, mut d) = (BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero());
    let frac = |n: &BigInt, m: &BigInt| BigRational::new(n.clone(), m.clone());
    loop {
        let m = frac(&(&a + &c), &(&b + &d));
        match test(&m) {
            Ordering::Equal => return m,
            Ordering::Less => {
                // lo moves right: (a + k c)/(b + k d)
                let at = |k: &BigInt| frac(&(&a + k * &c), &(&b + k * &d));
                let k = max_run(&|k| test(&at(k)) == Ordering::Less);
                let (na, nb) = (&a + &k * &c, &b + &k * &d);
                a = na;
                b = nb;
            }
            Ordering::Greater => {
                let at = |k: &BigInt| frac(&(&c + k * &a), &(&d + k * &b));
                let k = max_run(&|k| test(&at(k)) == Ordering::Greater);
                let (nc, nd) = (&c + &k * &a, &d + &k * &b);
                c = nc;
                d = nd;
            }
        }
    }
}

/// Largest `k >= 1` with `ok(k)`, given `ok(1)` and monotonicity.
fn max_run(ok: &dyn Fn(&BigInt) -> bool) -> BigInt {
    let mut lo = BigInt::one();
    let mut hi = BigInt::from(2);
    while ok(&hi) {
        lo = hi.clone();
        hi *= 2;
    }
    while &hi - &lo > BigInt::one() {
        let mid = (&lo + &hi) / 2;
        if ok(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

#[derive(Clone, Debug, Serialize)]
pub struct ShiftReport {
    #[serde(serialize_with = "ser_rat")]
    pub r: BigRational,
    pub shifted: RatPoly,
    pub positive_roots: usize,
    pub negative_roots: usize,
}

/// The simplest rational `r` such that `p(x + r)` has exactly `k` positive
/// and `l` negative real roots.
pub fn primitive_shift(p: &RatPoly, k: usize, l: usize) -> Result<ShiftReport> {
    let s = SturmChain::new(p)?;
    let total = s.count(None, None);
    if k + l != total {
        return domain(format!("{p} has {total} real roots, not {}", k + l));
    }
    // roots u_1 < ... < u_total; want u_l < r < u_{l+1}
    let test = |c: &BigRational| -> Ordering {
        let below = s.count(None, Some(c));
        let root = p.eval(c).is_zero();
        if below > l {
            Ordering::Greater
        } else if below < l || root {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    };
    let r = simplest_in_gap(&test);
    let shifted = p.shift(&r);
    let zero = BigRational::zero();
    let sc = SturmChain::new(&shifted)?;
    let positive_roots = sc.count(Some(&zero), None);
    let negative_roots = sc.count(None, Some(&zero));
    if positive_roots != k || negative_roots != l || shifted.eval(&zero).is_zero() {
        return internal("shifted polynomial does not have the requested sign pattern");
    }
    Ok(ShiftReport { r, shifted, positive_roots, negative_roots })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sturm_basics() {
        assert_eq!(sturm_count(&RatPoly::from_ints(&[1, 0, 1]), None, None).unwrap(), 0);
        assert_eq!(sturm_count(&RatPoly::from_ints(&[-2, 0, 1]), None, None).unwrap(), 2);
        assert!(sturm_count(&RatPoly::from_ints(&[1, 2, 1]), None, None).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(RatPoly::from_ints(&[2, 0, -3, 1]).to_string(), "x^3 - 3x^2 + 2");
    }
}
