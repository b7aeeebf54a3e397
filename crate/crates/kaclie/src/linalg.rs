//! Exact linear algebra over fields and over the integers.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::Integer;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Coefficient rings that the bracket can be extended to.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug + Zero + Add<Output = Self> + Mul<Output = Self> {
    fn from_int(v: i64) -> Self;
}

/// Fields usable for elimination.
pub trait Field: Coeff + Sub<Output = Self> + Div<Output = Self> + Neg<Output = Self> + One {}

impl<T> Field for T where T: Coeff + Sub<Output = T> + Div<Output = T> + Neg<Output = T> + One {}

impl Coeff for i64 {
    fn from_int(v: i64) -> Self {
        v
    }
}

impl Coeff for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Coeff for num::Complex<i64> {
    fn from_int(v: i64) -> Self {
        num::Complex::new(v, 0)
    }
}

pub fn q(v: i64) -> BigRational {
    BigRational::from_int(v)
}

pub fn q_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Row echelon form in place; returns pivot columns.
pub fn row_reduce<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = F::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let d = f.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut w = m.to_vec();
    row_reduce(&mut w).len()
}

pub fn det<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut w = m.to_vec();
    let mut d = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !w[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            w.swap(p, c);
            d = -d;
        }
        d = d * w[c][c].clone();
        let inv = F::one() / w[c][c].clone();
        for i in c + 1..n {
            if !w[i][c].is_zero() {
                let f = w[i][c].clone() * inv.clone();
                for j in c..n {
                    let t = f.clone() * w[c][j].clone();
                    w[i][j] = w[i][j].clone() - t;
                }
            }
        }
    }
    d
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace<F: Field>(m: &[Vec<F>], cols: usize) -> Vec<Vec<F>> {
    let mut w = m.to_vec();
    let piv = row_reduce(&mut w);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !piv.contains(c)) {
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (r, &pc) in piv.iter().enumerate() {
            v[pc] = -w[r][free].clone();
        }
        out.push(v);
    }
    out
}

/// Some solution of `m x = b`, if any.
pub fn solve<F: Field>(m: &[Vec<F>], b: &[F], cols: usize) -> Option<Vec<F>> {
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let piv = row_reduce(&mut aug);
    if piv.contains(&cols) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (r, &pc) in piv.iter().enumerate() {
        x[pc] = aug[r][cols].clone();
    }
    Some(x)
}

/// Incrementally maintained echelon basis of a subspace.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F> {
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Default for EchelonBasis<F> {
    fn default() -> Self {
        EchelonBasis { rows: Vec::new() }
    }
}

impl<F: Field> EchelonBasis<F> {
    fn reduce(&self, v: &mut [F]) {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x = x.clone() - f.clone() * y.clone();
                    }
                }
            }
        }
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = F::one() / w[p].clone();
        for x in w.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&w) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        self.rows.push((p, w));
        true
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Scales a rational vector to a primitive integer vector.
pub fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Integer solution of `m z = b` (`m` is `s x n`), found by column Hermite
/// reduction with a unimodular transform.
pub fn solve_integer(m: &[Vec<BigInt>], b: &[BigInt], n: usize) -> Option<Vec<BigInt>> {
    let s = m.len();
    let mut h: Vec<Vec<BigInt>> = m.to_vec();
    let mut u: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    // column operation: (cu, cv) <- (x cu + y cv, p cu + q cv)
    let colop = |mat: &mut Vec<Vec<BigInt>>, a: usize, b: usize, x: &BigInt, y: &BigInt, p: &BigInt, qq: &BigInt| {
        for row in mat.iter_mut() {
            let (ua, ub) = (row[a].clone(), row[b].clone());
            row[a] = x * &ua + y * &ub;
            row[b] = p * &ua + qq * &ub;
        }
    };
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut c = 0;
    for r in 0..s {
        if c == n {
            break;
        }
        for j in c + 1..n {
            if h[r][j].is_zero() {
                continue;
            }
            let (a, bb) = (h[r][c].clone(), h[r][j].clone());
            let e = a.extended_gcd(&bb);
            let g = e.gcd;
            let p = -(&bb / &g);
            let qq = &a / &g;
            colop(&mut h, c, j, &e.x, &e.y, &p, &qq);
            colop(&mut u, c, j, &e.x, &e.y, &p, &qq);
        }
        if !h[r][c].is_zero() {
            pivots.push((r, c));
            c += 1;
        }
    }
    let mut y = vec![BigInt::zero(); n];
    let mut pi = 0;
    for r in 0..s {
        let acc: BigInt = (0..c).map(|j| &h[r][j] * &y[j]).sum();
        if pi < pivots.len() && pivots[pi].0 == r {
            let pc = pivots[pi].1;
            let rest = &b[r] - acc;
            let (qt, rm) = rest.div_rem(&h[r][pc]);
            if !rm.is_zero() {
                return None;
            }
            y[pc] = qt;
            pi += 1;
        } else if acc != b[r] {
            return None;
        }
    }
    let z: Vec<BigInt> = (0..n).map(|i| (0..n).map(|j| &u[i][j] * &y[j]).sum()).collect();
    debug_assert!((0..s).all(|r| (0..n).map(|j| &m[r][j] * &z[j]).sum::<BigInt>() == b[r]));
    Some(z)
}

/// Rank of integer vectors modulo the prime `2^61 - 1`. Never exceeds the
/// rank over `Q`, so a kernel of the expected size over `F_p` certifies it over `Q`.
pub fn rank_mod_p(vectors: &[Vec<i64>]) -> usize {
    const P: u128 = (1u128 << 61) - 1;
    let red = |x: i64| -> u128 { (x as i128).rem_euclid(P as i128) as u128 };
    let pow = |mut b: u128, mut e: u128| {
        let mut r = 1u128;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % P;
            }
            b = b * b % P;
            e >>= 1;
        }
        r
    };
    let mut rows: Vec<(usize, Vec<u128>)> = Vec::new();
    for v in vectors {
        let mut w: Vec<u128> = v.iter().map(|&x| red(x)).collect();
        for (p, row) in &rows {
            if w[*p] != 0 {
                let f = w[*p];
                for (x, y) in w.iter_mut().zip(row) {
                    if *y != 0 {
                        *x = (*x + P - f * y % P) % P;
                    }
                }
            }
        }
        if let Some(p) = w.iter().position(|&x| x != 0) {
            let inv = pow(w[p], P - 2);
            for x in w.iter_mut() {
                *x = *x * inv % P;
            }
            rows.push((p, w));
        }
    }
    rows.len()
}

pub fn is_integral(x: &BigRational) -> bool {
    x.is_integer()
}

pub fn abs_q(x: &BigRational) -> BigRational {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn integer_solve_detects_parity_obstruction() {
        let m = vec![vec![bi(2), bi(4)]];
        assert!(solve_integer(&m, &[bi(6)], 2).is_some());
        assert!(solve_integer(&m, &[bi(3)], 2).is_none());
    }

    #[test]
    fn det_and_nullspace() {
        let m = vec![vec![q(2), q(-1)], vec![q(-1), q(2)]];
        assert_eq!(det(&m), q(3));
        let s = vec![vec![q(1), q(1), q(0)]];
        assert_eq!(nullspace(&s, 3).len(), 2);
    }
}
