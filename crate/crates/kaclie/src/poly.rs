//! Dense integer polynomials in one variable `t`.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

/// `coeffs[i]` is the coefficient of `t^i`; no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> IntPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> IntPoly {
        IntPoly { coeffs: vec![1] }
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> IntPoly {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        IntPoly { coeffs: c }
    }

    /// `1 + t^k`.
    pub fn one_plus(k: usize) -> IntPoly {
        let mut c = vec![0; k + 1];
        c[0] += 1;
        c[k] += 1;
        IntPoly::new(c)
    }

    /// `t^shift * prod (1 + t^d)`.
    pub fn from_factors(shift: usize, degrees: &[usize]) -> IntPoly {
        degrees.iter().fold(IntPoly::monomial(shift), |acc, &d| &acc * &IntPoly::one_plus(d))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * t + c)
    }

    /// Degrees in `0..=deg` with zero coefficient.
    pub fn zero_degrees(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| self.coeffs[i] == 0).collect()
    }

    /// `t^{v} q(t)` with `q` palindromic.
    pub fn is_shifted_palindrome(&self) -> bool {
        let Some(v) = self.valuation() else { return true };
        let c = &self.coeffs[v..];
        c.iter().eq(c.iter().rev())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![0i64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{a}t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        let p = IntPoly::from_factors(0, &[1, 3]);
        assert_eq!(p.coeffs(), &[1, 1, 0, 1, 1]);
        assert_eq!(p.to_string(), "1 + t + t^3 + t^4");
        assert_eq!(p.eval(1), 4);
        assert!(IntPoly::from_factors(5, &[1, 3, 3]).is_shifted_palindrome());
        assert_eq!(IntPoly::new(vec![0, 0]).degree(), None);
    }
}
