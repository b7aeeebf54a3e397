//! The field `Q(w)` with `w^2 + w + 1 = 0`, i.e. `w = e^(2 pi i / 3)`.

use num::rational::BigRational;
use num::traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::linalg::{q, Coeff};

/// `a + b w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QOmega {
    pub a: BigRational,
    pub b: BigRational,
}

impl QOmega {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QOmega { a, b }
    }

    pub fn omega() -> Self {
        QOmega::new(q(0), q(1))
    }

    /// `w^k` for any integer `k`.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => QOmega::one(),
            1 => QOmega::omega(),
            _ => QOmega::new(q(-1), q(-1)),
        }
    }

    pub fn conj(&self) -> Self {
        // w -> w^2 = -1 - w
        QOmega::new(self.a.clone() - self.b.clone(), -self.b.clone())
    }

    /// `N(x) = x * conj(x) = a^2 - ab + b^2`.
    pub fn norm(&self) -> BigRational {
        self.a.clone() * self.a.clone() - self.a.clone() * self.b.clone() + self.b.clone() * self.b.clone()
    }
}

impl fmt::Display for QOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}w", self.b)
        } else {
            write!(f, "{}+{}w", self.a, self.b)
        }
    }
}

impl Add for QOmega {
    type Output = QOmega;
    fn add(self, o: QOmega) -> QOmega {
        QOmega::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for QOmega {
    type Output = QOmega;
    fn sub(self, o: QOmega) -> QOmega {
        QOmega::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for QOmega {
    type Output = QOmega;
    fn neg(self) -> QOmega {
        QOmega::new(-self.a, -self.b)
    }
}

impl Mul for QOmega {
    type Output = QOmega;
    fn mul(self, o: QOmega) -> QOmega {
        // (a + bw)(c + dw) = ac + (ad + bc) w + bd w^2,  w^2 = -1 - w
        let bd = self.b.clone() * o.b.clone();
        QOmega::new(self.a.clone() * o.a.clone() - bd.clone(), self.a * o.b + self.b * o.a - bd)
    }
}

impl Div for QOmega {
    type Output = QOmega;
    fn div(self, o: QOmega) -> QOmega {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero in Q(w)");
        let p = self * o.conj();
        QOmega::new(p.a / n.clone(), p.b / n)
    }
}

impl Zero for QOmega {
    fn zero() -> Self {
        QOmega::new(q(0), q(0))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QOmega {
    fn one() -> Self {
        QOmega::new(q(1), q(0))
    }
}

impl Coeff for QOmega {
    fn from_int(v: i64) -> Self {
        QOmega::new(q(v), q(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_is_a_primitive_cube_root() {
        let w = QOmega::omega();
        let w3 = w.clone() * w.clone() * w.clone();
        assert_eq!(w3, QOmega::one());
        assert_eq!(QOmega::one() + w.clone() + w.clone() * w.clone(), QOmega::zero());
        assert_eq!(QOmega::one() / w.clone(), w.clone() * w);
    }
}
