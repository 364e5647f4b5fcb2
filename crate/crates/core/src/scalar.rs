//! Exact arithmetic in the quadratic field Q(√5).
//!
//! Root coordinates of the non-crystallographic types involve the golden
//! ratio φ = (1 + √5)/2, so every coordinate is stored as `a + b√5` with
//! rational `a` and `b`. Crystallographic types never leave the `b = 0`
//! subfield and take the cheap branches below.

use num_rational::Ratio;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

type Q = Ratio<i64>;

/// An element `a + b√5` of Q(√5).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    a: Q,
    b: Q,
}

impl Scalar {
    pub const ZERO: Scalar = Scalar { a: Ratio::new_raw(0, 1), b: Ratio::new_raw(0, 1) };
    pub const ONE: Scalar = Scalar { a: Ratio::new_raw(1, 1), b: Ratio::new_raw(0, 1) };

    pub fn new(a: Q, b: Q) -> Self {
        Scalar { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { a: Q::from_integer(n), b: Q::from_integer(0) }
    }

    /// The golden ratio (1 + √5)/2.
    pub fn phi() -> Self {
        Scalar { a: Q::new(1, 2), b: Q::new(1, 2) }
    }

    pub fn rational_part(&self) -> Q {
        self.a
    }

    pub fn sqrt5_part(&self) -> Q {
        self.b
    }

    pub fn is_zero(&self) -> bool {
        *self.a.numer() == 0 && *self.b.numer() == 0
    }

    pub fn is_rational(&self) -> bool {
        *self.b.numer() == 0
    }

    /// Exact sign of the real number `a + b√5`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.numer().signum();
        let sb = self.b.numer().signum();
        if sb == 0 {
            return sa.cmp(&0);
        }
        if sa == 0 || sa == sb {
            return sb.cmp(&0);
        }
        // Opposite signs: compare a^2 against 5 b^2.
        let (p, q) = (*self.a.numer() as i128, *self.a.denom() as i128);
        let (r, s) = (*self.b.numer() as i128, *self.b.denom() as i128);
        let lhs = p * p * s * s;
        let rhs = 5 * r * r * q * q;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa.cmp(&0),
            Ordering::Less => sb.cmp(&0),
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            return Some(Scalar { a: self.a.recip(), b: Q::from_integer(0) });
        }
        let norm = self.a * self.a - Q::from_integer(5) * self.b * self.b;
        Some(Scalar { a: self.a / norm, b: -self.b / norm })
    }

    /// Floating point approximation, for display only.
    pub fn to_f64(&self) -> f64 {
        let f = |q: Q| *q.numer() as f64 / *q.denom() as f64;
        f(self.a) + f(self.b) * 5f64.sqrt()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        Scalar { a: self.a + o.a, b: self.b + o.b }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self = *self + o;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        Scalar { a: self.a - o.a, b: self.b - o.b }
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, o: Scalar) {
        *self = *self - o;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -self.a, b: -self.b }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        if self.is_rational() && o.is_rational() {
            return Scalar { a: self.a * o.a, b: Q::from_integer(0) };
        }
        Scalar {
            a: self.a * o.a + Q::from_integer(5) * self.b * o.b,
            b: self.a * o.b + self.b * o.a,
        }
    }
}

impl Div for Scalar {
    type Output = Scalar;
    /// Panics on division by zero, like integer division.
    fn div(self, o: Scalar) -> Scalar {
        self * o.recip().expect("division by zero in Q(sqrt 5)")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.a)
        } else if *self.a.numer() == 0 {
            write!(f, "{}*sqrt5", self.b)
        } else {
            write!(f, "{}+{}*sqrt5", self.a, self.b)
        }
    }
}
