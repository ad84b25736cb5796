use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + b·ω` with `ω² = -5`, an element of `Z[√-5]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadInt {
    pub a: i64,
    pub b: i64,
}

impl QuadInt {
    pub const ZERO: QuadInt = QuadInt { a: 0, b: 0 };
    pub const ONE: QuadInt = QuadInt { a: 1, b: 0 };
    pub const OMEGA: QuadInt = QuadInt { a: 0, b: 1 };
    /// `ω² = -D`.
    pub const D: i64 = 5;

    pub const fn new(a: i64, b: i64) -> Self {
        QuadInt { a, b }
    }

    pub const fn int(a: i64) -> Self {
        QuadInt { a, b: 0 }
    }

    pub fn pow(self, exp: u32) -> Self {
        (0..exp).fold(QuadInt::ONE, |acc, _| acc * self)
    }
}

impl Add for QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: QuadInt) -> QuadInt {
        QuadInt::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: QuadInt) -> QuadInt {
        QuadInt::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: QuadInt) -> QuadInt {
        QuadInt::new(
            self.a * rhs.a - Self::D * self.b * rhs.b,
            self.a * rhs.b + self.b * rhs.a,
        )
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt::new(-self.a, -self.b)
    }
}

impl<'a> Add<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &'a QuadInt) -> QuadInt {
        *self + *rhs
    }
}

impl<'a> Sub<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &'a QuadInt) -> QuadInt {
        *self - *rhs
    }
}

impl<'a> Mul<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &'a QuadInt) -> QuadInt {
        *self * *rhs
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        -*self
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => f.write_str("w"),
            (0, -1) => f.write_str("-w"),
            (0, b) => write!(f, "{b}*w"),
            (a, 1) => write!(f, "{a} + w"),
            (a, -1) => write!(f, "{a} - w"),
            (a, b) if b < 0 => write!(f, "{a} - {}*w", -b),
            (a, b) => write!(f, "{a} + {b}*w"),
        }
    }
}
