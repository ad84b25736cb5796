//! Exact arithmetic: integers, Laurent polynomials, `Z[√-5]`, 2×2 matrices
//! and integer formal sums.

mod formal_sum;
mod int;
mod mat2;
mod poly;
mod quad;

pub use formal_sum::FormalSum;
pub use int::Int;
pub use mat2::Mat2;
pub use poly::{LaurentPoly, Monomial, Var};
pub use quad::QuadInt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("polynomials live in different universes ({left} vs {right} indexed variables)")]
    UniverseMismatch { left: usize, right: usize },
    #[error("t can only be replaced by a unit ±t^k")]
    NonUnitSubstitution,
    #[error("variable {var} does not exist in a universe with {slots} indexed variables")]
    VariableOutOfRange { var: Var, slots: usize },
    #[error("variable {0} is assigned twice")]
    DuplicateAssignment(Var),
    #[error("malformed polynomial text {0:?}")]
    PolyParse(String),
}

/// The commutative ring operations `Mat2` needs from its entries.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Zero in the same ring as `self` (polynomials carry their universe).
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
}

impl Ring for LaurentPoly {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.slots())
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one(self.slots())
    }
}

impl Ring for QuadInt {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn zero_like(&self) -> Self {
        QuadInt::ZERO
    }
    fn one_like(&self) -> Self {
        QuadInt::ONE
    }
}
