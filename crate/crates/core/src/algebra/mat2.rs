use std::fmt;

use super::Ring;

/// 2×2 matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2<R> {
    pub m11: R,
    pub m12: R,
    pub m21: R,
    pub m22: R,
}

impl<R: Ring> Mat2<R> {
    pub fn new(m11: R, m12: R, m21: R, m22: R) -> Self {
        Mat2 { m11, m12, m21, m22 }
    }

    /// Identity over the ring that `sample` lives in.
    pub fn identity_like(sample: &R) -> Self {
        Mat2::scalar(sample.one_like())
    }

    pub fn scalar(c: R) -> Self {
        let z = c.zero_like();
        Mat2::new(c.clone(), z.clone(), z, c)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Mat2 {
            m11: self.m11.mul_ref(&rhs.m11).add_ref(&self.m12.mul_ref(&rhs.m21)),
            m12: self.m11.mul_ref(&rhs.m12).add_ref(&self.m12.mul_ref(&rhs.m22)),
            m21: self.m21.mul_ref(&rhs.m11).add_ref(&self.m22.mul_ref(&rhs.m21)),
            m22: self.m21.mul_ref(&rhs.m12).add_ref(&self.m22.mul_ref(&rhs.m22)),
        }
    }

    pub fn det(&self) -> R {
        self.m11.mul_ref(&self.m22).sub_ref(&self.m12.mul_ref(&self.m21))
    }

    pub fn neg(&self) -> Self {
        self.map(|e| e.neg_ref())
    }

    pub fn map<S>(&self, mut f: impl FnMut(&R) -> S) -> Mat2<S> {
        Mat2 { m11: f(&self.m11), m12: f(&self.m12), m21: f(&self.m21), m22: f(&self.m22) }
    }

    pub fn try_map<S, E>(&self, mut f: impl FnMut(&R) -> Result<S, E>) -> Result<Mat2<S>, E> {
        Ok(Mat2 { m11: f(&self.m11)?, m12: f(&self.m12)?, m21: f(&self.m21)?, m22: f(&self.m22)? })
    }

    pub fn entries(&self) -> [&R; 4] {
        [&self.m11, &self.m12, &self.m21, &self.m22]
    }
}

impl<R: fmt::Display> fmt::Display for Mat2<R> {
    /// Canonical one-line form `[[m11, m12], [m21, m22]]`, also used as a
    /// formal-sum key.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.m11, self.m12, self.m21, self.m22)
    }
}
