//! The singular Burau representation of `SB3` and its specialization into
//! `PE2(Z[√-5])`.
//!
//! Generators act by
//!
//! ```text
//! σ1 ↦ [[-t, 1], [0, 1]]    σ2 ↦ [[1, 0], [t, -t]]    τ ↦ [[1-y-ty, y], [0, 1]]
//! ```
//!
//! and `σi^{-1}` by the exact inverse matrices, which stay Laurent because
//! `det σi = -t`. The representation is faithful on `SB3`, so matrix equality
//! decides the word problem.

use std::sync::OnceLock;

use thiserror::Error;

use crate::algebra::{LaurentPoly, Mat2, QuadInt, Var};
use crate::words::{Generator, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BurauError {
    #[error("t1^-1 has no Burau matrix over Z[t^±1, y]; use the pinch solver for SG3 words")]
    InverseSingular,
}

fn p(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s, 0).expect("static polynomial")
}

fn generator_table() -> &'static [Mat2<LaurentPoly>; 5] {
    static TABLE: OnceLock<[Mat2<LaurentPoly>; 5]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let m = |a, b, c, d| Mat2::new(p(a), p(b), p(c), p(d));
        [
            m("-t", "1", "0", "1"),
            m("-t^-1", "t^-1", "0", "1"),
            m("1", "0", "t", "-t"),
            m("1", "0", "1", "-t^-1"),
            m("1 - y - t*y", "y", "0", "1"),
        ]
    })
}

/// Matrix of a single letter over `Z[t^{±1}, y]`.
pub fn generator_matrix(letter: Letter) -> Result<&'static Mat2<LaurentPoly>, BurauError> {
    let table = generator_table();
    Ok(match (letter.generator, letter.inverse) {
        (Generator::Sigma1, false) => &table[0],
        (Generator::Sigma1, true) => &table[1],
        (Generator::Sigma2, false) => &table[2],
        (Generator::Sigma2, true) => &table[3],
        (Generator::Tau, false) => &table[4],
        (Generator::Tau, true) => return Err(BurauError::InverseSingular),
    })
}

/// `1 - y - t*y`, the determinant of the singular generator.
pub fn singular_determinant() -> LaurentPoly {
    p("1 - y - t*y")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurauImage {
    pub matrix: Mat2<LaurentPoly>,
    /// Signed count of σ letters.
    pub exponent_sum: i64,
    /// Number of τ letters.
    pub singular_count: i64,
}

impl BurauImage {
    /// `(-t)^e · (1-y-ty)^m`, the determinant every image must have.
    pub fn expected_determinant(&self) -> LaurentPoly {
        let sign = if self.exponent_sum.rem_euclid(2) == 0 { 1 } else { -1 };
        let unit = LaurentPoly::monomial(sign, &[(Var::T, self.exponent_sum as i32)], 0);
        &unit * &singular_determinant().pow(self.singular_count as u32)
    }
}

pub fn burau_eval(word: &Word) -> Result<BurauImage, BurauError> {
    let mut matrix = Mat2::identity_like(&LaurentPoly::zero(0));
    for &letter in word.letters() {
        matrix = matrix.mul(generator_matrix(letter)?);
    }
    Ok(BurauImage {
        matrix,
        exponent_sum: word.exponent_sum(),
        singular_count: word.singular_count(),
    })
}

/// Decide equality in `SB3` by comparing Burau matrices.
pub fn burau_equal(w1: &Word, w2: &Word) -> Result<bool, BurauError> {
    Ok(burau_eval(w1)?.matrix == burau_eval(w2)?.matrix)
}

pub fn det_invariant_check(word: &Word) -> Result<bool, BurauError> {
    let img = burau_eval(word)?;
    Ok(img.matrix.det() == img.expected_determinant())
}

/// Value of a `Z[t^{±1}, y]` polynomial at `t = -1`, `y = ω`.
pub fn specialize_poly(poly: &LaurentPoly) -> QuadInt {
    let mut acc = QuadInt::ZERO;
    for (mono, c) in poly.terms() {
        let coeff = c.to_i64().expect("specialized coefficient fits in i64");
        let t_sign = if mono.exponent(Var::T).rem_euclid(2) == 0 { 1 } else { -1 };
        let y_power = QuadInt::OMEGA.pow(mono.exponent(Var::Y) as u32);
        acc = acc + QuadInt::int(coeff * t_sign) * y_power;
    }
    acc
}

pub fn specialize_pe2(img: &BurauImage) -> Mat2<QuadInt> {
    img.matrix.map(specialize_poly)
}

/// Equality in `PSL2`: `M = ±N`.
pub fn projective_eq(m: &Mat2<QuadInt>, n: &Mat2<QuadInt>) -> bool {
    m == n || *m == n.neg()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Mode;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse(s, Mode::Monoid).unwrap()
    }

    fn pm(a: &str, b: &str, c: &str, d: &str) -> Mat2<LaurentPoly> {
        Mat2::new(p(a), p(b), p(c), p(d))
    }

    fn q(a: i64, b: i64) -> QuadInt {
        QuadInt::new(a, b)
    }

    #[test]
    fn generator_images() {
        assert_eq!(burau_eval(&w("s1")).unwrap().matrix, pm("-t", "1", "0", "1"));
        assert_eq!(burau_eval(&w("s2")).unwrap().matrix, pm("1", "0", "t", "-t"));
        assert_eq!(burau_eval(&w("t1")).unwrap().matrix, pm("1 - y - t*y", "y", "0", "1"));
        let e = burau_eval(&w("")).unwrap();
        assert_eq!(e.matrix, pm("1", "0", "0", "1"));
        assert_eq!((e.exponent_sum, e.singular_count), (0, 0));
    }

    #[test]
    fn inverse_matrices_are_inverses() {
        let id = pm("1", "0", "0", "1");
        assert_eq!(burau_eval(&w("s1 s1^-1")).unwrap().matrix, id);
        assert_eq!(burau_eval(&w("s1^-1 s1")).unwrap().matrix, id);
        assert_eq!(burau_eval(&w("s2 s2^-1")).unwrap().matrix, id);
        assert_eq!(burau_eval(&w("s2^-1 s2")).unwrap().matrix, id);
    }

    #[test]
    fn full_twist_is_scalar() {
        let img = burau_eval(&w("s1 s2 s1 s1 s2 s1")).unwrap();
        assert_eq!(img.matrix, pm("t^3", "0", "0", "t^3"));
    }

    #[test]
    fn inverse_singular_rejected() {
        let g = Word::parse("t1^-1", Mode::Group).unwrap();
        assert_eq!(burau_eval(&g), Err(BurauError::InverseSingular));
    }

    #[test]
    fn equality_examples() {
        assert!(burau_equal(&w("s1 t1"), &w("t1 s1")).unwrap());
        assert!(burau_equal(&w("t1 s2 s1 s2 s1 s2 s1"), &w("s2 s1 s2 s1 s2 s1 t1")).unwrap());
        assert!(!burau_equal(&w("s1"), &w("s2")).unwrap());
        assert!(burau_equal(&w("s1 s2 s1"), &w("s2 s1 s2")).unwrap());
    }

    #[test]
    fn determinant_examples() {
        let img = burau_eval(&w("s1 s2")).unwrap();
        assert_eq!(img.matrix.det(), p("t^2"));
        assert!(det_invariant_check(&w("s1 s2")).unwrap());
        assert!(det_invariant_check(&w("t1")).unwrap());
        assert_eq!(burau_eval(&w("t1")).unwrap().matrix.det(), p("1 - y - t*y"));
        assert!(det_invariant_check(&w("")).unwrap());
        assert!(det_invariant_check(&w("s1^-1 t1 s2^-3 t1")).unwrap());
    }

    #[test]
    fn pe2_generators() {
        let a = Mat2::new(q(1, 0), q(1, 0), q(0, 0), q(1, 0));
        let c = Mat2::new(q(1, 0), q(0, 1), q(0, 0), q(1, 0));
        let sigma2 = Mat2::new(q(1, 0), q(0, 0), q(-1, 0), q(1, 0));
        assert_eq!(specialize_pe2(&burau_eval(&w("s1")).unwrap()), a);
        assert_eq!(specialize_pe2(&burau_eval(&w("t1")).unwrap()), c);
        assert_eq!(specialize_pe2(&burau_eval(&w("s2")).unwrap()), sigma2);
        // Σ2 = (A B A)^{-1} with B = [[0,-1],[1,0]]
        let b = Mat2::new(q(0, 0), q(-1, 0), q(1, 0), q(0, 0));
        let aba = a.mul(&b).mul(&a);
        assert_eq!(aba.mul(&sigma2), Mat2::scalar(QuadInt::ONE));
        assert!(!projective_eq(&a, &sigma2));
    }

    #[test]
    fn pe2_relations_hold_projectively() {
        let id = Mat2::scalar(QuadInt::ONE);
        let spec = |s: &str| specialize_pe2(&burau_eval(&w(s)).unwrap());
        let twist = spec("s1 s2 s1 s1 s2 s1");
        assert_eq!(twist, id.neg());
        assert!(projective_eq(&twist, &id));
        assert!(projective_eq(&spec("s1 s2 s1 s2 s1 s2"), &id));
        assert_eq!(spec("s1 t1"), spec("t1 s1"));
    }

    fn arb_monoid_word(max: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0usize..5, 0..max).prop_map(|idx| {
            let letters = idx
                .into_iter()
                .map(|i| [Letter::S1, Letter::S1_INV, Letter::S2, Letter::S2_INV, Letter::T][i])
                .collect();
            Word::from_letters(letters, Mode::Monoid).unwrap()
        })
    }

    proptest! {
        #[test]
        fn homomorphism(u in arb_monoid_word(10), v in arb_monoid_word(10)) {
            let lhs = burau_eval(&u.concat(&v)).unwrap().matrix;
            let rhs = burau_eval(&u).unwrap().matrix.mul(&burau_eval(&v).unwrap().matrix);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn determinant_law(u in arb_monoid_word(16)) {
            prop_assert!(det_invariant_check(&u).unwrap());
        }

        #[test]
        fn singular_count_separates(u in arb_monoid_word(10), v in arb_monoid_word(10)) {
            if u.singular_count() != v.singular_count() {
                prop_assert!(!burau_equal(&u, &v).unwrap());
            }
        }
    }
}
