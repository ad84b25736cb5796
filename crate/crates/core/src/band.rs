//! Band generators of `B3` and the `δ^k P` normal form.
//!
//! With `a1 = σ1`, `a2 = σ2`, `a3 = σ2 σ1 σ2^{-1}` the group is
//! `⟨a1, a2, a3 | a2 a1 = a3 a2 = a1 a3⟩` and `δ = a2 a1`. Every element has
//! a unique form `δ^k P` where `P` is a positive band word with none of the
//! subwords `a2 a1`, `a3 a2`, `a1 a3`.
//!
//! Normalization is a single left-to-right pass. Each `δ^{±1}` produced (by
//! an inverse letter or by contracting a forbidden pair) is moved to the
//! front using `a_i δ = δ a_{i+1}` (indices mod 3). Moving a `δ` through the
//! tail shifts every tail letter by one, which is tracked as a global offset
//! instead of rewriting the tail, so the pass is linear.

use std::fmt;

use thiserror::Error;

use crate::words::{Generator, Mode, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BandError {
    #[error("band normal forms are only defined for braid words without t1")]
    SingularLetter,
}

/// `a1`, `a2` or `a3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BandLetter(u8);

impl BandLetter {
    pub const A1: BandLetter = BandLetter(1);
    pub const A2: BandLetter = BandLetter(2);
    pub const A3: BandLetter = BandLetter(3);

    pub fn new(index: u8) -> Option<Self> {
        (1..=3).contains(&index).then_some(BandLetter(index))
    }

    pub fn index(self) -> u8 {
        self.0
    }

    /// `δ^{-s} a δ^{s}`: shift the index by `s` modulo 3.
    fn shifted(self, s: i64) -> BandLetter {
        BandLetter(((self.0 as i64 - 1 + s).rem_euclid(3) + 1) as u8)
    }

    /// True when `self · next` equals `δ`.
    fn contracts_with(self, next: BandLetter) -> bool {
        next == self.shifted(-1)
    }

    pub fn to_word(self) -> Word {
        let s = match self.0 {
            1 => "s1",
            2 => "s2",
            _ => "s2 s1 s2^-1",
        };
        Word::parse(s, Mode::Monoid).expect("static word")
    }
}

impl fmt::Display for BandLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0)
    }
}

/// A letter of the raw band rewriting of a braid word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RawBand {
    Delta,
    DeltaInv,
    A(BandLetter),
}

/// Rewrite a braid word over `{δ^{±1}, a1, a2, a3}`:
/// `σ1 ↦ a1`, `σ2 ↦ a2`, `σ1^{-1} ↦ δ^{-1} a2`, `σ2^{-1} ↦ δ^{-1} a3`.
pub fn to_band(word: &Word) -> Result<Vec<RawBand>, BandError> {
    let mut out = Vec::with_capacity(word.len() * 2);
    for &l in word.letters() {
        match (l.generator, l.inverse) {
            (Generator::Sigma1, false) => out.push(RawBand::A(BandLetter::A1)),
            (Generator::Sigma2, false) => out.push(RawBand::A(BandLetter::A2)),
            (Generator::Sigma1, true) => out.extend([RawBand::DeltaInv, RawBand::A(BandLetter::A2)]),
            (Generator::Sigma2, true) => out.extend([RawBand::DeltaInv, RawBand::A(BandLetter::A3)]),
            (Generator::Tau, _) => return Err(BandError::SingularLetter),
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    pub delta_exp: i64,
    pub tail: Vec<BandLetter>,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm { delta_exp: 0, tail: Vec::new() }
    }

    pub fn is_identity(&self) -> bool {
        self.delta_exp == 0 && self.tail.is_empty()
    }

    /// Tail rendered as `"a2 a3 …"`.
    pub fn tail_string(&self) -> String {
        self.tail.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
    }

    /// A braid word for this element: `(σ2 σ1)^k` followed by the tail letters.
    pub fn to_word(&self) -> Word {
        let delta = Word::parse("s2 s1", Mode::Monoid).expect("static word");
        let mut out = if self.delta_exp >= 0 {
            delta.repeat(self.delta_exp as usize)
        } else {
            delta.invert().expect("braid word").repeat(self.delta_exp.unsigned_abs() as usize)
        };
        for a in &self.tail {
            out = out.concat(&a.to_word());
        }
        out
    }
}

impl fmt::Display for NormalForm {
    /// `d^k a.. a..`, with `d^0` dropped and `1` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        if self.delta_exp != 0 {
            parts.push(format!("d^{}", self.delta_exp));
        }
        parts.extend(self.tail.iter().map(|a| a.to_string()));
        f.write_str(&parts.join(" "))
    }
}

pub fn normalize_band(raw: &[RawBand]) -> NormalForm {
    let mut delta: i64 = 0;
    // stored letters; the actual letter is `stored.shifted(delta)`
    let mut stored: Vec<BandLetter> = Vec::with_capacity(raw.len());
    for &r in raw {
        match r {
            RawBand::Delta => delta += 1,
            RawBand::DeltaInv => delta -= 1,
            RawBand::A(a) => {
                let contracts = stored
                    .last()
                    .is_some_and(|top| top.shifted(delta).contracts_with(a));
                if contracts {
                    stored.pop();
                    delta += 1;
                } else {
                    stored.push(a.shifted(-delta));
                }
            }
        }
    }
    NormalForm {
        delta_exp: delta,
        tail: stored.into_iter().map(|a| a.shifted(delta)).collect(),
    }
}

pub fn normal_form(word: &Word) -> Result<NormalForm, BandError> {
    Ok(normalize_band(&to_band(word)?))
}

/// Equality in `B3`.
pub fn nf_equal(w1: &Word, w2: &Word) -> Result<bool, BandError> {
    Ok(normal_form(w1)? == normal_form(w2)?)
}

/// Witness that an element equals `σ1^k (σ2 σ1)^{3l}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct H3Witness {
    pub k: i64,
    pub l: i64,
}

impl H3Witness {
    pub fn to_word(self) -> Word {
        let s1 = Word::parse(&format!("s1^{}", self.k), Mode::Monoid).expect("static word");
        let twist = Word::parse("s2 s1 s2 s1 s2 s1", Mode::Monoid).expect("static word");
        let twist = if self.l >= 0 { twist } else { twist.invert().expect("braid word") };
        s1.concat(&twist.repeat(self.l.unsigned_abs() as usize))
    }
}

/// Membership in `H3 = ⟨σ1, (σ2 σ1)^3⟩` read off a normal form.
///
/// `H3` is abelian and `(σ2 σ1)^3 = δ^3` is central, so its elements are
/// `δ^{3l} σ1^k`, whose normal forms are
///
/// ```text
/// k ≥ 0:        δ^{3l} a1^k
/// k = 3j ≤ 0:   δ^{3l+3j} (a3 a1 a2)^{-j}
/// k = 3j-1:     δ^{3l+3j-1} a2 (a3 a1 a2)^{-j}
/// k = 3j-2:     δ^{3l+3j-2} a1 a2 (a3 a1 a2)^{-j}
/// ```
pub fn membership_nf(nf: &NormalForm) -> Option<H3Witness> {
    use BandLetter as A;
    let d = nf.delta_exp;
    let tail = nf.tail.as_slice();

    if tail.iter().all(|a| *a == A::A1) {
        return (d.rem_euclid(3) == 0).then_some(H3Witness { k: tail.len() as i64, l: d / 3 });
    }

    let (prefix_len, residue, k_offset) = match tail {
        [A::A2, ..] => (1, 2, -1),
        [A::A1, A::A2, ..] => (2, 1, -2),
        _ => (0, 0, 0),
    };
    if d.rem_euclid(3) != residue {
        return None;
    }
    let rest = &tail[prefix_len..];
    if !rest.len().is_multiple_of(3) || !rest.chunks(3).all(|c| c == [A::A3, A::A1, A::A2]) {
        return None;
    }
    let j = (rest.len() / 3) as i64;
    Some(H3Witness { k: k_offset - 3 * j, l: (d - k_offset) / 3 + j })
}

pub fn membership_h3(word: &Word) -> Result<Option<H3Witness>, BandError> {
    Ok(membership_nf(&normal_form(word)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burau::{burau_equal, burau_eval};
    use crate::words::Letter;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse(s, Mode::Monoid).unwrap()
    }

    fn nf(k: i64, tail: &[u8]) -> NormalForm {
        NormalForm { delta_exp: k, tail: tail.iter().map(|i| BandLetter::new(*i).unwrap()).collect() }
    }

    #[test]
    fn to_band_examples() {
        assert_eq!(to_band(&w("s1")).unwrap(), vec![RawBand::A(BandLetter::A1)]);
        assert_eq!(to_band(&w("s1^-1")).unwrap(), vec![RawBand::DeltaInv, RawBand::A(BandLetter::A2)]);
        assert_eq!(to_band(&w("s2^-1")).unwrap(), vec![RawBand::DeltaInv, RawBand::A(BandLetter::A3)]);
        assert_eq!(to_band(&w("t1")), Err(BandError::SingularLetter));
    }

    /// The inverse rewrites, checked in the faithful Burau image.
    #[test]
    fn inverse_rewrites_hold() {
        assert!(burau_equal(&w("s1^-1"), &w("s1^-1 s2^-1 s2")).unwrap());
        assert!(burau_equal(&w("s2^-1"), &w("s1^-1 s2^-1 s2 s1 s2^-1")).unwrap());
        // a3^{-1} = δ^{-1} a1
        assert!(burau_equal(&BandLetter::A3.to_word().invert().unwrap(), &w("s1^-1 s2^-1 s1")).unwrap());
    }

    /// δ a1 δ^{-1} = a3, δ a2 δ^{-1} = a1, δ a3 δ^{-1} = a2.
    #[test]
    fn delta_conjugation_rule() {
        let delta = w("s2 s1");
        let delta_inv = delta.invert().unwrap();
        for (from, to) in [(1, 3), (2, 1), (3, 2)] {
            let conj = delta.concat(&BandLetter::new(from).unwrap().to_word()).concat(&delta_inv);
            assert!(burau_equal(&conj, &BandLetter::new(to).unwrap().to_word()).unwrap());
        }
        // the band relations themselves
        let a = |i| BandLetter::new(i).unwrap().to_word();
        assert!(burau_equal(&a(2).concat(&a(1)), &a(3).concat(&a(2))).unwrap());
        assert!(burau_equal(&a(2).concat(&a(1)), &a(1).concat(&a(3))).unwrap());
    }

    #[test]
    fn normalize_examples() {
        let raw = [RawBand::A(BandLetter::A2), RawBand::A(BandLetter::A1)];
        assert_eq!(normalize_band(&raw), nf(1, &[]));
        assert_eq!(normal_form(&w("s1^-1")).unwrap(), nf(-1, &[2]));
        assert_eq!(normal_form(&w("s1 s2 s1")).unwrap(), nf(1, &[2]));
        assert_eq!(normal_form(&w("")).unwrap(), NormalForm::identity());
        assert_eq!(normal_form(&w("s1^-1 s1")).unwrap(), NormalForm::identity());
        assert_eq!(normal_form(&w("s2 s2^-1")).unwrap(), NormalForm::identity());
    }

    #[test]
    fn nf_equal_examples() {
        assert!(nf_equal(&w("s1 s2 s1"), &w("s2 s1 s2")).unwrap());
        assert!(!nf_equal(&w("s1"), &w("s2")).unwrap());
        assert!(nf_equal(&w("s1 s1^-1"), &w("")).unwrap());
        assert_eq!(normal_form(&w("s1")).unwrap(), nf(0, &[1]));
        assert_eq!(normal_form(&w("s2")).unwrap(), nf(0, &[2]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(nf(0, &[]).to_string(), "1");
        assert_eq!(nf(-1, &[2, 3]).to_string(), "d^-1 a2 a3");
        assert_eq!(nf(2, &[]).to_string(), "d^2");
        assert_eq!(nf(-1, &[2, 3]).tail_string(), "a2 a3");
    }

    #[test]
    fn membership_examples() {
        assert_eq!(membership_h3(&w("s1 s1")).unwrap(), Some(H3Witness { k: 2, l: 0 }));
        let x = w("s2 s1 s2 s1 s2 s1 s1^-1");
        assert_eq!(normal_form(&x).unwrap(), nf(2, &[2]));
        assert_eq!(membership_h3(&x).unwrap(), Some(H3Witness { k: -1, l: 1 }));
        assert_eq!(membership_h3(&w("s2")).unwrap(), None);
        assert_eq!(membership_h3(&w("")).unwrap(), Some(H3Witness { k: 0, l: 0 }));
        assert_eq!(membership_h3(&w("t1")), Err(BandError::SingularLetter));
    }

    /// Brute-force oracle: `σ2` matches no `σ1^k (σ2σ1)^{3l}` matrix on a grid.
    #[test]
    fn sigma2_is_not_a_member_by_enumeration() {
        let target = burau_eval(&w("s2")).unwrap().matrix;
        for k in -6..=6 {
            for l in -6..=6 {
                let m = burau_eval(&H3Witness { k, l }.to_word()).unwrap().matrix;
                assert_ne!(m, target, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn membership_grid() {
        for k in -6..=6 {
            for l in -4..=4 {
                let word = H3Witness { k, l }.to_word();
                assert_eq!(membership_h3(&word).unwrap(), Some(H3Witness { k, l }), "k={k} l={l}");
            }
        }
    }

    fn arb_braid(max: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0usize..4, 0..max).prop_map(|idx| {
            let letters = idx
                .into_iter()
                .map(|i| [Letter::S1, Letter::S1_INV, Letter::S2, Letter::S2_INV][i])
                .collect();
            Word::from_letters(letters, Mode::Monoid).unwrap()
        })
    }

    fn relators() -> Vec<Word> {
        ["s1 s2 s1 s2^-1 s1^-1 s2^-1", "s1 s1^-1", "s1^-1 s1", "s2 s2^-1", "s2^-1 s2"]
            .iter()
            .map(|s| w(s))
            .collect()
    }

    proptest! {
        #[test]
        fn normal_form_is_sound(x in arb_braid(20)) {
            let n = normal_form(&x).unwrap();
            for pair in n.tail.windows(2) {
                prop_assert!(!pair[0].contracts_with(pair[1]));
            }
            prop_assert!(burau_equal(&x, &n.to_word()).unwrap());
        }

        #[test]
        fn relator_insertion_is_invisible(x in arb_braid(20), pos in 0usize..21, r in 0usize..5, inv in any::<bool>()) {
            let pos = pos.min(x.len());
            let rel = &relators()[r];
            let rel = if inv { rel.invert().unwrap() } else { rel.clone() };
            prop_assert_eq!(normal_form(&x.splice(pos, &rel)).unwrap(), normal_form(&x).unwrap());
        }

        #[test]
        fn nf_agrees_with_burau(x in arb_braid(8), y in arb_braid(8)) {
            prop_assert_eq!(nf_equal(&x, &y).unwrap(), burau_equal(&x, &y).unwrap());
        }

        #[test]
        fn witnesses_are_sound(x in arb_braid(14)) {
            if let Some(wit) = membership_h3(&x).unwrap() {
                prop_assert!(burau_equal(&x, &wit.to_word()).unwrap());
            }
        }
    }
}
