//! Word-problem deciders for `SB3` and `SG3`, and the harness that checks
//! all three against each other.
//!
//! * `burau`: compare singular Burau matrices.
//! * `recursion`: peel off the last singular letter of both words; this is
//!   allowed exactly when the quotient of the trailing braid blocks lies in
//!   `H3 = ⟨σ1, (σ2σ1)^3⟩`, the subgroup commuting with `τ`.
//! * `pinch`: `SG3` is an HNN extension of `B3` with stable letter `τ` and
//!   associated subgroup `H3`, so a word containing `τ` is trivial only if it
//!   has a pinch `τ^{∓1} C τ^{±1}` with `C ∈ H3`. Pinches are removed until
//!   none remain.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::band::{membership_h3, nf_equal, normal_form, BandError, H3Witness};
use crate::burau::{burau_equal, BurauError};
use crate::presentation::{relation_set, RelationSetName};
use crate::rng::{random_word_with, SplitMix64};
use crate::words::{Letter, Mode, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error(transparent)]
    Burau(#[from] BurauError),
    #[error(transparent)]
    Band(#[from] BandError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("the {0} solver only accepts SB3 words; t1^-1 needs the pinch solver")]
    GroupWord(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Burau,
    Recursion,
    Pinch,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Burau, Method::Recursion, Method::Pinch];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Burau => "burau",
            Method::Recursion => "recursion",
            Method::Pinch => "pinch",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub equal: bool,
    pub method: Method,
    pub trace: Vec<String>,
}

fn require_monoid(w: &Word, solver: &'static str) -> Result<Word, SolverError> {
    w.to_monoid().map_err(|_| SolverError::GroupWord(solver))
}

fn show(w: &Word) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.to_string()
    }
}

pub fn decide(method: Method, w1: &Word, w2: &Word) -> Result<Verdict, SolverError> {
    match method {
        Method::Burau => {
            let (a, b) = (require_monoid(w1, "burau")?, require_monoid(w2, "burau")?);
            let equal = burau_equal(&a, &b)?;
            Ok(Verdict {
                equal,
                method,
                trace: vec![format!(
                    "burau matrices {}",
                    if equal { "coincide" } else { "differ" }
                )],
            })
        }
        Method::Recursion => equal_sb3(w1, w2),
        Method::Pinch => equal_sg3(w1, w2),
    }
}

/// Equality in `SB3` by recursion on the last singular letter.
///
/// Writing `w1 = W1 τ b`, `w2 = W2 τ c`, the words are equal iff
/// `b c^{-1} ∈ H3` and `W1 b = W2 c`; the latter has one singularity fewer.
pub fn equal_sb3(w1: &Word, w2: &Word) -> Result<Verdict, SolverError> {
    let (w1, w2) = (require_monoid(w1, "recursion")?, require_monoid(w2, "recursion")?);
    let mut trace = Vec::new();
    let (s1, s2) = (w1.split_at_tau(), w2.split_at_tau());
    let (m1, m2) = (s1.singularities(), s2.singularities());
    if m1 != m2 {
        trace.push(format!("singular counts differ ({m1} vs {m2}); determinants separate them"));
        return Ok(Verdict { equal: false, method: Method::Recursion, trace });
    }
    let mut left = s1.blocks;
    let mut right = s2.blocks;
    while left.len() > 1 {
        let b = left.pop().expect("non-empty");
        let c = right.pop().expect("non-empty");
        let quotient = b.concat(&c.invert()?).free_reduce();
        let m = left.len();
        match membership_h3(&quotient)? {
            None => {
                trace.push(format!(
                    "singularity {m}: trailing quotient ({}) is not in H3",
                    show(&quotient)
                ));
                return Ok(Verdict { equal: false, method: Method::Recursion, trace });
            }
            Some(H3Witness { k, l }) => {
                trace.push(format!(
                    "singularity {m}: trailing quotient ({}) = s1^{k} (s2 s1)^{} in H3; drop t1",
                    show(&quotient),
                    3 * l
                ));
            }
        }
        let lb = left.pop().expect("block before singularity");
        let rc = right.pop().expect("block before singularity");
        left.push(lb.concat(&b).free_reduce());
        right.push(rc.concat(&c).free_reduce());
    }
    let equal = nf_equal(&left[0], &right[0])?;
    trace.push(format!(
        "braid words {} / {}: normal forms {} and {}",
        show(&left[0]),
        show(&right[0]),
        normal_form(&left[0])?,
        normal_form(&right[0])?
    ));
    Ok(Verdict { equal, method: Method::Recursion, trace })
}

/// Decide `w = 1` in `SG3` by Britton pinch reduction.
pub fn is_trivial_sg3(w: &Word) -> Result<Verdict, SolverError> {
    let mut trace = Vec::new();
    let split = w.to_group().free_reduce().split_at_tau();
    let mut blocks = split.blocks;
    let mut signs = split.tau_signs;
    // cached membership of the block between singular letters i and i+1
    let mut member: Vec<Option<bool>> = vec![None; blocks.len()];

    loop {
        if signs.is_empty() {
            let nf = normal_form(&blocks[0])?;
            trace.push(format!("no singular letters left; braid normal form {nf}"));
            return Ok(Verdict { equal: nf.is_identity(), method: Method::Pinch, trace });
        }
        let mut pinch = None;
        for i in 0..signs.len().saturating_sub(1) {
            if signs[i] == -signs[i + 1] {
                let inside = match member[i + 1] {
                    Some(v) => v,
                    None => {
                        let v = membership_h3(&blocks[i + 1])?.is_some();
                        member[i + 1] = Some(v);
                        v
                    }
                };
                if inside {
                    pinch = Some(i);
                    break;
                }
            }
        }
        let Some(i) = pinch else {
            trace.push(format!(
                "{} singular letters remain and no pinch exists; nontrivial by Britton's lemma",
                signs.len()
            ));
            return Ok(Verdict { equal: false, method: Method::Pinch, trace });
        };
        let (open, close) = if signs[i] > 0 { ("t1", "t1^-1") } else { ("t1^-1", "t1") };
        trace.push(format!("pinch {open} ({}) {close} at singular letter {}", show(&blocks[i + 1]), i + 1));
        let merged = blocks[i].concat(&blocks[i + 1]).concat(&blocks[i + 2]).free_reduce();
        blocks.splice(i..i + 3, [merged]);
        member.splice(i..i + 3, [None]);
        signs.drain(i..i + 2);
    }
}

/// Equality in `SG3`: `w1 w2^{-1} = 1`. Monoid words are lifted.
pub fn equal_sg3(w1: &Word, w2: &Word) -> Result<Verdict, SolverError> {
    let probe = w1.to_group().concat(&w2.to_group().invert()?);
    is_trivial_sg3(&probe)
}

/// The braid relator `σ1σ2σ1σ2^{-1}σ1^{-1}σ2^{-1}`, all its cyclic rotations
/// and their inverses.
fn braid_relators() -> Vec<Word> {
    let base = Word::parse("s1 s2 s1 s2^-1 s1^-1 s2^-1", Mode::Monoid).expect("static word");
    let letters = base.letters();
    let mut out = Vec::new();
    for r in 0..letters.len() {
        let mut rotated = letters[r..].to_vec();
        rotated.extend_from_slice(&letters[..r]);
        let w = Word::from_letters(rotated, Mode::Monoid).expect("braid word");
        out.push(w.invert().expect("braid word"));
        out.push(w);
    }
    out
}

fn h3_conjugators() -> [Word; 4] {
    ["s1", "s1^-1", "s2 s1 s2 s1 s2 s1", "s1^-1 s2^-1 s1^-1 s2^-1 s1^-1 s2^-1"]
        .map(|s| Word::parse(s, Mode::Monoid).expect("static word"))
}

/// Rewrite `w` into another word for the same element of `SB3`.
pub fn perturb(w: &Word, rng: &mut SplitMix64) -> Word {
    let pos = rng.index(w.len() + 1);
    match rng.below(4) {
        0 => {
            let g = [Letter::S1, Letter::S1_INV, Letter::S2, Letter::S2_INV][rng.index(4)];
            let pair = Word::from_letters(vec![g, g.inverted()], Mode::Monoid).expect("braid word");
            w.splice(pos, &pair)
        }
        1 => {
            let rels = braid_relators();
            w.splice(pos, &rels[rng.index(rels.len())])
        }
        2 => {
            // τ ↦ h τ h^{-1} for h in H3
            let taus: Vec<usize> = (0..w.len()).filter(|&i| w.letters()[i].is_tau()).collect();
            if taus.is_empty() {
                let rels = braid_relators();
                return w.splice(pos, &rels[rng.index(rels.len())]);
            }
            let at = taus[rng.index(taus.len())];
            let h = &h3_conjugators()[rng.index(4)];
            let mut out = w.letters()[..at].to_vec();
            out.extend_from_slice(h.letters());
            out.push(Letter::T);
            out.extend_from_slice(h.invert().expect("braid word").letters());
            out.extend_from_slice(&w.letters()[at + 1..]);
            Word::from_letters(out, w.mode()).expect("monoid word")
        }
        _ => {
            // replace an occurrence of one side of a defining relation by the other
            let set = if rng.coin() { RelationSetName::Reduced } else { RelationSetName::Classical };
            let rels = relation_set(set).relations;
            let r = &rels[rng.index(rels.len())];
            let (from, to) = if rng.coin() { (&r.lhs, &r.rhs) } else { (&r.rhs, &r.lhs) };
            let hay = w.letters();
            let needle = from.letters();
            let hit = if needle.is_empty() {
                Some(pos)
            } else {
                (0..hay.len().saturating_sub(needle.len() - 1)).find(|&i| hay[i..].starts_with(needle))
            };
            match hit {
                Some(i) => {
                    let mut out = hay[..i].to_vec();
                    out.extend_from_slice(to.letters());
                    out.extend_from_slice(&hay[i + needle.len()..]);
                    Word::from_letters(out, w.mode()).expect("monoid word")
                }
                // no occurrence; fall back to a free pair
                None => {
                    let pair = Word::parse("s2^-1 s2", Mode::Monoid).expect("static word");
                    w.splice(pos, &pair)
                }
            }
        }
    }
}

fn perturb_many(w: &Word, rng: &mut SplitMix64, max_steps: u64) -> Word {
    let steps = 1 + rng.below(max_steps);
    (0..steps).fold(w.clone(), |acc, _| perturb(&acc, rng))
}

/// Largest number of singular letters in a generated sample word.
pub const SAMPLE_MAX_SING: usize = 8;

/// Sample pair `index` of a seeded run. Pairs cycle through four shapes:
/// independent words, relator-perturbed equal words, perturbed words that
/// differ by one letter, and words whose singular letters are conjugated by
/// an `H3` element (equal) or by an arbitrary braid letter.
pub fn sample_pair(seed: u64, index: u64, max_len: usize) -> (Word, Word) {
    let mut rng = SplitMix64::stream(seed, index);
    // shape 2 may add a singular letter
    let cap = if index % 4 == 2 { SAMPLE_MAX_SING - 1 } else { SAMPLE_MAX_SING };
    let base = random_word_with(&mut rng, max_len, Mode::Monoid, cap);
    match index % 4 {
        0 => {
            let other = random_word_with(&mut rng, max_len, Mode::Monoid, SAMPLE_MAX_SING);
            (base, other)
        }
        1 => (perturb_many(&base, &mut rng, 3), perturb_many(&base, &mut rng, 3)),
        2 => {
            let a = perturb_many(&base, &mut rng, 2);
            let mut b = perturb_many(&base, &mut rng, 2);
            let extra = [Letter::S1, Letter::S1_INV, Letter::S2, Letter::S2_INV, Letter::T][rng.index(5)];
            let at = rng.index(b.len() + 1);
            b = b.splice(at, &Word::from_letters(vec![extra], Mode::Monoid).expect("monoid letter"));
            (a, b)
        }
        _ => {
            let taus: Vec<usize> = (0..base.len()).filter(|&i| base.letters()[i].is_tau()).collect();
            if taus.is_empty() {
                return (base.clone(), perturb(&base, &mut rng));
            }
            let at = taus[rng.index(taus.len())];
            let h = if rng.coin() {
                h3_conjugators()[rng.index(4)].clone()
            } else {
                let g = [Letter::S1, Letter::S1_INV, Letter::S2, Letter::S2_INV][rng.index(4)];
                Word::from_letters(vec![g], Mode::Monoid).expect("braid letter")
            };
            let mut out = base.letters()[..at].to_vec();
            out.extend_from_slice(h.letters());
            out.push(Letter::T);
            out.extend_from_slice(h.invert().expect("braid word").letters());
            out.extend_from_slice(&base.letters()[at + 1..]);
            (base.clone(), Word::from_letters(out, Mode::Monoid).expect("monoid word"))
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Disagreement {
    pub index: u64,
    pub w1: String,
    pub w2: String,
    pub burau: Verdict,
    pub recursion: Verdict,
    pub pinch: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckReport {
    pub seed: u64,
    pub samples: u64,
    pub max_len: usize,
    pub equal_pairs: u64,
    pub unequal_pairs: u64,
    pub disagreements: Vec<Disagreement>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Run all three deciders on `samples` seeded pairs and collect disagreements.
pub fn cross_check(seed: u64, samples: u64, max_len: usize) -> CrossCheckReport {
    let outcomes: Vec<(bool, Option<Disagreement>)> = (0..samples)
        .into_par_iter()
        .map(|index| {
            let (w1, w2) = sample_pair(seed, index, max_len);
            let verdicts: Vec<Verdict> = Method::ALL
                .iter()
                .map(|&m| decide(m, &w1, &w2).expect("sample words are valid SB3 words"))
                .collect();
            let agree = verdicts.iter().all(|v| v.equal == verdicts[0].equal);
            let equal = agree && verdicts[0].equal;
            let disagreement = (!agree).then(|| {
                let mut it = verdicts.into_iter();
                Disagreement {
                    index,
                    w1: w1.to_string(),
                    w2: w2.to_string(),
                    burau: it.next().expect("three verdicts"),
                    recursion: it.next().expect("three verdicts"),
                    pinch: it.next().expect("three verdicts"),
                }
            });
            (equal, disagreement)
        })
        .collect();

    let equal_pairs = outcomes.iter().filter(|(e, _)| *e).count() as u64;
    CrossCheckReport {
        seed,
        samples,
        max_len,
        equal_pairs,
        unequal_pairs: samples - equal_pairs,
        disagreements: outcomes.into_iter().filter_map(|(_, d)| d).collect(),
    }
}
