//! Words over `σ1^{±1}, σ2^{±1}, τ^{±1}`: parsing, rendering, inversion,
//! free reduction and splitting at the singular letters.
//!
//! Text grammar:
//!
//! ```text
//! word := ε | term (whitespace term)*
//! term := "1" | gen ("^" signed-int)?
//! gen  := "s1" | "s2" | "t1"
//! ```
//!
//! A term with exponent `k` stands for `|k|` copies of the generator with the
//! sign of `k`; the term `1` is the identity. Rendering groups equal neighbours back into powers.

use std::fmt;

use thiserror::Error;

/// Largest exponent accepted in a single term.
pub const MAX_TERM_EXPONENT: i64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Sigma1,
    Sigma2,
    Tau,
}

impl Generator {
    pub fn token(self) -> &'static str {
        match self {
            Generator::Sigma1 => "s1",
            Generator::Sigma2 => "s2",
            Generator::Tau => "t1",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub const S1: Letter = Letter { generator: Generator::Sigma1, inverse: false };
    pub const S1_INV: Letter = Letter { generator: Generator::Sigma1, inverse: true };
    pub const S2: Letter = Letter { generator: Generator::Sigma2, inverse: false };
    pub const S2_INV: Letter = Letter { generator: Generator::Sigma2, inverse: true };
    pub const T: Letter = Letter { generator: Generator::Tau, inverse: false };
    pub const T_INV: Letter = Letter { generator: Generator::Tau, inverse: true };

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverted(self) -> Letter {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    pub fn is_tau(self) -> bool {
        self.generator == Generator::Tau
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// Whether a word lives in the monoid `SB3` or in its group closure `SG3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Monoid,
    Group,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("column {column}: unknown token {token:?}")]
    UnknownToken { column: usize, token: String },
    #[error("column {column}: malformed exponent in {token:?}")]
    MalformedExponent { column: usize, token: String },
    #[error("column {column}: exponent in {token:?} exceeds {MAX_TERM_EXPONENT}")]
    ExponentTooLarge { column: usize, token: String },
    #[error("column {column}: {token:?} has a negative singular power, which only exists in the group SG3")]
    NegativeTauInMonoid { column: usize, token: String },
    #[error("a singular generator has no inverse in the monoid SB3")]
    InvertSingular,
    #[error("word contains t1^-1, which only exists in the group SG3")]
    NotAMonoidWord,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    mode: Mode,
}

impl Word {
    pub fn empty(mode: Mode) -> Self {
        Word { letters: Vec::new(), mode }
    }

    pub fn from_letters(letters: Vec<Letter>, mode: Mode) -> Result<Self, WordError> {
        if mode == Mode::Monoid && letters.contains(&Letter::T_INV) {
            return Err(WordError::NotAMonoidWord);
        }
        Ok(Word { letters, mode })
    }

    pub fn parse(text: &str, mode: Mode) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in text.split_whitespace() {
            // split_whitespace does not report offsets; recover them
            let start = offset + text[offset..].find(token).expect("token comes from text");
            offset = start + token.len();
            let column = start + 1;
            if token == "1" {
                continue;
            }

            let (gen_text, exp_text) = match token.split_once('^') {
                Some((g, e)) => (g, Some(e)),
                None => (token, None),
            };
            let generator = match gen_text {
                "s1" => Generator::Sigma1,
                "s2" => Generator::Sigma2,
                "t1" => Generator::Tau,
                _ => return Err(WordError::UnknownToken { column, token: token.to_string() }),
            };
            let exp: i64 = match exp_text {
                None => 1,
                Some(e) => {
                    let digits = e.strip_prefix(['+', '-']).unwrap_or(e);
                    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
                        return Err(WordError::MalformedExponent { column, token: token.to_string() });
                    }
                    e.parse()
                        .ok()
                        .filter(|v: &i64| v.abs() <= MAX_TERM_EXPONENT)
                        .ok_or_else(|| WordError::ExponentTooLarge { column, token: token.to_string() })?
                }
            };
            if generator == Generator::Tau && exp < 0 && mode == Mode::Monoid {
                return Err(WordError::NegativeTauInMonoid { column, token: token.to_string() });
            }
            let letter = Letter { generator, inverse: exp < 0 };
            letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        }
        Ok(Word { letters, mode })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn has_tau(&self) -> bool {
        self.letters.iter().any(|l| l.is_tau())
    }

    /// Number of `τ` letters (positive and negative).
    pub fn tau_letters(&self) -> usize {
        self.letters.iter().filter(|l| l.is_tau()).count()
    }

    /// Net number of singular letters: `#τ - #τ^{-1}`.
    pub fn singular_count(&self) -> i64 {
        self.letters.iter().filter(|l| l.is_tau()).map(|l| l.sign()).sum()
    }

    /// Signed count of `σ` letters.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().filter(|l| !l.is_tau()).map(|l| l.sign()).sum()
    }

    pub fn to_group(&self) -> Word {
        Word { letters: self.letters.clone(), mode: Mode::Group }
    }

    pub fn to_monoid(&self) -> Result<Word, WordError> {
        Word::from_letters(self.letters.clone(), Mode::Monoid)
    }

    /// Concatenation; the result is a group word if either factor is.
    pub fn concat(&self, other: &Word) -> Word {
        let mode = if self.mode == Mode::Group || other.mode == Mode::Group {
            Mode::Group
        } else {
            Mode::Monoid
        };
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters, mode }
    }

    pub fn push(&mut self, letter: Letter) -> Result<(), WordError> {
        if self.mode == Mode::Monoid && letter == Letter::T_INV {
            return Err(WordError::NotAMonoidWord);
        }
        self.letters.push(letter);
        Ok(())
    }

    /// Insert `other` before position `at`.
    pub fn splice(&self, at: usize, other: &Word) -> Word {
        let mut out = self.letters[..at].to_vec();
        out.extend_from_slice(&other.letters);
        out.extend_from_slice(&self.letters[at..]);
        let base = Word { letters: Vec::new(), mode: self.mode };
        Word { letters: out, mode: base.concat(other).mode }
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word { letters: self.letters.repeat(times), mode: self.mode }
    }

    /// Group inverse. Monoid words may only be inverted when they contain no `τ`.
    pub fn invert(&self) -> Result<Word, WordError> {
        if self.mode == Mode::Monoid && self.has_tau() {
            return Err(WordError::InvertSingular);
        }
        Ok(Word {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
            mode: self.mode,
        })
    }

    /// Cancel adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            match out.last() {
                Some(&top) if top.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word { letters: out, mode: self.mode }
    }

    /// Cut the word at every `τ^{±1}`.
    pub fn split_at_tau(&self) -> SplitForm {
        let mut blocks = vec![Vec::new()];
        let mut tau_signs = Vec::new();
        for &l in &self.letters {
            if l.is_tau() {
                tau_signs.push(l.sign());
                blocks.push(Vec::new());
            } else {
                blocks.last_mut().expect("at least one block").push(l);
            }
        }
        SplitForm {
            blocks: blocks.into_iter().map(|letters| Word { letters, mode: self.mode }).collect(),
            tau_signs,
            mode: self.mode,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for run in self.letters.chunk_by(|a, b| a == b) {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let l = run[0];
            let power = run.len() as i64 * l.sign();
            if power == 1 {
                f.write_str(l.generator.token())?;
            } else {
                write!(f, "{}^{}", l.generator.token(), power)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?}, \"{}\")", self.mode, self)
    }
}

/// `b0 τ^{s1} b1 … τ^{sm} bm` with `τ`-free blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitForm {
    pub blocks: Vec<Word>,
    pub tau_signs: Vec<i64>,
    pub mode: Mode,
}

impl SplitForm {
    /// Number of `τ` letters.
    pub fn singularities(&self) -> usize {
        self.tau_signs.len()
    }

    pub fn reassemble(&self) -> Word {
        let mut letters = self.blocks[0].letters.clone();
        for (sign, block) in self.tau_signs.iter().zip(&self.blocks[1..]) {
            letters.push(if *sign > 0 { Letter::T } else { Letter::T_INV });
            letters.extend_from_slice(&block.letters);
        }
        Word { letters, mode: self.mode }
    }
}
