//! Deterministic, splittable random words.
//!
//! The generator is SplitMix64 so that ports in other languages can
//! reproduce the same words from the same seed:
//!
//! ```text
//! mix(z):  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//!          z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//!          return z ^ (z >> 31)
//! next():  state += 0x9E3779B97F4A7C15; return mix(state)
//! stream(seed, i): state = mix(seed ^ mix(i + 0x9E3779B97F4A7C15))
//! below(n): (next() * n) >> 64            (128-bit product)
//! ```
//!
//! All arithmetic wraps modulo 2^64. Sample `i` of a seeded run always draws
//! from `stream(seed, i)`, so results do not depend on evaluation order.

use crate::words::{Letter, Mode, Word};

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Independent stream `index` derived from `seed`.
    pub fn stream(seed: u64, index: u64) -> Self {
        SplitMix64 { state: mix(seed ^ mix(index.wrapping_add(GOLDEN))) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform-ish value in `0..n` by multiply-shift. `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.below(n as u64) as usize
    }

    pub fn coin(&mut self) -> bool {
        self.below(2) == 1
    }
}

const SIGMA_LETTERS: [Letter; 4] = [Letter::S1, Letter::S1_INV, Letter::S2, Letter::S2_INV];
const MONOID_LETTERS: [Letter; 5] = [Letter::S1, Letter::S1_INV, Letter::S2, Letter::S2_INV, Letter::T];
const GROUP_LETTERS: [Letter; 6] =
    [Letter::S1, Letter::S1_INV, Letter::S2, Letter::S2_INV, Letter::T, Letter::T_INV];

/// Random word of length `0..=max_len` with letters uniform over the mode's
/// alphabet. Once `max_sing` singular letters have been drawn the rest come
/// from the σ letters only.
pub fn random_word_with(rng: &mut SplitMix64, max_len: usize, mode: Mode, max_sing: usize) -> Word {
    let len = rng.index(max_len + 1);
    let alphabet: &[Letter] = match mode {
        Mode::Monoid => &MONOID_LETTERS,
        Mode::Group => &GROUP_LETTERS,
    };
    let mut letters = Vec::with_capacity(len);
    let mut singular = 0;
    for _ in 0..len {
        let l = if singular < max_sing {
            alphabet[rng.index(alphabet.len())]
        } else {
            SIGMA_LETTERS[rng.index(SIGMA_LETTERS.len())]
        };
        if l.is_tau() {
            singular += 1;
        }
        letters.push(l);
    }
    Word::from_letters(letters, mode).expect("alphabet matches mode")
}

pub fn random_word(seed: u64, max_len: usize, mode: Mode, max_sing: usize) -> Word {
    random_word_with(&mut SplitMix64::new(seed), max_len, mode, max_sing)
}
