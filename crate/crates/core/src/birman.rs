//! The Birman homomorphism `η: SB3 → Z[B3]` and its matrix-level shadow.
//!
//! `η` sends `τ` to `σ1 - σ1^{-1}`. On the matrix side the `j`-th singular
//! letter of a word gets its own variable `y_j` (the modified Burau matrix),
//! a resolution sends every `y_j` to `1` or `t^{-1}`, and `ρ` is the signed
//! sum over all resolutions. The square
//!
//! ```text
//!   SB3^(m) ──β̃──> M2(Z[t^±1, y1..ym]) ──p──> M2(Z[t^±1, y])
//!     │η                   │ρ
//!     v                    v
//!   Z[B3] ────Z[β]───> Z[M2(Z[t^±1])]
//! ```
//!
//! commutes, and `p ∘ β̃` is the singular Burau representation.

use std::sync::OnceLock;

use itertools::Itertools;
use thiserror::Error;

use crate::algebra::{FormalSum, LaurentPoly, Mat2, Var};
use crate::band::{normal_form, NormalForm};
use crate::burau::{burau_eval, generator_matrix, BurauImage};
use crate::words::{Letter, Word, WordError};

/// Default bound on singular letters for the exponential constructions here.
pub const DEFAULT_MAX_SING: usize = 8;

/// The singularity cap: `SB3_MAX_SING` if set to a number, else 8.
pub fn max_singularities() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("SB3_MAX_SING")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_SING)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BirmanError {
    #[error("{found} singular letters exceed the cap of {cap} (set SB3_MAX_SING to raise it)")]
    TooManySingularities { found: usize, cap: usize },
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Element of `Z[B3]`, keyed by band normal forms.
pub type GroupRingElt = FormalSum<NormalForm>;

/// Element of `Z[M2(Z[t^±1])]`, keyed by the canonical text of each matrix.
pub type MatrixRingSum = FormalSum<String>;

fn checked_singularities(w: &Word) -> Result<usize, BirmanError> {
    let w = w.to_monoid()?;
    let found = w.tau_letters();
    let cap = max_singularities();
    if found > cap {
        return Err(BirmanError::TooManySingularities { found, cap });
    }
    Ok(found)
}

fn sign_of(mask: u64) -> i64 {
    if mask.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Resolve every singular letter: bit `j` of `mask` clear sends the `j`-th
/// `τ` to `σ1`, set sends it to `σ1^{-1}`.
pub fn resolve_word(w: &Word, mask: u64) -> Word {
    let mut j = 0;
    let letters = w
        .letters()
        .iter()
        .map(|&l| {
            if !l.is_tau() {
                return l;
            }
            let left = mask >> j & 1 == 1;
            j += 1;
            if left {
                Letter::S1_INV
            } else {
                Letter::S1
            }
        })
        .collect();
    Word::from_letters(letters, w.mode()).expect("resolved word has no singular letters")
}

pub fn eta(w: &Word) -> Result<GroupRingElt, BirmanError> {
    let m = checked_singularities(w)?;
    let mut out = GroupRingElt::new();
    for mask in 0..1u64 << m {
        let nf = normal_form(&resolve_word(w, mask)).expect("resolved words are braid words");
        out.add_term(nf, sign_of(mask));
    }
    Ok(out)
}

/// A modified Burau matrix up to renaming of `y1..ym`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModifiedBurauOrbit {
    /// Least renaming in the entry-wise polynomial order among those that
    /// list the variables by increasing signature.
    pub matrix: Mat2<LaurentPoly>,
    pub m: usize,
}

/// What `y_i` looks like in `matrix`, independent of how the other indexed
/// variables are named: per term containing `y_i`, its entry, `t` and `y`
/// exponents, `y_i` exponent, total indexed degree, indexed support and
/// coefficient.
type Signature = Vec<(usize, i32, i32, i32, i32, usize, String)>;

fn signature(matrix: &Mat2<LaurentPoly>, i: usize) -> Signature {
    let mut sig: Signature = matrix
        .entries()
        .iter()
        .enumerate()
        .flat_map(|(entry, poly)| {
            poly.terms().filter(|(mono, _)| mono.exponent(Var::Yi(i)) != 0).map(move |(mono, c)| {
                let indexed = &mono.exponents()[2..];
                (
                    entry,
                    mono.exponent(Var::T),
                    mono.exponent(Var::Y),
                    mono.exponent(Var::Yi(i)),
                    indexed.iter().sum(),
                    indexed.iter().filter(|&&d| d != 0).count(),
                    c.to_string(),
                )
            })
        })
        .collect();
    sig.sort();
    sig
}

impl ModifiedBurauOrbit {
    /// Canonicalize by the least signature-ordered renaming. Renaming the
    /// input permutes that set of renamings, so the result only depends on
    /// the orbit.
    pub fn from_representative(matrix: &Mat2<LaurentPoly>, m: usize) -> Self {
        if m <= 1 {
            return ModifiedBurauOrbit { matrix: matrix.clone(), m };
        }
        let sigs: Vec<Signature> = (1..=m).map(|i| signature(matrix, i)).collect();
        let mut order: Vec<usize> = (1..=m).collect();
        order.sort_by(|a, b| sigs[a - 1].cmp(&sigs[b - 1]));
        let blocks: Vec<Vec<usize>> =
            order.chunk_by(|a, b| sigs[a - 1] == sigs[b - 1]).map(|c| c.to_vec()).collect();

        let canonical = blocks
            .iter()
            .map(|b| b.clone().into_iter().permutations(b.len()))
            .multi_cartesian_product()
            .map(|arrangement| {
                let mut perm = vec![0; m];
                for (pos, &orig) in arrangement.iter().flatten().enumerate() {
                    perm[orig - 1] = pos + 1;
                }
                matrix.map(|e| e.permute_indexed(&perm))
            })
            .min_by(|a, b| a.entries().cmp(&b.entries()))
            .expect("at least one renaming");
        ModifiedBurauOrbit { matrix: canonical, m }
    }

    /// Largest exponent of any single `y_i` in any entry.
    pub fn max_indexed_degree(&self) -> i32 {
        self.matrix
            .entries()
            .iter()
            .flat_map(|e| (1..=self.m).map(move |i| e.degree_in(Var::Yi(i))))
            .max()
            .unwrap_or(0)
    }
}

fn singular_matrix(j: usize, slots: usize) -> Mat2<LaurentPoly> {
    let yj = LaurentPoly::var(Var::Yi(j), slots);
    let t = LaurentPoly::t_pow(1, slots);
    let one = LaurentPoly::one(slots);
    Mat2::new(&(&one - &yj) - &(&t * &yj), yj, LaurentPoly::zero(slots), one)
}

/// Product of generator matrices with the `j`-th singular letter (in reading
/// order) sent to the `y_j` matrix.
pub fn modified_burau_matrix(w: &Word) -> Result<Mat2<LaurentPoly>, BirmanError> {
    let m = checked_singularities(w)?;
    let mut out = Mat2::identity_like(&LaurentPoly::zero(m));
    let mut j = 0;
    for &l in w.letters() {
        let factor = if l.is_tau() {
            j += 1;
            singular_matrix(j, m)
        } else {
            generator_matrix(l).expect("σ letters always have matrices").map(|e| e.with_slots(m))
        };
        out = out.mul(&factor);
    }
    Ok(out)
}

pub fn modified_burau(w: &Word) -> Result<ModifiedBurauOrbit, BirmanError> {
    let m = checked_singularities(w)?;
    Ok(ModifiedBurauOrbit::from_representative(&modified_burau_matrix(w)?, m))
}

/// The resolution `r` with `y_j ↦ t^{-1}` when bit `j-1` of `mask` is set and
/// `y_j ↦ 1` otherwise.
pub fn resolve_matrix(matrix: &Mat2<LaurentPoly>, m: usize, mask: u64) -> Mat2<LaurentPoly> {
    if m == 0 {
        return matrix.clone();
    }
    let assignment: Vec<(Var, LaurentPoly)> = (0..m)
        .map(|j| {
            let image = if mask >> j & 1 == 1 { LaurentPoly::t_pow(-1, 0) } else { LaurentPoly::one(0) };
            (Var::Yi(j + 1), image)
        })
        .collect();
    matrix
        .try_map(|e| e.substitute(&assignment))
        .expect("resolution images are valid")
}

/// `ρ` on any representative: `Σ_r (-1)^{μ(r)} r(M)`.
pub fn rho_matrix(matrix: &Mat2<LaurentPoly>, m: usize) -> MatrixRingSum {
    (0..1u64 << m)
        .map(|mask| (resolve_matrix(matrix, m, mask).to_string(), sign_of(mask)))
        .collect()
}

pub fn rho(orbit: &ModifiedBurauOrbit) -> MatrixRingSum {
    rho_matrix(&orbit.matrix, orbit.m)
}

/// `p`: send every `y_i` to `y`.
pub fn project_p(orbit: &ModifiedBurauOrbit) -> Mat2<LaurentPoly> {
    project_matrix(&orbit.matrix, orbit.m)
}

/// `p` on any representative.
pub fn project_matrix(matrix: &Mat2<LaurentPoly>, m: usize) -> Mat2<LaurentPoly> {
    let assignment: Vec<(Var, LaurentPoly)> =
        (1..=m).map(|i| (Var::Yi(i), LaurentPoly::var(Var::Y, 0))).collect();
    matrix
        .try_map(|e| e.substitute(&assignment))
        .expect("projection images are valid")
}

/// `Z[β]`: evaluate every braid of a group-ring element under Burau.
pub fn groupring_burau(x: &GroupRingElt) -> MatrixRingSum {
    x.map_keys(|nf| braid_matrix(nf).matrix.to_string())
}

fn braid_matrix(nf: &NormalForm) -> BurauImage {
    burau_eval(&nf.to_word()).expect("normal forms are braid words")
}

/// Both faces of the diagram: `ρ ∘ β̃ = Z[β] ∘ η` and `p ∘ β̃ = β_s`.
///
/// `ρ` and `p` do not see the numbering of the `y_i`, so the reading-order
/// representative is used directly.
pub fn check_diagram(w: &Word) -> Result<bool, BirmanError> {
    let m = checked_singularities(w)?;
    let rep = modified_burau_matrix(w)?;
    let lower = rho_matrix(&rep, m) == groupring_burau(&eta(w)?);
    let upper = project_matrix(&rep, m) == burau_eval(&w.to_monoid()?).expect("monoid word").matrix;
    Ok(lower && upper)
}

/// Number of `y_i` sent to `t^{-1}`, read off the determinant of a resolved
/// matrix `(-1)^{e+m} t^{e+m-2μ}`.
pub fn recover_index(det: &LaurentPoly, exponent_sum: i64, m: usize) -> Option<usize> {
    let (sign, d) = det.as_signed_t_power()?;
    let total = exponent_sum + m as i64;
    let expected_sign = if total.rem_euclid(2) == 0 { 1 } else { -1 };
    let twice_mu = total - d as i64;
    if sign != expected_sign || twice_mu < 0 || twice_mu % 2 != 0 || twice_mu / 2 > m as i64 {
        return None;
    }
    Some((twice_mu / 2) as usize)
}
