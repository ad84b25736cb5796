//! Exact decision procedures for the singular braid monoid `SB3` on three
//! strands and its group closure `SG3`.
//!
//! Three independent solvers decide word equality: comparison of singular
//! Burau matrices, a recursion on the last singular letter driven by
//! membership in `H3 = ⟨σ1, (σ2σ1)^3⟩`, and Britton pinch reduction in the
//! HNN extension `SG3`. The [`birman`] module adds the Birman homomorphism
//! into `Z[B3]` and the resolution calculus on modified Burau matrices.

pub mod algebra;
pub mod band;
pub mod birman;
pub mod burau;
pub mod cli;
pub mod presentation;
pub mod rng;
pub mod solver;
pub mod words;

pub use band::{membership_h3, nf_equal, normal_form, H3Witness, NormalForm};
pub use burau::{burau_equal, burau_eval, BurauImage};
pub use solver::{cross_check, equal_sb3, equal_sg3, is_trivial_sg3, Method, Verdict};
pub use words::{Letter, Mode, Word};
