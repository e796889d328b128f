//! Exact combinatorics of the extended affine Weyl group of `GL_n` and of
//! affine Deligne-Lusztig varieties attached to basic σ-conjugacy classes.
//!
//! The crate is organised bottom-up:
//!
//! * [`weyl`]: permutations, cocharacters, elements `t^λ·u` of the extended
//!   affine Weyl group, length, affine roots, reduced words and Bruhat order.
//! * [`alcove`]: the projections `p1`/`p2`, Newton vectors, the Kottwitz map,
//!   dominance order and basic classes.
//! * [`emptiness`]: the P-alcove non-emptiness test for `X_x(b)`, `b` basic.
//! * [`admissible`]: admissible sets, `SAdm(λ)°`, the finite Coxeter type
//!   classifier and dimension bookkeeping.
//! * [`reduction`]: Deligne-Lusztig reduction as a rewriting system.
//!
//! All values are immutable and every operation is a pure function.

pub mod admissible;
pub mod alcove;
pub mod emptiness;
mod error;
pub mod reduction;
pub mod weyl;

pub use error::{Error, Result};
pub use weyl::{AffWeylElt, AffineRoot, Cocharacter, OmegaDecomposition, Permutation, SimpleAffineReflection};

pub use alcove::{BasicClass, Rational, RationalVector};
