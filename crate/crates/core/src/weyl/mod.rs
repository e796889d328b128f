//! The extended affine Weyl group `W̃ = X_*(T) ⋊ S_n` of `GL_n`.

mod coxeter;
mod element;
mod perm;
mod root;

pub use coxeter::{bruhat_leq, decompose, first_left_descent, lower_interval, word_product, OmegaDecomposition};
pub use element::{AffWeylElt, Cocharacter};
pub use perm::Permutation;
pub use root::{AffineRoot, SimpleAffineReflection};
