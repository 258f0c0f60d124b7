//! Shortest self-orthogonal embeddings of binary linear codes.
//!
//! A self-orthogonal (SO) embedding of an `[n, k]` code `C` is a self-orthogonal
//! code of length `n + m` that punctures back to `C` on its last `m`
//! coordinates. The smallest such `m` is fixed by the hull dimension
//! `l = dim(C ∩ C^⊥)` and by whether `C` is even:
//!
//! * `m = 0` when `C` is already self-orthogonal,
//! * `m = k - l` when `k - l` is odd or `C` has an odd-weight codeword,
//! * `m = k - l + 1` otherwise.
//!
//! The crate computes that number, builds embeddings reaching it, enumerates
//! all of them up to permutation equivalence, and sweeps the self-dual
//! embeddings of dual-containing codes through the orthogonal group.

pub mod codes;
pub mod embed;
mod error;
pub mod fixtures;
pub mod gf2;
pub mod orthosearch;
pub mod search;

pub use codes::{LinearCode, WeightDistribution};
pub use embed::{EmbeddingResult, Strategy};
pub use error::{Error, Result};
pub use gf2::{BinaryMatrix, BitVector};
