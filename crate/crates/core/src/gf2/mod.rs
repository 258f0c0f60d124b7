//! Word-parallel vector and matrix arithmetic over GF(2).

mod affine;
mod matrix;
mod vector;

pub use affine::{solve_affine, solve_affine_words, AffineSpace, WordAffine};
pub use matrix::{BinaryMatrix, Echelon};
pub use vector::BitVector;
