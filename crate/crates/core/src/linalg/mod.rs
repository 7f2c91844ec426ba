//! Exact linear algebra over [`Rational`](crate::arith::Rational) and over
//! Laurent polynomials.
//!
//! Matrices are stored as sorted sparse rows: action matrices in the
//! Gelfand–Tsetlin basis have a handful of nonzeros per column, and tensor
//! products of them reach dimensions in the thousands. Row reduction works on
//! dense copies of (small) blocks.

mod echelon;
mod laurent_matrix;
mod matrix;
mod reduce;

pub use echelon::{Echelon, SparseVec};
pub use laurent_matrix::LaurentMatrix;
pub use matrix::Matrix;
pub use reduce::{invariant_span, joint_kernel, rank, rref_rank_kernel, Rref};
