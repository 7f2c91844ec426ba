//! The q-Yangian side: evaluation modules, tensor products, quantum minors,
//! R-matrices, identity checks, lowering operators and singular vectors.

pub mod identities;
pub mod lowering;
pub mod minor;
pub mod module;
pub mod operator;
pub mod rmatrix;

pub use minor::{comatrix, qdet, qdet_eigenvalue, quantum_minor, MinorForm};
pub use module::{EvalModule, TensorModule, YangianModule};
pub use operator::{MultiOp, MultiPoly, OperatorPoly, PolyMatrix};
