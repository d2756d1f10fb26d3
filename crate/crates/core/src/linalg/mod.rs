//! Exact scalars (𝔽_p, ℚ, ℤ/p²) and sparse linear algebra over them.

mod echelon;
mod scalar;
mod sparse;
mod subspace;

pub use echelon::Echelon;
pub use scalar::{Domain, Scalar, ScalarOp};
pub use sparse::{RankKernelImage, SparseMatrix, SparseVec};
pub use subspace::Subspace;
