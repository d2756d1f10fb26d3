//! Exact computation of Hochschild, group and symmetric cohomology of
//! twisted group algebras, with cochain-level checks of the comparison maps
//! between them.

pub mod complexes;
pub mod connecting;
pub mod decomp;
pub mod error;
pub mod groups;
pub mod linalg;
pub mod report;
pub mod runner;
pub mod twisted;

pub use error::{Error, Result};
