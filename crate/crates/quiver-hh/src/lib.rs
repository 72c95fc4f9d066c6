//! Computational homological algebra for bounded quiver algebras A = KQ/I.
//!
//! The crate builds finite-dimensional path-algebra quotients from a textual
//! presentation, then answers homological questions about them exactly:
//!
//! - truncated oriented cycle detection in the quiver of A,
//! - Hochschild homology dimensions from the normalized chain complex,
//! - machine-checkable certificates that a specific homology class is nonzero,
//! - projective dimensions and global dimension, exactly for monomial
//!   algebras and up to a syzygy cutoff in general.
//!
//! Start with [`presentation::parse_presentation`] and [`algebra::Algebra`],
//! or run the examples: each file under `examples/` exercises one capability
//! end to end (`cargo run --example hochschild_dimensions`).

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod cycles;
pub mod error;
pub mod field;
pub mod hochschild;
pub mod linalg;
pub mod presentation;
pub mod quiver;
pub mod report;
pub mod resolutions;

pub use error::{Error, Result};
pub use field::{FieldDescriptor, Scalar};

/// Entry point used by the `quiver-hh` binary; returns the process exit code.
pub fn cli_main() -> i32 {
    cli::run()
}
