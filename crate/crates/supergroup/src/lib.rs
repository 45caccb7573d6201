//! The quantum supergroup GL_h(1|1): presentations, Hopf structure,
//! differential calculus, R-matrix identities, and the contraction from
//! GL_q(1|1), each with mechanical checks.

pub mod calculus;
pub mod contraction;
pub mod error;
pub mod file;
pub mod hopf;
pub mod maps;
pub mod presentations;
pub mod report;
pub mod rmatrix;
pub mod suites;

pub use error::Error;
pub use presentations::{Library, Presentation};
