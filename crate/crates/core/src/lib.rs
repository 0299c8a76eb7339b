//! Exact verification of orthogonal Schur-Weyl duality: Brauer diagrams,
//! the Brauer algebra over several coefficient rings, Murphy-type bases of
//! the kernel of the tensor representation, and the matching dimension checks.

pub mod algebra;
pub mod combinatorics;
pub mod diagram;
pub mod duality;
pub mod error;
pub mod exact_linalg;
pub mod specht;
pub mod tensor_rep;

pub use diagram::BrauerDiagram;
pub use error::{Error, Result};
