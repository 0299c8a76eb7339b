//! Exact scalar rings and sparse linear algebra over them.

mod matrix;
mod ring;

pub use matrix::{RowSolver, SparseMatrix, SparseVec};
pub use ring::{is_prime, EliminationDomain, Field, IntPolys, Integers, Poly, PrimeField, Rationals, Ring};
