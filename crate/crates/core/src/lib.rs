//! Exact construction of Capelli-type central elements.
//!
//! The crate builds the Capelli elements of `U(gl_N)`, the polynomial
//! families `Z_nu(u)` of `U(so_N)` and `U(sp_N)`, and checks the identities
//! relating them to symmetric functions. All arithmetic is exact.

pub mod arith;
pub mod combinatorics;
pub mod error;
pub mod gl;
pub mod linalg;
pub mod osp;
pub mod symfun;
pub mod symgroup;
pub mod tensor;
pub mod verify;

pub use error::{ArithError, CapelliError, Result};
