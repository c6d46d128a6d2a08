//! Exact-arithmetic workbench for n-Lie (Filippov) algebras over GF(2^m).

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod combin;
pub mod error;
pub mod field;
pub mod format;
pub mod invariants;
pub mod iso;
pub mod matrix;
pub mod structmat;

pub use algebra::{Algebra, JacobiViolation};
pub use error::{Error, Result};
pub use field::{Field, FieldError, Scalar};
pub use matrix::{Matrix, Subspace};
