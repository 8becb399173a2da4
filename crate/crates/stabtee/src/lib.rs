//! Exact entanglement entropy, module Gröbner bases and boundary analysis for
//! two-dimensional translation-invariant qudit stabilizer codes.
//!
//! Codes are described by Laurent-polynomial generators (see [`code`]); finite
//! computations instantiate them on a plane patch, cylinder or torus (see
//! [`lattice`]) and count stabilizer subgroups through ranks over Z_p.

pub mod boundary;
pub mod code;
pub mod entropy;
pub mod fp_linalg;
pub mod groebner;
pub mod lattice;
pub mod laurent;
pub mod pauli;

pub use code::{builtin, validate, CodeSpec, ValidationReport};
pub use entropy::EntropyValue;
pub use laurent::{LaurentPoly, Monomial, Window};
pub use pauli::{PauliVector, SyndromeVector};
