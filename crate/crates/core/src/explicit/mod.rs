//! Explicit finite-dimensional representations over the field of rational
//! functions in the spectral parameter `u`.
//!
//! These are brute-force oracles: every pole set computed here is read off
//! actual matrices, independently of the combinatorial formulas.

pub mod poly;
pub mod matrix;
pub mod module;
pub mod analysis;
pub mod ratfn;
pub mod relations;
pub mod resolvent;
pub mod tensor;
