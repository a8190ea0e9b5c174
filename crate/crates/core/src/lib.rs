//! Exact computation of pole sets and Baxter polynomials for finite-dimensional
//! representations of Yangians.
//!
//! The crate is organised bottom-up:
//!
//! * [`cartan`]: Cartan data for the simple types, including `2κ`, the dual
//!   Coxeter number and the diagram involution `i ↦ i*`.
//! * [`laurent`]: exact Laurent polynomials in `q` and truncated Taylor windows.
//! * [`qcartan`]: the q-Cartan matrix `B(q)`, its scaled inverse `C(q)`, the
//!   coefficients `v_ij^(r)` and the Laurent polynomials `p_ij(q)`.
//! * [`spectral`]: spectral points, pole multisets and Drinfeld tuples.
//! * [`poles`]: Baxter polynomials and pole sets of irreducible modules.
//! * [`criteria`]: cyclicity, irreducibility and Yangian-double admissibility.
//! * [`explicit`]: explicit matrix representations used as brute-force oracles.
//! * [`coxeter`]: simply-laced root system engine for the Coxeter-element
//!   formula of `v_ij^(r)`.
//! * [`acceptance`]: the end-to-end property checks shared by the test suite
//!   and the `selftest` command.
//!
//! Node indices are 0-based throughout the library: Bourbaki label `k`
//! corresponds to index `k - 1`. Spectral parameters are measured in units
//! of `ℏ`, which never appears as a number.

pub mod acceptance;
pub mod cartan;
pub mod coxeter;
pub mod criteria;
pub mod error;
pub mod explicit;
pub mod json;
pub mod laurent;
pub mod poles;
pub mod qcartan;
pub mod rational;
pub mod spectral;

pub use cartan::{CartanDatum, Family};
pub use error::{Error, Result};
pub use laurent::{LaurentPoly, SeriesWindow};
pub use qcartan::QCartanData;
pub use rational::Q;
pub use spectral::{DrinfeldTuple, Orbit, PointSet, PoleMultiset, SpectralPoint};
