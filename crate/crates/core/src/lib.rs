//! Zero-divisor graphs of finite commutative rings.
//!
//! The crate builds Beck's graph `Γ₀(R)`, the Anderson–Livingston graph
//! `Γ(R)` and its complement for rings given as products of `Z_{p^r}` and
//! `GF(p^k)`, computes exact clique and chromatic numbers, and runs the
//! constructive χ = ω arguments as certificate generators.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod harness;
pub mod ring;
pub mod solvers;

pub use error::{Error, Result};
