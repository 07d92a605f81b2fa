//! A_α spectral radius of strongly connected digraphs, where
//! `A_α(G) = α D⁺(G) + (1 - α) A(G)` for `α ∈ [0, 1)`.
//!
//! Certified radii by power iteration, the extremal families and their
//! closed forms, radius-monotone transformations, and exhaustive
//! verification over all strongly connected digraphs of small order.

pub mod digraph;
pub mod error;
pub mod families;
pub mod formulas;
pub mod harness;
pub mod oracle;
pub mod spectral;
pub mod transforms;

pub use digraph::Digraph;
pub use error::{Error, Result};
pub use spectral::{spectral_radius, PowerOptions, SpectralResult};
