//! Exact-arithmetic toolkit for beta-expansions and left-infinite alpha-adic
//! expansions in Pisot bases.
//!
//! The crate is organized around a certified [`algebra::PisotSpec`] (the base),
//! exact field elements of Q(beta), words over the canonical digit alphabet,
//! and the expansion algorithms built on top of them.

pub mod algebra;
pub mod alpha_adic;
pub mod beta;
pub mod error;
mod poly;
pub mod rational_psi;
pub mod transducer;
pub mod words;

pub use error::{Error, Result};
