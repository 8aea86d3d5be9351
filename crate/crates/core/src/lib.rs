//! Exact arithmetic in the Milnor K-group K₂ modulo m of rational function
//! fields `F_q(t)` with μ_m ⊂ F_q.
//!
//! The crate is organised bottom-up:
//!
//! - [`gf`]: prime and extension fields, univariate polynomials, factorization
//!   and power-residue indices.
//! - [`funcfield`]: places of `F_q(t)`, valuations and residue maps.
//! - [`k2`]: symbols, tame residues, the local-global zero test and Weil
//!   reciprocity.
//! - [`slot`]: common slots for finite sets of classes.
//! - [`cyclic_algebra`]: symbol algebras over finite fields.
//! - [`local2d`]: the residue/intersection reciprocity law on `k[x,y]`
//!   localized at the origin.

pub mod cyclic_algebra;
pub mod error;
pub mod funcfield;
pub mod gf;
pub mod k2;
pub mod local2d;
pub mod slot;

pub use error::{Error, Result};
