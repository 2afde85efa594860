//! Additive complementary pairs of codes over finite field towers.
//!
//! The crate covers exact arithmetic in a tower `F_p ⊆ F_q ⊆ F_{q^m}`,
//! dense linear algebra over any level, additive (`F_q`-linear) and linear
//! codes, twisted trace forms with their left and right duals, complementary
//! pair verdicts and rank criteria, the building-up constructions, and the
//! constacyclic decomposition with its counting formula. Brute-force oracles
//! in [`oracle`] cross-check the fast paths on small instances.

pub mod acp;
pub mod cli;
pub mod code;
pub mod constacyclic;
pub mod construct;
pub mod error;
pub mod form;
pub mod gf;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod text;

pub use acp::PairVerdict;
pub use code::{AdditiveCode, LinearCode};
pub use error::{Error, ErrorClass, Result};
pub use form::FormSpec;
pub use gf::{Elem, Field, FieldTower, GaloisField, Level};
pub use linalg::{Mat, RowEchelon};
pub use poly::Poly;
