//! Finite fields and the three-level tower.

mod field;
pub mod moduli;
mod tower;

pub use field::{factorize, is_prime, Field, GaloisField, MAX_INTERNAL_ORDER};
pub use tower::{ArithOp, Elem, FieldTower, Level, MAX_TOWER_ORDER};
