//! Exact verification toolkit for Brauer-class obstructions to universal
//! bundles.
//!
//! The crate is layered bottom-up:
//!
//! * [`field`], [`poly`], [`ratfunc`], [`qext`]: the tower `k ⊂ k(x,y) ⊂ k(√x,y)`
//!   with `k = Q` (or a prime field for oracles) and the conjugation `√x -> -√x`.
//! * [`matrix`], [`form`]: dense matrices, bilinear forms, adjoints, Lie algebra
//!   and group membership.
//! * [`stability`]: stability of matrix tuples under `GL`, `Sp`, `SO`, with
//!   exhaustive finite-field oracles.
//! * [`quaternion`]: the generic quaternion algebra `(x, y)`, its matrix model,
//!   twisted Galois descent and the x-adic residue certificate.
//! * [`witness`]: the symplectic and orthogonal witness tuples and the
//!   verification pipeline that chains everything into an obstruction report.

pub mod error;
pub mod exec;
pub mod field;
pub mod form;
mod heugcd;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod qext;
pub mod quaternion;
pub mod random;
pub mod ratfunc;
pub mod stability;
pub mod tuple_json;
pub mod witness;

pub use error::{Error, Result};
pub use exec::Exec;
pub use field::{Field, FiniteField, Fp, Rational, Symbols};
pub use form::{BilForm, FormKind, Group};
pub use matrix::Mat;
pub use poly::Poly;
pub use qext::QExt;
pub use ratfunc::RatF;

/// `k(x, y)` over the rationals.
pub type L = RatF<Rational>;
/// `k(√x, y)` over the rationals.
pub type K = QExt<Rational>;
