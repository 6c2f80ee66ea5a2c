//! Exact symbolic engine for the double affine Lie algebra of `sl2`
//! (`sl2 ⊗ C[t1^±, t2^±]` with centers `c1, c2` and derivations `d1, d2`)
//! and its Verma modules for the triangular decomposition that treats the
//! algebra as an affinization of the `t1`-loop affine subalgebra.
//!
//! All arithmetic is over arbitrary-precision rationals.
//!
//! Run `cargo run --example <name>` for a tour; see `examples/` in this crate.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod kostant;
pub mod linalg;
pub mod quotient;
pub mod rational;
pub mod reducibility;
pub mod roots;
pub mod singular;
pub mod syntax;
pub mod verma;

pub use algebra::{bracket, AlgebraElement, BasisElement};
pub use error::{Error, Result};
pub use rational::Rational;
pub use roots::{RootVector, Weight};
pub use verma::{HighestWeight, ModuleVector, Monomial, VermaModule};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
