//! Exact representation theory for the N=2 superconformal algebra and
//! affine sl(2): Verma-type modules, singular vectors, spectral flow,
//! free-field constructions and truncated characters.
//!
//! Scalars live in the field `Q(t)` of rational functions, so a single
//! computation with `t` left symbolic covers a whole family of modules.
//!
//! ```
//! use n2sl2::module::{Bigrade, HwConditions, Module, ModuleSpec};
//! use n2sl2::singular::{singular_at, topological_h, Sign};
//! use n2sl2::RatFun;
//!
//! let t = RatFun::t();
//! let v = Module::new(ModuleSpec::Topological {
//!     h: topological_h(Sign::Minus, 1, 1, &t),
//!     t,
//!     theta: 0,
//! })
//! .unwrap();
//! let ker = singular_at(&v, Bigrade::new(-1, 1), HwConditions::Topological(1)).unwrap();
//! assert_eq!(ker.len(), 1);
//! ```
//!
//! The guide in `book/` walks through each module with examples that are
//! compiled as doc-tests.

pub mod algebra;
pub mod characters;
pub mod diagram;
pub mod fock;
pub mod linalg;
pub mod module;
pub mod scalar;
pub mod singular;
pub mod string;
pub mod suite;

pub use scalar::{RatFun, Rational};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at t = {at}: denominator {denominator} vanishes")]
    Pole { at: String, denominator: String },
    #[error("unsupported bracket: {0}")]
    UnsupportedPair(String),
    #[error("grading mismatch: {0}")]
    GradingMismatch(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/diagrams.md")]
    mod diagrams {}
    #[doc = include_str!("../../../book/src/singular.md")]
    mod singular {}
    #[doc = include_str!("../../../book/src/free-field.md")]
    mod free_field {}
    #[doc = include_str!("../../../book/src/string.md")]
    mod string {}
    #[doc = include_str!("../../../book/src/characters.md")]
    mod characters {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
