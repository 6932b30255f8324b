//! Exact computations for deciding tightness of holomorphic maps between
//! Hermitian symmetric spaces.
//!
//! Everything here is pure integer/rational arithmetic over `alloc`; the crate
//! is `no_std` and performs no IO. The std companion crate `tightmaps` carries
//! the command line, JSON formats and reports.
//!
//! Layout:
//! - [`rootsys`]: root systems of the simple Hermitian Lie algebras with a
//!   marked noncompact simple root.
//! - [`pisystem`]: Π-system validation, generated subsystems and factor
//!   identification.
//! - [`catalog`]: the maximal regular subalgebra tables as executable data.
//! - [`tightness`]: the curvature-ratio criterion and verdict combinators.
//! - [`matrixalg`]: matrix models, diagonal discs and the trace test.
//! - [`extrep`]: skew-symmetric tensor representations of `su(p,1)`.
//! - [`classify`]: the top-level verdict engine with derivation traces.
//! - [`survey`]: the full regression table of expected verdicts.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod expr;
pub mod extrep;
pub mod linalg;
pub mod matrixalg;
pub mod pisystem;
pub mod rootsys;
pub mod survey;
pub mod tightness;

pub use algebra::AlgebraId;
pub use error::{Error, Result};
pub use linalg::Rational;
pub use rootsys::{Root, RootSystem};
pub use tightness::Status;
