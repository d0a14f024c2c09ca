//! Exact-arithmetic engine for real Schubert calculus experiments.
//!
//! The crate builds instances of Schubert problems on Grassmannians whose
//! flags are anchored to a rational normal curve (secant, osculating,
//! generalized secant, cosecant), turns them into determinantal equations in
//! local coordinates, certifies an eliminant (full degree and square-free),
//! and counts real solutions exactly with Sturm sequences. A seeded harness
//! aggregates batches of instances into frequency tables keyed by
//! (real solutions, overlap number).
//!
//! All arithmetic is over arbitrary-precision rationals; no floating point
//! is used anywhere in the solve path.

pub mod error;
pub mod rational;

pub mod linalg;
pub mod unipoly;

pub mod multipoly;
pub mod polymatrix;

pub mod elimination;
pub mod schubert;

pub mod flags;
pub mod overlap;

pub mod solver;

pub mod harness;

pub use error::{Error, Result};
pub use rational::Rational;
