//! Certified best rational approximations of irrational numbers.
//!
//! Everything here works over exact rationals. An irrational `α` is known
//! only through [`AlphaSpec::enclosure`], which returns an open rational
//! interval certainly containing it; every floor, nearest integer or
//! comparison is refined until the interval decides it.
//!
//! The main entry points are:
//!
//! - [`train`]: nearest integer of `qα`, its distance `‖qα‖` and the
//!   fixed-denominator approximation `[qα]/q`;
//! - [`scan`]: best approximations of the first, second and third kinds
//!   up to a denominator bound;
//! - [`cf`]: regular and nearest-integer continued fractions;
//! - [`dirichlet`]: pigeonhole witnesses and the `1/(2q²)`, Legendre and
//!   Hurwitz checks;
//! - [`fib`]: Fibonacci numbers from the golden ratio.

pub mod alpha;
pub mod cf;
mod constants;
pub mod dirichlet;
pub mod error;
pub mod fib;
pub mod fraction;
pub mod interval;
pub mod render;
pub mod scan;
pub mod train;

pub use alpha::AlphaSpec;
pub use error::{Error, Result};
pub use fraction::{Fraction, Side};
pub use interval::RationalInterval;

/// Exact rational over arbitrary-precision integers.
pub type BigRational = num_rational::BigRational;
pub use num_bigint::BigInt;
