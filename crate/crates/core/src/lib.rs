//! Exact rational arithmetic for approximating planar point configurations by
//! configurations whose pairwise distances are all rational.
//!
//! The core works over `alloc` only; IO and the command line live in the
//! `ratdist` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod elliptic;
mod error;
pub mod family;
pub mod geometry;
pub mod rational;
pub mod real;

pub use elliptic::{CubicCurve, CurvePoint};
pub use error::Error;
pub use family::{FamilyParams, QuarticCurve};
pub use rational::{BigRat, RationalAngle};
pub use real::Real;
