//! Bound states of finite rectangular quantum wells.
//!
//! The crate solves the transcendental eigenvalue conditions of symmetric and
//! asymmetric wells exactly, evaluates the penetration-depth family of
//! closed-form approximations alongside an independent algebraic benchmark,
//! and reproduces the error tables and figure data comparing them.
//!
//! Everything is computed in dimensionless form: a well is a single strength
//! parameter `P`, a state is a wave vector `K` with `E/V = (K/2P)^2`, and the
//! `dimensionless` module converts to and from laboratory units at the edge.
//! The core is `no_std` (enable the `libm` feature in place of `std`).
#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod analysis;
pub mod dimensionless;
pub mod garrett;
pub mod reference;

mod error;
mod math;
mod solve;

pub use error::Error;
