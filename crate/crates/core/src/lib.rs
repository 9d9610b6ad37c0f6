//! Invariants of a free linear category under a homogeneous action of a
//! finite group.
//!
//! Given a quiver whose arrows carry finite-dimensional vector spaces and a
//! finite group acting linearly on each arrow space (and trivially on the
//! vertices), this crate computes, path by path, the fixed subspace of the
//! diagonal action, splits it into composite and irreducible parts, and
//! assembles the generator quiver of the invariant category. Everything is
//! exact: coefficients live in the rationals, a cyclotomic field or a prime
//! field.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod action;
pub mod category;
pub mod engine;
pub mod families;
pub mod field;
pub mod linalg;
pub mod quiver;
pub mod reptype;

mod error;

pub use error::Error;
