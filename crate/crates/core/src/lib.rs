//! Dominant regions of the k-Catalan arrangement of a crystallographic root
//! system.
//!
//! The crate enumerates dominant regions through their geometric chains of
//! order filters, computes floors and ceilings both combinatorially
//! (indecomposable elements) and geometrically (walls of the minimal and
//! pseudomaximal alcoves), and implements the bijection `Θ: U(M) → L(M)`
//! between regions having every hyperplane of `M` as a floor and regions
//! having every hyperplane of `M` as a ceiling. All geometry is exact rational
//! arithmetic.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod alcoves;
pub mod bijection;
pub mod chains;
pub mod error;
pub mod panyushev;
pub mod regions;
pub mod root_system;
pub mod rootset;
pub mod verify;

pub use error::{Error, Result};
pub use root_system::{Label, Point, Rational, RootId, RootSystem};
pub use rootset::RootSet;
