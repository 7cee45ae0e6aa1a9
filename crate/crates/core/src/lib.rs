//! Exact invariants of surface bundles and of the surfaces in them.
//!
//! * [`f2_forms`]: quadratic forms over F2 and their Arf invariant.
//! * [`exact_arith`]: Todd series, Bernoulli numbers, von Staudt denominators,
//!   values in Q/Z and divisibility bounds for MMM-classes.
//! * [`poly`] and [`char_classes`]: integral characteristic-class formulas of
//!   genus 0 and genus 1 bundles, Riemann–Roch dimensions.
//! * [`cyclotomic`], [`seifert`], [`icosa_group`]: e-invariants of flat bundles
//!   over Seifert homology spheres and the binary icosahedral group.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod char_classes;
pub mod cyclotomic;
pub mod error;
pub mod exact_arith;
pub mod f2_forms;
pub mod icosa_group;
pub mod poly;
pub mod seifert;

#[cfg(test)]
mod proptests;

pub use error::{Error, Result};
