//! Bredon homology of the wallpaper groups with coefficients in the complex
//! representation ring, computed with exact arithmetic.
//!
//! The crate is `no_std` and only needs an allocator.

#![no_std]

extern crate alloc;

pub mod chartab;
pub mod cyclotomic;
pub mod gcw;
pub mod homology;
pub mod intlinalg;
pub mod reference;
pub mod wallpaper;
