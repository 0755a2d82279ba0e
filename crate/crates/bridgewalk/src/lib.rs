//! Random bridge presentations of links.
//!
//! A walk in the mapping class group of the 2n-punctured sphere glues two
//! trivial n-string tangles into a link. The crate provides the group actions,
//! lamination coordinates for curves, joint curve diagrams, the disk set of the
//! trivial tangle with distance witnesses, plat-closure diagrams, and the
//! Monte Carlo drivers built on top of them.

pub mod diagram;
pub mod error;
pub mod lab;
pub mod lamination;
pub mod mcg_core;
pub mod plat;
pub mod tangle;

pub use error::{Error, Result};
