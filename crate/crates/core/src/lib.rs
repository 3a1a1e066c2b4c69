//! Exact computations with deformation quantizations of polynomial Poisson
//! structures: Hochschild cochains, the Gerstenhaber bracket, the low-order
//! terms of a star product and the obstruction at order four.

pub mod cochain;
pub mod cohomology;
pub mod envelope;
pub mod error;
pub mod poisson;
pub mod poly;
pub mod random;
pub mod series;
pub mod star;

pub use error::{Error, Result};
