//! Exact computations with super dialgebras, Leibniz superalgebras, Kähler
//! differentials, Leibniz cohomology and universal central extensions over ℚ.

pub mod catalog;
pub mod cli;
pub mod cohomology;
pub mod constructions;
pub mod differentials;
pub mod error;
pub mod format;
pub mod graded;
pub mod linalg;
pub mod uce;
pub mod verify;

pub use error::{Error, Result};
