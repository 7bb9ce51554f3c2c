pub mod cli;
pub mod complex;
pub mod error;
pub mod homology;
pub mod ideals;
pub mod io;
pub mod labelled;
pub mod linalg;
pub mod monomial;
pub mod persistence;
pub mod random;
pub mod svg;
pub mod verify;

pub use error::{Error, Result};
