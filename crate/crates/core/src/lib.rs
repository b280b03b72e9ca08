pub mod error;
pub mod groupoid;
pub mod linearize;
mod matching;
pub mod matrix;
pub mod report;
pub mod sln;
pub mod span;
pub mod two_cell;
pub mod verifier;
pub mod young;

pub use error::{Error, Result};
