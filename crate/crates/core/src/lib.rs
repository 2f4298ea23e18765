pub mod center;
pub mod cli;
pub mod cohomology;
pub mod crossed;
pub mod error;
pub mod exact;
pub mod group;
pub mod obstruction;
pub mod omega;
pub mod subcat;

pub use error::{Error, Result};
