pub mod cli;
pub mod crystals;
pub mod error;
pub mod groups;
pub mod qexact;
pub mod uqsl2;

pub use error::{Error, Result};
