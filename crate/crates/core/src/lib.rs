pub mod arith;
pub mod charsum;
pub mod cli;
pub mod error;
pub mod gauss;
pub mod transition;
pub mod verify;

pub use error::{Error, Result};
