pub mod cocycles;
pub mod crossedalg;
pub mod error;
pub mod exactfields;
pub mod groupkit;
pub mod linalg;
pub mod ramification;
pub mod reduction;
pub mod shell;

pub use error::{Error, Result};
