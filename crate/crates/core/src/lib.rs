pub mod bohr;
pub mod case;
pub mod error;
pub mod function;
pub mod radius;
pub mod schwarz;
pub mod series;
pub mod suite;
pub mod theorems;

pub use error::{Error, Result};
