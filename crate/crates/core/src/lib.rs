pub mod algebra;
pub mod cellular;
pub mod centraliser;
pub mod diagnostics;
pub mod domain;
pub mod error;
pub mod hecke;
pub mod modules;
pub mod partitions;
pub mod perm;

pub use error::{Error, Result};
