pub mod algebra;
pub mod error;
pub mod group;
pub mod knot;
pub mod lens;
pub mod obstruction;
pub mod twisted;

pub use error::{Error, Result};
