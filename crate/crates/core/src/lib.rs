pub mod arith;
pub mod criterion;
pub mod error;
pub mod gln;
pub mod gt;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod sweep;
pub mod yangian;

pub use error::{Error, Result};
