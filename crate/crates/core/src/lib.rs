pub mod arith;
pub mod bound;
pub mod cli;
pub mod csimple;
pub mod error;
pub mod factor;
pub mod ffield;
pub mod field;
pub mod linalg;
pub mod parse;
pub mod ratfun;
pub mod skewcore;

pub use error::{Error, Result};
pub use field::{Field, FiniteField};
