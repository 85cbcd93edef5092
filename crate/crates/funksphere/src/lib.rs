//! Std companion to `funksphere-core`: the polynomial expression parser,
//! JSON renderings, the verification suites and the command-line driver.

pub mod cli;
pub mod json;
pub mod parser;
pub mod verify;

pub use parser::{parse_polynomial, ParseError};
