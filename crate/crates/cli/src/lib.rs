//! Library surface of the command-line front end: job parsing, report
//! schemas, and the certification pipelines. The binary in `main.rs` is
//! a thin argument-handling wrapper, and the integration tests drive
//! these modules directly.

pub mod job;
pub mod report;
pub mod text;
