pub mod bitset;
pub mod combin;
pub mod config;
pub mod constructions;
pub mod graphs;
pub mod forcing;
pub mod metrics;
pub mod error;
pub mod f2;
pub mod report;
pub mod cli;

pub use error::{Error, Result};
