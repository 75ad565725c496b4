//! File formats and the `toric` command-line tool.

pub mod cli;
pub mod formats;
