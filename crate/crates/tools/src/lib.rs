//! Command-line front end, file formats and parallel censuses for `srg-core`.

pub mod census;
pub mod cli;
pub mod format;
pub mod patterns;
