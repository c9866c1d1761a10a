//! File formats, exports and the command-line front end for `zccs-core`.
//!
//! - [`format`]: JSON field descriptions and code-set files.
//! - [`export`]: CSV renderings of code sets and correlation profiles.
//! - [`report`]: text and JSON verification reports.
//! - [`cli`]: argument parsing and command dispatch.

pub mod cli;
mod error;
pub mod export;
pub mod format;
pub mod report;

pub use error::ToolError;
