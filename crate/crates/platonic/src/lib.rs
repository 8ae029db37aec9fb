//! File formats, SVG rendering and the command-line front end for
//! [`platonic_core`].
//!
//! - [`values`]: JSON forms of exact numbers with labelled decimal approximations
//! - [`reactions`]: reaction and state documents, JSON or compact text
//! - [`trace`]: JSON-lines traces and CSV tables
//! - [`svg`]: deterministic SVG 1.1 drawings of dissections
//! - [`cli`]: the `platonic` command

pub mod cli;
pub mod reactions;
pub mod svg;
pub mod trace;
pub mod values;

/// Version stamped into every report's `schema` field; schemas live in
/// `docs/schemas/v1/`.
pub const SCHEMA_VERSION: u32 = 1;

/// Malformed input in one of the file formats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError(pub String);

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for FormatError {}

impl From<platonic_core::Error> for FormatError {
    fn from(e: platonic_core::Error) -> Self {
        FormatError(e.to_string())
    }
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError(format!("invalid JSON: {e}"))
    }
}
