//! Command-line surface for `moduli-core`: argument parsing, atlas files
//! (JSON and CSV), corpus fixtures, and the threaded atlas builder.

pub mod app;
pub mod commands;
pub mod document;
pub mod parallel;
