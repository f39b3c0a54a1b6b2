//! IO companion to `legendric-core`: JSON documents with embedded run
//! manifests, OFF export for low-dimensional polytopes, and the parallel
//! classification driver behind the CLI.
//!
//! Every JSON document embeds its [`manifest::RunManifest`]; identical
//! manifests and inputs produce byte-identical output. The JSON documents
//! are the source of truth, the stderr summary table is derived from them.

pub mod json;
pub mod manifest;
pub mod off;
pub mod runner;

pub use json::{
    emit_check, emit_classification, emit_decompose, emit_polytope, emit_verify, parse_check,
    parse_classification, parse_polytope,
};
pub use manifest::{RunManifest, SearchBounds};
