//! Command-line front end for `hitcore`: JSON/CSV emitters, claim manifests and a result cache.

pub mod cache;
pub mod commands;
pub mod manifest;
pub mod output;
