//! IO companion to `autonil-core`: group spec parsing, the builtin
//! catalog, JSON Cayley-table files, and report rendering. The `autonil`
//! binary is a thin front end over these modules.

pub mod catalog;
pub mod cayley;
pub mod report;
pub mod spec;
