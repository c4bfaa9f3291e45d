//! JSON Cayley-table files: a portable way to hand the tool a group it
//! has no constructor for.

use std::path::Path;

use autonil_core::GroupTable;
use serde::{Deserialize, Serialize};

use crate::spec::RealizeError;

/// On-disk shape. `table[a][b]` is the product `a * b`; element `0` must
/// be the identity.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CayleyFile {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl CayleyFile {
    pub fn from_group(g: &GroupTable) -> CayleyFile {
        let n = g.order();
        let table = (0..n)
            .map(|a| (0..n).map(|b| g.mul(a, b)).collect())
            .collect();
        CayleyFile {
            name: g.name().to_string(),
            order: n,
            table,
        }
    }

    pub fn into_group(self) -> Result<GroupTable, String> {
        if self.order != self.table.len() {
            return Err(format!(
                "declared order {} but the table has {} rows",
                self.order,
                self.table.len()
            ));
        }
        GroupTable::from_rows(&self.name, &self.table).map_err(|e| e.to_string())
    }
}

/// Serialize with stable field order and a trailing newline, so exports
/// are byte-for-byte reproducible.
pub fn to_json_string(file: &CayleyFile) -> String {
    let mut out = serde_json::to_string_pretty(file).expect("plain data serializes");
    out.push('\n');
    out
}

pub fn export(g: &GroupTable) -> String {
    to_json_string(&CayleyFile::from_group(g))
}

pub fn parse_json(text: &str) -> Result<CayleyFile, String> {
    serde_json::from_str(text).map_err(|e| e.to_string())
}

/// Read and fully validate a Cayley-table file.
pub fn load_file(path: &Path) -> Result<GroupTable, RealizeError> {
    let text = std::fs::read_to_string(path).map_err(|source| RealizeError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let file = parse_json(&text).map_err(|message| RealizeError::BadFile {
        path: path.to_path_buf(),
        message,
    })?;
    file.into_group().map_err(|message| RealizeError::BadFile {
        path: path.to_path_buf(),
        message,
    })
}
