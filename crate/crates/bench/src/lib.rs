//! Fixtures shared by the benchmarks.

use std::path::PathBuf;

use knotorder_core::knot::{KnotFile, KnotRecord};

/// Loads a bundled knot from the workspace `data/` directory.
pub fn knot(name: &str) -> KnotRecord {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    KnotFile::load(&path)
        .and_then(|f| f.to_record())
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}
