use std::fs;
use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::table::CayleyTable;

use super::enumerate::{CensusResult, Constraints};

#[derive(Serialize)]
struct Manifest<'a> {
    order: usize,
    constraints: &'a Constraints,
    isomorph_rejection: bool,
    count: u64,
    wall_time_secs: f64,
    files: Vec<String>,
}

/// File name for a representative: a prefix of the SHA-256 of its entries.
pub fn table_file_name(t: &CayleyTable) -> String {
    let mut hasher = Sha256::new();
    for row in t.rows() {
        let line: Vec<String> = row.iter().map(usize::to_string).collect();
        hasher.update(line.join(" ").as_bytes());
        hasher.update(b"\n");
    }
    format!("{}.tbl", &hex::encode(hasher.finalize())[..16])
}

pub(crate) fn write(dir: &Path, result: &CensusResult) -> Result<()> {
    fs::create_dir_all(dir)?;
    let reps = result.representatives.as_deref().unwrap_or(&[]);
    let mut files = Vec::with_capacity(reps.len());
    for (i, t) in reps.iter().enumerate() {
        let name = table_file_name(t);
        let named = t.clone().with_name(format!(
            "order {} {} #{}",
            result.order,
            result.constraints.describe(),
            i + 1
        ));
        fs::write(dir.join(&name), named.to_tbl())?;
        files.push(name);
    }
    let manifest = Manifest {
        order: result.order,
        constraints: &result.constraints,
        isomorph_rejection: result.isomorph_rejection,
        count: result.count,
        wall_time_secs: result.wall_time.as_secs_f64(),
        files,
    };
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    fs::write(dir.join("manifest.json"), json + "\n")?;
    Ok(())
}
