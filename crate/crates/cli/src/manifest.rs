//! The reproducibility envelope embedded in every report.

use std::io::Read;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

/// What produced an output file: command, inputs and their digest, and
/// every flag that can change the result.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub inputs: Vec<String>,
    pub mapping: String,
    pub version: String,
    /// SHA-256 over the input files' bytes, in argument order.
    pub input_digest: String,
    pub base: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_min: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub granularity: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub short_word_policy: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_budget: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub which: Option<String>,
}

impl RunManifest {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("manifest serializes")
    }
}

/// Hex SHA-256 of the concatenated input files.
pub fn digest_files(paths: &[PathBuf]) -> std::io::Result<String> {
    let mut hasher = Sha256::new();
    let mut buf = [0u8; 64 * 1024];
    for path in paths {
        let mut file = std::fs::File::open(path)?;
        loop {
            let n = file.read(&mut buf)?;
            if n == 0 {
                break;
            }
            hasher.update(&buf[..n]);
        }
    }
    Ok(hex::encode(hasher.finalize()))
}

/// Stable description of the mapping source for the manifest.
pub fn mapping_source(path: Option<&Path>) -> String {
    match path {
        Some(p) => p.display().to_string(),
        None => "builtin".to_string(),
    }
}
