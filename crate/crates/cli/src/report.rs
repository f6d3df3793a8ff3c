use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

/// JSON envelope printed by every command under `--format json`.
/// Everything except `elapsed_ms` is a function of the arguments and input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub input_digest: Option<String>,
    pub output: Value,
    pub verdicts: Value,
    pub elapsed_ms: u128,
}

pub fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}
