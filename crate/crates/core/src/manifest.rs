//! Provenance block attached to every seeded or certificate-producing output.
//!
//! Text outputs carry it as leading comment lines, which every parser in
//! [`crate::format`] skips:
//!
//! ```text
//! # manifest.tool = dichoose 0.1.0
//! # manifest.argv = ["experiment","acyclic","--trials","1000","--seed","7","c4.graph"]
//! # manifest.seed = 7
//! # manifest.input = c4.graph sha256:9f86d0...
//! # manifest.elapsed_ms = 3
//! ```
//!
//! JSON outputs wrap the result as `{"manifest": {...}, "result": ...}`.
//! Timing is the only field that differs between replays; [`strip_timing`]
//! removes it before outputs are compared.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

const PREFIX: &str = "# manifest.";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    /// Arguments after the program name.
    pub argv: Vec<String>,
    pub seed: Option<u64>,
    pub inputs: Vec<InputDigest>,
    pub elapsed_ms: u64,
}

pub fn tool_version() -> String {
    format!("{} {}", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION"))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

impl RunManifest {
    pub fn to_comment_lines(&self) -> String {
        let mut s = format!("{PREFIX}tool = {}\n", self.tool);
        s += &format!("{PREFIX}argv = {}\n", serde_json::to_string(&self.argv).expect("strings serialize"));
        match self.seed {
            Some(seed) => s += &format!("{PREFIX}seed = {seed}\n"),
            None => s += &format!("{PREFIX}seed = none\n"),
        }
        for input in &self.inputs {
            s += &format!("{PREFIX}input = {} sha256:{}\n", input.path, input.sha256);
        }
        s += &format!("{PREFIX}elapsed_ms = {}\n", self.elapsed_ms);
        s
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("manifests serialize")
    }

    /// Reads the manifest from a text or JSON output.
    pub fn extract(output: &str) -> Result<RunManifest> {
        if output.trim_start().starts_with('{') {
            let value: Value = serde_json::from_str(output).map_err(|e| Error::InvalidArgument(format!("malformed JSON output: {e}")))?;
            let manifest = value
                .get("manifest")
                .ok_or_else(|| Error::InvalidArgument("JSON output has no manifest".into()))?;
            return serde_json::from_value(manifest.clone()).map_err(|e| Error::InvalidArgument(format!("malformed manifest: {e}")));
        }
        let mut tool = None;
        let mut argv = None;
        let mut seed = None;
        let mut inputs = Vec::new();
        let mut elapsed_ms = 0;
        for (i, line) in output.lines().enumerate() {
            let Some(rest) = line.strip_prefix(PREFIX) else {
                continue;
            };
            let (key, value) = rest
                .split_once(" = ")
                .ok_or_else(|| Error::parse(i + 1, format!("malformed manifest line `{line}`")))?;
            let bad = |what: &str| Error::parse(i + 1, format!("malformed manifest {what}"));
            match key {
                "tool" => tool = Some(value.to_string()),
                "argv" => argv = Some(serde_json::from_str(value).map_err(|_| bad("argv"))?),
                "seed" => seed = if value == "none" { None } else { Some(value.parse().map_err(|_| bad("seed"))?) },
                "input" => {
                    let (path, digest) = value.rsplit_once(" sha256:").ok_or_else(|| bad("input"))?;
                    inputs.push(InputDigest {
                        path: path.to_string(),
                        sha256: digest.to_string(),
                    });
                }
                "elapsed_ms" => elapsed_ms = value.parse().map_err(|_| bad("elapsed_ms"))?,
                _ => return Err(bad("key")),
            }
        }
        match (tool, argv) {
            (Some(tool), Some(argv)) => Ok(RunManifest {
                tool,
                argv,
                seed,
                inputs,
                elapsed_ms,
            }),
            _ => Err(Error::InvalidArgument("output carries no manifest".into())),
        }
    }
}

/// The output with the timing field removed.
pub fn strip_timing(output: &str) -> String {
    if output.trim_start().starts_with('{') {
        if let Ok(mut value) = serde_json::from_str::<Value>(output) {
            if let Some(m) = value.get_mut("manifest").and_then(Value::as_object_mut) {
                m.remove("elapsed_ms");
            }
            return serde_json::to_string_pretty(&value).expect("values serialize");
        }
    }
    output
        .lines()
        .filter(|l| !l.starts_with(&format!("{PREFIX}elapsed_ms")))
        .map(|l| format!("{l}\n"))
        .collect()
}
