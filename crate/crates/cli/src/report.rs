use std::path::Path;

use anyhow::Context;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Failed,
    Refused,
}

/// Envelope shared by all commands.
#[derive(Debug, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    /// sha256 of the input bytes, or `seed:<n>` for random inputs.
    pub input_digest: String,
    pub status: Status,
    pub result: Value,
    /// Human-readable lines; not part of the JSON.
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &str, input_digest: String) -> Self {
        Self {
            tool: "toupie".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            input_digest,
            status: Status::Ok,
            result: Value::Null,
            lines: Vec::new(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!(
            "toupie {} {} [{}] {}\n",
            self.version,
            self.command,
            self.input_digest,
            match self.status {
                Status::Ok => "ok",
                Status::Failed => "FAILED",
                Status::Refused => "REFUSED",
            }
        );
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }
}

pub fn digest(bytes: &[u8]) -> String {
    let d = Sha256::digest(bytes);
    d.iter().map(|b| format!("{b:02x}")).collect()
}

/// JSON pointers where two values differ.
pub fn json_diff(path: &str, a: &Value, b: &Value, out: &mut Vec<String>) {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            let keys: std::collections::BTreeSet<&String> = x.keys().chain(y.keys()).collect();
            for k in keys {
                let (l, r) = (x.get(k).unwrap_or(&Value::Null), y.get(k).unwrap_or(&Value::Null));
                json_diff(&format!("{path}/{k}"), l, r, out);
            }
        }
        (Value::Array(x), Value::Array(y)) if x.len() == y.len() => {
            for (i, (l, r)) in x.iter().zip(y).enumerate() {
                json_diff(&format!("{path}/{i}"), l, r, out);
            }
        }
        _ if a != b => out.push(path.to_string()),
        _ => {}
    }
}

/// Marks the report failed when its result differs from the golden one.
pub fn compare_golden(mut report: Report, path: &Path) -> anyhow::Result<Report> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading golden file {}", path.display()))?;
    let golden: Report = serde_json::from_str(&text).with_context(|| format!("parsing golden file {}", path.display()))?;
    let mut diffs = Vec::new();
    json_diff("", &golden.result, &report.result, &mut diffs);
    if golden.command != report.command {
        diffs.insert(0, "/command".into());
    }
    if diffs.is_empty() {
        report.lines.push(format!("golden: matches {}", path.display()));
    } else {
        report.status = Status::Failed;
        report.lines.push(format!("golden: {} difference(s) against {}", diffs.len(), path.display()));
        report.lines.extend(diffs.iter().map(|d| format!("  result{d}")));
        if let Value::Object(m) = &mut report.result {
            m.insert("golden_diff".into(), Value::from(diffs));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn diff_paths() {
        let mut out = Vec::new();
        json_diff("", &json!({"a": [1, 2], "b": 1}), &json!({"a": [1, 3], "c": 1}), &mut out);
        assert_eq!(out, vec!["/a/1", "/b", "/c"]);
    }

    #[test]
    fn sha256_of_empty() {
        assert_eq!(digest(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }
}
