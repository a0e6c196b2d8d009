//! Report assembly and emission.
//!
//! - one `ReportDocument` per invocation: schema version, tool version,
//!   the fully resolved command, the payload, and wall-clock timing;
//! - the JSON rendering is canonical (serde_json value maps iterate in
//!   key order), so payloads are byte-identical across runs;
//! - the table rendering is produced by the command itself and passed
//!   through verbatim under a small header.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use crate::Format;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool_version: String,
    pub command: Value,
    pub payload: Value,
    /// Wall-clock milliseconds; the only field excluded from the
    /// byte-identical-output guarantee.
    pub timing_ms: u64,
}

impl ReportDocument {
    pub fn new(command: Value, payload: Value, timing_ms: u64) -> ReportDocument {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command,
            payload,
            timing_ms,
        }
    }

    fn header_lines(&self) -> String {
        let mut parts = Vec::new();
        if let Value::Object(map) = &self.command {
            for (k, v) in map {
                if k == "subcommand" {
                    continue;
                }
                let rendered = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                parts.push(format!("{k}={rendered}"));
            }
        }
        let sub = self
            .command
            .get("subcommand")
            .and_then(Value::as_str)
            .unwrap_or("?");
        format!(
            "baxter {} (schema {})\ncommand: {} {}\nelapsed: {} ms\n",
            self.tool_version,
            self.schema_version,
            sub,
            parts.join(" "),
            self.timing_ms
        )
    }
}

pub fn emit(
    doc: &ReportDocument,
    table: &str,
    format: Format,
    out: Option<&Path>,
) -> io::Result<()> {
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Table => format!("{}\n{table}", doc.header_lines()),
    };
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn report_json_roundtrips_and_orders_keys() {
        let doc = ReportDocument::new(
            json!({"subcommand": "seq", "upto": 5}),
            json!({"zebra": 1, "alpha": [2, 3]}),
            17,
        );
        let s = serde_json::to_string(&doc).unwrap();
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["schema_version"], json!(SCHEMA_VERSION));
        assert_eq!(v["payload"]["alpha"][1], json!(3));
        // canonical value maps sort keys, so repeated encodings agree
        assert_eq!(
            serde_json::to_string(&v["payload"]).unwrap(),
            r#"{"alpha":[2,3],"zebra":1}"#
        );
    }

    #[test]
    fn table_header_names_the_subcommand() {
        let doc = ReportDocument::new(json!({"subcommand": "hankel", "upto_order": 5}), json!({}), 3);
        let h = doc.header_lines();
        assert!(h.contains("command: hankel upto_order=5"));
    }
}
