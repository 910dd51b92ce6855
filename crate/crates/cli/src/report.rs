//! Machine-readable reports: a single JSON object on standard output.
//!
//! Everything in a report except `elapsed_ms` is deterministic for a fixed
//! (input, command, seed). Certificates are embedded verbatim so `verify`
//! can replay them offline against the original input.

use serde::Serialize;
use serde_json::Value;

use dtop_core::DigitalSpace;

#[derive(Serialize)]
pub struct InputDigest {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
    pub canonical_key: Option<String>,
}

impl InputDigest {
    pub fn of(name: &str, space: &DigitalSpace) -> Self {
        InputDigest {
            name: name.to_string(),
            vertices: space.len(),
            edges: space.edge_count(),
            canonical_key: dtop_core::canonical_key(space).ok().map(|k| k.to_hex()),
        }
    }
}

#[derive(Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputDigest>,
    pub verdict: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(command: String) -> Self {
        Report {
            tool: "dtop",
            version: env!("CARGO_PKG_VERSION"),
            command,
            input: None,
            verdict: Value::Null,
            certificate: None,
            witness: None,
            seed: None,
            elapsed_ms: 0,
        }
    }

    pub fn print(&self) {
        println!(
            "{}",
            serde_json::to_string_pretty(self).expect("report serialization")
        );
    }
}
