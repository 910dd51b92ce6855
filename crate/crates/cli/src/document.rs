//! Graph documents: the on-disk formats the tool reads and writes.
//!
//! Two formats are supported. The primary one is a JSON object with `name`,
//! `vertices`, `edges` and optional `metadata`; it round-trips exactly and
//! can carry certificates. The convenience format is a bare edge list: one
//! edge per line as `u v`, a single name on a line declares an isolated
//! vertex, `#` starts a comment.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use dtop_core::DigitalSpace;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<BTreeMap<String, serde_json::Value>>,
}

impl GraphDocument {
    pub fn from_space(name: &str, space: &DigitalSpace) -> Self {
        GraphDocument {
            name: name.to_string(),
            vertices: space.vertex_names().to_vec(),
            edges: space.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            metadata: None,
        }
    }

    /// Validates the document invariants and builds the space: every edge
    /// endpoint must be declared, no self-loops, no duplicate edges modulo
    /// orientation.
    pub fn to_space(&self) -> Result<DigitalSpace> {
        let mut seen = std::collections::BTreeSet::new();
        for v in &self.vertices {
            if !seen.insert(v.clone()) {
                bail!("duplicate vertex `{v}` in document `{}`", self.name);
            }
        }
        let mut edge_seen = std::collections::BTreeSet::new();
        for [u, v] in &self.edges {
            if u == v {
                bail!("self-loop on `{u}` in document `{}`", self.name);
            }
            for end in [u, v] {
                if !seen.contains(end) {
                    bail!(
                        "edge ({u}, {v}) references undeclared vertex `{end}` in document `{}`",
                        self.name
                    );
                }
            }
            let key = if u < v {
                (u.clone(), v.clone())
            } else {
                (v.clone(), u.clone())
            };
            if !edge_seen.insert(key) {
                bail!("duplicate edge ({u}, {v}) in document `{}`", self.name);
            }
        }
        let edges: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|[u, v]| (u.clone(), v.clone()))
            .collect();
        DigitalSpace::new(self.vertices.clone(), &edges)
            .map_err(|e| anyhow!("document `{}`: {e}", self.name))
    }
}

/// Parses either format, sniffing JSON by a leading `{`.
pub fn parse_graph(text: &str, fallback_name: &str) -> Result<GraphDocument> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let doc: GraphDocument =
            serde_json::from_str(text).context("malformed JSON graph document")?;
        doc.to_space()?; // validate invariants eagerly
        Ok(doc)
    } else {
        parse_edge_list(text, fallback_name)
    }
}

fn parse_edge_list(text: &str, name: &str) -> Result<GraphDocument> {
    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<[String; 2]> = Vec::new();
    let declare = |v: &str, vertices: &mut Vec<String>| {
        if !vertices.iter().any(|x| x == v) {
            vertices.push(v.to_string());
        }
    };
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [v] => declare(v, &mut vertices),
            [u, v] => {
                if u == v {
                    bail!("line {}: self-loop on `{u}`", lineno + 1);
                }
                declare(u, &mut vertices);
                declare(v, &mut vertices);
                let duplicate = edges
                    .iter()
                    .any(|[a, b]| (a == u && b == v) || (a == v && b == u));
                if duplicate {
                    bail!("line {}: duplicate edge ({u}, {v})", lineno + 1);
                }
                edges.push([u.to_string(), v.to_string()]);
            }
            _ => bail!(
                "line {}: expected `vertex` or `vertex vertex`, got {} fields",
                lineno + 1,
                fields.len()
            ),
        }
    }
    vertices.sort();
    let doc = GraphDocument {
        name: name.to_string(),
        vertices,
        edges,
        metadata: None,
    };
    doc.to_space()?;
    Ok(doc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// Serializes a document in the requested format. Text output lists
/// isolated vertices first (one per line), then edges, all in canonical
/// order.
pub fn emit_graph(doc: &GraphDocument, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(doc)? + "\n"),
        Format::Text => {
            let mut out = String::new();
            let mut isolated: Vec<&String> = doc
                .vertices
                .iter()
                .filter(|v| !doc.edges.iter().any(|[a, b]| a == *v || b == *v))
                .collect();
            isolated.sort();
            for v in isolated {
                out.push_str(v);
                out.push('\n');
            }
            let mut edges = doc.edges.clone();
            edges.sort();
            for [u, v] in edges {
                out.push_str(&format!("{u} {v}\n"));
            }
            Ok(out)
        }
    }
}
