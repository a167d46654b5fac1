//! Plumbing graph input: line format, JSON documents and named presets.
//!
//! Line format, one item per line, `#` starts a comment:
//!
//! ```text
//! vertex 1 -3
//! vertex 2 -2
//! edge 1 2
//! outer 2
//! ```
//!
//! JSON: `{"vertices": [{"id": 1, "weight": -3}], "edges": [[1, 2]], "outer": 1}`.
//!
//! Presets: `single-minusP`, `chain-minusA-minusB-...` (a path) and
//! `star-minusC-minusL1-...` (center first, then leaves).

use std::path::Path;

use dehn_core::plumbing::{PlumbingError, PlumbingGraph, VertexId};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PlumbingInputError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("invalid JSON plumbing document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("'{0}' is neither a readable file nor a known preset")]
    NotFound(String),
    #[error("could not read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Graph(#[from] PlumbingError),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonVertex {
    id: VertexId,
    weight: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    vertices: Vec<JsonVertex>,
    #[serde(default)]
    edges: Vec<[VertexId; 2]>,
    outer: Option<VertexId>,
}

fn finish(
    vertices: Vec<(VertexId, i64)>,
    edges: Vec<(VertexId, VertexId)>,
    outer: Option<VertexId>,
) -> Result<PlumbingGraph, PlumbingInputError> {
    let g = PlumbingGraph::new(vertices, edges)?;
    Ok(match outer {
        Some(o) => g.with_outer(o),
        None => g,
    })
}

pub fn parse_plumbing(text: &str) -> Result<PlumbingGraph, PlumbingInputError> {
    if text.trim_start().starts_with('{') {
        let doc: JsonGraph = serde_json::from_str(text)?;
        let vertices = doc.vertices.iter().map(|v| (v.id, v.weight)).collect();
        let edges = doc.edges.iter().map(|e| (e[0], e[1])).collect();
        return finish(vertices, edges, doc.outer);
    }
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut outer = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| PlumbingInputError::Line { line, message };
        let fields: Vec<&str> = content.split_whitespace().collect();
        let int = |s: &str| {
            s.parse::<i64>()
                .map_err(|_| err(format!("'{s}' is not an integer")))
        };
        let id = |s: &str| {
            s.parse::<VertexId>()
                .map_err(|_| err(format!("'{s}' is not a vertex id")))
        };
        match fields.as_slice() {
            ["vertex", v, w] => vertices.push((id(v)?, int(w)?)),
            ["edge", a, b] => edges.push((id(a)?, id(b)?)),
            ["outer", v] => {
                if outer.replace(id(v)?).is_some() {
                    return Err(err("outer given twice".into()));
                }
            }
            _ => return Err(err(format!("cannot parse '{content}'"))),
        }
    }
    finish(vertices, edges, outer)
}

fn weights(parts: &[&str]) -> Option<Vec<i64>> {
    parts
        .iter()
        .map(|p| {
            p.strip_prefix("minus")
                .and_then(|d| d.parse::<i64>().ok())
                .map(|d| -d)
        })
        .collect()
}

/// Resolves a preset name, or `None` if it is not one.
pub fn preset(name: &str) -> Option<PlumbingGraph> {
    let parts: Vec<&str> = name.split('-').collect();
    let (kind, rest) = parts.split_first()?;
    let w = weights(rest)?;
    let ids = 1..=w.len() as VertexId;
    let vertices: Vec<(VertexId, i64)> = ids.clone().zip(w.iter().copied()).collect();
    let edges: Vec<(VertexId, VertexId)> = match *kind {
        "single" if w.len() == 1 => vec![],
        "chain" if !w.is_empty() => ids.clone().skip(1).map(|i| (i - 1, i)).collect(),
        "star" if !w.is_empty() => ids.clone().skip(1).map(|i| (1, i)).collect(),
        _ => return None,
    };
    PlumbingGraph::new(vertices, edges).ok()
}

/// A path to a plumbing file, or a preset name.
pub fn load_plumbing(spec: &str) -> Result<PlumbingGraph, PlumbingInputError> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|source| PlumbingInputError::Io {
            path: spec.to_string(),
            source,
        })?;
        return parse_plumbing(&text);
    }
    preset(spec).ok_or_else(|| PlumbingInputError::NotFound(spec.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_format() {
        let g = parse_plumbing("# star\nvertex 1 -3\nvertex 2 -2\nedge 1 2  # neck\nouter 2\n")
            .unwrap();
        assert_eq!(g.vertices(), &[(1, -3), (2, -2)]);
        assert_eq!(g.edges(), &[(1, 2)]);
        assert_eq!(g.outer(), Some(2));
        assert!(matches!(
            parse_plumbing("vertex 1 x"),
            Err(PlumbingInputError::Line { line: 1, .. })
        ));
        assert!(matches!(
            parse_plumbing("vertex 1 -2\nloop 1"),
            Err(PlumbingInputError::Line { line: 2, .. })
        ));
    }

    #[test]
    fn json_format() {
        let g = parse_plumbing(r#"{"vertices": [{"id": 1, "weight": -2}, {"id": 2, "weight": -2}], "edges": [[1, 2]]}"#)
            .unwrap();
        assert_eq!(g.edges(), &[(1, 2)]);
        assert!(parse_plumbing(r#"{"vertices": []}"#).is_err());
    }

    #[test]
    fn presets() {
        assert_eq!(preset("single-minus4").unwrap().vertices(), &[(1, -4)]);
        assert_eq!(preset("chain-minus2-minus2").unwrap().edges(), &[(1, 2)]);
        assert_eq!(
            preset("star-minus3-minus2-minus2-minus2")
                .unwrap()
                .edges()
                .len(),
            3
        );
        assert!(preset("single-minus4-minus2").is_none());
        assert!(preset("ring-minus2").is_none());
        assert!(matches!(
            load_plumbing("no-such-thing"),
            Err(PlumbingInputError::NotFound(_))
        ));
    }
}
