//! Grid files and JSON documents.
//!
//! A grid file has one `row col` pair per line. Blank lines and lines starting
//! with `#` are skipped. JSON output lists cells and bags sorted by
//! `(row, col)` so that identical inputs give byte-identical files.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{GridGraph, VertexCoord};
use crate::pathdecomp::PathDecomposition;

/// Parses grid-file text into raw (unnormalized) coordinates.
pub fn parse_grid(text: &str) -> Result<Vec<VertexCoord>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse { line: i + 1, message };
        let mut fields = line.split_whitespace();
        let (Some(r), Some(c), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(parse_err(format!("expected `row col`, got {line:?}")));
        };
        let num = |s: &str| {
            s.parse::<u32>()
                .map_err(|e| parse_err(format!("bad coordinate {s:?}: {e}")))
        };
        out.push(VertexCoord::new(num(r)?, num(c)?));
    }
    Ok(out)
}

/// Parses and normalizes a grid file.
pub fn read_grid(path: impl AsRef<Path>) -> Result<GridGraph> {
    GridGraph::normalize(&parse_grid(&fs::read_to_string(path)?)?)
}

/// Grid-file text for `g`, one vertex per line in `(row, col)` order.
pub fn grid_to_string(g: &GridGraph) -> String {
    let mut vs = g.vertices().to_vec();
    vs.sort_unstable();
    let mut out = String::with_capacity(vs.len() * 8);
    for v in vs {
        out.push_str(&format!("{} {}\n", v.row, v.col));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDecompDocument {
    pub width: usize,
    pub bags: Vec<Vec<VertexCoord>>,
}

impl From<&PathDecomposition> for PathDecompDocument {
    fn from(pd: &PathDecomposition) -> Self {
        Self {
            width: pd.width(),
            bags: pd.bags().to_vec(),
        }
    }
}

impl From<PathDecompDocument> for PathDecomposition {
    fn from(doc: PathDecompDocument) -> Self {
        PathDecomposition::new(doc.bags)
    }
}

/// Pretty JSON followed by a newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: impl AsRef<Path>) -> Result<T> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}
