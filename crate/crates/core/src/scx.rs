//! The `.scx` text format.
//!
//! ```text
//! # comment
//! 0 1 2
//! 2 3
//! v 7
//! ```
//!
//! One facet per line as whitespace-separated vertex ids; `v <id>` declares a
//! vertex. Lines starting with `#` and blank lines are ignored. [`write`]
//! emits facets of positive dimension in (dimension, lexicographic) order
//! followed by isolated vertices, so `write(read(write(X))) == write(X)`.

use std::fmt::Write as _;
use std::path::Path;

use crate::complex::{Complex, Vertex};
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Complex> {
    let mut facets: Vec<Vec<Vertex>> = Vec::new();
    let mut isolated: Vec<Vertex> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad =
            |tok: &str| Error::MalformedInput(format!("line {}: cannot parse {tok:?}", lineno + 1));
        let mut tokens = line.split_whitespace().peekable();
        if tokens.peek() == Some(&"v") {
            tokens.next();
            let id = tokens.next().ok_or_else(|| bad(line))?;
            if tokens.next().is_some() {
                return Err(bad(line));
            }
            isolated.push(id.parse().map_err(|_| bad(id))?);
            continue;
        }
        let facet = tokens
            .map(|t| t.parse::<Vertex>().map_err(|_| bad(t)))
            .collect::<Result<Vec<_>>>()?;
        facets.push(facet);
    }
    Complex::from_facets(&facets, &isolated)
}

pub fn render(complex: &Complex) -> String {
    render_with_comments(complex, &[])
}

/// Like [`render`], preceded by `# `-prefixed comment lines.
pub fn render_with_comments(complex: &Complex, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let facets = complex.facets();
    for f in facets.iter().filter(|f| f.len() > 1) {
        let line: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    for f in facets.iter().filter(|f| f.len() == 1) {
        let _ = writeln!(out, "v {}", f.as_slice()[0]);
    }
    out
}

pub fn read(path: impl AsRef<Path>) -> Result<Complex> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse(&text)
}

pub fn write(path: impl AsRef<Path>, complex: &Complex, comments: &[String]) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, render_with_comments(complex, comments)).map_err(|e| Error::io(path, e))
}
