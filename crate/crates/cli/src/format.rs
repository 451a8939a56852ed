//! Digraph and matrix files: the `.dg` text format and its JSON alternatives.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use digraph_spectra::matrix::RealMatrix;
use digraph_spectra::verify::VerifyInput;
use digraph_spectra::Digraph;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{line}: {message}")]
    Syntax { path: String, line: usize, message: String },
    #[error("{path}: expected a digraph, found a matrix")]
    NotADigraph { path: String },
}

/// A parse failure located at a 1-based line.
#[derive(Debug, PartialEq)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

fn at(line: usize, message: impl Into<String>) -> LineError {
    LineError {
        line,
        message: message.into(),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DigraphJson {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub matrix: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AnyJson {
    Digraph(DigraphJson),
    Matrix(MatrixJson),
}

/// Arcs are validated one by one so each error carries its own line.
struct ArcCollector {
    n: usize,
    seen: HashSet<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
}

impl ArcCollector {
    fn new(n: usize) -> Self {
        ArcCollector {
            n,
            seen: HashSet::new(),
            arcs: Vec::new(),
        }
    }

    fn push(&mut self, u: usize, v: usize) -> Result<(), String> {
        if u >= self.n || v >= self.n {
            return Err(format!("arc ({u}, {v}) out of range for {} vertices", self.n));
        }
        if u == v {
            return Err(format!("loop at vertex {u}"));
        }
        if !self.seen.insert((u, v)) {
            return Err(format!("duplicate arc ({u}, {v})"));
        }
        self.arcs.push((u, v));
        Ok(())
    }

    fn finish(self) -> Result<Digraph, String> {
        Digraph::from_arc_list(self.n, &self.arcs).map_err(|e| e.to_string())
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

/// Text format: the vertex count, then one `u v` arc per line.
pub fn parse_dg(text: &str) -> Result<Digraph, LineError> {
    let mut lines = content_lines(text);
    let (first, header) = lines
        .next()
        .ok_or_else(|| at(1, "empty file, expected the vertex count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| at(first, format!("expected the vertex count, found {header:?}")))?;
    if n == 0 {
        return Err(at(first, "a digraph needs at least one vertex"));
    }
    let mut arcs = ArcCollector::new(n);
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields.as_slice() else {
            return Err(at(no, format!("expected \"u v\", found {line:?}")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| at(no, format!("bad vertex index {s:?}")))
        };
        arcs.push(parse(u)?, parse(v)?).map_err(|m| at(no, m))?;
    }
    arcs.finish().map_err(|m| at(first, m))
}

fn digraph_from_json(d: DigraphJson) -> Result<Digraph, String> {
    if d.n == 0 {
        return Err("a digraph needs at least one vertex".into());
    }
    let mut arcs = ArcCollector::new(d.n);
    for (i, [u, v]) in d.arcs.into_iter().enumerate() {
        arcs.push(u, v).map_err(|m| format!("arcs[{i}]: {m}"))?;
    }
    arcs.finish()
}

/// `{"n": .., "arcs": [[u, v], ..]}` or `{"matrix": [[..], ..]}`.
pub fn parse_json(text: &str) -> Result<VerifyInput, LineError> {
    let value: AnyJson = serde_json::from_str(text).map_err(|e| at(e.line().max(1), e.to_string()))?;
    match value {
        AnyJson::Digraph(d) => digraph_from_json(d).map(VerifyInput::Digraph).map_err(|m| at(1, m)),
        AnyJson::Matrix(m) => {
            let r = RealMatrix::from_rows(&m.matrix).map_err(|e| at(1, e.to_string()))?;
            if !r.is_square() || r.rows() == 0 {
                return Err(at(
                    1,
                    format!("matrix must be square and nonempty, got {}x{}", r.rows(), r.cols()),
                ));
            }
            Ok(VerifyInput::Matrix(r))
        }
    }
}

fn is_json(path: &Path, text: &str) -> bool {
    path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{')
}

pub fn read_input(path: &Path) -> Result<VerifyInput, InputError> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| InputError::Io {
        path: shown.clone(),
        source,
    })?;
    let parsed = if is_json(path, &text) {
        parse_json(&text)
    } else {
        parse_dg(&text).map(VerifyInput::Digraph)
    };
    parsed.map_err(|e| InputError::Syntax {
        path: shown,
        line: e.line,
        message: e.message,
    })
}

pub fn read_digraph(path: &Path) -> Result<Digraph, InputError> {
    match read_input(path)? {
        VerifyInput::Digraph(g) => Ok(g),
        VerifyInput::Matrix(_) => Err(InputError::NotADigraph {
            path: path.display().to_string(),
        }),
    }
}

/// `.dg` text, with each header line written as a comment.
pub fn write_dg(g: &Digraph, header: &[String]) -> String {
    let mut out = String::new();
    for line in header {
        out.push_str(&format!("# {line}\n"));
    }
    out.push_str(&format!("{}\n", g.n()));
    for (u, v) in g.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn digraph_json(g: &Digraph) -> DigraphJson {
    DigraphJson {
        n: g.n(),
        arcs: g.arcs().into_iter().map(|(u, v)| [u, v]).collect(),
    }
}
