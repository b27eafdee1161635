//! Plain-text graph files.
//!
//! ```text
//! # comment
//! graph <k> <m> <directed|undirected>
//! <u> <v> [mult]     (m edge lines, 0-based indices, mult defaults to 1)
//! ```

use std::fmt;
use std::path::Path;

use critcone::Digraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.line == 0 {
            write!(f, "parse error: {}", self.message)
        } else {
            write!(f, "parse error at line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

pub fn parse_file(path: &Path) -> Result<Digraph, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_str(&text)
}

pub fn parse_str(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let Some((header_no, header)) = lines.next() else {
        return err(0, "missing header line 'graph <k> <m> <directed|undirected>'");
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 || fields[0] != "graph" {
        return err(header_no, "header must be 'graph <k> <m> <directed|undirected>'");
    }
    let k: usize = match fields[1].parse() {
        Ok(k) if k >= 1 => k,
        _ => return err(header_no, format!("vertex count '{}' must be a positive integer", fields[1])),
    };
    let m: usize = match fields[2].parse() {
        Ok(m) => m,
        Err(_) => return err(header_no, format!("edge count '{}' must be an integer", fields[2])),
    };
    let directed = match fields[3] {
        "directed" => true,
        "undirected" => false,
        other => return err(header_no, format!("mode '{other}' must be 'directed' or 'undirected'")),
    };

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let Some((line_no, line)) = lines.next() else {
            return err(0, format!("expected {m} edge lines, found {}", edges.len()));
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 && fields.len() != 3 {
            return err(line_no, "edge line must be '<u> <v> [mult]'");
        }
        let endpoint = |s: &str| -> Result<usize, ParseError> {
            match s.parse::<usize>() {
                Ok(v) if v < k => Ok(v),
                Ok(v) => err(line_no, format!("vertex {v} out of range for {k} vertices")),
                Err(_) => err(line_no, format!("'{s}' is not a vertex index")),
            }
        };
        let u = endpoint(fields[0])?;
        let v = endpoint(fields[1])?;
        let mult: u64 = match fields.get(2) {
            None => 1,
            Some(s) => match s.parse() {
                Ok(mult) if mult >= 1 => mult,
                _ => return err(line_no, format!("multiplicity '{s}' must be a positive integer")),
            },
        };
        edges.push((u, v, mult));
    }

    if let Some((line_no, line)) = lines.next() {
        return err(line_no, format!("unexpected content after {m} edge lines: '{line}'"));
    }

    let result = if directed {
        Digraph::from_arcs(k, &edges)
    } else {
        Digraph::from_undirected(k, &edges)
    };
    result.map_err(|e| ParseError { line: 0, message: e.to_string() })
}
