//! Plain-text adjacency lists: one `v: n1 n2 ...` row per vertex.
//!
//! A line that starts with whitespace, or carries no `label:` prefix,
//! continues the previous row. `#` starts a comment.

use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdjacencyListError {
    #[error("line {line}: malformed token {token:?}")]
    Malformed { line: usize, token: String },
    #[error("line {line}: continuation row with no preceding vertex label")]
    DanglingContinuation { line: usize },
    #[error("line {line}: vertex {vertex} is outside the declared order {order}")]
    UnknownVertex { line: usize, vertex: usize, order: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
}

/// Parses an adjacency list and symmetrises it.
///
/// With `order = None` the order is one more than the largest row label.
pub fn parse_adjacency_list(text: &str, order: Option<usize>) -> Result<Graph, AdjacencyListError> {
    let mut rows: Vec<(usize, usize, usize)> = Vec::new(); // (line, from, to)
    let mut labels = Vec::new();
    let mut current: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let continuation = line.starts_with(char::is_whitespace) || !line.contains(':');
        let rest = if continuation {
            line
        } else {
            let (label, rest) = line.split_once(':').expect("checked above");
            let label = label.trim();
            let v = label
                .parse::<usize>()
                .map_err(|_| AdjacencyListError::Malformed { line: line_no, token: label.to_string() })?;
            labels.push((line_no, v));
            current = Some(v);
            rest
        };
        let from = current.ok_or(AdjacencyListError::DanglingContinuation { line: line_no })?;
        for tok in rest.split(|c: char| c.is_whitespace() || c == ',' || c == '&') {
            if tok.is_empty() {
                continue;
            }
            let to = tok
                .parse::<usize>()
                .map_err(|_| AdjacencyListError::Malformed { line: line_no, token: tok.to_string() })?;
            rows.push((line_no, from, to));
        }
    }
    let n = order.unwrap_or_else(|| labels.iter().map(|&(_, v)| v + 1).max().unwrap_or(0));
    for &(line, v) in &labels {
        if v >= n {
            return Err(AdjacencyListError::UnknownVertex { line, vertex: v, order: n });
        }
    }
    let mut g = Graph::new(n);
    for (line, from, to) in rows {
        if to >= n {
            return Err(AdjacencyListError::UnknownVertex { line, vertex: to, order: n });
        }
        if to == from {
            return Err(AdjacencyListError::SelfLoop { line, vertex: to });
        }
        g.add_edge(from, to);
    }
    Ok(g)
}

/// One row per vertex, neighbours ascending.
pub fn emit_adjacency_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.order() {
        out.push_str(&v.to_string());
        out.push(':');
        for w in g.neighbors(v) {
            out.push(' ');
            out.push_str(&w.to_string());
        }
        out.push('\n');
    }
    out
}
