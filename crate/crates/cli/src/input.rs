//! Graph input: graph6 strings and edge-list files.

use std::path::Path;

use edge_invariants::{parse_graph6, Error, Graph, Result};

/// Parses an edge list: one `u v` pair per line, 0-indexed, `#` starts a
/// comment. Without `vertices` the graph has `max label + 1` vertices.
pub fn parse_edge_list(text: &str, vertices: Option<usize>) -> Result<Graph> {
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |message: String| Error::Parse {
            line: idx + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(bad(format!("expected two vertex labels, got {line:?}")));
        }
        let mut ends = [0usize; 2];
        for (slot, f) in ends.iter_mut().zip(&fields) {
            *slot = f
                .parse()
                .map_err(|_| bad(format!("not a vertex label: {f:?}")))?;
        }
        edges.push((ends[0], ends[1], idx + 1));
    }
    let inferred = edges
        .iter()
        .map(|&(u, v, _)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    let n = vertices.unwrap_or(inferred);
    if let Some(&(u, v, line)) = edges.iter().find(|&&(u, v, _)| u.max(v) >= n) {
        return Err(Error::Parse {
            line,
            message: format!("edge {u} {v} out of range for {n} vertices"),
        });
    }
    if let Some(&(u, _, line)) = edges.iter().find(|&&(u, v, _)| u == v) {
        return Err(Error::Parse {
            line,
            message: format!("loop at vertex {u}"),
        });
    }
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

pub fn read_edge_list(path: &Path, vertices: Option<usize>) -> Result<Graph> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text, vertices)
}

/// Graph from a graph6 argument or an edge-list file, whichever is given.
pub fn load_graph(
    graph6: Option<&str>,
    edges: Option<&Path>,
    vertices: Option<usize>,
) -> Result<Graph> {
    match (graph6, edges) {
        (Some(s), None) => parse_graph6(s),
        (None, Some(p)) => read_edge_list(p, vertices),
        _ => Err(Error::Graph6(
            "no graph given; pass a graph6 string or --edges FILE".into(),
        )),
    }
}
