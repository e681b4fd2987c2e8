//! Edge-list and DIMACS `.col` readers.
//!
//! Edge lists hold one edge per line as two whitespace-separated tokens;
//! `#` starts a comment line. When every token is an unsigned integer the
//! tokens are 1-based vertex indices and `n` is the largest one, otherwise
//! tokens are labels numbered in order of first appearance.

use std::collections::HashMap;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Reads either format, choosing DIMACS when a `p` header line is present.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let dimacs = text.lines().any(|l| {
        let mut t = l.split_whitespace();
        t.next() == Some("p") && t.count() >= 2
    });
    if dimacs {
        parse_dimacs(text)
    } else {
        parse_edge_list(text)
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut rows: Vec<(usize, &str, &str)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_error(k + 1, format!("expected two vertices, found {} tokens", tokens.len())));
        }
        if tokens[0] == tokens[1] {
            return Err(Error::LoopEdge { line: k + 1, vertex: tokens[0].to_string() });
        }
        rows.push((k + 1, tokens[0], tokens[1]));
    }

    let numeric = rows.iter().all(|(_, a, b)| a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok());
    if numeric {
        let mut edges = Vec::with_capacity(rows.len());
        let mut n = 0;
        for &(line, a, b) in &rows {
            let (a, b) = (a.parse::<usize>().unwrap(), b.parse::<usize>().unwrap());
            if a == b {
                return Err(Error::LoopEdge { line, vertex: a.to_string() });
            }
            n = n.max(a).max(b);
            edges.push((a, b));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        if edges.iter().any(|&(a, b)| a == 0 || b == 0) {
            return Err(Error::VertexOutOfRange { vertex: 0, n });
        }
        Graph::from_edges(n, edges.into_iter().map(|(a, b)| (a - 1, b - 1)))
    } else {
        let mut index: HashMap<&str, usize> = HashMap::new();
        let mut labels = Vec::new();
        let mut edges = Vec::with_capacity(rows.len());
        for &(_, a, b) in &rows {
            let mut ends = [0usize; 2];
            for (slot, t) in ends.iter_mut().zip([a, b]) {
                *slot = *index.entry(t).or_insert_with(|| {
                    labels.push(t.to_string());
                    labels.len() - 1
                });
            }
            edges.push((ends[0], ends[1]));
        }
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices { n: labels.len(), max: MAX_VERTICES });
        }
        Graph::with_labels(labels, edges)
    }
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first().copied() {
            None | Some("c") => continue,
            Some(t) if t.starts_with('#') => continue,
            Some("p") => {
                if n.is_some() {
                    return Err(parse_error(line_no, "duplicate problem line"));
                }
                if tokens.len() < 3 {
                    return Err(parse_error(line_no, "problem line must read `p edge <n> <m>`"));
                }
                let count = tokens[2]
                    .parse::<usize>()
                    .map_err(|_| parse_error(line_no, format!("bad vertex count {:?}", tokens[2])))?;
                if count > MAX_VERTICES {
                    return Err(Error::TooManyVertices { n: count, max: MAX_VERTICES });
                }
                n = Some(count);
            }
            Some("e") => {
                let count = n.ok_or_else(|| parse_error(line_no, "edge line before problem line"))?;
                if tokens.len() != 3 {
                    return Err(parse_error(line_no, "edge line must read `e <u> <v>`"));
                }
                let endpoint = |t: &str| -> Result<usize> {
                    let v = t
                        .parse::<usize>()
                        .map_err(|_| parse_error(line_no, format!("bad vertex {t:?}")))?;
                    if v == 0 || v > count {
                        return Err(Error::VertexOutOfRange { vertex: v, n: count });
                    }
                    Ok(v - 1)
                };
                let (u, v) = (endpoint(tokens[1])?, endpoint(tokens[2])?);
                if u == v {
                    return Err(Error::LoopEdge { line: line_no, vertex: (u + 1).to_string() });
                }
                edges.push((u, v));
            }
            Some(other) => return Err(parse_error(line_no, format!("unknown line type {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| parse_error(0, "missing problem line"))?;
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_edge_list() {
        let g = parse_graph("1 2\n2 3\n3 1").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn dimacs_c4() {
        let g = parse_graph("c square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn loop_rejected() {
        assert_eq!(parse_graph("1 1"), Err(Error::LoopEdge { line: 1, vertex: "1".into() }));
        assert!(matches!(parse_graph("p edge 3 1\ne 2 2"), Err(Error::LoopEdge { line: 2, .. })));
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        assert!(matches!(parse_graph("# c\n1 2\n2 3 4"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("p edge 3 1\nx 1 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("p edge 3 1\ne 1 q"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_dimacs("e 1 2"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn out_of_range() {
        assert_eq!(parse_graph("p edge 3 1\ne 1 4"), Err(Error::VertexOutOfRange { vertex: 4, n: 3 }));
        assert_eq!(parse_graph("0 1"), Err(Error::VertexOutOfRange { vertex: 0, n: 1 }));
        assert!(matches!(parse_graph("1 65"), Err(Error::TooManyVertices { .. })));
    }

    #[test]
    fn labels_and_duplicates() {
        let g = parse_graph("# labelled\na b\nb c\nc a\nb a\n").unwrap();
        assert_eq!(g.labels(), &["a", "b", "c"]);
        assert_eq!(g.edge_count(), 3);
        let h = parse_graph("2 4\n4 2\n").unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.edge_count(), 1);
    }
}
