//! Edge-list graph files.
//!
//! ```text
//! # comment
//! p 3
//! e 1 2
//! e 2 3
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. The first remaining
//! line is the header `p <n>`; every later one is `e <u> <v>` with both ends
//! in `1..=n`. The writer emits `u < v` in lexicographic order.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use dinterval_core::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EdgeListError {
    #[error("line {line}: malformed line `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: expected header `p <n>` before edges")]
    MissingHeader { line: usize },
    #[error("line {line}: second header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    OutOfRange {
        line: usize,
        vertex: Vertex,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("empty document: no `p <n>` header")]
    Empty,
}

impl EdgeListError {
    /// 1-based line of the offending input, if any.
    pub fn line(&self) -> Option<usize> {
        match *self {
            EdgeListError::Malformed { line, .. }
            | EdgeListError::MissingHeader { line }
            | EdgeListError::DuplicateHeader { line }
            | EdgeListError::OutOfRange { line, .. }
            | EdgeListError::SelfLoop { line, .. }
            | EdgeListError::DuplicateEdge { line, .. } => Some(line),
            EdgeListError::Empty => None,
        }
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, EdgeListError> {
    let mut n: Option<usize> = None;
    let mut seen = BTreeSet::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let malformed = || EdgeListError::Malformed {
            line,
            text: trimmed.to_string(),
        };
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens.as_slice() {
            ["p", count] => {
                if n.is_some() {
                    return Err(EdgeListError::DuplicateHeader { line });
                }
                match count.parse::<usize>() {
                    Ok(c) if c > 0 => n = Some(c),
                    _ => return Err(malformed()),
                }
            }
            ["e", a, b] => {
                let n = n.ok_or(EdgeListError::MissingHeader { line })?;
                let (Ok(u), Ok(v)) = (a.parse::<Vertex>(), b.parse::<Vertex>()) else {
                    return Err(malformed());
                };
                for vertex in [u, v] {
                    if vertex == 0 || vertex > n {
                        return Err(EdgeListError::OutOfRange { line, vertex, n });
                    }
                }
                if u == v {
                    return Err(EdgeListError::SelfLoop { line, vertex: u });
                }
                let (u, v) = (u.min(v), u.max(v));
                if !seen.insert((u, v)) {
                    return Err(EdgeListError::DuplicateEdge { line, u, v });
                }
            }
            _ => return Err(malformed()),
        }
    }
    let n = n.ok_or(EdgeListError::Empty)?;
    Ok(Graph::from_edges(n, seen).expect("edges checked while parsing"))
}

pub fn write_graph(g: &Graph) -> String {
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().map(|(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    let mut out = String::new();
    writeln!(out, "p {}", g.n()).unwrap();
    for (u, v) in edges {
        writeln!(out, "e {} {}", u, v).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path() {
        let g = parse_graph("p 3\ne 1 2\ne 2 3").unwrap();
        assert_eq!(g, Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap());
        let again = parse_graph("# reversed\np 3\n\ne 3 2\ne 2 1\n").unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn errors_carry_lines() {
        assert_eq!(
            parse_graph("p 2\ne 1 1"),
            Err(EdgeListError::SelfLoop { line: 2, vertex: 1 })
        );
        assert_eq!(
            parse_graph("p 3\ne 1 2\n# x\ne 2 1"),
            Err(EdgeListError::DuplicateEdge {
                line: 4,
                u: 1,
                v: 2
            })
        );
        assert_eq!(
            parse_graph("p 3\ne 1 4"),
            Err(EdgeListError::OutOfRange {
                line: 2,
                vertex: 4,
                n: 3
            })
        );
        assert_eq!(
            parse_graph("e 1 2"),
            Err(EdgeListError::MissingHeader { line: 1 })
        );
        assert_eq!(
            parse_graph("p 3\np 3"),
            Err(EdgeListError::DuplicateHeader { line: 2 })
        );
        assert_eq!(parse_graph("# nothing"), Err(EdgeListError::Empty));
        for bad in [
            "p 0",
            "p x",
            "p 3\ne 1",
            "p 3\ne 1 2 3",
            "p 3\nq 1 2",
            "p 3\ne -1 2",
        ] {
            let err = parse_graph(bad).unwrap_err();
            assert!(
                matches!(err, EdgeListError::Malformed { .. }),
                "{bad}: {err}"
            );
        }
    }

    #[test]
    fn writer_is_sorted_and_round_trips() {
        let g = Graph::from_edges(4, [(4, 1), (3, 2), (1, 2)]).unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "p 4\ne 1 2\ne 1 4\ne 2 3\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }
}
