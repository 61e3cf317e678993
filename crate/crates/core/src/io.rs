//! Text formats for graphs and colorings. Ids are 1-based on disk.
//!
//! Graph: a `p <n>` header followed by `e <u> <v>` lines.
//! Coloring: `V <id> <color>` and `E <u> <v> <color>` lines.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::TotalColoring;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `p <n>` header")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Graph { line: usize, message: String },
}

fn tokens(line: &str) -> Option<Vec<&str>> {
    let s = line.trim();
    if s.is_empty() || s.starts_with('#') || s.starts_with('c') && s[1..].starts_with(' ') {
        None
    } else {
        Some(s.split_whitespace().collect())
    }
}

fn num<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T, FormatError> {
    tok.parse().map_err(|_| FormatError::Syntax {
        line,
        message: format!("bad number `{tok}`"),
    })
}

fn one_based(tok: &str, line: usize) -> Result<usize, FormatError> {
    match num::<usize>(tok, line)? {
        0 => Err(FormatError::Syntax {
            line,
            message: "ids are 1-based".into(),
        }),
        id => Ok(id - 1),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut g: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let Some(t) = tokens(raw) else { continue };
        match t.as_slice() {
            ["p", n] => {
                if g.is_some() {
                    return Err(FormatError::Syntax {
                        line,
                        message: "second header".into(),
                    });
                }
                g = Some(Graph::new(num(n, line)?));
            }
            ["e", u, v] => {
                let g = g.as_mut().ok_or(FormatError::MissingHeader)?;
                let (u, v) = (one_based(u, line)?, one_based(v, line)?);
                g.add_edge(u, v).map_err(|e| FormatError::Graph {
                    line,
                    message: e.to_string(),
                })?;
            }
            _ => {
                return Err(FormatError::Syntax {
                    line,
                    message: "expected `p <n>` or `e <u> <v>`".into(),
                })
            }
        }
    }
    g.ok_or(FormatError::MissingHeader)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p {}\n", g.num_vertices());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// `labels[i]` is the on-disk id (0-based) of graph vertex `i`; pass `None`
/// for the identity.
pub fn serialize_coloring(c: &TotalColoring, labels: Option<&[usize]>) -> String {
    let name = |v: usize| labels.map_or(v, |l| l[v]) + 1;
    let mut out = String::new();
    for (v, col) in c.vertex_colors().iter().enumerate() {
        if let Some(col) = col {
            let _ = writeln!(out, "V {} {}", name(v), col);
        }
    }
    for (&(u, v), &col) in c.edge_colors() {
        let _ = writeln!(out, "E {} {} {}", name(u), name(v), col);
    }
    out
}

/// Parses a coloring for a graph on `n` vertices. `labels` maps graph ids to
/// on-disk ids as in [`serialize_coloring`].
pub fn parse_coloring(
    text: &str,
    n: usize,
    k: u32,
    labels: Option<&[usize]>,
) -> Result<TotalColoring, FormatError> {
    let mut back = vec![usize::MAX; labels.map_or(n, |l| l.iter().max().map_or(0, |m| m + 1))];
    match labels {
        Some(l) => {
            for (i, &x) in l.iter().enumerate() {
                back[x] = i;
            }
        }
        None => back.iter_mut().enumerate().for_each(|(i, b)| *b = i),
    }
    let mut c = TotalColoring::new(n, k);
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let Some(t) = tokens(raw) else { continue };
        let vid = |tok: &str| -> Result<usize, FormatError> {
            let x = one_based(tok, line)?;
            back.get(x)
                .copied()
                .filter(|&i| i != usize::MAX)
                .ok_or_else(|| FormatError::Syntax {
                    line,
                    message: format!("unknown vertex {tok}"),
                })
        };
        match t.as_slice() {
            ["V", v, col] => c.set_vertex(vid(v)?, num(col, line)?),
            ["E", u, v, col] => c.set_edge(vid(u)?, vid(v)?, num(col, line)?),
            _ => {
                return Err(FormatError::Syntax {
                    line,
                    message: "expected `V <id> <color>` or `E <u> <v> <color>`".into(),
                })
            }
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_text_round_trip() {
        let g = Graph::wheel(5);
        let s = serialize_graph(&g);
        assert!(s.starts_with("p 6\ne 1 2\n"));
        assert_eq!(parse_graph(&s).unwrap(), g);
    }

    #[test]
    fn graph_errors() {
        assert_eq!(parse_graph("e 1 2\n"), Err(FormatError::MissingHeader));
        assert!(matches!(
            parse_graph("p 2\ne 1 1\n"),
            Err(FormatError::Graph { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("p 2\ne 0 1\n"),
            Err(FormatError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn coloring_text_round_trip_with_labels() {
        let mut c = TotalColoring::new(2, 3);
        c.set_vertex(0, 1);
        c.set_vertex(1, 2);
        c.set_edge(0, 1, 3);
        let labels = [0, 4];
        let s = serialize_coloring(&c, Some(&labels));
        assert_eq!(s, "V 1 1\nV 5 2\nE 1 5 3\n");
        assert_eq!(parse_coloring(&s, 2, 3, Some(&labels)).unwrap(), c);
    }
}
