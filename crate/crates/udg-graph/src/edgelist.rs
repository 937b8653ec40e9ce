//! Plain edge-list format: a header line `n m`, then `m` lines `u v`
//! (0-based). Blank lines and lines starting with `#` are skipped.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest vertex count the parser will allocate for.
pub const MAX_VERTICES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("line {line}: expected two non-negative integers, found {text:?}")]
    Syntax { line: usize, text: String },
    #[error("line {line}: vertex count {n} exceeds the supported maximum")]
    TooLarge { line: usize, n: usize },
    #[error("header announces {expected} edges but {found} were given")]
    EdgeCount { expected: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

pub fn parse(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = pair(hline, header)?;
    if n > MAX_VERTICES {
        return Err(EdgeListError::TooLarge { line: hline, n });
    }
    let mut edges = Vec::new();
    let mut origin = Vec::new();
    for (line, l) in lines {
        edges.push(pair(line, l)?);
        origin.push(line);
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    for (i, &(u, v)) in edges.iter().enumerate() {
        if u >= n || v >= n || u == v {
            let source = if u == v && u < n {
                GraphError::SelfLoop(u)
            } else {
                GraphError::OutOfRange(u, v, n)
            };
            return Err(EdgeListError::Graph {
                line: origin[i],
                source,
            });
        }
    }
    Ok(Graph::from_edge_list(n, &edges).expect("validated above"))
}

fn pair(line: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let bad = || EdgeListError::Syntax {
        line,
        text: text.to_string(),
    };
    let mut it = text.split_whitespace();
    let a = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    let b = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn write(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_c4() {
        let g = Graph::cycle(4);
        assert_eq!(parse(&write(&g)).unwrap(), g);
    }

    #[test]
    fn errors_name_lines() {
        assert_eq!(parse(""), Err(EdgeListError::MissingHeader));
        assert!(matches!(
            parse("3 1\n0 x\n"),
            Err(EdgeListError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse("3 1\n\n0 3\n"),
            Err(EdgeListError::Graph { line: 3, .. })
        ));
        assert_eq!(
            parse("3 2\n0 1\n"),
            Err(EdgeListError::EdgeCount { expected: 2, found: 1 })
        );
    }
}
