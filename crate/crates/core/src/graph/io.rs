use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Line { line: usize, reason: String },
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn line_err(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Line { line, reason: reason.into() }
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let mut it = text.split_whitespace().map(|tok| {
        tok.parse::<usize>().map_err(|_| line_err(line, format!("malformed number `{tok}`")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(line_err(line, format!("expected two integers, got `{text}`"))),
    }
}

/// Edge-list text: a header `n m`, then `m` lines `u v`; `#` lines are comments.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = two_numbers(hline, header)?;
    if n == 0 {
        return Err(line_err(hline, "graph must have at least one vertex"));
    }
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(m);
    for (line, text) in lines {
        let (u, v) = two_numbers(line, text)?;
        if u >= n || v >= n {
            return Err(line_err(line, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(line_err(line, format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(line_err(line, format!("duplicate edge {u}-{v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount { declared: m, found: edges.len() });
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Writes the header and edges sorted by `(min endpoint, max endpoint)`.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = parse_graph("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(write_graph(&g), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn comments_are_skipped() {
        let g = parse_graph("# a path\n3 2\n# edges\n2 1\n\n0 1\n").unwrap();
        assert_eq!(write_graph(&g), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(
            parse_graph("2 1\n0 0"),
            Err(ParseError::Line { line: 2, reason: "self-loop at 0".into() })
        );
        assert!(matches!(
            parse_graph("4 2\n0 1\n2 3"),
            Err(ParseError::Graph(GraphError::Disconnected { .. }))
        ));
        assert!(matches!(parse_graph("3 2\n0 1\n1 x"), Err(ParseError::Line { line: 3, .. })));
        assert!(matches!(parse_graph("3 2\n0 1\n1 0"), Err(ParseError::Line { line: 3, .. })));
        assert!(matches!(parse_graph("3 3\n0 1\n1 2"), Err(ParseError::EdgeCount { .. })));
        assert_eq!(parse_graph("# nothing"), Err(ParseError::MissingHeader));
    }
}
