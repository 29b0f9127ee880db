//! Graph and list file formats.
//!
//! Edge lists hold one edge `u v` per line; a line with a single id declares
//! an isolated vertex. DIMACS files use `p edge n m` and `e u v` lines, with
//! vertices `1..=n`. Both allow comments (`#` for edge lists, `c` lines for
//! DIMACS) and blank lines. Loops and repeated edges are errors.

use std::collections::{BTreeMap, BTreeSet};

use clap::ValueEnum;
use partree_core::coloring::{Color, ListAssignment};
use partree_core::{Graph, Vertex};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Auto,
    Edges,
    Dimacs,
}

fn number<T: std::str::FromStr>(token: &str, line: usize, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| CliError::parse(line, format!("expected {what}, found `{token}`")))
}

/// Records edges, rejecting loops and duplicates with the offending line.
#[derive(Default)]
struct Builder {
    vertices: BTreeSet<Vertex>,
    edges: BTreeMap<(Vertex, Vertex), usize>,
}

impl Builder {
    fn edge(&mut self, u: Vertex, v: Vertex, line: usize) -> Result<()> {
        if u == v {
            return Err(CliError::parse(line, format!("loop at vertex {u}")));
        }
        let key = (u.min(v), u.max(v));
        if let Some(first) = self.edges.insert(key, line) {
            return Err(CliError::parse(
                line,
                format!("edge {}-{} repeats line {first}", key.0, key.1),
            ));
        }
        self.vertices.extend([u, v]);
        Ok(())
    }

    fn finish(self) -> Result<Graph> {
        Ok(Graph::new(self.vertices, self.edges.into_keys())?)
    }
}

fn content_lines(
    text: &str,
    comment: impl Fn(&str) -> bool,
) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !comment(l))
        .map(|(i, l)| {
            (
                i,
                l.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .collect(),
            )
        })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut b = Builder::default();
    for (line, tokens) in content_lines(text, |l| l.starts_with('#')) {
        match tokens.as_slice() {
            [v] => {
                b.vertices.insert(number(v, line, "a vertex id")?);
            }
            [u, v] => b.edge(
                number(u, line, "a vertex id")?,
                number(v, line, "a vertex id")?,
                line,
            )?,
            _ => {
                return Err(CliError::parse(
                    line,
                    "expected `u v` or a single vertex id",
                ))
            }
        }
    }
    b.finish()
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut b = Builder::default();
    let mut header: Option<(Vertex, usize, usize)> = None;
    for (line, tokens) in content_lines(text, |l| l == "c" || l.starts_with("c ")) {
        match tokens.as_slice() {
            ["p", _, n, m] => {
                if header.is_some() {
                    return Err(CliError::parse(line, "second problem line"));
                }
                let n: Vertex = number(n, line, "a vertex count")?;
                header = Some((n, number(m, line, "an edge count")?, line));
                b.vertices.extend(1..=n);
            }
            ["e", u, v] => {
                let Some((n, _, _)) = header else {
                    return Err(CliError::parse(line, "edge before the `p` line"));
                };
                let (u, v): (Vertex, Vertex) = (
                    number(u, line, "a vertex id")?,
                    number(v, line, "a vertex id")?,
                );
                if let Some(bad) = [u, v].into_iter().find(|&x| x == 0 || x > n) {
                    return Err(CliError::parse(
                        line,
                        format!("vertex {bad} is outside 1..={n}"),
                    ));
                }
                b.edge(u, v, line)?;
            }
            _ => {
                return Err(CliError::parse(
                    line,
                    "expected a `p edge n m` or `e u v` line",
                ))
            }
        }
    }
    let Some((_, m, line)) = header else {
        return Err(CliError::parse(0, "missing `p edge n m` line"));
    };
    if b.edges.len() != m {
        return Err(CliError::parse(
            line,
            format!("header promises {m} edges, found {}", b.edges.len()),
        ));
    }
    b.finish()
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Edges => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
        Format::Auto => {
            let first = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty() && !l.starts_with('#'));
            match first {
                Some(l) if l == "c" || l.starts_with("c ") || l.starts_with("p ") => {
                    parse_dimacs(text)
                }
                _ => parse_edge_list(text),
            }
        }
    }
}

/// Lines of the form `v: c1, c2, …`.
pub fn parse_lists(text: &str) -> Result<ListAssignment> {
    let mut lists = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let (v, colors) = l
            .split_once(':')
            .ok_or_else(|| CliError::parse(line, "expected `vertex: color, color, ...`"))?;
        let v: Vertex = number(v.trim(), line, "a vertex id")?;
        let colors: BTreeSet<Color> = colors
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| number(t, line, "a color id"))
            .collect::<Result<_>>()?;
        if colors.is_empty() {
            return Err(CliError::parse(
                line,
                format!("vertex {v} has an empty list"),
            ));
        }
        if lists.insert(v, colors).is_some() {
            return Err(CliError::parse(line, format!("second list for vertex {v}")));
        }
    }
    Ok(ListAssignment::new(lists)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertices().filter(|&v| g.neighbors(v).is_empty()) {
        out.push_str(&format!("{v}\n"));
    }
    for e in g.edges() {
        let (u, v) = e.endpoints();
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_of(r: Result<Graph>) -> usize {
        match r {
            Err(CliError::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn edge_list_basics() {
        let g = parse_edge_list("# theta\n0 2\n2 1\n\n0,3\n3 1\n7\n").unwrap();
        assert_eq!(g.num_vertices(), 5);
        assert_eq!(g.num_edges(), 4);
        assert!(g.neighbors(7).is_empty());
    }

    #[test]
    fn edge_list_errors_carry_lines() {
        assert_eq!(line_of(parse_edge_list("0 1\n1 1\n")), 2);
        assert_eq!(line_of(parse_edge_list("0 1\n1 2\n# c\n1 0\n")), 4);
        assert_eq!(line_of(parse_edge_list("0 1\nzero 2\n")), 2);
        assert_eq!(line_of(parse_edge_list("0 1 2\n")), 1);
    }

    #[test]
    fn dimacs_basics_and_errors() {
        let g = parse_dimacs("c k3\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g.num_edges(), 3);
        assert_eq!(g.vertices().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(line_of(parse_dimacs("p edge 3 1\ne 1 4\n")), 2);
        assert_eq!(line_of(parse_dimacs("e 1 2\n")), 1);
        assert_eq!(line_of(parse_dimacs("p edge 3 2\ne 1 2\n")), 1);
        assert_eq!(line_of(parse_dimacs("p edge 3 2\ne 1 2\ne 2 1\n")), 3);
    }

    #[test]
    fn auto_detection() {
        assert_eq!(
            parse_graph("p edge 2 1\ne 1 2\n", Format::Auto)
                .unwrap()
                .num_edges(),
            1
        );
        assert_eq!(parse_graph("0 1\n", Format::Auto).unwrap().num_edges(), 1);
    }

    #[test]
    fn lists() {
        let l = parse_lists("0: 1, 2\n1:3\n").unwrap();
        assert_eq!(l.get(0).unwrap().len(), 2);
        assert!(matches!(
            parse_lists("0: 1\n0: 2\n"),
            Err(CliError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_lists("0 1\n"),
            Err(CliError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_edge_list("0 1\n1 2\n5\n").unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }
}
