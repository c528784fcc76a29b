//! Text formats: instance files, solution files, and graph edge lists.
//!
//! Instance files carry one hypergraph each: a header `p hg <n> <m>`, one
//! `e v1 v2 …` line per edge, and `c …` comment lines anywhere. Solution
//! files carry a declared cost line `s cost=<int> k=<int>`, the ordering
//! prefix `o v1 … vk`, an optional `stats tau=<int> tau_arrow=<int>`
//! trailer, and an optional bare `yes`/`no` decision line. Graph files are
//! plain edge lists: a `<n> <m>` header followed by `<u> <v>` lines.
//!
//! All parsers report errors with 1-based line numbers.

use crate::generators::SimpleGraph;
use crate::hypergraph::{Hypergraph, VertexId};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

fn parse_int<T: std::str::FromStr>(token: &str, line: usize, what: &str) -> Result<T, ParseError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected {what} to be an integer, got `{token}`")))
}

/// An instance file after loading: the hypergraph, its comment lines, and
/// how many duplicate edge lines were merged away (callers usually warn
/// when this is nonzero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedInstance {
    pub hypergraph: Hypergraph,
    pub comments: Vec<String>,
    pub duplicates_merged: usize,
}

pub fn parse_instance(text: &str) -> Result<LoadedInstance, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None; // (line, n, m)
    let mut comments = Vec::new();
    let mut edges: Vec<Vec<VertexId>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match tokens.next().unwrap() {
            "c" => comments.push(trimmed[1..].trim_start().to_string()),
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "duplicate `p` header"));
                }
                if tokens.next() != Some("hg") {
                    return Err(syntax(line, "expected header `p hg <n_vertices> <n_edges>`"));
                }
                let n = parse_int(
                    tokens.next().ok_or_else(|| syntax(line, "header is missing the vertex count"))?,
                    line,
                    "the vertex count",
                )?;
                let m = parse_int(
                    tokens.next().ok_or_else(|| syntax(line, "header is missing the edge count"))?,
                    line,
                    "the edge count",
                )?;
                if tokens.next().is_some() {
                    return Err(syntax(line, "trailing tokens after `p hg <n> <m>`"));
                }
                header = Some((line, n, m));
            }
            "e" => {
                let (_, n, _) = header
                    .ok_or_else(|| syntax(line, "edge line before the `p hg` header"))?;
                let mut edge = Vec::new();
                for token in tokens {
                    let v: VertexId = parse_int(token, line, "a vertex id")?;
                    if v == 0 {
                        return Err(syntax(line, "vertex ids are 1-based; 0 is invalid"));
                    }
                    if v as usize > n {
                        return Err(syntax(
                            line,
                            format!("vertex {v} out of range 1..={n}"),
                        ));
                    }
                    edge.push(v);
                }
                if edge.is_empty() {
                    return Err(syntax(line, "edge line lists no vertices"));
                }
                edges.push(edge);
            }
            other => {
                return Err(syntax(
                    line,
                    format!("unrecognized line kind `{other}` (expected c, p, or e)"),
                ))
            }
        }
    }
    let (header_line, n, m) = header.ok_or_else(|| syntax(1, "no `p hg <n> <m>` header found"))?;
    if edges.len() != m {
        return Err(syntax(
            header_line,
            format!("header declares {m} edges, but the file has {} edge lines", edges.len()),
        ));
    }
    let given = edges.len();
    let hypergraph = Hypergraph::new(n, edges)
        .map_err(|e| syntax(header_line, e.to_string()))?;
    Ok(LoadedInstance {
        duplicates_merged: given - hypergraph.edge_count(),
        hypergraph,
        comments,
    })
}

pub fn format_instance(hypergraph: &Hypergraph, comments: &[String]) -> String {
    let mut out = String::new();
    for comment in comments {
        if comment.is_empty() {
            out.push_str("c\n");
        } else {
            writeln!(out, "c {comment}").unwrap();
        }
    }
    writeln!(out, "p hg {} {}", hypergraph.vertex_count(), hypergraph.edge_count()).unwrap();
    for edge in hypergraph.edges() {
        out.push('e');
        for v in edge {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// A solution file's contents. Every field is optional so that partial
/// files (a bare `no`, a greedy run without stats) parse cleanly; consumers
/// check for the fields they need.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolutionFile {
    pub comments: Vec<String>,
    /// Bare `yes`/`no` line from a decision run.
    pub decision: Option<bool>,
    pub declared_cost: Option<u64>,
    pub declared_cover_size: Option<usize>,
    /// Concatenation of all `o` lines.
    pub ordering: Option<Vec<VertexId>>,
    pub tau: Option<u64>,
    pub tau_arrow: Option<u64>,
}

impl SolutionFile {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for comment in &self.comments {
            if comment.is_empty() {
                out.push_str("c\n");
            } else {
                writeln!(out, "c {comment}").unwrap();
            }
        }
        if let Some(decision) = self.decision {
            writeln!(out, "{}", if decision { "yes" } else { "no" }).unwrap();
        }
        if let (Some(cost), Some(k)) = (self.declared_cost, self.declared_cover_size) {
            writeln!(out, "s cost={cost} k={k}").unwrap();
        }
        if let Some(ordering) = &self.ordering {
            out.push('o');
            for v in ordering {
                write!(out, " {v}").unwrap();
            }
            out.push('\n');
        }
        if let (Some(tau), Some(tau_arrow)) = (self.tau, self.tau_arrow) {
            writeln!(out, "stats tau={tau} tau_arrow={tau_arrow}").unwrap();
        }
        out
    }
}

fn parse_keyed<T: std::str::FromStr>(
    token: Option<&str>,
    key: &str,
    line: usize,
) -> Result<T, ParseError> {
    let token = token.ok_or_else(|| syntax(line, format!("missing `{key}=<int>`")))?;
    let value = token
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| syntax(line, format!("expected `{key}=<int>`, got `{token}`")))?;
    parse_int(value, line, key)
}

pub fn parse_solution(text: &str) -> Result<SolutionFile, ParseError> {
    let mut solution = SolutionFile::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match tokens.next().unwrap() {
            "c" => solution.comments.push(trimmed[1..].trim_start().to_string()),
            first @ ("yes" | "no") => {
                if tokens.next().is_some() {
                    return Err(syntax(line, "trailing tokens after the yes/no line"));
                }
                if solution.decision.replace(first == "yes").is_some() {
                    return Err(syntax(line, "more than one yes/no line"));
                }
            }
            "s" => {
                if solution.declared_cost.is_some() {
                    return Err(syntax(line, "more than one `s` line"));
                }
                solution.declared_cost = Some(parse_keyed(tokens.next(), "cost", line)?);
                solution.declared_cover_size = Some(parse_keyed(tokens.next(), "k", line)?);
                if tokens.next().is_some() {
                    return Err(syntax(line, "trailing tokens after `s cost=<int> k=<int>`"));
                }
            }
            "o" => {
                let ordering = solution.ordering.get_or_insert_with(Vec::new);
                for token in tokens {
                    let v: VertexId = parse_int(token, line, "a vertex id")?;
                    if v == 0 {
                        return Err(syntax(line, "vertex ids are 1-based; 0 is invalid"));
                    }
                    ordering.push(v);
                }
            }
            "stats" => {
                if solution.tau.is_some() {
                    return Err(syntax(line, "more than one `stats` line"));
                }
                solution.tau = Some(parse_keyed(tokens.next(), "tau", line)?);
                solution.tau_arrow = Some(parse_keyed(tokens.next(), "tau_arrow", line)?);
                if tokens.next().is_some() {
                    return Err(syntax(line, "trailing tokens after the stats line"));
                }
            }
            other => {
                return Err(syntax(
                    line,
                    format!("unrecognized line kind `{other}` (expected c, s, o, stats, yes, or no)"),
                ))
            }
        }
    }
    Ok(solution)
}

/// Parses a plain edge list: `<n> <m>` header, then `m` lines `<u> <v>`.
/// Comment (`c …`) and blank lines are allowed anywhere.
pub fn parse_graph(text: &str) -> Result<SimpleGraph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed == "c" || trimmed.starts_with("c ") {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(syntax(line, "expected exactly two integers per line"));
        }
        match header {
            None => {
                let n = parse_int(tokens[0], line, "the vertex count")?;
                let m = parse_int(tokens[1], line, "the edge count")?;
                header = Some((line, n, m));
            }
            Some((_, n, _)) => {
                let u: VertexId = parse_int(tokens[0], line, "an endpoint")?;
                let v: VertexId = parse_int(tokens[1], line, "an endpoint")?;
                for w in [u, v] {
                    if w == 0 || w as usize > n {
                        return Err(syntax(line, format!("vertex {w} out of range 1..={n}")));
                    }
                }
                if u == v {
                    return Err(syntax(line, format!("edge {u}-{v} is a self-loop")));
                }
                edges.push((u, v));
            }
        }
    }
    let (header_line, n, m) = header.ok_or_else(|| syntax(1, "no `<n> <m>` header found"))?;
    if edges.len() != m {
        return Err(syntax(
            header_line,
            format!("header declares {m} edges, but the file has {} edge lines", edges.len()),
        ));
    }
    SimpleGraph::new(n, edges).map_err(|e| syntax(header_line, e.to_string()))
}

pub fn format_graph(graph: &SimpleGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", graph.vertex_count(), graph.edge_count()).unwrap();
    for (u, v) in graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_roundtrip() {
        let text = "c made by hand\np hg 3 3\ne 1 2\ne 1 3\ne 2 3\n";
        let loaded = parse_instance(text).unwrap();
        assert_eq!(loaded.hypergraph.vertex_count(), 3);
        assert_eq!(loaded.hypergraph.edge_count(), 3);
        assert_eq!(loaded.comments, vec!["made by hand"]);
        assert_eq!(loaded.duplicates_merged, 0);
        assert_eq!(format_instance(&loaded.hypergraph, &loaded.comments), text);
    }

    #[test]
    fn duplicate_edges_are_counted() {
        let text = "p hg 3 3\ne 1 2\ne 2 1\ne 2 3\n";
        let loaded = parse_instance(text).unwrap();
        assert_eq!(loaded.hypergraph.edge_count(), 2);
        assert_eq!(loaded.duplicates_merged, 1);
    }

    #[test]
    fn instance_errors_carry_line_numbers() {
        let err = parse_instance("p hg 3 1\ne 1 4\n").unwrap_err();
        assert_eq!(err, syntax(2, "vertex 4 out of range 1..=3"));
        let err = parse_instance("p hg 3 2\ne 1 2\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, .. }));
        let err = parse_instance("e 1 2\np hg 3 1\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, .. }));
        let err = parse_instance("p hg 3 1\nq 1 2\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }));
        let err = parse_instance("p hg 3 1\ne one\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }));
        assert!(parse_instance("").is_err());
    }

    #[test]
    fn solution_roundtrip_with_stats() {
        let solution = SolutionFile {
            declared_cost: Some(4),
            declared_cover_size: Some(2),
            ordering: Some(vec![1, 2]),
            tau: Some(2),
            tau_arrow: Some(2),
            ..SolutionFile::default()
        };
        let text = solution.to_text();
        assert_eq!(text, "s cost=4 k=2\no 1 2\nstats tau=2 tau_arrow=2\n");
        assert_eq!(parse_solution(&text).unwrap(), solution);
    }

    #[test]
    fn decision_only_solution() {
        let parsed = parse_solution("no\n").unwrap();
        assert_eq!(parsed.decision, Some(false));
        assert_eq!(parsed.declared_cost, None);
        let parsed = parse_solution("yes\ns cost=4 k=2\no 1 2\n").unwrap();
        assert_eq!(parsed.decision, Some(true));
        assert_eq!(parsed.ordering, Some(vec![1, 2]));
    }

    #[test]
    fn solution_rejects_conflicts_and_junk() {
        assert!(parse_solution("yes\nno\n").is_err());
        assert!(parse_solution("s cost=1 k=1\ns cost=2 k=2\n").is_err());
        assert!(parse_solution("s cost=x k=1\n").is_err());
        assert!(parse_solution("verdict maybe\n").is_err());
        assert!(parse_solution("o 0\n").is_err());
    }

    #[test]
    fn multiple_o_lines_concatenate() {
        let parsed = parse_solution("o 3 1\no 2\n").unwrap();
        assert_eq!(parsed.ordering, Some(vec![3, 1, 2]));
    }

    #[test]
    fn empty_ordering_line_roundtrips() {
        let solution = SolutionFile {
            declared_cost: Some(0),
            declared_cover_size: Some(0),
            ordering: Some(Vec::new()),
            ..SolutionFile::default()
        };
        let text = solution.to_text();
        assert_eq!(text, "s cost=0 k=0\no\n");
        assert_eq!(parse_solution(&text).unwrap().ordering, Some(Vec::new()));
    }

    #[test]
    fn graph_roundtrip_and_errors() {
        let g = parse_graph("c a path\n3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(format_graph(&g), "3 2\n1 2\n2 3\n");
        assert!(matches!(
            parse_graph("3 2\n1 2\n").unwrap_err(),
            ParseError::Syntax { line: 1, .. }
        ));
        assert!(matches!(
            parse_graph("3 1\n1 1\n").unwrap_err(),
            ParseError::Syntax { line: 2, .. }
        ));
        assert!(matches!(
            parse_graph("3 1\n1 4\n").unwrap_err(),
            ParseError::Syntax { line: 2, .. }
        ));
        assert!(parse_graph("").is_err());
    }
}
