//! The line-oriented graph format.
//!
//! ```text
//! # comment
//! graph 3
//! e 0 1
//! e 1 2
//! ```
//!
//! Edge ids are assigned in input order. The writer emits edges sorted by
//! (min endpoint, max endpoint, id), so writing a [`Multigraph::canonical`]
//! graph and reading it back reproduces the same ids.

use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::Multigraph;

pub fn parse(text: &str) -> Result<Multigraph> {
    let mut graphs = parse_many(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        0 => Err(Error::Parse {
            line: 0,
            msg: "missing `graph <n>` header".into(),
        }),
        k => Err(Error::Parse {
            line: 0,
            msg: format!("expected one graph, found {k}"),
        }),
    }
}

/// Parses a stream of concatenated graphs, each starting with `graph <n>`.
pub fn parse_many(text: &str) -> Result<Vec<Multigraph>> {
    let mut out = Vec::new();
    let mut current: Option<(usize, Vec<(usize, usize)>)> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = lineno + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tok = line.split_whitespace();
        let err = |msg: String| Error::Parse { line: lineno, msg };
        match tok.next() {
            Some("graph") => {
                let n = tok
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| err("expected `graph <n>`".into()))?;
                if tok.next().is_some() {
                    return Err(err("trailing tokens after vertex count".into()));
                }
                if let Some((n, pairs)) = current.take() {
                    out.push(Multigraph::new(n, &pairs)?);
                }
                current = Some((n, Vec::new()));
            }
            Some("e") => {
                let (n, pairs) = current
                    .as_mut()
                    .ok_or_else(|| err("edge before `graph` header".into()))?;
                let mut end = || {
                    tok.next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or_else(|| err("expected `e <u> <v>`".into()))
                };
                let u = end()?;
                let v = end()?;
                if tok.next().is_some() {
                    return Err(err("trailing tokens after edge".into()));
                }
                if u >= *n || v >= *n {
                    return Err(err(format!("endpoint out of range 0..{n}")));
                }
                if u == v {
                    return Err(err(format!("loop at vertex {u}")));
                }
                pairs.push((u, v));
            }
            Some(other) => return Err(err(format!("unknown record `{other}`"))),
            None => unreachable!(),
        }
    }
    if let Some((n, pairs)) = current {
        out.push(Multigraph::new(n, &pairs)?);
    }
    Ok(out)
}

pub fn write(g: &Multigraph) -> String {
    write_with_header(g, &[])
}

/// Writes `g` preceded by `# ` comment lines.
pub fn write_with_header(g: &Multigraph, header: &[String]) -> String {
    let mut s = String::new();
    for h in header {
        let _ = writeln!(s, "# {h}");
    }
    let _ = writeln!(s, "graph {}", g.n());
    let mut edges = g.edges().to_vec();
    edges.sort_by_key(|e| (e.u.min(e.v), e.u.max(e.v), e.id));
    for e in edges {
        let _ = writeln!(s, "e {} {}", e.u.min(e.v), e.u.max(e.v));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let g = parse("# hi\n\ngraph 3\ne 0 1\n# mid\ne 2 1\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edge(1).unwrap().u, 2);
    }

    #[test]
    fn writer_sorts_edges() {
        let g = Multigraph::new(3, &[(2, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(write(&g), "graph 3\ne 0 1\ne 0 1\ne 1 2\n");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse("e 0 1").is_err());
        assert!(parse("graph 2\ne 0 0").is_err());
        assert!(parse("graph 2\ne 0 2").is_err());
        assert!(parse("graph x").is_err());
        assert!(parse("graph 2\nv 1").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn stream_of_graphs() {
        let gs = parse_many("graph 2\ne 0 1\ngraph 3\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[1].edge_count(), 0);
    }
}
