//! Text formats.
//!
//! Graph file: first line `n m`, then `m` lines `u v [w]` (0-based, weight
//! defaults to 1). Matrix file: first line `n`, then `n` rows of `n` reals.
//! Lines starting with `#` and blank lines are ignored.

use super::{Graph, SymMatrix};
use crate::error::{Error, Result};
use std::fmt::Write as _;
use std::path::Path;

#[derive(Clone, Debug)]
pub enum Input {
    Graph(Graph),
    Matrix(SymMatrix),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            None
        } else {
            Some((i + 1, t.split_whitespace().collect()))
        }
    })
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "empty graph file"))?;
    if header.len() != 2 {
        return Err(Error::parse(line, "graph header must be `n m`"));
    }
    let n: usize = parse_num(header[0], line, "vertex count")?;
    let m: usize = parse_num(header[1], line, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for (line, toks) in lines.by_ref().take(m) {
        if toks.len() != 2 && toks.len() != 3 {
            return Err(Error::parse(line, "edge line must be `u v [w]`"));
        }
        let u = parse_num(toks[0], line, "vertex")?;
        let v = parse_num(toks[1], line, "vertex")?;
        let w = match toks.get(2) {
            Some(t) => parse_num(t, line, "weight")?,
            None => 1.0,
        };
        edges.push((u, v, w));
    }
    if edges.len() != m {
        return Err(Error::parse(line, format!("expected {m} edges, found {}", edges.len())));
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, "trailing content after the last edge"));
    }
    Graph::new(n, edges).map_err(|e| Error::parse(line, e.to_string()))
}

pub fn parse_matrix(text: &str) -> Result<SymMatrix> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "empty matrix file"))?;
    if header.len() != 1 {
        return Err(Error::parse(line, "matrix header must be `n`"));
    }
    let n: usize = parse_num(header[0], line, "order")?;
    let mut data = Vec::with_capacity(n * n);
    let mut rows = 0;
    for (line, toks) in lines.by_ref().take(n) {
        if toks.len() != n {
            return Err(Error::parse(line, format!("expected {n} entries, found {}", toks.len())));
        }
        for t in toks {
            data.push(parse_num::<f64>(t, line, "entry")?);
        }
        rows += 1;
    }
    if rows != n {
        return Err(Error::parse(line, format!("expected {n} rows, found {rows}")));
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, "trailing content after the last row"));
    }
    SymMatrix::from_row_major(n, data).map_err(|e| Error::parse(line, e.to_string()))
}

/// Picks the format from the header: two fields for a graph, one for a matrix.
pub fn parse_input(text: &str) -> Result<Input> {
    let (line, header) = content_lines(text)
        .next()
        .ok_or_else(|| Error::parse(1, "empty input"))?;
    match header.len() {
        1 => parse_matrix(text).map(Input::Matrix),
        2 => parse_graph(text).map(Input::Graph),
        _ => Err(Error::parse(line, "header must be `n` (matrix) or `n m` (graph)")),
    }
}

pub fn read_input(path: &Path) -> Result<Input> {
    parse_input(&std::fs::read_to_string(path)?)
}

pub fn format_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v, w) in g.edges() {
        if w == 1.0 {
            writeln!(s, "{u} {v}").unwrap();
        } else {
            writeln!(s, "{u} {v} {w}").unwrap();
        }
    }
    s
}

/// Shortest round-tripping decimal for every entry.
pub fn format_matrix(m: &SymMatrix) -> String {
    format!("{}\n{}", m.n(), m)
}
