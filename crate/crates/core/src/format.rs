//! Plain-text formats.
//!
//! Graph files start with `graph <n>` or `digraph <n>` followed by one
//! `<u> <v>` line per edge (or arc `u -> v`), vertices 0-indexed. Lines
//! starting with `#` are comments and blank lines are ignored, before and
//! after the header. Colourings are `<v>: <colour>` per line; list
//! assignments `<v>: <c1> <c2> ...`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::dicolour::Dicolouring;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::lists::ListAssignment;

/// A parsed graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFile {
    Graph(Graph),
    Digraph(Digraph),
}

impl GraphFile {
    pub fn into_graph(self) -> Result<Graph> {
        match self {
            GraphFile::Graph(g) => Ok(g),
            GraphFile::Digraph(_) => Err(Error::InvalidArgument("expected an undirected `graph` file".into())),
        }
    }

    pub fn into_digraph(self) -> Result<Digraph> {
        match self {
            GraphFile::Digraph(d) => Ok(d),
            GraphFile::Graph(_) => Err(Error::InvalidArgument("expected a `digraph` file".into())),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            GraphFile::Graph(g) => write_graph(g),
            GraphFile::Digraph(d) => write_digraph(d),
        }
    }
}

/// Content lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("expected a vertex index, found `{token}`")))
}

pub fn parse_graph_text(text: &str) -> Result<GraphFile> {
    parse_graph_lines(&mut content_lines(text).peekable(), None)
}

/// Parses a header and its edge lines from `lines`, stopping at `stop` (a
/// predicate for a line that ends the block) or at the end of input.
pub(crate) fn parse_graph_lines<'a, I>(lines: &mut std::iter::Peekable<I>, stop: Option<&dyn Fn(&str) -> bool>) -> Result<GraphFile>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `graph <n>` or `digraph <n>` header"))?;
    let mut parts = header.split_whitespace();
    let kind = parts.next().unwrap_or_default();
    let n = match (parts.next(), parts.next()) {
        (Some(tok), None) => tok
            .parse::<usize>()
            .map_err(|_| Error::parse(hline, format!("malformed vertex count `{tok}`")))?,
        _ => return Err(Error::parse(hline, format!("malformed header `{header}`"))),
    };
    let directed = match kind {
        "graph" => false,
        "digraph" => true,
        other => return Err(Error::parse(hline, format!("unknown header `{other}`, expected graph or digraph"))),
    };
    let mut g = Graph::new(n);
    let mut d = Digraph::new(n);
    while let Some(&(line, text)) = lines.peek() {
        if stop.is_some_and(|s| s(text)) {
            break;
        }
        lines.next();
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(Error::parse(line, format!("expected `<u> <v>`, found `{text}`")));
        };
        let (u, v) = (parse_index(a, line)?, parse_index(b, line)?);
        let added = if directed { d.add_arc(u, v) } else { g.add_edge(u, v) };
        added.map_err(|e| Error::parse(line, e.to_string()))?;
    }
    Ok(if directed { GraphFile::Digraph(d) } else { GraphFile::Graph(g) })
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("graph {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut s = format!("digraph {}\n", d.n());
    for (u, v) in d.arcs() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Line number and items of each vertex row.
type VertexRows = BTreeMap<usize, (usize, Vec<u32>)>;

/// Parses `<v>: <items...>` lines, each vertex at most once, in vertex order.
fn parse_vertex_rows<'a, I>(lines: I) -> Result<(VertexRows, usize)>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let mut rows = BTreeMap::new();
    let mut last_line = 0;
    for (line, text) in lines {
        last_line = line;
        let (head, tail) = text
            .split_once(':')
            .ok_or_else(|| Error::parse(line, format!("expected `<v>: ...`, found `{text}`")))?;
        let v = parse_index(head.trim(), line)?;
        let values = tail
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .ok()
                    .filter(|&c| c > 0)
                    .ok_or_else(|| Error::parse(line, format!("expected a positive colour, found `{t}`")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if rows.insert(v, (line, values)).is_some() {
            return Err(Error::parse(line, format!("vertex {v} listed twice")));
        }
    }
    Ok((rows, last_line))
}

/// As [`parse_vertex_rows`], but every vertex in `0..=max` must appear.
fn parse_vertex_table<'a, I>(lines: I) -> Result<Vec<(usize, Vec<u32>)>>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let (rows, last_line) = parse_vertex_rows(lines)?;
    rows.into_iter()
        .enumerate()
        .map(|(i, (v, row))| {
            if i == v {
                Ok(row)
            } else {
                Err(Error::parse(last_line, format!("vertex {i} is missing")))
            }
        })
        .collect()
}

fn list_from_row(line: usize, values: &[u32]) -> Result<BTreeSet<u32>> {
    let set: BTreeSet<u32> = values.iter().copied().collect();
    if set.is_empty() {
        return Err(Error::parse(line, "empty list"));
    }
    if set.len() != values.len() {
        return Err(Error::parse(line, "repeated colour in list"));
    }
    Ok(set)
}

/// Lists for a subset of the vertices, e.g. one side of a bipartite graph.
pub fn parse_side_lists_text(text: &str) -> Result<BTreeMap<usize, BTreeSet<u32>>> {
    let (rows, _) = parse_vertex_rows(content_lines(text))?;
    rows.into_iter()
        .map(|(v, (line, values))| Ok((v, list_from_row(line, &values)?)))
        .collect()
}

pub fn write_side_lists(lists: &BTreeMap<usize, BTreeSet<u32>>) -> String {
    let mut s = String::new();
    for (v, list) in lists {
        let items: Vec<String> = list.iter().map(u32::to_string).collect();
        let _ = writeln!(s, "{v}: {}", items.join(" "));
    }
    s
}

pub fn parse_colouring_text(text: &str) -> Result<Dicolouring> {
    let rows = parse_vertex_table(content_lines(text))?;
    let colours = rows
        .into_iter()
        .map(|(line, values)| match values[..] {
            [c] => Ok(c),
            _ => Err(Error::parse(line, "expected exactly one colour")),
        })
        .collect::<Result<Vec<u32>>>()?;
    Dicolouring::new(colours)
}

pub fn write_colouring(colours: &[u32]) -> String {
    colours.iter().enumerate().fold(String::new(), |mut s, (v, c)| {
        let _ = writeln!(s, "{v}: {c}");
        s
    })
}

pub fn parse_lists_text(text: &str) -> Result<ListAssignment> {
    parse_lists_lines(content_lines(text))
}

pub(crate) fn parse_lists_lines<'a, I>(lines: I) -> Result<ListAssignment>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let rows = parse_vertex_table(lines)?;
    let lists = rows
        .iter()
        .map(|(line, values)| list_from_row(*line, values))
        .collect::<Result<Vec<_>>>()?;
    ListAssignment::new(lists)
}

pub fn write_lists(lists: &ListAssignment) -> String {
    let mut s = String::new();
    for (v, list) in lists.lists().iter().enumerate() {
        let items: Vec<String> = list.iter().map(u32::to_string).collect();
        let _ = writeln!(s, "{v}: {}", items.join(" "));
    }
    s
}
