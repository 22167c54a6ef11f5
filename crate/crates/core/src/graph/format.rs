//! The line-oriented graph text format.
//!
//! ```text
//! ngon 3
//! vertex 0 0
//! vertex 1 1
//! edge 0 1
//! subset A 0 1
//! ```
//!
//! `#` starts a comment. The `ngon` header must come first; vertices must be
//! declared before any edge or subset mentions them. Lines starting with
//! `mu-` carry an embedded μ-function and are handed through untouched.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use super::{BipartiteGraph, GraphBuilder, GraphError, Part, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `ngon <n>` header")]
    MissingHeader,
    #[error("header declared twice")]
    DuplicateHeader,
    #[error("unknown keyword `{0}`")]
    UnknownKeyword(String),
    #[error("wrong number of fields for `{0}`")]
    Arity(&'static str),
    #[error("not an integer: `{0}`")]
    BadInteger(String),
    #[error("part must be 0 or 1, got `{0}`")]
    BadPart(String),
    #[error("duplicate subset `{0}`")]
    DuplicateSubset(String),
    #[error("vertex {0} listed twice in subset")]
    RepeatedMember(VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// A graph together with its named subsets and any pass-through lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: BipartiteGraph,
    pub subsets: BTreeMap<String, VertexSet>,
    /// Raw `mu-*` lines, in file order.
    pub mu_lines: Vec<String>,
}

impl GraphDocument {
    pub fn new(graph: BipartiteGraph) -> Self {
        GraphDocument {
            graph,
            subsets: BTreeMap::new(),
            mu_lines: Vec::new(),
        }
    }

    pub fn with_subset(mut self, name: &str, set: VertexSet) -> Self {
        self.subsets.insert(name.to_string(), set);
        self
    }

    pub fn subset(&self, name: &str) -> Option<&VertexSet> {
        self.subsets.get(name)
    }
}

fn parse_u32(tok: &str) -> Result<u32, ParseErrorKind> {
    tok.parse()
        .map_err(|_| ParseErrorKind::BadInteger(tok.to_string()))
}

pub fn parse_document(text: &str) -> Result<GraphDocument, ParseError> {
    let mut builder: Option<GraphBuilder> = None;
    let mut subsets: Vec<(String, Vec<VertexId>)> = Vec::new();
    let mut names = HashSet::new();
    let mut mu_lines = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |kind| ParseError {
            line: lineno + 1,
            kind,
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        let keyword = toks[0];
        if keyword == "ngon" {
            if builder.is_some() {
                return Err(err(ParseErrorKind::DuplicateHeader));
            }
            if toks.len() != 2 {
                return Err(err(ParseErrorKind::Arity("ngon")));
            }
            let n = parse_u32(toks[1]).map_err(err)? as usize;
            builder = Some(GraphBuilder::new(n).map_err(|e| err(e.into()))?);
            continue;
        }
        let Some(b) = builder.as_mut() else {
            return Err(err(ParseErrorKind::MissingHeader));
        };
        match keyword {
            "vertex" => {
                if toks.len() != 3 {
                    return Err(err(ParseErrorKind::Arity("vertex")));
                }
                let id = VertexId(parse_u32(toks[1]).map_err(err)?);
                let part = parse_u32(toks[2])
                    .ok()
                    .and_then(|p| u8::try_from(p).ok())
                    .and_then(Part::from_index)
                    .ok_or_else(|| err(ParseErrorKind::BadPart(toks[2].to_string())))?;
                b.vertex(id, part).map_err(|e| err(e.into()))?;
            }
            "edge" => {
                if toks.len() != 3 {
                    return Err(err(ParseErrorKind::Arity("edge")));
                }
                let x = VertexId(parse_u32(toks[1]).map_err(err)?);
                let y = VertexId(parse_u32(toks[2]).map_err(err)?);
                b.edge(x, y).map_err(|e| err(e.into()))?;
            }
            "subset" => {
                if toks.len() < 2 {
                    return Err(err(ParseErrorKind::Arity("subset")));
                }
                let name = toks[1].to_string();
                if !names.insert(name.clone()) {
                    return Err(err(ParseErrorKind::DuplicateSubset(name)));
                }
                let mut seen = HashSet::new();
                let mut ids = Vec::new();
                for tok in &toks[2..] {
                    let id = VertexId(parse_u32(tok).map_err(err)?);
                    if !b.has_vertex(id) {
                        return Err(err(GraphError::UnknownVertex(id).into()));
                    }
                    if !seen.insert(id) {
                        return Err(err(ParseErrorKind::RepeatedMember(id)));
                    }
                    ids.push(id);
                }
                subsets.push((name, ids));
            }
            k if k.starts_with("mu-") => mu_lines.push(line.to_string()),
            other => return Err(err(ParseErrorKind::UnknownKeyword(other.to_string()))),
        }
    }

    let builder = builder.ok_or(ParseError {
        line: 0,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let graph = builder.build();
    let subsets = subsets
        .into_iter()
        .map(|(name, ids)| {
            let set = graph.set_from_ids(&ids).expect("members validated");
            (name, set)
        })
        .collect();
    Ok(GraphDocument {
        graph,
        subsets,
        mu_lines,
    })
}

/// Canonical serialization: vertices by id, edges sorted, subsets by name.
pub fn write_document(doc: &GraphDocument) -> String {
    let g = &doc.graph;
    let mut out = String::new();
    writeln!(out, "ngon {}", g.n()).unwrap();
    for v in 0..g.vertex_count() {
        writeln!(out, "vertex {} {}", g.id(v), g.part(v)).unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "edge {} {}", g.id(u), g.id(v)).unwrap();
    }
    for (name, set) in &doc.subsets {
        write!(out, "subset {name}").unwrap();
        for id in g.ids_of(set) {
            write!(out, " {id}").unwrap();
        }
        out.push('\n');
    }
    for line in &doc.mu_lines {
        writeln!(out, "{line}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "# a path\nngon 3\nvertex 0 0\nvertex 1 1 # mid\nvertex 2 0\n\
                          edge 0 1\nedge 1 2\nsubset ends 0 2\n";

    #[test]
    fn parses_and_writes_canonically() {
        let doc = parse_document(SAMPLE).unwrap();
        assert_eq!(doc.graph.vertex_count(), 3);
        assert_eq!(doc.graph.edge_count(), 2);
        assert_eq!(
            doc.graph.ids_of(doc.subset("ends").unwrap()),
            vec![VertexId(0), VertexId(2)]
        );
        let text = write_document(&doc);
        assert_eq!(parse_document(&text).unwrap(), doc);
    }

    fn kind(text: &str) -> ParseErrorKind {
        parse_document(text).unwrap_err().kind
    }

    #[test]
    fn strictness() {
        assert_eq!(kind("vertex 0 0\n"), ParseErrorKind::MissingHeader);
        assert_eq!(kind(""), ParseErrorKind::MissingHeader);
        assert_eq!(kind("ngon 3\nngon 3\n"), ParseErrorKind::DuplicateHeader);
        assert_eq!(
            kind("ngon 3\nvertex 0 2\n"),
            ParseErrorKind::BadPart("2".into())
        );
        assert_eq!(
            kind("ngon 3\nvertex x 0\n"),
            ParseErrorKind::BadInteger("x".into())
        );
        assert_eq!(kind("ngon 3\nvertex 0\n"), ParseErrorKind::Arity("vertex"));
        assert_eq!(
            kind("ngon 3\nfoo\n"),
            ParseErrorKind::UnknownKeyword("foo".into())
        );
        assert_eq!(
            kind("ngon 3\nvertex 0 0\nvertex 0 1\n"),
            ParseErrorKind::Graph(GraphError::DuplicateVertex(VertexId(0)))
        );
        assert_eq!(
            kind("ngon 3\nvertex 0 0\nvertex 1 1\nedge 0 1\nedge 1 0\n"),
            ParseErrorKind::Graph(GraphError::DuplicateEdge(VertexId(1), VertexId(0)))
        );
        assert_eq!(
            kind("ngon 3\nvertex 0 0\nsubset a 0\nsubset a 0\n"),
            ParseErrorKind::DuplicateSubset("a".into())
        );
        assert_eq!(
            kind("ngon 3\nvertex 0 0\nsubset a 0 0\n"),
            ParseErrorKind::RepeatedMember(VertexId(0))
        );
        assert_eq!(
            kind("ngon 2\n"),
            ParseErrorKind::Graph(GraphError::InvalidGonality(2))
        );
        let e = parse_document("ngon 3\nvertex 0 0\nedge 0 5\n").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn mu_lines_pass_through() {
        let doc = parse_document("ngon 3\nmu-fallback 2\n").unwrap();
        assert_eq!(doc.mu_lines, vec!["mu-fallback 2".to_string()]);
    }
}
