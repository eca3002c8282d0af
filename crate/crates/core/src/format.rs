//! Text, JSON and DOT formats.
//!
//! Orders file: three non-comment lines, each a whitespace-separated vertex
//! sequence from smallest to largest.
//!
//! ```text
//! # K4
//! b c d a
//! c a d b
//! a b d c
//! ```
//!
//! Graph file: one `outer a b c` line and one `u v` line per edge. A
//! `faces` line starts a block of `u v w` face lines; `rotation v: n1 n2 ..`
//! lines give the cyclic neighbour order of `v` and bypass recovery.
//!
//! Both parsers also accept the JSON produced by the writers here.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError};
use crate::graph::{SimpleGraph, TripleSet};
use crate::orders::{LinearOrder, StandardRepresentation};
use crate::rotation::RotationSystem;
use crate::triangulation::{validate_triangulation, Triangulation};
use crate::vertex::{Labels, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdersDoc {
    pub labels: Labels,
    pub orders: [LinearOrder; 3],
}

impl OrdersDoc {
    pub fn into_representation(self) -> Result<(Labels, StandardRepresentation), Error> {
        let rep = StandardRepresentation::validate(self.orders)?;
        Ok((self.labels, rep))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDoc {
    pub labels: Labels,
    pub graph: SimpleGraph,
    pub outer: Option<[VertexId; 3]>,
    pub faces: Option<Vec<[VertexId; 3]>>,
    pub rotation: Option<RotationSystem>,
}

impl GraphDoc {
    /// Builds the triangulation from the rotation if one was given, else
    /// from the faces, else by recovering the rotation from the graph.
    pub fn to_triangulation(&self) -> Result<Triangulation, Error> {
        let outer = self
            .outer
            .ok_or_else(|| ParseError::new(0, "missing `outer` line"))?;
        let g = self.graph.clone();
        Ok(match (&self.rotation, &self.faces) {
            (Some(rot), _) => validate_triangulation(g, rot.clone(), outer)?,
            (None, Some(faces)) => Triangulation::from_faces(g, faces, outer)?,
            (None, None) => Triangulation::from_graph(g, outer)?,
        })
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn json_error(e: serde_json::Error) -> ParseError {
    ParseError::new(e.line(), format!("invalid JSON: {e}"))
}

pub fn parse_orders(text: &str) -> Result<OrdersDoc, ParseError> {
    let rows: Vec<(usize, Vec<String>)> = if looks_like_json(text) {
        let doc: OrdersJson = serde_json::from_str(text).map_err(json_error)?;
        doc.orders.into_iter().map(|o| (1, o)).collect()
    } else {
        content_lines(text)
            .map(|(line, l)| (line, l.split_whitespace().map(str::to_string).collect()))
            .collect()
    };
    if rows.len() != 3 {
        let line = rows.get(3).map_or(0, |r| r.0);
        return Err(ParseError::new(
            line,
            format!("expected 3 order lines, found {}", rows.len()),
        ));
    }
    let mut labels = Labels::new();
    let mut orders = Vec::with_capacity(3);
    for (line, names) in rows {
        let seq: Vec<VertexId> = names.iter().map(|s| labels.intern(s)).collect();
        let order = LinearOrder::new(seq).map_err(|e| ParseError::new(line, e.to_string()))?;
        orders.push(order);
    }
    let orders: [LinearOrder; 3] = orders.try_into().expect("three rows");
    Ok(OrdersDoc { labels, orders })
}

pub fn write_orders(orders: &[LinearOrder; 3], labels: &Labels) -> String {
    let mut out = String::new();
    for o in orders {
        let names: Vec<String> = o.iter().map(|v| labels.name(v)).collect();
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out
}

enum Section {
    Edges,
    Faces,
}

pub fn parse_graph(text: &str) -> Result<GraphDoc, ParseError> {
    if looks_like_json(text) {
        let doc: GraphJson = serde_json::from_str(text).map_err(json_error)?;
        return doc.into_doc();
    }
    let mut b = GraphBuilder::default();
    let mut section = Section::Edges;
    for (line, l) in content_lines(text) {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        match tokens[0] {
            "outer" => {
                let [_, a, c, d] = tokens[..] else {
                    return Err(ParseError::new(line, "`outer` takes three vertices"));
                };
                b.set_outer(line, [a, c, d])?;
            }
            "faces" if tokens.len() == 1 => {
                section = Section::Faces;
                b.faces.get_or_insert_with(Vec::new);
            }
            "rotation" => {
                let rest = l["rotation".len()..].trim();
                let Some((v, nbrs)) = rest.split_once(':') else {
                    return Err(ParseError::new(line, "expected `rotation v: n1 n2 ..`"));
                };
                let v = v.trim();
                if v.is_empty() || v.contains(char::is_whitespace) {
                    return Err(ParseError::new(line, "expected one vertex before `:`"));
                }
                b.add_rotation(line, v, nbrs.split_whitespace().collect())?;
            }
            _ => match (&section, &tokens[..]) {
                (Section::Edges, &[u, v]) => b.add_edge(line, u, v)?,
                (Section::Faces, &[u, v, w]) => b.add_face(line, [u, v, w]),
                (Section::Edges, _) => {
                    return Err(ParseError::new(line, format!("expected `u v`, got `{l}`")))
                }
                (Section::Faces, _) => {
                    return Err(ParseError::new(
                        line,
                        format!("expected `u v w`, got `{l}`"),
                    ))
                }
            },
        }
    }
    Ok(b.finish())
}

#[derive(Default)]
struct GraphBuilder {
    labels: Labels,
    edges: Vec<(VertexId, VertexId)>,
    outer: Option<[VertexId; 3]>,
    faces: Option<Vec<[VertexId; 3]>>,
    rotation: Option<RotationSystem>,
}

impl GraphBuilder {
    fn set_outer(&mut self, line: usize, names: [&str; 3]) -> Result<(), ParseError> {
        if self.outer.is_some() {
            return Err(ParseError::new(line, "second `outer` line"));
        }
        let outer = names.map(|s| self.labels.intern(s));
        if outer[0] == outer[1] || outer[1] == outer[2] || outer[0] == outer[2] {
            return Err(ParseError::new(line, "outer vertices must be distinct"));
        }
        self.outer = Some(outer);
        Ok(())
    }

    fn add_edge(&mut self, line: usize, u: &str, v: &str) -> Result<(), ParseError> {
        if u == v {
            return Err(ParseError::new(line, format!("loop at `{u}`")));
        }
        let (u, v) = (self.labels.intern(u), self.labels.intern(v));
        self.edges.push((u, v));
        Ok(())
    }

    fn add_face(&mut self, _line: usize, names: [&str; 3]) {
        let face = names.map(|s| self.labels.intern(s));
        self.faces.get_or_insert_with(Vec::new).push(face);
    }

    fn add_rotation(&mut self, line: usize, v: &str, nbrs: Vec<&str>) -> Result<(), ParseError> {
        let v = self.labels.intern(v);
        let cycle: Vec<VertexId> = nbrs.iter().map(|s| self.labels.intern(s)).collect();
        let rot = self.rotation.get_or_insert_with(RotationSystem::new);
        if !rot.get(v).is_empty() {
            return Err(ParseError::new(
                line,
                "second `rotation` line for the same vertex",
            ));
        }
        rot.set(v, cycle);
        Ok(())
    }

    fn finish(self) -> GraphDoc {
        let mut graph = SimpleGraph::with_vertices((0..self.labels.len()).map(VertexId::from));
        for (u, v) in self.edges {
            graph
                .add_edge(u, v)
                .expect("endpoints interned, not a loop");
        }
        GraphDoc {
            labels: self.labels,
            graph,
            outer: self.outer,
            faces: self.faces,
            rotation: self.rotation,
        }
    }
}

/// Graph file with the edges of `g`, sorted by vertex id.
pub fn write_graph(g: &SimpleGraph, outer: Option<[VertexId; 3]>, labels: &Labels) -> String {
    let mut out = String::new();
    if let Some(o) = outer {
        let _ = writeln!(
            out,
            "outer {} {} {}",
            labels.name(o[0]),
            labels.name(o[1]),
            labels.name(o[2])
        );
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", labels.name(u), labels.name(v));
    }
    out
}

/// Graph file for a triangulation, including its rotation and faces.
pub fn write_triangulation(t: &Triangulation, labels: &Labels) -> String {
    let mut out = write_graph(t.graph(), Some(t.outer()), labels);
    for v in t.graph().vertices() {
        let nbrs: Vec<String> = t
            .rotation()
            .get(v)
            .iter()
            .map(|&u| labels.name(u))
            .collect();
        let _ = writeln!(out, "rotation {}: {}", labels.name(v), nbrs.join(" "));
    }
    out.push_str("faces\n");
    for f in crate::embedder::faces(t).faces {
        let _ = writeln!(
            out,
            "{} {} {}",
            labels.name(f[0]),
            labels.name(f[1]),
            labels.name(f[2])
        );
    }
    out
}

pub fn write_triples(triples: &TripleSet, labels: &Labels) -> String {
    let mut out = String::new();
    for t in triples.iter() {
        let _ = writeln!(
            out,
            "{} {} {}",
            labels.name(t[0]),
            labels.name(t[1]),
            labels.name(t[2])
        );
    }
    out
}

fn dot_id(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT graph; outer vertices are drawn bold.
pub fn to_dot(g: &SimpleGraph, outer: Option<[VertexId; 3]>, labels: &Labels) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let bold = outer.is_some_and(|o| o.contains(&v));
        let attrs = if bold { " [style=bold]" } else { "" };
        let _ = writeln!(out, "  {}{};", dot_id(&labels.name(v)), attrs);
    }
    for (u, v) in g.edges() {
        let _ = writeln!(
            out,
            "  {} -- {};",
            dot_id(&labels.name(u)),
            dot_id(&labels.name(v))
        );
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrdersJson {
    pub orders: [Vec<String>; 3],
}

impl OrdersJson {
    pub fn new(orders: &[LinearOrder; 3], labels: &Labels) -> Self {
        Self {
            orders: orders
                .each_ref()
                .map(|o| o.iter().map(|v| labels.name(v)).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationEntry {
    pub vertex: String,
    pub neighbors: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    /// Every vertex, in id order, so isolated vertices survive.
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer: Option<[String; 3]>,
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<[String; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<RotationEntry>>,
}

impl GraphJson {
    pub fn from_graph(g: &SimpleGraph, outer: Option<[VertexId; 3]>, labels: &Labels) -> Self {
        Self {
            vertices: g.vertices().map(|v| labels.name(v)).collect(),
            outer: outer.map(|o| o.map(|v| labels.name(v))),
            edges: g
                .edges()
                .into_iter()
                .map(|(u, v)| [labels.name(u), labels.name(v)])
                .collect(),
            faces: None,
            rotation: None,
        }
    }

    pub fn from_triangulation(t: &Triangulation, labels: &Labels) -> Self {
        let mut doc = Self::from_graph(t.graph(), Some(t.outer()), labels);
        doc.rotation = Some(
            t.graph()
                .vertices()
                .map(|v| RotationEntry {
                    vertex: labels.name(v),
                    neighbors: t
                        .rotation()
                        .get(v)
                        .iter()
                        .map(|&u| labels.name(u))
                        .collect(),
                })
                .collect(),
        );
        doc.faces = Some(
            crate::embedder::faces(t)
                .faces
                .iter()
                .map(|f| f.map(|v| labels.name(v)))
                .collect(),
        );
        doc
    }

    fn into_doc(self) -> Result<GraphDoc, ParseError> {
        let mut b = GraphBuilder::default();
        for v in &self.vertices {
            b.labels.intern(v);
        }
        if let Some([x, y, z]) = &self.outer {
            b.set_outer(0, [x, y, z])?;
        }
        for [u, v] in &self.edges {
            b.add_edge(0, u, v)?;
        }
        if let Some(faces) = &self.faces {
            b.faces = Some(Vec::new());
            for [x, y, z] in faces {
                b.add_face(0, [x, y, z]);
            }
        }
        for e in self.rotation.iter().flatten() {
            b.add_rotation(
                0,
                &e.vertex,
                e.neighbors.iter().map(String::as_str).collect(),
            )?;
        }
        Ok(b.finish())
    }
}
