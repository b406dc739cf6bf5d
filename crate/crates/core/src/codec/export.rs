//! DOT and SVG export with class annotations.

use std::collections::BTreeMap;
use std::fmt::Write;

use thiserror::Error;

use super::layout::Layout;
use crate::faces::trace_faces;
use crate::graph::EmbeddedCubicGraph;

pub const CLASS_CENTER: &str = "center";
pub const CLASS_STAR_EDGE: &str = "star-edge";
pub const CLASS_CHORD: &str = "chord";
pub const CLASS_PENTAGON: &str = "pentagon";
pub const CLASS_HEXAGON: &str = "hexagon";

/// Named style classes for vertices and edges. Later marks overwrite earlier
/// ones on the same element.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Annotations {
    vertex_classes: BTreeMap<usize, String>,
    edge_classes: BTreeMap<(usize, usize), String>,
}

impl Annotations {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn mark_vertex(&mut self, v: usize, class: &str) -> &mut Self {
        self.vertex_classes.insert(v, class.to_string());
        self
    }

    pub fn mark_edge(&mut self, u: usize, v: usize, class: &str) -> &mut Self {
        self.edge_classes.insert((u.min(v), u.max(v)), class.to_string());
        self
    }

    pub fn vertex_class(&self, v: usize) -> Option<&str> {
        self.vertex_classes.get(&v).map(String::as_str)
    }

    pub fn edge_class(&self, u: usize, v: usize) -> Option<&str> {
        self.edge_classes.get(&(u.min(v), u.max(v))).map(String::as_str)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ExportError {
    #[error("layout does not cover the graph ({positions} positions for {vertices} vertices)")]
    MissingLayout { positions: usize, vertices: usize },
}

/// Undirected DOT; vertices are written 1-based.
pub fn export_dot(g: &EmbeddedCubicGraph, annotations: &Annotations) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        match annotations.vertex_class(v) {
            Some(class) => writeln!(out, "  {} [class=\"{class}\"];", v + 1),
            None => writeln!(out, "  {};", v + 1),
        }
        .unwrap();
    }
    for (u, v) in g.edges() {
        match annotations.edge_class(u, v) {
            Some(class) => writeln!(out, "  {} -- {} [class=\"{class}\"];", u + 1, v + 1),
            None => writeln!(out, "  {} -- {};", u + 1, v + 1),
        }
        .unwrap();
    }
    out.push_str("}\n");
    out
}

const SVG_SIZE: f64 = 800.0;
const SVG_STYLE: &str = "\
line { stroke: #444; stroke-width: 1.5; }
line.star-edge { stroke: #000; stroke-width: 4; }
line.chord { stroke: #c33; stroke-dasharray: 6 4; }
circle { fill: #fff; stroke: #000; stroke-width: 1; }
circle.center { fill: #000; }
polygon.pentagon { fill: #f6d7a7; stroke: none; }
polygon.hexagon { fill: #e8eef6; stroke: none; }
";

/// SVG drawing: bounded faces as filled polygons, then one line per edge and
/// one circle per vertex.
pub fn export_svg(
    g: &EmbeddedCubicGraph,
    layout: &Layout,
    annotations: &Annotations,
) -> Result<String, ExportError> {
    if layout.positions.len() != g.vertex_count() {
        return Err(ExportError::MissingLayout {
            positions: layout.positions.len(),
            vertices: g.vertex_count(),
        });
    }
    let half = SVG_SIZE / 2.0;
    let scale = half * 0.95;
    let at = |v: usize| {
        let (x, y) = layout.positions[v];
        (half + scale * x, half - scale * y)
    };
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SVG_SIZE}\" height=\"{SVG_SIZE}\" viewBox=\"0 0 {SVG_SIZE} {SVG_SIZE}\">"
    )
    .unwrap();
    writeln!(out, "<style>\n{SVG_STYLE}</style>").unwrap();

    let outer_key = layout.outer_face.vertex_key();
    for face in trace_faces(g).iter() {
        if face.vertex_key() == outer_key {
            continue;
        }
        let class = match face.size() {
            5 => format!(" class=\"{CLASS_PENTAGON}\""),
            6 => format!(" class=\"{CLASS_HEXAGON}\""),
            _ => String::new(),
        };
        let points: Vec<String> = face
            .boundary
            .iter()
            .map(|&v| {
                let (x, y) = at(v);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        writeln!(out, "<polygon{class} points=\"{}\"/>", points.join(" ")).unwrap();
    }
    for (u, v) in g.edges() {
        let (x1, y1) = at(u);
        let (x2, y2) = at(v);
        let class = annotations
            .edge_class(u, v)
            .map(|c| format!(" class=\"{c}\""))
            .unwrap_or_default();
        writeln!(
            out,
            "<line{class} x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\"/>"
        )
        .unwrap();
    }
    for v in 0..g.vertex_count() {
        let (x, y) = at(v);
        let class = annotations
            .vertex_class(v)
            .map(|c| format!(" class=\"{c}\""))
            .unwrap_or_default();
        writeln!(out, "<circle{class} cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4\"><title>{}</title></circle>", v + 1).unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::layout::{default_outer_face, layout_tutte};
    use crate::fixtures::fixture_dodecahedron;

    #[test]
    fn dot_has_one_element_per_edge() {
        let g = fixture_dodecahedron();
        let dot = export_dot(&g, &Annotations::new());
        assert_eq!(dot.matches(" -- ").count(), 30);
        assert!(dot.starts_with("graph G {"));
        assert_eq!(dot, export_dot(&g, &Annotations::new()));
    }

    #[test]
    fn annotations_show_up_as_classes() {
        let g = fixture_dodecahedron();
        let mut ann = Annotations::new();
        ann.mark_vertex(0, CLASS_CENTER).mark_edge(1, 0, CLASS_STAR_EDGE);
        let dot = export_dot(&g, &ann);
        assert!(dot.contains("  1 [class=\"center\"];"));
        assert!(dot.contains("  1 -- 2 [class=\"star-edge\"];"));

        let layout = layout_tutte(&g, &default_outer_face(&g)).unwrap();
        let svg = export_svg(&g, &layout, &ann).unwrap();
        assert_eq!(svg.matches("<line").count(), 30);
        assert_eq!(svg.matches("<circle").count(), 20);
        assert_eq!(svg.matches("<polygon class=\"pentagon\"").count(), 11);
        assert_eq!(svg.matches("<circle class=\"center\"").count(), 1);
        assert_eq!(svg, export_svg(&g, &layout, &ann).unwrap());
    }

    #[test]
    fn short_layout_is_rejected() {
        let g = fixture_dodecahedron();
        let mut layout = layout_tutte(&g, &default_outer_face(&g)).unwrap();
        layout.positions.pop();
        assert!(matches!(
            export_svg(&g, &layout, &Annotations::new()),
            Err(ExportError::MissingLayout { .. })
        ));
    }
}
