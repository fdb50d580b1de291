//! Quiver presentations and their exports. Vertices are classes of
//! compositions; arrows come in opposite pairs, one pair per unit extension
//! between simple tops, with the connecting pairs marked.

use crate::combinatorics::{enumerate_classes, ProjectiveClass};
use crate::modules::{ext1_detail, ExtKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverArrow {
    pub source: usize,
    pub target: usize,
    pub multiplicity: u32,
    pub label: String,
    /// zero-middle pairs, drawn dashed
    pub connecting: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub vertices: Vec<ProjectiveClass>,
    pub arrows: Vec<QuiverArrow>,
    pub relations: Vec<String>,
}

impl QuiverPresentation {
    /// Unordered vertex pairs carrying arrows, with the connecting flag.
    pub fn edge_set(&self) -> Vec<(usize, usize, bool)> {
        let mut edges: Vec<(usize, usize, bool)> = self
            .arrows
            .iter()
            .map(|a| {
                let (x, y) = if a.source <= a.target {
                    (a.source, a.target)
                } else {
                    (a.target, a.source)
                };
                (x, y, a.connecting)
            })
            .collect();
        edges.sort();
        edges.dedup();
        edges
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{} [label=\"{}\"];\n", i, v));
        }
        for a in &self.arrows {
            let mut attrs: Vec<String> = Vec::new();
            if a.connecting {
                attrs.push("style=dashed".into());
            }
            if !a.label.is_empty() {
                attrs.push(format!("label=\"{}\"", a.label));
            }
            if a.multiplicity != 1 {
                attrs.push(format!("taillabel=\"{}\"", a.multiplicity));
            }
            if attrs.is_empty() {
                out.push_str(&format!("  v{} -> v{};\n", a.source, a.target));
            } else {
                out.push_str(&format!(
                    "  v{} -> v{} [{}];\n",
                    a.source,
                    a.target,
                    attrs.join(", ")
                ));
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("{\"vertices\":[");
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!("\"{}\"", v));
        }
        out.push_str("],\"arrows\":[");
        for (i, a) in self.arrows.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!(
                "{{\"source\":{},\"target\":{},\"multiplicity\":{},\"connecting\":{}}}",
                a.source, a.target, a.multiplicity, a.connecting
            ));
        }
        out.push_str("],\"relations\":[");
        for (i, r) in self.relations.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!("\"{}\"", r.replace('"', "\\\"")));
        }
        out.push_str("]}");
        out
    }
}

/// The Gabriel quiver of `S_0(n, r)`: one vertex per class, one arrow each
/// way per unit extension, zero-middle pairs marked as connecting.
pub fn gabriel_quiver(n: usize, r: u32) -> QuiverPresentation {
    let vertices = enumerate_classes(n, r);
    let k = vertices.len();
    let mut arrows = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let Some(kind) = ext1_detail(&vertices[i], &vertices[j], n, r) else {
                continue;
            };
            let connecting = kind == ExtKind::ZeroMiddle;
            arrows.push(QuiverArrow {
                source: i,
                target: j,
                multiplicity: 1,
                label: format!("a_{}_{}", i, j),
                connecting,
            });
            arrows.push(QuiverArrow {
                source: j,
                target: i,
                multiplicity: 1,
                label: format!("a_{}_{}", j, i),
                connecting,
            });
        }
    }
    QuiverPresentation {
        vertices,
        arrows,
        relations: Vec::new(),
    }
}
