use std::fmt::Write;

use super::document::Document;
use crate::config::Config;
use crate::frame::{enumerate_frame, Frame};
use crate::order::{hasse_edges, Poset};
use crate::Result;

fn quote(s: &str) -> String {
    let escaped = s.replace('\\', "\\\\").replace('"', "\\\"");
    format!("\"{escaped}\"")
}

fn digraph(name: &str, labels: &[String], edges: &[(usize, usize)]) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    for (i, label) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(label)).unwrap();
    }
    for (a, b) in edges {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of a poset, edges pointing upwards.
pub fn emit_dot_poset(poset: &Poset) -> String {
    digraph("poset", poset.labels(), &poset.hasse_edges())
}

/// Hasse diagram of a frame, nodes labeled by subset literals.
pub fn emit_dot_frame(frame: &Frame) -> String {
    let space = frame.space();
    let labels: Vec<String> = frame.elements().iter().map(|u| space.display(*u)).collect();
    digraph("frame", &labels, &frame.hasse_edges())
}

/// DOT for a document: its frame when `frame` is set, otherwise the declared
/// order, or the specialization preorder of the base with equivalent
/// elements merged into one node.
pub fn emit_dot(doc: &Document, frame: bool, config: Config) -> Result<String> {
    if !frame {
        if let Some(poset) = doc.poset(config)? {
            return Ok(emit_dot_poset(&poset));
        }
    }
    let space = doc.build(config)?;
    if frame {
        return Ok(emit_dot_frame(&enumerate_frame(&space)?));
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..space.len() {
        let same = |c: &Vec<usize>| {
            space.specialization_le(a, c[0]) && space.specialization_le(c[0], a)
        };
        match classes.iter_mut().find(|c| same(c)) {
            Some(c) => c.push(a),
            None => classes.push(vec![a]),
        }
    }
    let labels: Vec<String> = classes
        .iter()
        .map(|c| {
            let names: Vec<&str> = c.iter().map(|&a| space.labels()[a].as_str()).collect();
            names.join("=")
        })
        .collect();
    let edges = hasse_edges(classes.len(), |i, j| {
        space.specialization_le(classes[i][0], classes[j][0])
    });
    Ok(digraph("space", &labels, &edges))
}
