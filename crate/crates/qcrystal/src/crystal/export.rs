//! DOT and JSON renderings of crystal graphs.

use std::fmt::Write;

use serde::Serialize;

use super::graph::CrystalGraph;
use super::Label;
use crate::alphabet::Weight;

fn edge_style(l: Label) -> &'static str {
    match l {
        Label::Bar => "style=dashed, color=darkred",
        Label::Zero => "style=dotted, color=blue",
        Label::Index(_) => "style=solid",
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot<E>(g: &CrystalGraph<E>, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for (v, label) in g.names.iter().enumerate() {
        writeln!(out, "  v{v} [label={}];", quote(label)).unwrap();
    }
    for &(s, d, l) in &g.edges {
        writeln!(
            out,
            "  v{s} -> v{d} [label={}, {}];",
            quote(&l.to_string()),
            edge_style(l)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct JsonVertex<'a> {
    id: usize,
    payload: &'a str,
    wt: &'a Weight,
}

#[derive(Serialize)]
struct JsonEdge {
    src: usize,
    dst: usize,
    label: String,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    n: usize,
    category: String,
    vertices: Vec<JsonVertex<'a>>,
    edges: Vec<JsonEdge>,
}

pub fn to_json<E>(g: &CrystalGraph<E>) -> String {
    let doc = JsonGraph {
        n: g.n,
        category: g.category.to_string(),
        vertices: g
            .names
            .iter()
            .zip(&g.weights)
            .enumerate()
            .map(|(id, (payload, wt))| JsonVertex { id, payload, wt })
            .collect(),
        edges: g
            .edges
            .iter()
            .map(|&(src, dst, l)| JsonEdge {
                src,
                dst,
                label: l.to_string(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph serializes")
}

/// One line per vertex followed by one line per edge.
pub fn to_text<E>(g: &CrystalGraph<E>) -> String {
    let mut out = String::new();
    for (v, (name, wt)) in g.names.iter().zip(&g.weights).enumerate() {
        let w: Vec<String> = wt.iter().map(|x| x.to_string()).collect();
        writeln!(out, "v{v} {name} wt=({})", w.join(",")).unwrap();
    }
    for &(s, d, l) in &g.edges {
        writeln!(out, "{} -{l}-> {}", g.names[s], g.names[d]).unwrap();
    }
    out
}
