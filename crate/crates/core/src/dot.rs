//! Graphviz export of a theory's support and attack structure.
//!
//! Every conditional `a -> b` draws a solid edge from `a` to `b`; a
//! conditional `a -> ~b` draws an attack edge from `a` to `b` with a barred
//! head. Conditionals that are themselves consequents are expanded too, so
//! attacks on a support link point at the link's node.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::semantics::{extensions_with, Extension, Limits};
use crate::sentence::{Sentence, Theory};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Justified,
    Defeated,
    Uninterpreted,
}

impl Status {
    pub fn of(ext: &Extension, s: &Sentence) -> Self {
        if ext.justified().contains(s) {
            Status::Justified
        } else if ext.defeated().contains(s) {
            Status::Defeated
        } else {
            Status::Uninterpreted
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub from: Sentence,
    pub to: Sentence,
    pub attack: bool,
}

/// Nodes and edges of the support/attack graph, in canonical order.
pub fn graph(delta: &Theory) -> (BTreeSet<Sentence>, BTreeSet<Edge>) {
    let mut nodes: BTreeSet<Sentence> = BTreeSet::new();
    let mut edges = BTreeSet::new();
    let mut pending: Vec<Sentence> = delta.iter().cloned().collect();
    while let Some(s) = pending.pop() {
        if !nodes.insert(s.clone()) {
            continue;
        }
        if let Some((a, c)) = s.as_cond() {
            let (to, attack) = match c.negated() {
                Some(body) => (body.clone(), true),
                None => (c.clone(), false),
            };
            edges.insert(Edge {
                from: a.clone(),
                to: to.clone(),
                attack,
            });
            pending.push(a.clone());
            pending.push(to);
        }
    }
    (nodes, edges)
}

fn html_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Renders the graph; with an extension, nodes are styled as justified
/// (bold), defeated (struck through) or uninterpreted (italic, grey).
pub fn to_dot(delta: &Theory, annotation: Option<&Extension>) -> String {
    let (nodes, edges) = graph(delta);
    let ids: Vec<&Sentence> = nodes.iter().collect();
    let id_of = |s: &Sentence| ids.iter().position(|n| *n == s).unwrap();
    let mut out = String::from("digraph deflog {\n");
    out.push_str("  node [shape=box, fontname=\"Helvetica\"];\n");
    for (i, s) in ids.iter().enumerate() {
        let text = html_escape(&s.to_string());
        let assumed = if delta.contains(s) {
            ", peripheries=2"
        } else {
            ""
        };
        let attrs = match annotation.map(|e| Status::of(e, s)) {
            None => format!("label=<{text}>{assumed}"),
            Some(Status::Justified) => {
                format!("label=<<B>{text}</B>>, color=\"darkgreen\", penwidth=2{assumed}")
            }
            Some(Status::Defeated) => format!("label=<<S>{text}</S>>, color=\"red\"{assumed}"),
            Some(Status::Uninterpreted) => {
                format!("label=<<I>{text}</I>>, color=\"gray\", fontcolor=\"gray\"{assumed}")
            }
        };
        let _ = writeln!(out, "  n{i} [{attrs}];");
    }
    for e in &edges {
        let style = if e.attack {
            " [arrowhead=tee, color=\"red\"]"
        } else {
            ""
        };
        let _ = writeln!(out, "  n{} -> n{}{};", id_of(&e.from), id_of(&e.to), style);
    }
    out.push_str("}\n");
    out
}

/// Annotated rendering; refused unless the theory has exactly one extension.
pub fn annotated_dot(delta: &Theory, limits: Limits) -> Result<String> {
    let exts = extensions_with(delta, limits)?;
    match exts.as_slice() {
        [only] => Ok(to_dot(delta, Some(only))),
        _ => Err(Error::NotUniquelyInterpreted(exts.len())),
    }
}
