use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::Dfa;

pub const EXPORT_VERSION: u32 = 1;

/// Structured form of an automaton; field order is part of the format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DfaExport {
    pub version: u32,
    pub source: String,
    pub construction: String,
    pub alphabet: Vec<char>,
    pub states: Vec<ExportState>,
    pub start: usize,
    pub transitions: Vec<ExportTransition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportState {
    pub index: usize,
    pub label: String,
    #[serde(rename = "final")]
    pub is_final: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportTransition {
    pub from: usize,
    pub symbol: char,
    pub to: usize,
}

impl From<&Dfa> for DfaExport {
    fn from(d: &Dfa) -> Self {
        let states = (0..d.len())
            .map(|q| ExportState { index: q, label: d.label(q).to_string(), is_final: d.is_final(q) })
            .collect();
        let transitions = (0..d.len())
            .flat_map(|q| {
                d.alphabet().iter().enumerate().map(move |(i, &symbol)| ExportTransition {
                    from: q,
                    symbol,
                    to: d.next_index(q, i),
                })
            })
            .collect();
        DfaExport {
            version: EXPORT_VERSION,
            source: d.source().to_string(),
            construction: d.construction().to_string(),
            alphabet: d.alphabet().to_vec(),
            states,
            start: d.start(),
            transitions,
        }
    }
}

fn dot_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out
}

/// Graphviz rendering. One node line per state in index order, final states
/// drawn as double circles, the start state in bold, then one edge per state
/// and symbol in table order.
pub fn export_dot(d: &Dfa) -> String {
    let mut out = String::new();
    // writing to a String cannot fail
    let _ = writeln!(out, "digraph dfa {{");
    let _ = writeln!(out, "  // source: {}", d.source());
    let _ = writeln!(out, "  // construction: {}", d.construction());
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=circle];");
    for q in 0..d.len() {
        let mut attrs = format!("label=\"{}\"", dot_escape(&d.label(q).to_string()));
        if d.is_final(q) {
            attrs.push_str(", shape=doublecircle");
        }
        if q == d.start() {
            attrs.push_str(", penwidth=2");
        }
        let _ = writeln!(out, "  q{q} [{attrs}];");
    }
    for q in 0..d.len() {
        for (i, &c) in d.alphabet().iter().enumerate() {
            let _ = writeln!(out, "  q{q} -> q{} [label=\"{}\"];", d.next_index(q, i), dot_escape(&c.to_string()));
        }
    }
    out.push_str("}\n");
    out
}

pub fn export_json(d: &Dfa) -> String {
    serde_json::to_string_pretty(&DfaExport::from(d)).expect("export structs always serialize")
}
