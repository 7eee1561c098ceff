//! Level-by-level crystal graphs and their DOT / JSON-lines renderings.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use crate::partition::{CrystalKind, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    /// Kleshchev's e-good lattice.
    TypeA {
        e: usize,
    },
    Twisted(CrystalKind),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalEdge {
    pub from: Partition,
    pub to: Partition,
    #[serde(rename = "res")]
    pub residue: usize,
}

/// The vertices of a crystal up to a size bound, grouped by size, with the
/// colored arrows between consecutive levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    pub kind: GraphKind,
    /// `levels[n]` holds the vertices of size `n`, descending lexicographic.
    pub levels: Vec<Vec<Partition>>,
    pub edges: Vec<CrystalEdge>,
}

impl CrystalGraph {
    pub fn bound(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// Graphviz rendering. Vertex ids are the canonical text encodings.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let name = match self.kind {
            GraphKind::TypeA { e } => format!("kleshchev_e{e}"),
            GraphKind::Twisted(kind) => format!("{}_ell{}", kind.name(), kind.ell()),
        };
        writeln!(out, "digraph {name} {{").unwrap();
        for (n, level) in self.levels.iter().enumerate() {
            for p in level {
                writeln!(out, "  \"{p}\" [n={n}];").unwrap();
            }
        }
        for edge in &self.edges {
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [res={}, label=\"{}\"];",
                edge.from, edge.to, edge.residue, edge.residue
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// A header record, one `{"n":..,"partition":[..]}` record per vertex,
    /// then a single `{"edges":[..]}` record.
    pub fn to_jsonl(&self) -> String {
        let header = match self.kind {
            GraphKind::TypeA { e } => json!({"kind": "typea", "e": e, "bound": self.bound()}),
            GraphKind::Twisted(kind) => json!({
                "kind": kind.name(),
                "ell": kind.ell(),
                "bound": self.bound(),
            }),
        };
        let mut out = String::new();
        writeln!(out, "{header}").unwrap();
        for (n, level) in self.levels.iter().enumerate() {
            for p in level {
                writeln!(out, "{}", json!({"n": n, "partition": p})).unwrap();
            }
        }
        writeln!(out, "{}", json!({ "edges": self.edges })).unwrap();
        out
    }
}
