//! Graph description of a snake's link: nodal zones grouped by node, joined
//! by segments in link order.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Result, SnakeError};
use crate::names::validate;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeGroup {
    pub letter: String,
    pub zones: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegmentEdge {
    pub index: usize,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkDiagram {
    pub word: String,
    pub nodes: Vec<NodeGroup>,
    pub segments: Vec<SegmentEdge>,
}

impl LinkDiagram {
    /// Accepts snake names and spiral words.
    pub fn new(w: &Word) -> Result<Self> {
        let verdict = validate(w);
        if !verdict.is_snake_name() && !verdict.is_spiral() {
            return Err(SnakeError::NotASnakeName {
                word: w.to_string(),
            });
        }
        let nodes = w
            .distinct_letters()
            .into_iter()
            .map(|x| NodeGroup {
                letter: x.to_string(),
                zones: w.positions_of(x),
            })
            .collect();
        let segments = (1..w.len())
            .map(|i| SegmentEdge {
                index: i,
                from: i,
                to: i + 1,
            })
            .collect();
        Ok(LinkDiagram {
            word: w.to_string(),
            nodes,
            segments,
        })
    }

    /// Graphviz source: one cluster subgraph per node.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph \"{}\" {{", self.word).unwrap();
        writeln!(out, "  rankdir=LR;").unwrap();
        writeln!(out, "  node [shape=circle];").unwrap();
        for node in &self.nodes {
            writeln!(out, "  subgraph cluster_{} {{", node.letter).unwrap();
            writeln!(out, "    label=\"{}\";", node.letter).unwrap();
            for z in &node.zones {
                writeln!(out, "    N{z} [label=\"N{z}\"];").unwrap();
            }
            writeln!(out, "  }}").unwrap();
        }
        for s in &self.segments {
            writeln!(out, "  N{} -- N{} [label=\"S{}\"];", s.from, s.to, s.index).unwrap();
        }
        out.push_str("}\n");
        out
    }
}
