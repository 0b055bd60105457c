//! Graph encodings of a partial Latin rectangle.
//!
//! All builders expect a reduced rectangle: no empty rows or columns and
//! every symbol in use.

mod colored;
mod decode;

pub use colored::{ColoredGraph, GraphTextError};
pub use decode::{decode_automorphisms, DecodeOutcome};

use std::fmt;
use std::str::FromStr;

use crate::invariants::{InvariantTable, LineInvariants};
use crate::plr::{Entry, PartialLatinRectangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Mmm,
    Bipartite,
    PlrFlat,
    PlrExpanded,
    RookFlat,
    RookExpanded,
}

impl GraphKind {
    pub const ALL: [GraphKind; 6] = [
        GraphKind::Mmm,
        GraphKind::Bipartite,
        GraphKind::PlrFlat,
        GraphKind::PlrExpanded,
        GraphKind::RookFlat,
        GraphKind::RookExpanded,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Mmm => "mmm",
            GraphKind::Bipartite => "bipartite",
            GraphKind::PlrFlat => "plr-flat",
            GraphKind::PlrExpanded => "plr-expanded",
            GraphKind::RookFlat => "rook-flat",
            GraphKind::RookExpanded => "rook-expanded",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown graph kind `{s}`"))
    }
}

/// What a vertex stands for. Entry indices refer to row-major entry order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexTag {
    Entry(usize),
    Row(usize),
    Col(usize),
    Sym(usize),
    RowShadow(usize),
    ColShadow(usize),
    SymShadow(usize),
}

/// Fill pattern of a rectangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl IncidenceMatrix {
    pub fn from_plr(l: &PartialLatinRectangle) -> Self {
        Self {
            rows: l.rows(),
            cols: l.cols(),
            bits: l.cells().iter().map(Option::is_some).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.cols + col]
    }
}

/// Entries joined by shared row (green), column (orange) or symbol (purple).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoredPlrGraph {
    pub entries: Vec<Entry>,
    pub green: Vec<(usize, usize)>,
    pub orange: Vec<(usize, usize)>,
    pub purple: Vec<(usize, usize)>,
}

impl EdgeColoredPlrGraph {
    pub fn from_plr(l: &PartialLatinRectangle) -> Self {
        let entries = l.entries();
        let (mut green, mut orange, mut purple) = (Vec::new(), Vec::new(), Vec::new());
        for (a, e) in entries.iter().enumerate() {
            for (b, f) in entries.iter().enumerate().skip(a + 1) {
                if e.row == f.row {
                    green.push((a, b));
                }
                if e.col == f.col {
                    orange.push((a, b));
                }
                if e.sym == f.sym {
                    purple.push((a, b));
                }
            }
        }
        Self {
            entries,
            green,
            orange,
            purple,
        }
    }

    /// No pair of entries is joined in two colors.
    pub fn relations_disjoint(&self) -> bool {
        let mut all: Vec<(usize, usize)> = self
            .green
            .iter()
            .chain(&self.orange)
            .chain(&self.purple)
            .copied()
            .collect();
        let total = all.len();
        all.sort_unstable();
        all.dedup();
        all.len() == total
    }
}

/// A graph with the meaning of each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphModel {
    pub kind: GraphKind,
    pub graph: ColoredGraph,
    pub tags: Vec<VertexTag>,
}

/// Builds the `kind` encoding of the reduced rectangle `l`. With a coloring,
/// entry vertices take their invariant class as color; the bipartite graph,
/// which has no entry vertices, colors rows and columns by their line
/// invariant classes instead.
///
/// # Panics
/// If `l` is not reduced.
pub fn build_graph(
    l: &PartialLatinRectangle,
    kind: GraphKind,
    coloring: Option<&InvariantTable>,
) -> GraphModel {
    assert!(l.is_reduced(), "graph encodings need a reduced rectangle");
    let entries = l.entries();
    let m = entries.len();
    let (r, s, n) = (l.rows(), l.cols(), l.symbols());
    let entry_color = |x: usize| coloring.map_or(0, |t| t.class_ids[x]);
    // Entry colors occupy 0..=c; vertex types after entries get colors above.
    let c = coloring.map_or(0, |t| t.class_count) + 1;

    let mut colors = Vec::new();
    let mut tags = Vec::new();
    let mut edges = Vec::new();
    let entries_first = |colors: &mut Vec<usize>, tags: &mut Vec<VertexTag>| {
        for x in 0..m {
            colors.push(entry_color(x));
            tags.push(VertexTag::Entry(x));
        }
    };
    match kind {
        GraphKind::Mmm => {
            entries_first(&mut colors, &mut tags);
            for i in 0..r {
                colors.push(c);
                tags.push(VertexTag::Row(i));
            }
            for j in 0..s {
                colors.push(c + 1);
                tags.push(VertexTag::Col(j));
            }
            for k in 0..n {
                colors.push(c + 2);
                tags.push(VertexTag::Sym(k));
            }
            for (x, e) in entries.iter().enumerate() {
                edges.push((x, m + e.row));
                edges.push((x, m + r + e.col));
                edges.push((x, m + r + s + e.sym));
            }
        }
        GraphKind::Bipartite => {
            let (row_class, col_class) = match coloring {
                Some(t) => {
                    let li = LineInvariants::compute(l, t);
                    let unwrap =
                        |v: Vec<Option<usize>>| v.into_iter().map(|x| x.unwrap_or(0)).collect();
                    (unwrap(li.row_class), unwrap(li.col_class))
                }
                None => (vec![0; r], vec![0; s]),
            };
            let row_colors = row_class.iter().max().map_or(0, |x| x + 1);
            for (i, &rc) in row_class.iter().enumerate() {
                colors.push(rc);
                tags.push(VertexTag::Row(i));
            }
            for (j, &cc) in col_class.iter().enumerate() {
                colors.push(row_colors + cc);
                tags.push(VertexTag::Col(j));
            }
            let incidence = IncidenceMatrix::from_plr(l);
            for i in 0..r {
                for j in 0..s {
                    if incidence.get(i, j) {
                        edges.push((i, r + j));
                    }
                }
            }
        }
        GraphKind::PlrFlat | GraphKind::RookFlat => {
            entries_first(&mut colors, &mut tags);
            let ec = EdgeColoredPlrGraph::from_plr(l);
            edges.extend(ec.green);
            edges.extend(ec.orange);
            if kind == GraphKind::PlrFlat {
                edges.extend(ec.purple);
            }
        }
        GraphKind::PlrExpanded | GraphKind::RookExpanded => {
            entries_first(&mut colors, &mut tags);
            for x in 0..m {
                colors.push(c);
                tags.push(VertexTag::RowShadow(x));
            }
            for x in 0..m {
                colors.push(c + 1);
                tags.push(VertexTag::ColShadow(x));
            }
            let ec = EdgeColoredPlrGraph::from_plr(l);
            for x in 0..m {
                edges.push((x, m + x));
                edges.push((x, 2 * m + x));
            }
            edges.extend(ec.green.iter().map(|&(a, b)| (m + a, m + b)));
            edges.extend(ec.orange.iter().map(|&(a, b)| (2 * m + a, 2 * m + b)));
            if kind == GraphKind::PlrExpanded {
                for x in 0..m {
                    colors.push(c + 2);
                    tags.push(VertexTag::SymShadow(x));
                    edges.push((x, 3 * m + x));
                }
                edges.extend(ec.purple.iter().map(|&(a, b)| (3 * m + a, 3 * m + b)));
            } else {
                for k in 0..n {
                    colors.push(c + 2);
                    tags.push(VertexTag::Sym(k));
                }
                for (x, e) in entries.iter().enumerate() {
                    edges.push((m + x, 3 * m + e.sym));
                    edges.push((2 * m + x, 3 * m + e.sym));
                }
            }
        }
    }
    GraphModel {
        kind,
        graph: ColoredGraph::new(colors, edges),
        tags,
    }
}
