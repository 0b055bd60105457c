//! Backtracking solvers for the autotopism group.
//!
//! All solvers work on the reduced rectangle (no empty lines, every symbol
//! used) and reattach the factorial factors for what was removed.

mod alphabeta;
mod brute;
mod entrywise;
mod state;

pub use alphabeta::alphabeta_atop;
pub(crate) use alphabeta::alphabeta_reduced;
pub use brute::{brute_force_atop, brute_force_atop_with_bound, DEFAULT_ORACLE_BOUND};
pub use entrywise::entrywise_atop;
pub(crate) use entrywise::entrywise_reduced;
pub use state::{Clash, MapKind, PartialAssignment};

use crate::budget::Limits;
use crate::invariants::{dense_ids, InvariantKind, InvariantTable, LineInvariants};
use crate::plr::PartialLatinRectangle;

/// Extra row and column classes that every autotopism must preserve, indexed
/// by the rows and columns of the reduced rectangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineConstraints {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// Entry invariant used for row/column (and entry) pruning.
    pub invariant: Option<InvariantKind>,
    /// Column-vector pruning. Without an invariant, only supports are compared.
    pub use_cv: bool,
    pub orbit_constraints: Option<LineConstraints>,
    pub limits: Limits,
}

impl SearchOptions {
    pub fn plain() -> Self {
        Self::default()
    }

    pub fn with_invariant(kind: InvariantKind) -> Self {
        Self {
            invariant: Some(kind),
            ..Self::default()
        }
    }

    pub fn cv(invariant: Option<InvariantKind>) -> Self {
        Self {
            invariant,
            use_cv: true,
            ..Self::default()
        }
    }
}

/// Dense row and column classes combining line invariants and constraints.
pub(crate) fn line_classes(
    l: &PartialLatinRectangle,
    table: Option<&InvariantTable>,
    constraints: Option<&LineConstraints>,
) -> (Vec<usize>, Vec<usize>) {
    let lines = table.map(|t| LineInvariants::compute(l, t));
    let combine = |n: usize, inv: Option<&Vec<Option<usize>>>, extra: Option<&Vec<usize>>| {
        let keys: Vec<(usize, usize)> = (0..n)
            .map(|x| {
                (
                    inv.and_then(|c| c[x]).unwrap_or(0),
                    extra.map_or(0, |e| e[x]),
                )
            })
            .collect();
        dense_ids(&keys).0
    };
    let rows = combine(
        l.rows(),
        lines.as_ref().map(|li| &li.row_class),
        constraints.map(|c| &c.rows),
    );
    let cols = combine(
        l.cols(),
        lines.as_ref().map(|li| &li.col_class),
        constraints.map(|c| &c.cols),
    );
    (rows, cols)
}

/// Indices `0..classes.len()` sorted by the size of their class, smallest first.
pub(crate) fn smallest_class_first(classes: &[usize]) -> Vec<usize> {
    let mut size = std::collections::HashMap::new();
    for &c in classes {
        *size.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&x| (size[&classes[x]], x));
    order
}
