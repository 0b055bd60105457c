//! Entry invariants and the row, column and symbol invariants they induce.
//!
//! Every invariant here is unchanged by relabeling symbols, which is what the
//! column-vector pruning in [`crate::search`] relies on.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::plr::{Entry, PartialLatinRectangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantKind {
    /// Strong entry invariant: (row count, column count, symbol frequency).
    Sei,
    /// 32-bin histogram over the 2x2 submatrices through the entry.
    Square,
    /// The pair (SEI, square), compared lexicographically.
    Combined,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 3] = [Self::Sei, Self::Square, Self::Combined];

    pub fn name(self) -> &'static str {
        match self {
            Self::Sei => "sei",
            Self::Square => "square",
            Self::Combined => "combined",
        }
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvariantKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "sei" => Ok(Self::Sei),
            "square" | "sq" => Ok(Self::Square),
            "combined" | "sei-square" | "sei+square" => Ok(Self::Combined),
            other => Err(format!("unknown invariant kind `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrongEntryInvariant {
    pub row_count: usize,
    pub col_count: usize,
    pub sym_count: usize,
}

/// Bit masks of the five properties of a 2x2 submatrix
///
/// ```text
///      j   j'
/// i    k   x
/// i'   y   z
/// ```
pub mod square_bits {
    /// `x` undefined
    pub const X_EMPTY: usize = 1;
    /// `y` undefined
    pub const Y_EMPTY: usize = 2;
    /// `z` undefined
    pub const Z_EMPTY: usize = 4;
    /// `k = z`
    pub const DIAGONAL: usize = 8;
    /// `x = y` (both defined)
    pub const ANTI_DIAGONAL: usize = 16;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareInvariant {
    pub counts: [u32; 32],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntryInvariant {
    Sei(StrongEntryInvariant),
    Square(SquareInvariant),
    Combined(StrongEntryInvariant, SquareInvariant),
}

/// Per-entry invariant values with dense class ids `1, 2, ..` assigned in
/// order of first appearance in a row-major scan.
#[derive(Debug, Clone)]
pub struct InvariantTable {
    pub kind: InvariantKind,
    pub entries: Vec<Entry>,
    pub values: Vec<EntryInvariant>,
    pub class_ids: Vec<usize>,
    pub class_count: usize,
    rows: usize,
    cols: usize,
    cell_entry: Vec<Option<usize>>,
}

impl InvariantTable {
    pub fn compute(l: &PartialLatinRectangle, kind: InvariantKind) -> Self {
        let entries = l.entries();
        let values: Vec<EntryInvariant> = match kind {
            InvariantKind::Sei => strong_entry_invariants(l)
                .into_iter()
                .map(EntryInvariant::Sei)
                .collect(),
            InvariantKind::Square => square_invariants(l)
                .into_iter()
                .map(EntryInvariant::Square)
                .collect(),
            InvariantKind::Combined => strong_entry_invariants(l)
                .into_iter()
                .zip(square_invariants(l))
                .map(|(a, b)| EntryInvariant::Combined(a, b))
                .collect(),
        };
        let (class_ids, class_count) = dense_ids(&values);
        let mut cell_entry = vec![None; l.rows() * l.cols()];
        for (idx, e) in entries.iter().enumerate() {
            cell_entry[e.row * l.cols() + e.col] = Some(idx);
        }
        Self {
            kind,
            entries,
            values,
            class_ids,
            class_count,
            rows: l.rows(),
            cols: l.cols(),
            cell_entry,
        }
    }

    /// Index into `entries` of the entry at `(row, col)`.
    pub fn entry_at(&self, row: usize, col: usize) -> Option<usize> {
        self.cell_entry[row * self.cols + col]
    }

    pub fn class_at(&self, row: usize, col: usize) -> Option<usize> {
        self.entry_at(row, col).map(|idx| self.class_ids[idx])
    }

    /// The rectangle with every entry replaced by its class id.
    pub fn relabeled(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.class_at(i, j)).collect())
            .collect()
    }

    pub fn format_relabeled(&self) -> String {
        let mut out = String::new();
        for row in self.relabeled() {
            let line: Vec<String> = row
                .iter()
                .map(|c| c.map_or_else(|| ".".to_string(), |v| v.to_string()))
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Dense `1, 2, ..` labels in order of first occurrence.
pub(crate) fn dense_ids<T: Eq + std::hash::Hash + Clone>(values: &[T]) -> (Vec<usize>, usize) {
    let mut seen: HashMap<T, usize> = HashMap::new();
    let ids = values
        .iter()
        .map(|v| {
            let next = seen.len() + 1;
            *seen.entry(v.clone()).or_insert(next)
        })
        .collect();
    (ids, seen.len())
}

pub fn strong_entry_invariants(l: &PartialLatinRectangle) -> Vec<StrongEntryInvariant> {
    let mut row_count = vec![0; l.rows()];
    let mut col_count = vec![0; l.cols()];
    let mut sym_count = vec![0; l.symbols()];
    for e in l.entries_iter() {
        row_count[e.row] += 1;
        col_count[e.col] += 1;
        sym_count[e.sym] += 1;
    }
    l.entries_iter()
        .map(|e| StrongEntryInvariant {
            row_count: row_count[e.row],
            col_count: col_count[e.col],
            sym_count: sym_count[e.sym],
        })
        .collect()
}

fn square_mask(k: usize, x: Option<usize>, y: Option<usize>, z: Option<usize>) -> usize {
    use square_bits::*;
    let mut mask = 0;
    if x.is_none() {
        mask |= X_EMPTY;
    }
    if y.is_none() {
        mask |= Y_EMPTY;
    }
    match z {
        None => mask |= Z_EMPTY,
        Some(z) if z == k => mask |= DIAGONAL,
        _ => {}
    }
    if x.is_some() && x == y {
        mask |= ANTI_DIAGONAL;
    }
    mask
}

/// Square invariants by direct enumeration of all `(r-1)(s-1)` submatrices
/// through each entry.
pub fn square_invariants_naive(l: &PartialLatinRectangle) -> Vec<SquareInvariant> {
    l.entries_iter()
        .map(|e| {
            let mut counts = [0u32; 32];
            for i2 in (0..l.rows()).filter(|&i2| i2 != e.row) {
                for j2 in (0..l.cols()).filter(|&j2| j2 != e.col) {
                    let m = square_mask(e.sym, l.get(e.row, j2), l.get(i2, e.col), l.get(i2, j2));
                    counts[m] += 1;
                }
            }
            SquareInvariant { counts }
        })
        .collect()
}

/// Square invariants in `O(|Ent| (|Ent| + n))`.
///
/// The `(x, y)` part of the histogram is counted in closed form from line
/// counts, assuming every `z` is empty; the defined `z` cells are then visited
/// row bucket by row bucket and moved to their true bin.
pub fn square_invariants(l: &PartialLatinRectangle) -> Vec<SquareInvariant> {
    use square_bits::*;
    let (r, s, n) = (l.rows(), l.cols(), l.symbols());
    let mut row_entries: Vec<Vec<Entry>> = vec![Vec::new(); r];
    // col_has[j * n + m]: symbol m occurs in column j
    let mut col_has = vec![false; s * n];
    let mut col_count = vec![0usize; s];
    for e in l.entries_iter() {
        row_entries[e.row].push(e);
        col_has[e.col * n + e.sym] = true;
        col_count[e.col] += 1;
    }
    l.entries_iter()
        .map(|e| {
            let x_defined = row_entries[e.row].len() - 1;
            let x_empty = (s - 1) - x_defined;
            let y_defined = col_count[e.col] - 1;
            let y_empty = (r - 1) - y_defined;
            let shared = row_entries[e.row]
                .iter()
                .filter(|f| f.col != e.col && col_has[e.col * n + f.sym])
                .count();
            let mut counts = [0u32; 32];
            counts[Z_EMPTY | ANTI_DIAGONAL] = shared as u32;
            counts[Z_EMPTY] = (x_defined * y_defined - shared) as u32;
            counts[Z_EMPTY | X_EMPTY] = (x_empty * y_defined) as u32;
            counts[Z_EMPTY | Y_EMPTY] = (x_defined * y_empty) as u32;
            counts[Z_EMPTY | X_EMPTY | Y_EMPTY] = (x_empty * y_empty) as u32;
            for (i2, bucket) in row_entries.iter().enumerate() {
                if i2 == e.row {
                    continue;
                }
                let y = l.get(i2, e.col);
                for f in bucket.iter().filter(|f| f.col != e.col) {
                    let x = l.get(e.row, f.col);
                    let assumed = square_mask(e.sym, x, y, None);
                    let actual = square_mask(e.sym, x, y, Some(f.sym));
                    counts[assumed] -= 1;
                    counts[actual] += 1;
                }
            }
            SquareInvariant { counts }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineKind {
    Row,
    Col,
    Sym,
}

/// Multisets of entry classes per row, column and symbol, and the partitions
/// they induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineInvariants {
    /// Sorted class ids of the entries in each row.
    pub row_multisets: Vec<Vec<usize>>,
    pub col_multisets: Vec<Vec<usize>>,
    pub sym_multisets: Vec<Vec<usize>>,
    /// Non-empty lines grouped by equal multiset; cells and their members in
    /// ascending order.
    pub row_partition: Vec<Vec<usize>>,
    pub col_partition: Vec<Vec<usize>>,
    pub sym_partition: Vec<Vec<usize>>,
    /// Dense class id of each line (`None` for empty lines).
    pub row_class: Vec<Option<usize>>,
    pub col_class: Vec<Option<usize>>,
    pub sym_class: Vec<Option<usize>>,
}

impl LineInvariants {
    pub fn compute(l: &PartialLatinRectangle, table: &InvariantTable) -> Self {
        let mut rows = vec![Vec::new(); l.rows()];
        let mut cols = vec![Vec::new(); l.cols()];
        let mut syms = vec![Vec::new(); l.symbols()];
        for (e, &c) in table.entries.iter().zip(&table.class_ids) {
            rows[e.row].push(c);
            cols[e.col].push(c);
            syms[e.sym].push(c);
        }
        for m in rows
            .iter_mut()
            .chain(cols.iter_mut())
            .chain(syms.iter_mut())
        {
            m.sort_unstable();
        }
        let (row_class, row_partition) = line_partition(&rows);
        let (col_class, col_partition) = line_partition(&cols);
        let (sym_class, sym_partition) = line_partition(&syms);
        Self {
            row_multisets: rows,
            col_multisets: cols,
            sym_multisets: syms,
            row_partition,
            col_partition,
            sym_partition,
            row_class,
            col_class,
            sym_class,
        }
    }

    pub fn partition(&self, kind: LineKind) -> &[Vec<usize>] {
        match kind {
            LineKind::Row => &self.row_partition,
            LineKind::Col => &self.col_partition,
            LineKind::Sym => &self.sym_partition,
        }
    }
}

fn line_partition(multisets: &[Vec<usize>]) -> (Vec<Option<usize>>, Vec<Vec<usize>>) {
    let mut ids: HashMap<&[usize], usize> = HashMap::new();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let classes = multisets
        .iter()
        .enumerate()
        .map(|(line, m)| {
            if m.is_empty() {
                return None;
            }
            let id = *ids.entry(m.as_slice()).or_insert_with(|| {
                cells.push(Vec::new());
                cells.len()
            });
            cells[id - 1].push(line);
            Some(id)
        })
        .collect();
    (classes, cells)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrivialReason {
    /// All entries have distinct invariants.
    DistinctEntries,
    /// The two named line partitions are discrete.
    DistinctLines(LineKind, LineKind),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    Trivial(TrivialReason),
    NotCertified,
}

impl Certificate {
    pub fn is_trivial(self) -> bool {
        matches!(self, Certificate::Trivial(_))
    }
}

/// Sufficient conditions for a reduced rectangle to have only the identity
/// autotopism. `l` must be reduced.
pub fn triviality_certificate(l: &PartialLatinRectangle, table: &InvariantTable) -> Certificate {
    debug_assert!(
        l.is_reduced(),
        "triviality certificate needs a reduced rectangle"
    );
    if table.class_count == table.entries.len() {
        return Certificate::Trivial(TrivialReason::DistinctEntries);
    }
    let lines = LineInvariants::compute(l, table);
    let discrete: Vec<LineKind> = [LineKind::Row, LineKind::Col, LineKind::Sym]
        .into_iter()
        .filter(|&k| lines.partition(k).iter().all(|cell| cell.len() == 1))
        .collect();
    if discrete.len() >= 2 {
        Certificate::Trivial(TrivialReason::DistinctLines(discrete[0], discrete[1]))
    } else {
        Certificate::NotCertified
    }
}

/// Columns of the class-id array and their supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnVectors {
    /// `vecs[j][i]` is the class of cell `(i, j)`.
    pub vecs: Vec<Vec<Option<usize>>>,
    /// Rows of the non-empty cells of each column, ascending.
    pub supports: Vec<Vec<usize>>,
}

impl ColumnVectors {
    pub fn compute(l: &PartialLatinRectangle, table: &InvariantTable) -> Self {
        Self::from_fn(l, |i, j| table.class_at(i, j))
    }

    /// Vectors that only record which cells are filled (every class is 1).
    pub fn support_only(l: &PartialLatinRectangle) -> Self {
        Self::from_fn(l, |i, j| l.get(i, j).map(|_| 1))
    }

    fn from_fn(l: &PartialLatinRectangle, class: impl Fn(usize, usize) -> Option<usize>) -> Self {
        let vecs: Vec<Vec<Option<usize>>> = (0..l.cols())
            .map(|j| (0..l.rows()).map(|i| class(i, j)).collect())
            .collect();
        let supports = vecs
            .iter()
            .map(|v| (0..v.len()).filter(|&i| v[i].is_some()).collect())
            .collect();
        Self { vecs, supports }
    }
}
