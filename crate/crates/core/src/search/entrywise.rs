//! Entrywise backtracking: map entries to entries one at a time, designating
//! the row, column and symbol images together.

use crate::budget::Ticker;
use crate::error::AtopError;
use crate::group::AutotopismGroup;
use crate::invariants::InvariantTable;
use crate::plr::{Entry, Isotopism, PartialLatinRectangle};

use super::state::{MapKind, PartialAssignment};
use super::{line_classes, SearchOptions};

pub fn entrywise_atop(
    l: &PartialLatinRectangle,
    opts: &SearchOptions,
) -> Result<AutotopismGroup, AtopError> {
    let reduction = l.reduce();
    let table = opts
        .invariant
        .map(|k| InvariantTable::compute(&reduction.reduced, k));
    let autos = entrywise_reduced(&reduction.reduced, table.as_ref(), opts)?;
    Ok(AutotopismGroup::from_reduction(&reduction, autos))
}

pub(crate) fn entrywise_reduced(
    l: &PartialLatinRectangle,
    table: Option<&InvariantTable>,
    opts: &SearchOptions,
) -> Result<Vec<Isotopism>, AtopError> {
    if l.entry_count() == 0 {
        return Ok(vec![Isotopism::identity(l.rows(), l.cols(), l.symbols())]);
    }
    let entries = l.entries();
    let entry_class = match table {
        Some(t) => t.class_ids.clone(),
        None => vec![1; entries.len()],
    };
    let (row_class, col_class) = line_classes(l, table, opts.orbit_constraints.as_ref());
    let mut by_row = vec![Vec::new(); l.rows()];
    let mut by_col = vec![Vec::new(); l.cols()];
    let mut by_sym = vec![Vec::new(); l.symbols()];
    let mut cell_entry = vec![None; l.rows() * l.cols()];
    for (idx, e) in entries.iter().enumerate() {
        by_row[e.row].push(idx);
        by_col[e.col].push(idx);
        by_sym[e.sym].push(idx);
        cell_entry[e.row * l.cols() + e.col] = Some(idx);
    }
    let order = spanning_order(&entries, &entry_class);
    let mut search = Entrywise {
        l,
        entries,
        order,
        entry_class,
        row_class,
        col_class,
        by_row,
        by_col,
        by_sym,
        cell_entry,
        state: PartialAssignment::new(l.rows(), l.cols(), l.symbols()),
        found: Vec::new(),
        cap: opts.limits.cap,
        ticker: Ticker::new(&opts.limits),
    };
    search.search(0)?;
    Ok(search.found)
}

/// Visits entries so that each one shares as many of its row, column and
/// symbol with earlier entries as possible; starts in the rarest class.
fn spanning_order(entries: &[Entry], class: &[usize]) -> Vec<usize> {
    let m = entries.len();
    let mut class_size = std::collections::HashMap::new();
    for &c in class {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let rows = entries.iter().map(|e| e.row).max().map_or(0, |x| x + 1);
    let cols = entries.iter().map(|e| e.col).max().map_or(0, |x| x + 1);
    let syms = entries.iter().map(|e| e.sym).max().map_or(0, |x| x + 1);
    let (mut row_seen, mut col_seen, mut sym_seen) =
        (vec![false; rows], vec![false; cols], vec![false; syms]);
    let mut placed = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let next = (0..m)
            .filter(|&x| !placed[x])
            .min_by_key(|&x| {
                let e = entries[x];
                let overlap =
                    row_seen[e.row] as usize + col_seen[e.col] as usize + sym_seen[e.sym] as usize;
                (std::cmp::Reverse(overlap), class_size[&class[x]], x)
            })
            .expect("unplaced entry");
        placed[next] = true;
        let e = entries[next];
        row_seen[e.row] = true;
        col_seen[e.col] = true;
        sym_seen[e.sym] = true;
        order.push(next);
    }
    order
}

struct Entrywise<'a> {
    l: &'a PartialLatinRectangle,
    entries: Vec<Entry>,
    order: Vec<usize>,
    entry_class: Vec<usize>,
    row_class: Vec<usize>,
    col_class: Vec<usize>,
    by_row: Vec<Vec<usize>>,
    by_col: Vec<Vec<usize>>,
    by_sym: Vec<Vec<usize>>,
    cell_entry: Vec<Option<usize>>,
    state: PartialAssignment,
    found: Vec<Isotopism>,
    cap: usize,
    ticker: Ticker,
}

impl Entrywise<'_> {
    fn candidates(&self, e: Entry) -> Vec<usize> {
        let alpha = self.state.get(MapKind::Alpha, e.row);
        let beta = self.state.get(MapKind::Beta, e.col);
        let gamma = self.state.get(MapKind::Gamma, e.sym);
        match (alpha, beta, gamma) {
            (Some(a), Some(b), _) => self.cell_entry[a * self.l.cols() + b].into_iter().collect(),
            (Some(a), None, _) => self.by_row[a].clone(),
            (None, Some(b), _) => self.by_col[b].clone(),
            (None, None, Some(g)) => self.by_sym[g].clone(),
            (None, None, None) => (0..self.entries.len()).collect(),
        }
    }

    fn search(&mut self, level: usize) -> Result<(), AtopError> {
        self.ticker.tick()?;
        if level == self.order.len() {
            return self.leaf();
        }
        let src_idx = self.order[level];
        let e = self.entries[src_idx];
        for f_idx in self.candidates(e) {
            let f = self.entries[f_idx];
            if self.entry_class[f_idx] != self.entry_class[src_idx]
                || self.row_class[f.row] != self.row_class[e.row]
                || self.col_class[f.col] != self.col_class[e.col]
            {
                continue;
            }
            let mark = self.state.mark();
            let ok = self.state.assign(MapKind::Alpha, e.row, f.row).is_ok()
                && self.state.assign(MapKind::Beta, e.col, f.col).is_ok()
                && self.state.assign(MapKind::Gamma, e.sym, f.sym).is_ok();
            if ok {
                self.search(level + 1)?;
            }
            self.state.undo_to(mark);
        }
        Ok(())
    }

    fn leaf(&mut self) -> Result<(), AtopError> {
        // In a reduced rectangle every row, column and symbol carries an
        // entry, so covering all entries decides all three maps.
        let t = Isotopism::new(
            self.state
                .permutation(MapKind::Alpha)
                .expect("rows covered"),
            self.state
                .permutation(MapKind::Beta)
                .expect("columns covered"),
            self.state
                .permutation(MapKind::Gamma)
                .expect("symbols covered"),
        );
        if self.l.is_autotopism(&t)? {
            self.found.push(t);
            if self.found.len() > self.cap {
                return Err(AtopError::CapExceeded { cap: self.cap });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::invariants::InvariantKind;
    use crate::text::parse_plr;
    use num_bigint::BigUint;

    #[test]
    fn eq1_group() {
        let l = fixtures::eq1();
        let mut opts = vec![SearchOptions::plain()];
        opts.extend(InvariantKind::ALL.map(SearchOptions::with_invariant));
        for o in opts {
            let g = entrywise_atop(&l, &o).unwrap();
            assert_eq!(g.total_order, BigUint::from(2u8));
            assert!(g.reduced_autotopisms.contains(&fixtures::eq1_autotopism()));
        }
    }

    #[test]
    fn small_cases() {
        let sq = parse_plr("PLR 2 2 2\n1 2\n2 1\n").unwrap();
        assert_eq!(
            entrywise_atop(&sq, &SearchOptions::plain())
                .unwrap()
                .total_order,
            BigUint::from(4u8)
        );
        let one = parse_plr("PLR 1 1 1\n1\n").unwrap();
        assert_eq!(
            entrywise_atop(&one, &SearchOptions::plain())
                .unwrap()
                .total_order,
            BigUint::from(1u8)
        );
    }

    #[test]
    fn order_spans_greedily() {
        let l = fixtures::eq1();
        let entries = l.entries();
        let order = spanning_order(&entries, &vec![1; entries.len()]);
        assert_eq!(order.len(), entries.len());
        assert_eq!(order[0], 0);
        // the second entry shares a line with the first
        let (a, b) = (entries[order[0]], entries[order[1]]);
        assert!(a.row == b.row || a.col == b.col || a.sym == b.sym);
    }
}
