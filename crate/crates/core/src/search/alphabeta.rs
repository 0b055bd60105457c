//! Alpha-beta backtracking: decide the row permutation, then the column
//! permutation, and close each pair with the forced symbol permutation.
//!
//! Symbol designations are made as soon as a column is placed, so a column
//! choice that cannot extend to an autotopism is dropped at once. With column
//! vectors enabled, every row designation also shrinks the set of admissible
//! column targets, and the branch dies when those can no longer be matched.

use crate::budget::Ticker;
use crate::error::AtopError;
use crate::group::AutotopismGroup;
use crate::invariants::{ColumnVectors, InvariantTable};
use crate::plr::{Isotopism, PartialLatinRectangle};

use super::state::{MapKind, PartialAssignment};
use super::{line_classes, smallest_class_first, SearchOptions};

pub fn alphabeta_atop(
    l: &PartialLatinRectangle,
    opts: &SearchOptions,
) -> Result<AutotopismGroup, AtopError> {
    let reduction = l.reduce();
    let table = opts
        .invariant
        .map(|k| InvariantTable::compute(&reduction.reduced, k));
    let autos = alphabeta_reduced(&reduction.reduced, table.as_ref(), opts)?;
    Ok(AutotopismGroup::from_reduction(&reduction, autos))
}

pub(crate) fn alphabeta_reduced(
    l: &PartialLatinRectangle,
    table: Option<&InvariantTable>,
    opts: &SearchOptions,
) -> Result<Vec<Isotopism>, AtopError> {
    if l.entry_count() == 0 {
        return Ok(vec![Isotopism::identity(l.rows(), l.cols(), l.symbols())]);
    }
    let (row_class, col_class) = line_classes(l, table, opts.orbit_constraints.as_ref());
    let cv = opts.use_cv.then(|| match table {
        Some(t) => ColumnVectors::compute(l, t),
        None => ColumnVectors::support_only(l),
    });
    let s = l.cols();
    let mut admissible = vec![false; s * s];
    for j in 0..s {
        for b in 0..s {
            admissible[j * s + b] = col_class[j] == col_class[b];
        }
    }
    let mut col_entries = vec![Vec::new(); s];
    for e in l.entries_iter() {
        col_entries[e.col].push((e.row, e.sym));
    }
    let mut search = AlphaBeta {
        l,
        row_order: smallest_class_first(&row_class),
        col_order: smallest_class_first(&col_class),
        row_class,
        cv,
        col_entries,
        state: PartialAssignment::new(l.rows(), l.cols(), l.symbols()),
        found: Vec::new(),
        cap: opts.limits.cap,
        ticker: Ticker::new(&opts.limits),
    };
    search.alpha(0, &admissible)?;
    Ok(search.found)
}

struct AlphaBeta<'a> {
    l: &'a PartialLatinRectangle,
    row_class: Vec<usize>,
    row_order: Vec<usize>,
    col_order: Vec<usize>,
    cv: Option<ColumnVectors>,
    col_entries: Vec<Vec<(usize, usize)>>,
    state: PartialAssignment,
    found: Vec<Isotopism>,
    cap: usize,
    ticker: Ticker,
}

impl AlphaBeta<'_> {
    fn alpha(&mut self, level: usize, admissible: &[bool]) -> Result<(), AtopError> {
        self.ticker.tick()?;
        let r = self.l.rows();
        if level == r {
            return self.beta(0, admissible);
        }
        let i = self.row_order[level];
        for a in 0..r {
            if self.row_class[a] != self.row_class[i]
                || self.state.get_inverse(MapKind::Alpha, a).is_some()
            {
                continue;
            }
            let mark = self.state.mark();
            self.state
                .assign(MapKind::Alpha, i, a)
                .expect("unused row target");
            match &self.cv {
                Some(cv) => {
                    let narrowed = narrow(cv, admissible, i, a);
                    if has_perfect_matching(&narrowed, self.l.cols()) {
                        self.alpha(level + 1, &narrowed)?;
                    }
                }
                None => self.alpha(level + 1, admissible)?,
            }
            self.state.undo_to(mark);
        }
        Ok(())
    }

    fn beta(&mut self, level: usize, admissible: &[bool]) -> Result<(), AtopError> {
        self.ticker.tick()?;
        let s = self.l.cols();
        if level == s {
            return self.leaf();
        }
        let j = self.col_order[level];
        for b in 0..s {
            if !admissible[j * s + b] || self.state.get_inverse(MapKind::Beta, b).is_some() {
                continue;
            }
            let mark = self.state.mark();
            if self.place_column(j, b) {
                self.beta(level + 1, admissible)?;
            }
            self.state.undo_to(mark);
        }
        Ok(())
    }

    /// Designates `β(j) = b` and the symbol images it forces.
    fn place_column(&mut self, j: usize, b: usize) -> bool {
        if self.state.assign(MapKind::Beta, j, b).is_err() {
            return false;
        }
        for idx in 0..self.col_entries[j].len() {
            let (i, k) = self.col_entries[j][idx];
            let a = self.state.get(MapKind::Alpha, i).expect("alpha decided");
            let Some(target) = self.l.get(a, b) else {
                return false;
            };
            if self.state.assign(MapKind::Gamma, k, target).is_err() {
                return false;
            }
        }
        true
    }

    fn leaf(&mut self) -> Result<(), AtopError> {
        let alpha = self
            .state
            .permutation(MapKind::Alpha)
            .expect("alpha complete");
        let beta = self
            .state
            .permutation(MapKind::Beta)
            .expect("beta complete");
        let completion = self
            .l
            .complete_symbol_permutation(&alpha, &beta)
            .expect("incremental checks admit only autotopisms");
        self.found
            .push(Isotopism::new(alpha, beta, completion.canonical_gamma()));
        if self.found.len() > self.cap {
            return Err(AtopError::CapExceeded { cap: self.cap });
        }
        Ok(())
    }
}

/// Column targets still admissible once `α(i) = a` is decided.
fn narrow(cv: &ColumnVectors, admissible: &[bool], i: usize, a: usize) -> Vec<bool> {
    let s = cv.vecs.len();
    let mut out = admissible.to_vec();
    for j in 0..s {
        for b in 0..s {
            if out[j * s + b] && cv.vecs[j][i] != cv.vecs[b][a] {
                out[j * s + b] = false;
            }
        }
    }
    out
}

/// Kuhn's augmenting paths on the `s x s` admissibility matrix.
fn has_perfect_matching(admissible: &[bool], s: usize) -> bool {
    fn augment(
        j: usize,
        s: usize,
        admissible: &[bool],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for b in 0..s {
            if admissible[j * s + b] && !seen[b] {
                seen[b] = true;
                if owner[b].is_none_or(|j2| augment(j2, s, admissible, seen, owner)) {
                    owner[b] = Some(j);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; s];
    (0..s).all(|j| {
        let mut seen = vec![false; s];
        augment(j, s, admissible, &mut seen, &mut owner)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::invariants::InvariantKind;
    use crate::text::parse_plr;
    use num_bigint::BigUint;

    fn all_options() -> Vec<SearchOptions> {
        let mut v = vec![SearchOptions::plain(), SearchOptions::cv(None)];
        for k in InvariantKind::ALL {
            v.push(SearchOptions::with_invariant(k));
            v.push(SearchOptions::cv(Some(k)));
        }
        v
    }

    #[test]
    fn eq1_group() {
        let l = fixtures::eq1();
        for opts in all_options() {
            let g = alphabeta_atop(&l, &opts).unwrap();
            assert_eq!(g.total_order, BigUint::from(2u8), "{opts:?}");
            assert!(g.reduced_autotopisms.contains(&fixtures::eq1_autotopism()));
        }
    }

    #[test]
    fn small_cases() {
        let sq = parse_plr("PLR 2 2 2\n1 2\n2 1\n").unwrap();
        for opts in all_options() {
            let g = alphabeta_atop(&sq, &opts).unwrap();
            assert_eq!(g.total_order, BigUint::from(4u8));
            assert!(g.is_closed());
        }
        let empty = PartialLatinRectangle::empty(2, 3, 4);
        let g = alphabeta_atop(&empty, &SearchOptions::plain()).unwrap();
        assert_eq!(g.total_order, BigUint::from(288u32));
        assert_eq!(g.reduced_autotopisms, vec![Isotopism::identity(0, 0, 0)]);
    }

    #[test]
    fn cap_is_enforced() {
        let sq = parse_plr("PLR 2 2 2\n1 2\n2 1\n").unwrap();
        let mut opts = SearchOptions::plain();
        opts.limits.cap = 3;
        assert_eq!(
            alphabeta_atop(&sq, &opts),
            Err(AtopError::CapExceeded { cap: 3 })
        );
    }

    #[test]
    fn matching_check() {
        // j0 -> {b0}, j1 -> {b0}: no perfect matching
        assert!(!has_perfect_matching(&[true, false, true, false], 2));
        assert!(has_perfect_matching(&[true, true, true, false], 2));
        assert!(has_perfect_matching(&[], 0));
    }
}
