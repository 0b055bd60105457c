//! Partial Latin rectangles, isotopisms and their action.
//!
//! Rows, columns and symbols are zero-based throughout the library; the text
//! formats in [`crate::text`] translate to and from one-based notation.

use std::fmt;

use num_bigint::BigUint;

use crate::error::PlrError;
use crate::group::factorial;
use crate::perm::Permutation;

/// A filled cell `(row, col, sym)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub sym: usize,
}

/// An `r x s` array over `{0, .., n-1}` and empty cells, with no symbol
/// repeated in any row or column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialLatinRectangle {
    rows: usize,
    cols: usize,
    symbols: usize,
    cells: Vec<Option<usize>>,
}

impl PartialLatinRectangle {
    /// The rectangle with no entries.
    pub fn empty(rows: usize, cols: usize, symbols: usize) -> Self {
        Self {
            rows,
            cols,
            symbols,
            cells: vec![None; rows * cols],
        }
    }

    /// Validates a grid given as `rows` vectors of `cols` cells each.
    pub fn from_grid(
        rows: usize,
        cols: usize,
        symbols: usize,
        grid: &[Vec<Option<usize>>],
    ) -> Result<Self, PlrError> {
        if grid.len() != rows || grid.iter().any(|row| row.len() != cols) {
            return Err(PlrError::BadShape { rows, cols });
        }
        let cells = grid.iter().flatten().copied().collect();
        Self::from_cells(rows, cols, symbols, cells)
    }

    /// Validates a row-major cell vector.
    pub fn from_cells(
        rows: usize,
        cols: usize,
        symbols: usize,
        cells: Vec<Option<usize>>,
    ) -> Result<Self, PlrError> {
        if cells.len() != rows * cols {
            return Err(PlrError::BadShape { rows, cols });
        }
        let mut in_row = vec![false; rows * symbols];
        let mut in_col = vec![false; cols * symbols];
        for i in 0..rows {
            for j in 0..cols {
                let Some(k) = cells[i * cols + j] else {
                    continue;
                };
                if k >= symbols {
                    return Err(PlrError::SymbolOutOfRange {
                        symbol: k + 1,
                        n: symbols,
                    });
                }
                if std::mem::replace(&mut in_row[i * symbols + k], true) {
                    return Err(PlrError::RowClash {
                        row: i + 1,
                        symbol: k + 1,
                    });
                }
                if std::mem::replace(&mut in_col[j * symbols + k], true) {
                    return Err(PlrError::ColClash {
                        col: j + 1,
                        symbol: k + 1,
                    });
                }
            }
        }
        Ok(Self {
            rows,
            cols,
            symbols,
            cells,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn symbols(&self) -> usize {
        self.symbols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.cells[row * self.cols + col]
    }

    /// Row-major cell slice.
    pub fn cells(&self) -> &[Option<usize>] {
        &self.cells
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> Vec<Entry> {
        self.entries_iter().collect()
    }

    pub fn entries_iter(&self) -> impl Iterator<Item = Entry> + '_ {
        self.cells.iter().enumerate().filter_map(move |(idx, c)| {
            c.map(|sym| Entry {
                row: idx / self.cols,
                col: idx % self.cols,
                sym,
            })
        })
    }

    pub fn entry_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }

    pub fn is_full(&self) -> bool {
        self.cells.iter().all(|c| c.is_some())
    }

    /// Whether `(row, col) -> sym` can be added without breaking the
    /// Latin property (the cell must be empty).
    pub fn can_place(&self, row: usize, col: usize, sym: usize) -> bool {
        self.get(row, col).is_none()
            && (0..self.cols).all(|j| self.get(row, j) != Some(sym))
            && (0..self.rows).all(|i| self.get(i, col) != Some(sym))
    }

    /// Sets a cell after checking [`Self::can_place`]; returns whether it was set.
    pub fn try_place(&mut self, row: usize, col: usize, sym: usize) -> bool {
        if sym < self.symbols && self.can_place(row, col, sym) {
            self.cells[row * self.cols + col] = Some(sym);
            true
        } else {
            false
        }
    }

    pub(crate) fn clear(&mut self, row: usize, col: usize) {
        self.cells[row * self.cols + col] = None;
    }

    fn check_degrees(&self, t: &Isotopism) -> Result<(), PlrError> {
        if t.alpha.degree() != self.rows
            || t.beta.degree() != self.cols
            || t.gamma.degree() != self.symbols
        {
            return Err(PlrError::DegreeMismatch {
                alpha: t.alpha.degree(),
                beta: t.beta.degree(),
                gamma: t.gamma.degree(),
                rows: self.rows,
                cols: self.cols,
                symbols: self.symbols,
            });
        }
        Ok(())
    }

    /// The rectangle `L^t` whose entry set is `{(α(i), β(j), γ(k))}`.
    pub fn apply_isotopism(&self, t: &Isotopism) -> Result<Self, PlrError> {
        self.check_degrees(t)?;
        let mut cells = vec![None; self.cells.len()];
        for e in self.entries_iter() {
            cells[t.alpha.apply(e.row) * self.cols + t.beta.apply(e.col)] =
                Some(t.gamma.apply(e.sym));
        }
        Ok(Self {
            cells,
            ..self.clone()
        })
    }

    /// Whether `L^t = L`.
    pub fn is_autotopism(&self, t: &Isotopism) -> Result<bool, PlrError> {
        self.check_degrees(t)?;
        // t is a bijection on cells, so mapping every entry onto an equal
        // entry of L already forces equality of the entry sets.
        Ok(self.entries_iter().all(|e| {
            self.get(t.alpha.apply(e.row), t.beta.apply(e.col)) == Some(t.gamma.apply(e.sym))
        }))
    }

    /// Determines the symbol permutations completing `(alpha, beta)` to an
    /// autotopism, by setting `γ(L[i,j]) = L[α(i), β(j)]` entry by entry.
    pub fn complete_symbol_permutation(
        &self,
        alpha: &Permutation,
        beta: &Permutation,
    ) -> Result<SymbolCompletion, CompletionFailure> {
        if alpha.degree() != self.rows || beta.degree() != self.cols {
            return Err(CompletionFailure::DegreeMismatch(
                PlrError::DegreeMismatch {
                    alpha: alpha.degree(),
                    beta: beta.degree(),
                    gamma: self.symbols,
                    rows: self.rows,
                    cols: self.cols,
                    symbols: self.symbols,
                },
            ));
        }
        let mut forward = vec![None; self.symbols];
        let mut backward = vec![None; self.symbols];
        for e in self.entries_iter() {
            let Some(target) = self.get(alpha.apply(e.row), beta.apply(e.col)) else {
                return Err(CompletionFailure::TargetUndefined { entry: e });
            };
            match forward[e.sym] {
                Some(prev) if prev != target => {
                    return Err(CompletionFailure::ForwardConflict {
                        symbol: e.sym,
                        existing: prev,
                        wanted: target,
                    })
                }
                _ => {}
            }
            match backward[target] {
                Some(prev) if prev != e.sym => {
                    return Err(CompletionFailure::BackwardConflict {
                        symbol: target,
                        existing: prev,
                        wanted: e.sym,
                    })
                }
                _ => {}
            }
            forward[e.sym] = Some(target);
            backward[target] = Some(e.sym);
        }
        let used = forward.iter().filter(|f| f.is_some()).count();
        Ok(SymbolCompletion {
            forced: forward,
            completion_count: factorial(self.symbols - used),
        })
    }

    /// Removes empty rows and columns and relabels the used symbols onto
    /// `{0, .., n'-1}` in ascending order.
    pub fn reduce(&self) -> Reduction {
        let row_map: Vec<usize> = (0..self.rows)
            .filter(|&i| (0..self.cols).any(|j| self.get(i, j).is_some()))
            .collect();
        let col_map: Vec<usize> = (0..self.cols)
            .filter(|&j| (0..self.rows).any(|i| self.get(i, j).is_some()))
            .collect();
        let mut used = vec![false; self.symbols];
        for e in self.entries_iter() {
            used[e.sym] = true;
        }
        let sym_map: Vec<usize> = (0..self.symbols).filter(|&k| used[k]).collect();
        let mut relabel = vec![usize::MAX; self.symbols];
        for (new, &old) in sym_map.iter().enumerate() {
            relabel[old] = new;
        }
        let cells = row_map
            .iter()
            .flat_map(|&i| col_map.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).map(|k| relabel[k]))
            .collect();
        let reduced = Self {
            rows: row_map.len(),
            cols: col_map.len(),
            symbols: sym_map.len(),
            cells,
        };
        Reduction {
            empty_rows: self.rows - row_map.len(),
            empty_cols: self.cols - col_map.len(),
            unused_symbols: self.symbols - sym_map.len(),
            row_factor: factorial(self.rows - row_map.len()),
            col_factor: factorial(self.cols - col_map.len()),
            sym_factor: factorial(self.symbols - sym_map.len()),
            reduced,
            row_map,
            col_map,
            sym_map,
        }
    }

    /// True when no row or column is empty and every symbol is used.
    pub fn is_reduced(&self) -> bool {
        let r = self.reduce();
        r.row_map.len() == self.rows
            && r.col_map.len() == self.cols
            && r.sym_map.len() == self.symbols
    }
}

impl fmt::Display for PartialLatinRectangle {
    /// One line per row, one-based symbols, `.` for empty cells.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                match self.get(i, j) {
                    Some(k) => write!(f, "{}", k + 1)?,
                    None => f.write_str(".")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A triple `(α, β, γ)` acting on rows, columns and symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Isotopism {
    pub alpha: Permutation,
    pub beta: Permutation,
    pub gamma: Permutation,
}

impl Isotopism {
    pub fn new(alpha: Permutation, beta: Permutation, gamma: Permutation) -> Self {
        Self { alpha, beta, gamma }
    }

    pub fn identity(rows: usize, cols: usize, symbols: usize) -> Self {
        Self::new(
            Permutation::identity(rows),
            Permutation::identity(cols),
            Permutation::identity(symbols),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_identity() && self.beta.is_identity() && self.gamma.is_identity()
    }

    pub fn inverse(&self) -> Self {
        Self::new(
            self.alpha.inverse(),
            self.beta.inverse(),
            self.gamma.inverse(),
        )
    }

    /// Componentwise `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        Self::new(
            self.alpha.then(&other.alpha),
            self.beta.then(&other.beta),
            self.gamma.then(&other.gamma),
        )
    }

    pub fn apply_entry(&self, e: Entry) -> Entry {
        Entry {
            row: self.alpha.apply(e.row),
            col: self.beta.apply(e.col),
            sym: self.gamma.apply(e.sym),
        }
    }
}

impl fmt::Display for Isotopism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {}", self.alpha, self.beta, self.gamma)
    }
}

/// Result of [`PartialLatinRectangle::complete_symbol_permutation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolCompletion {
    /// `forced[k]` is the image of every used symbol `k`; unused symbols are `None`.
    pub forced: Vec<Option<usize>>,
    /// Number of ways to extend `forced` to a permutation: `(n - n')!`.
    pub completion_count: BigUint,
}

impl SymbolCompletion {
    /// The completion sending unused symbols to unused symbols in ascending order.
    pub fn canonical_gamma(&self) -> Permutation {
        let n = self.forced.len();
        let mut hit = vec![false; n];
        for t in self.forced.iter().flatten() {
            hit[*t] = true;
        }
        let mut free = (0..n).filter(|&k| !hit[k]);
        let image = self
            .forced
            .iter()
            .map(|f| f.unwrap_or_else(|| free.next().expect("free target")))
            .collect();
        Permutation::from_images(image).expect("forced map is injective")
    }
}

/// Why no symbol permutation completes a given `(α, β)`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompletionFailure {
    #[error("cell image of entry {entry:?} is empty")]
    TargetUndefined { entry: Entry },
    #[error("symbol {symbol} already sent to {existing}, not {wanted}")]
    ForwardConflict {
        symbol: usize,
        existing: usize,
        wanted: usize,
    },
    #[error("symbol {symbol} already reached from {existing}, not {wanted}")]
    BackwardConflict {
        symbol: usize,
        existing: usize,
        wanted: usize,
    },
    #[error(transparent)]
    DegreeMismatch(PlrError),
}

/// Output of [`PartialLatinRectangle::reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub reduced: PartialLatinRectangle,
    pub row_factor: BigUint,
    pub col_factor: BigUint,
    pub sym_factor: BigUint,
    pub empty_rows: usize,
    pub empty_cols: usize,
    pub unused_symbols: usize,
    /// Original index of each reduced row.
    pub row_map: Vec<usize>,
    pub col_map: Vec<usize>,
    pub sym_map: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn square2() -> PartialLatinRectangle {
        PartialLatinRectangle::from_grid(2, 2, 2, &[vec![Some(0), Some(1)], vec![Some(1), Some(0)]])
            .unwrap()
    }

    #[test]
    fn validation_errors() {
        let e = PartialLatinRectangle::from_grid(1, 2, 2, &[vec![Some(0), Some(0)]]);
        assert_eq!(e, Err(PlrError::RowClash { row: 1, symbol: 1 }));
        let e = PartialLatinRectangle::from_grid(2, 1, 2, &[vec![Some(1)], vec![Some(1)]]);
        assert_eq!(e, Err(PlrError::ColClash { col: 1, symbol: 2 }));
        let e = PartialLatinRectangle::from_grid(1, 1, 2, &[vec![Some(2)]]);
        assert_eq!(e, Err(PlrError::SymbolOutOfRange { symbol: 3, n: 2 }));
        let e = PartialLatinRectangle::from_grid(2, 1, 2, &[vec![Some(1)]]);
        assert_eq!(e, Err(PlrError::BadShape { rows: 2, cols: 1 }));
        let empty =
            PartialLatinRectangle::from_grid(2, 3, 4, &[vec![None; 3], vec![None; 3]]).unwrap();
        assert_eq!(empty.entry_count(), 0);
    }

    #[test]
    fn eq1_has_25_entries() {
        let l = fixtures::eq1();
        // independent count of non-empty tokens in the transcription
        let tokens = fixtures::EQ1_TEXT
            .lines()
            .skip(1)
            .flat_map(str::split_whitespace)
            .filter(|t| *t != ".")
            .count();
        assert_eq!(tokens, 25);
        assert_eq!(l.entry_count(), 25);
        assert_eq!((l.rows(), l.cols(), l.symbols()), (6, 9, 7));
    }

    #[test]
    fn row_swap_of_order_two_square() {
        let l = square2();
        let t = Isotopism::new(
            Permutation::from_cycles(2, &[&[1, 2]]).unwrap(),
            Permutation::identity(2),
            Permutation::identity(2),
        );
        let image = l.apply_isotopism(&t).unwrap();
        assert_eq!(image.get(0, 0), Some(1));
        assert_eq!(image.get(0, 1), Some(0));
        assert_eq!(l.apply_isotopism(&Isotopism::identity(2, 2, 2)).unwrap(), l);
        assert!(l.apply_isotopism(&Isotopism::identity(2, 2, 3)).is_err());
    }

    #[test]
    fn eq1_autotopism() {
        let l = fixtures::eq1();
        let t = fixtures::eq1_autotopism();
        assert_eq!(l.apply_isotopism(&t).unwrap(), l);
        assert!(l.is_autotopism(&t).unwrap());
        assert!(l.is_autotopism(&Isotopism::identity(6, 9, 7)).unwrap());
        let rows_only = Isotopism::new(
            t.alpha.clone(),
            Permutation::identity(9),
            Permutation::identity(7),
        );
        assert!(!l.is_autotopism(&rows_only).unwrap());
    }

    #[test]
    fn completion_examples() {
        let l = square2();
        let swap = Permutation::from_cycles(2, &[&[1, 2]]).unwrap();
        let c = l
            .complete_symbol_permutation(&swap, &Permutation::identity(2))
            .unwrap();
        assert_eq!(c.forced, vec![Some(1), Some(0)]);
        assert_eq!(c.completion_count, BigUint::from(1u8));

        let eq1 = fixtures::eq1();
        let t = fixtures::eq1_autotopism();
        let c = eq1.complete_symbol_permutation(&t.alpha, &t.beta).unwrap();
        assert_eq!(c.canonical_gamma(), t.gamma);
        assert_eq!(c.completion_count, BigUint::from(1u8));

        let bad = eq1.complete_symbol_permutation(&t.alpha, &Permutation::identity(9));
        assert!(matches!(
            bad,
            Err(CompletionFailure::TargetUndefined { .. })
        ));
    }

    #[test]
    fn completion_of_identity_counts_unused_symbols() {
        let l =
            PartialLatinRectangle::from_grid(2, 2, 5, &[vec![Some(3), None], vec![None, Some(0)]])
                .unwrap();
        let c = l
            .complete_symbol_permutation(&Permutation::identity(2), &Permutation::identity(2))
            .unwrap();
        assert_eq!(c.forced, vec![Some(0), None, None, Some(3), None]);
        assert_eq!(c.completion_count, BigUint::from(6u8));
        assert!(c.canonical_gamma().is_identity());
    }

    #[test]
    fn forward_and_backward_clashes() {
        // rows: [1 2], [2 .]; swapping columns sends 1->2 and 2->1 in row 1,
        // then entry (2,1,2) lands on the empty cell (2,2).
        let l = PartialLatinRectangle::from_grid(
            2,
            2,
            3,
            &[vec![Some(0), Some(1)], vec![Some(1), None]],
        )
        .unwrap();
        let swap = Permutation::from_cycles(2, &[&[1, 2]]).unwrap();
        let r = l.complete_symbol_permutation(&Permutation::identity(2), &swap);
        assert!(matches!(r, Err(CompletionFailure::TargetUndefined { .. })));

        // [1 2], [3 1] with β=(12): γ(1)=2, γ(2)=1, then γ(3)=1 clashes backward.
        let l = PartialLatinRectangle::from_grid(
            2,
            2,
            3,
            &[vec![Some(0), Some(1)], vec![Some(2), Some(0)]],
        )
        .unwrap();
        let r = l.complete_symbol_permutation(&Permutation::identity(2), &swap);
        assert!(matches!(r, Err(CompletionFailure::BackwardConflict { .. })));
        // [1 2], [2 3]: β=(12): γ(1)=2, γ(2)=1 from row 1; row 2: γ(2)=3 clashes forward.
        let l = PartialLatinRectangle::from_grid(
            2,
            2,
            3,
            &[vec![Some(0), Some(1)], vec![Some(1), Some(2)]],
        )
        .unwrap();
        let r = l.complete_symbol_permutation(&Permutation::identity(2), &swap);
        assert!(matches!(r, Err(CompletionFailure::ForwardConflict { .. })));
    }

    #[test]
    fn reduce_examples() {
        let mut l = PartialLatinRectangle::empty(3, 3, 3);
        assert!(l.try_place(0, 0, 0));
        let red = l.reduce();
        assert_eq!(
            (
                red.reduced.rows(),
                red.reduced.cols(),
                red.reduced.symbols()
            ),
            (1, 1, 1)
        );
        assert_eq!(red.reduced.get(0, 0), Some(0));
        for f in [&red.row_factor, &red.col_factor, &red.sym_factor] {
            assert_eq!(*f, BigUint::from(2u8));
        }

        let red = PartialLatinRectangle::empty(2, 3, 4).reduce();
        assert_eq!(
            red.reduced.rows() + red.reduced.cols() + red.reduced.symbols(),
            0
        );
        assert_eq!(
            &red.row_factor * &red.col_factor * &red.sym_factor,
            BigUint::from(288u32)
        );

        let eq1 = fixtures::eq1();
        let red = eq1.reduce();
        assert_eq!(red.reduced, eq1);
        assert!(eq1.is_reduced());
    }

    #[test]
    fn reduce_relabels_symbols_in_order() {
        let l = PartialLatinRectangle::from_grid(
            3,
            3,
            6,
            &[
                vec![None, None, None],
                vec![Some(5), None, Some(2)],
                vec![None, None, Some(5)],
            ],
        )
        .unwrap();
        let red = l.reduce();
        assert_eq!(red.row_map, vec![1, 2]);
        assert_eq!(red.col_map, vec![0, 2]);
        assert_eq!(red.sym_map, vec![2, 5]);
        assert_eq!(red.reduced.cells(), &[Some(1), Some(0), None, Some(1)]);
    }
}
