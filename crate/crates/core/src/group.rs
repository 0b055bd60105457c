use std::collections::HashSet;

use num_bigint::BigUint;

use crate::plr::{Isotopism, Reduction};

pub fn factorial(m: usize) -> BigUint {
    (1..=m).fold(BigUint::from(1u8), |acc, k| acc * BigUint::from(k))
}

/// The autotopism group of a rectangle, stored as the explicit autotopisms of
/// its reduced form plus the factorial factors for empty rows, empty columns
/// and unused symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutotopismGroup {
    /// Sorted, duplicate free.
    pub reduced_autotopisms: Vec<Isotopism>,
    pub row_factor: BigUint,
    pub col_factor: BigUint,
    pub sym_factor: BigUint,
    pub total_order: BigUint,
    /// Arguments of the three factorials.
    pub empty_rows: usize,
    pub empty_cols: usize,
    pub unused_symbols: usize,
}

impl AutotopismGroup {
    pub fn new(
        mut reduced_autotopisms: Vec<Isotopism>,
        empty_rows: usize,
        empty_cols: usize,
        unused_symbols: usize,
    ) -> Self {
        reduced_autotopisms.sort();
        reduced_autotopisms.dedup();
        let row_factor = factorial(empty_rows);
        let col_factor = factorial(empty_cols);
        let sym_factor = factorial(unused_symbols);
        let total_order =
            &row_factor * &col_factor * &sym_factor * BigUint::from(reduced_autotopisms.len());
        Self {
            reduced_autotopisms,
            row_factor,
            col_factor,
            sym_factor,
            total_order,
            empty_rows,
            empty_cols,
            unused_symbols,
        }
    }

    /// Attaches the factors of `reduction` to autotopisms of its reduced rectangle.
    pub fn from_reduction(reduction: &Reduction, reduced_autotopisms: Vec<Isotopism>) -> Self {
        Self::new(
            reduced_autotopisms,
            reduction.empty_rows,
            reduction.empty_cols,
            reduction.unused_symbols,
        )
    }

    /// The group whose reduced part is only the identity.
    pub fn trivial(reduction: &Reduction) -> Self {
        let red = &reduction.reduced;
        Self::from_reduction(
            reduction,
            vec![Isotopism::identity(red.rows(), red.cols(), red.symbols())],
        )
    }

    pub fn reduced_order(&self) -> usize {
        self.reduced_autotopisms.len()
    }

    /// Whether the reduced list contains the identity and is closed under
    /// composition and inverses.
    pub fn is_closed(&self) -> bool {
        is_group(&self.reduced_autotopisms)
    }
}

pub fn is_group(elements: &[Isotopism]) -> bool {
    let Some(first) = elements.first() else {
        return false;
    };
    let set: HashSet<&Isotopism> = elements.iter().collect();
    let id = Isotopism::identity(
        first.alpha.degree(),
        first.beta.degree(),
        first.gamma.degree(),
    );
    if !set.contains(&id) {
        return false;
    }
    elements
        .iter()
        .all(|a| set.contains(&a.inverse()) && elements.iter().all(|b| set.contains(&a.then(b))))
}
