//! Exhaustive oracle over all row and column permutations.

use crate::error::AtopError;
use crate::group::AutotopismGroup;
use crate::perm::{next_permutation, Permutation};
use crate::plr::{Isotopism, PartialLatinRectangle};

/// Largest `r'! * s'!` the oracle accepts by default.
pub const DEFAULT_ORACLE_BOUND: u128 = 100_000_000;

pub fn brute_force_atop(l: &PartialLatinRectangle) -> Result<AutotopismGroup, AtopError> {
    brute_force_atop_with_bound(l, DEFAULT_ORACLE_BOUND)
}

/// Enumerates every `(α, β)` of the reduced rectangle and keeps the pairs the
/// symbol completion accepts.
pub fn brute_force_atop_with_bound(
    l: &PartialLatinRectangle,
    bound: u128,
) -> Result<AutotopismGroup, AtopError> {
    let reduction = l.reduce();
    let red = &reduction.reduced;
    let (r, s, n) = (red.rows(), red.cols(), red.symbols());
    let fact = |m: usize| (1..=m as u128).try_fold(1u128, |acc, k| acc.checked_mul(k));
    let pairs = fact(r)
        .zip(fact(s))
        .and_then(|(a, b)| a.checked_mul(b))
        .unwrap_or(u128::MAX);
    if pairs > bound {
        return Err(AtopError::TooLargeForOracle { pairs, bound });
    }
    let entries = red.entries();
    let mut fwd = vec![usize::MAX; n];
    let mut bwd = vec![usize::MAX; n];
    let mut found = Vec::new();
    for alpha in Permutation::all(r) {
        let mut beta: Vec<usize> = (0..s).collect();
        loop {
            fwd.fill(usize::MAX);
            bwd.fill(usize::MAX);
            let ok = entries.iter().all(|e| {
                let Some(t) = red.get(alpha.apply(e.row), beta[e.col]) else {
                    return false;
                };
                let consistent = (fwd[e.sym] == usize::MAX || fwd[e.sym] == t)
                    && (bwd[t] == usize::MAX || bwd[t] == e.sym);
                fwd[e.sym] = t;
                bwd[t] = e.sym;
                consistent
            });
            if ok {
                let beta_perm = Permutation::from_images(beta.clone()).expect("valid");
                let completion = red
                    .complete_symbol_permutation(&alpha, &beta_perm)
                    .expect("pair passed the same checks");
                found.push(Isotopism::new(
                    alpha.clone(),
                    beta_perm,
                    completion.canonical_gamma(),
                ));
            }
            if !next_permutation(&mut beta) {
                break;
            }
        }
    }
    Ok(AutotopismGroup::from_reduction(&reduction, found))
}
