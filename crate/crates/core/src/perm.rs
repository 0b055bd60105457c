//! Permutations of `{0, .., m-1}` stored as one-line image arrays.

use std::fmt;

use crate::error::PlrError;

/// A permutation of `{0, .., degree-1}`.
///
/// Internally zero-based; [`fmt::Display`] prints one-based cycle notation
/// with fixed points omitted (identity prints as `()`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            image: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its zero-based image array.
    pub fn from_images(image: Vec<usize>) -> Result<Self, PlrError> {
        let m = image.len();
        let mut seen = vec![false; m];
        for &v in &image {
            if v >= m || seen[v] {
                return Err(PlrError::NotAPermutation(image));
            }
            seen[v] = true;
        }
        Ok(Self { image })
    }

    /// Builds a permutation of the given degree from one-based cycles,
    /// e.g. `from_cycles(6, &[&[1, 6], &[3, 4]])` for `(16)(34)`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PlrError> {
        let mut image: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (idx, &p) in cycle.iter().enumerate() {
                let q = cycle[(idx + 1) % cycle.len()];
                if p == 0 || p > degree || q == 0 || q > degree || touched[p - 1] {
                    return Err(PlrError::BadCycle(format!("{cycles:?}")));
                }
                touched[p - 1] = true;
                image[p - 1] = q - 1;
            }
        }
        Self::from_images(image)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Self { image: inv }
    }

    /// `self.then(other)` maps `i` to `other(self(i))`.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree(),
            other.degree(),
            "degree mismatch in composition"
        );
        Self {
            image: self.image.iter().map(|&v| other.image[v]).collect(),
        }
    }

    /// Non-trivial cycles, zero-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.image.len()];
        let mut out = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.image[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.image[cur];
            }
            out.push(cycle);
        }
        out
    }

    /// All permutations of the given degree in lexicographic order.
    pub fn all(degree: usize) -> AllPermutations {
        AllPermutations {
            next: Some((0..degree).collect()),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (idx, p) in cycle.iter().enumerate() {
                if idx > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Lexicographic enumeration of `S_m`, see [`Permutation::all`].
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { image: current })
    }
}

/// Advances `v` to its lexicographic successor; false when `v` was the last.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm_strategy(max: usize) -> impl Strategy<Value = Permutation> {
        (1..=max).prop_flat_map(|m| {
            Just((0..m).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap())
        })
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
        assert!(Permutation::from_images(vec![]).is_ok());
    }

    #[test]
    fn cycle_round_trip() {
        let p = Permutation::from_cycles(9, &[&[1, 5], &[3, 8], &[4, 6], &[7, 9]]).unwrap();
        assert_eq!(p.to_string(), "(1 5)(3 8)(4 6)(7 9)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!(Permutation::identity(0).to_string(), "()");
        let c = Permutation::from_cycles(4, &[&[1, 3, 2]]).unwrap();
        assert_eq!(c.images(), &[2, 0, 1, 3]);
        assert!(Permutation::from_cycles(3, &[&[1, 4]]).is_err());
        assert!(Permutation::from_cycles(3, &[&[1, 2], &[2, 3]]).is_err());
    }

    #[test]
    fn enumerates_symmetric_group() {
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(1).count(), 1);
        assert_eq!(Permutation::all(4).count(), 24);
        let all: Vec<_> = Permutation::all(3).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    proptest! {
        #[test]
        fn group_axioms((a, b, c) in perm_strategy(7).prop_flat_map(|p| {
            let m = p.degree();
            let shuffled = || Just((0..m).collect::<Vec<_>>()).prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap());
            (Just(p), shuffled(), shuffled())
        })) {
            let id = Permutation::identity(a.degree());
            prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
            prop_assert_eq!(a.then(&id), a.clone());
            prop_assert_eq!(a.then(&a.inverse()), id.clone());
            prop_assert_eq!(a.inverse().then(&a), id);
        }
    }
}
