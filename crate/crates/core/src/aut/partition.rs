use std::collections::VecDeque;

use crate::graph::ColoredGraph;

/// Ordered partition of `0..n` stored as contiguous cells of one array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPartition {
    elems: Vec<usize>,
    /// Start of the cell holding each vertex.
    start_of: Vec<usize>,
    /// Cell length, valid at cell starts only.
    len_at: Vec<usize>,
    cell_count: usize,
}

impl OrderedPartition {
    pub fn unit(n: usize) -> Self {
        Self::from_colors(&vec![0; n])
    }

    /// One cell per color, in increasing color order.
    pub fn from_colors(colors: &[usize]) -> Self {
        let n = colors.len();
        let mut elems: Vec<usize> = (0..n).collect();
        elems.sort_by_key(|&v| colors[v]);
        let mut p = Self {
            elems,
            start_of: vec![0; n],
            len_at: vec![0; n],
            cell_count: 0,
        };
        let mut s = 0;
        while s < n {
            let c = colors[p.elems[s]];
            let mut e = s;
            while e < n && colors[p.elems[e]] == c {
                p.start_of[p.elems[e]] = s;
                e += 1;
            }
            p.len_at[s] = e - s;
            p.cell_count += 1;
            s = e;
        }
        p
    }

    pub fn from_cells(n: usize, cells: &[Vec<usize>]) -> Self {
        let mut colors = vec![usize::MAX; n];
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                colors[v] = c;
            }
        }
        assert!(
            colors.iter().all(|&c| c != usize::MAX),
            "cells must cover 0..n"
        );
        Self::from_colors(&colors)
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn cell_count(&self) -> usize {
        self.cell_count
    }

    pub fn is_discrete(&self) -> bool {
        self.cell_count == self.elems.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn cell_starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut s = 0;
        std::iter::from_fn(move || {
            (s < self.elems.len()).then(|| {
                let out = s;
                s += self.len_at[s];
                out
            })
        })
    }

    pub fn cell(&self, start: usize) -> &[usize] {
        &self.elems[start..start + self.len_at[start]]
    }

    pub fn cells(&self) -> Vec<Vec<usize>> {
        self.cell_starts().map(|s| self.cell(s).to_vec()).collect()
    }

    pub fn cell_start_of(&self, v: usize) -> usize {
        self.start_of[v]
    }

    /// First non-singleton cell of minimum size.
    pub fn target_cell(&self) -> Option<usize> {
        self.cell_starts()
            .filter(|&s| self.len_at[s] > 1)
            .min_by_key(|&s| (self.len_at[s], s))
    }

    /// Splits `v` off the front of its cell and returns the new singleton's start.
    pub fn individualize(&mut self, v: usize) -> usize {
        let s = self.start_of[v];
        let len = self.len_at[s];
        debug_assert!(len > 1);
        let pos = s + self.elems[s..s + len]
            .iter()
            .position(|&x| x == v)
            .expect("in cell");
        self.elems.swap(s, pos);
        self.len_at[s] = 1;
        self.len_at[s + 1] = len - 1;
        for &x in &self.elems[s + 1..s + len] {
            self.start_of[x] = s + 1;
        }
        self.cell_count += 1;
        s
    }
}

/// Running hash of the refinement steps, used to compare search nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Trace(u64);

impl Trace {
    pub(crate) fn new() -> Self {
        Trace(0xcbf2_9ce4_8422_2325)
    }

    fn push(&mut self, x: u64) {
        self.0 = (self.0 ^ x)
            .wrapping_mul(0x0000_0100_0000_01b3)
            .rotate_left(17);
    }
}

/// Coarsest equitable partition finer than `p`.
pub fn equitable_refinement(g: &ColoredGraph, p: &OrderedPartition) -> OrderedPartition {
    let mut out = p.clone();
    let all: Vec<usize> = out.cell_starts().collect();
    refine(g, &mut out, &all, &mut Trace::new());
    out
}

/// Refines `p` in place until equitable, starting from the given splitters.
/// Cells split in place, fragments ordered by neighbor count ascending.
pub(crate) fn refine(
    g: &ColoredGraph,
    p: &mut OrderedPartition,
    splitters: &[usize],
    trace: &mut Trace,
) {
    let n = p.len();
    let mut queue: VecDeque<usize> = splitters.iter().copied().collect();
    let mut queued = vec![false; n];
    for &s in splitters {
        queued[s] = true;
    }
    let mut count = vec![0u32; n];
    let mut touched = Vec::new();
    let mut touched_cells = Vec::new();
    while let Some(w) = queue.pop_front() {
        queued[w] = false;
        if p.is_discrete() {
            break;
        }
        let wlen = p.len_at[w];
        trace.push(((w as u64) << 32) | wlen as u64);
        for idx in w..w + wlen {
            for &x in g.neighbors(p.elems[idx]) {
                if count[x] == 0 {
                    touched.push(x);
                }
                count[x] += 1;
            }
        }
        touched_cells.clear();
        touched_cells.extend(touched.iter().map(|&x| p.start_of[x]));
        touched_cells.sort_unstable();
        touched_cells.dedup();
        for &s in &touched_cells {
            let len = p.len_at[s];
            let cell = &mut p.elems[s..s + len];
            cell.sort_by_key(|&x| count[x]);
            let mut frags = Vec::new();
            let mut a = 0;
            while a < len {
                let c = count[cell[a]];
                let mut b = a;
                while b < len && count[cell[b]] == c {
                    b += 1;
                }
                frags.push((s + a, b - a));
                trace.push(((s as u64) << 40) ^ ((c as u64) << 20) ^ (b - a) as u64);
                a = b;
            }
            if frags.len() == 1 {
                continue;
            }
            for &(fs, fl) in &frags {
                p.len_at[fs] = fl;
                for &x in &p.elems[fs..fs + fl] {
                    p.start_of[x] = fs;
                }
            }
            p.cell_count += frags.len() - 1;
            // If the parent was still waiting, every fragment must wait too;
            // otherwise the largest fragment is implied by the others.
            let skip = if queued[s] {
                Some(s)
            } else {
                frags
                    .iter()
                    .max_by_key(|&&(fs, fl)| (fl, std::cmp::Reverse(fs)))
                    .map(|f| f.0)
            };
            for &(fs, _) in &frags {
                if Some(fs) != skip && !queued[fs] {
                    queued[fs] = true;
                    queue.push_back(fs);
                }
            }
        }
        for &x in &touched {
            count[x] = 0;
        }
        touched.clear();
    }
    trace.push(p.cell_count as u64);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_equitable(g: &ColoredGraph, p: &OrderedPartition) -> bool {
        let cells = p.cells();
        cells.iter().all(|cell| {
            cells.iter().all(|target| {
                let cnt = |v: usize| g.neighbors(v).iter().filter(|w| target.contains(w)).count();
                cell.iter().all(|&v| cnt(v) == cnt(cell[0]))
            })
        })
    }

    #[test]
    fn path_splits_ends_from_middle() {
        let g = ColoredGraph::uncolored(3, [(0, 1), (1, 2)]);
        let p = equitable_refinement(&g, &OrderedPartition::unit(3));
        assert_eq!(p.cells(), vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn cycle_is_already_equitable() {
        let g = ColoredGraph::uncolored(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        let p = equitable_refinement(&g, &OrderedPartition::unit(4));
        assert_eq!(p.cell_count(), 1);
    }

    #[test]
    fn star_center_separates() {
        let g = ColoredGraph::uncolored(4, [(0, 1), (0, 2), (0, 3)]);
        let p = equitable_refinement(&g, &OrderedPartition::unit(4));
        assert_eq!(p.cells(), vec![vec![1, 2, 3], vec![0]]);
    }

    #[test]
    fn individualize_then_refine() {
        let g = ColoredGraph::uncolored(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let mut p = equitable_refinement(&g, &OrderedPartition::unit(6));
        let s = p.individualize(0);
        refine(&g, &mut p, &[s], &mut Trace::new());
        assert!(is_equitable(&g, &p));
        // distance classes from vertex 0
        assert_eq!(p.cell_count(), 4);
        assert_eq!(p.cell(p.cell_start_of(3)), &[3]);
    }

    #[test]
    fn refinement_is_equitable_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..10);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(0.4))
                .collect();
            let colors: Vec<usize> = (0..n).map(|_| rng.gen_range(0..2)).collect();
            let g = ColoredGraph::new(colors, edges);
            let p = equitable_refinement(&g, &OrderedPartition::from_colors(g.colors()));
            assert!(is_equitable(&g, &p));
        }
    }
}
