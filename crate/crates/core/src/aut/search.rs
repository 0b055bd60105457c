//! Individualization-refinement search for the automorphism group.
//!
//! The leftmost path of the search tree fixes a base. Working back up the
//! path, each level looks for one automorphism per base image not yet
//! reached by the generators found so far. The generators form a strong
//! generating set, so the group is listed exactly as products of transversal
//! elements, one level at a time.

use num_bigint::BigUint;

use crate::budget::{Limits, Ticker, DEFAULT_CAP};
use crate::error::AtopError;
use crate::graph::ColoredGraph;
use crate::perm::Permutation;

use super::partition::{refine, OrderedPartition, Trace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismList {
    pub perms: Vec<Permutation>,
    pub complete: bool,
    pub cap_hit: bool,
}

/// Base, strong generators and group order.
#[derive(Debug, Clone)]
pub struct GroupStructure {
    pub base: Vec<usize>,
    pub generators: Vec<Permutation>,
    /// `generators[i]` fixes `base[..gen_level[i]]` pointwise.
    gen_level: Vec<usize>,
    pub order: BigUint,
}

impl GroupStructure {
    /// For each base level, the images of the base point with a group element
    /// realizing each.
    fn transversals(&self, n: usize) -> Vec<Vec<Vec<usize>>> {
        (0..self.base.len())
            .map(|k| {
                let gens: Vec<&Permutation> = self
                    .generators
                    .iter()
                    .zip(&self.gen_level)
                    .filter(|(_, &lvl)| lvl >= k)
                    .map(|(g, _)| g)
                    .collect();
                let b = self.base[k];
                let mut reps: Vec<Option<Vec<usize>>> = vec![None; n];
                reps[b] = Some((0..n).collect());
                let mut order = vec![b];
                let mut head = 0;
                while head < order.len() {
                    let x = order[head];
                    head += 1;
                    for g in &gens {
                        let y = g.apply(x);
                        if reps[y].is_none() {
                            let ux = reps[x].as_ref().expect("reached");
                            reps[y] = Some(ux.iter().map(|&v| g.apply(v)).collect());
                            order.push(y);
                        }
                    }
                }
                order
                    .into_iter()
                    .map(|x| reps[x].take().expect("rep"))
                    .collect()
            })
            .collect()
    }

    /// Lists up to `cap` group elements.
    pub fn elements(&self, n: usize, cap: usize) -> AutomorphismList {
        let cap_hit = self.order > BigUint::from(cap);
        let mut list: Vec<Vec<usize>> = vec![(0..n).collect()];
        for transversal in self.transversals(n).iter().rev() {
            let mut next = Vec::with_capacity((list.len() * transversal.len()).min(cap));
            'outer: for u in transversal {
                for h in &list {
                    if next.len() == cap {
                        break 'outer;
                    }
                    next.push(h.iter().map(|&x| u[x]).collect());
                }
            }
            list = next;
        }
        AutomorphismList {
            perms: list
                .into_iter()
                .map(|img| Permutation::from_images(img).expect("bijection"))
                .collect(),
            complete: !cap_hit,
            cap_hit,
        }
    }

    /// Orbit partition, cells ordered by least element.
    pub fn orbits(&self, n: usize) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in &self.generators {
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; n];
        for x in 0..n {
            let root = find(&mut parent, x);
            if index[root] == usize::MAX {
                index[root] = cells.len();
                cells.push(Vec::new());
            }
            cells[index[root]].push(x);
        }
        cells
    }
}

pub fn automorphisms(g: &ColoredGraph, cap: usize) -> AutomorphismList {
    automorphisms_within(g, &Limits::with_cap(cap)).expect("no deadline")
}

pub fn automorphisms_within(
    g: &ColoredGraph,
    limits: &Limits,
) -> Result<AutomorphismList, AtopError> {
    let structure = group_structure(g, limits)?;
    let list = structure.elements(g.vertex_count(), limits.cap);
    debug_assert!(list.perms.iter().all(|p| g.is_automorphism(p.images())));
    Ok(list)
}

pub fn orbits(g: &ColoredGraph) -> Vec<Vec<usize>> {
    orbits_within(g, &Limits::with_cap(DEFAULT_CAP)).expect("no deadline")
}

pub fn orbits_within(g: &ColoredGraph, limits: &Limits) -> Result<Vec<Vec<usize>>, AtopError> {
    Ok(group_structure(g, limits)?.orbits(g.vertex_count()))
}

pub fn group_structure(g: &ColoredGraph, limits: &Limits) -> Result<GroupStructure, AtopError> {
    let n = g.vertex_count();
    let mut ticker = Ticker::new(limits);
    let mut root = OrderedPartition::from_colors(g.colors());
    let mut trace = Trace::new();
    let all: Vec<usize> = root.cell_starts().collect();
    refine(g, &mut root, &all, &mut trace);

    let mut path = vec![root];
    let mut traces = vec![trace];
    let mut base = Vec::new();
    while let Some(s) = path.last().expect("root").target_cell() {
        let mut child = path.last().expect("root").clone();
        let v = child.elements()[s];
        base.push(v);
        let mut t = Trace::new();
        let single = child.individualize(v);
        refine(g, &mut child, &[single], &mut t);
        path.push(child);
        traces.push(t);
    }
    let first_leaf = path.last().expect("leaf").elements().to_vec();
    let mut search = LeafSearch {
        g,
        traces: &traces,
        first_leaf: &first_leaf,
        ticker: &mut ticker,
    };

    let mut generators: Vec<Permutation> = Vec::new();
    let mut gen_level = Vec::new();
    let mut uf: Vec<usize> = (0..n).collect();
    for k in (0..base.len()).rev() {
        let node = &path[k];
        let cell = node.cell(node.cell_start_of(base[k])).to_vec();
        let mut failed: Vec<usize> = Vec::new();
        for &w in &cell {
            let root_w = find(&mut uf, w);
            if root_w == find(&mut uf, base[k])
                || failed.iter().any(|&f| find(&mut uf, f) == root_w)
            {
                continue;
            }
            let mut child = node.clone();
            let single = child.individualize(w);
            match search.explore(child, single, k + 1)? {
                Some(perm) => {
                    for (x, &px) in perm.iter().enumerate() {
                        let (a, b) = (find(&mut uf, x), find(&mut uf, px));
                        if a != b {
                            uf[a.max(b)] = a.min(b);
                        }
                    }
                    generators.push(Permutation::from_images(perm).expect("bijection"));
                    gen_level.push(k);
                }
                None => failed.push(w),
            }
        }
    }

    let mut structure = GroupStructure {
        base,
        generators,
        gen_level,
        order: BigUint::from(1u8),
    };
    structure.order = structure
        .transversals(n)
        .iter()
        .fold(BigUint::from(1u8), |acc, t| acc * t.len());
    Ok(structure)
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

struct LeafSearch<'a> {
    g: &'a ColoredGraph,
    traces: &'a [Trace],
    first_leaf: &'a [usize],
    ticker: &'a mut Ticker,
}

impl LeafSearch<'_> {
    /// Refines a freshly individualized node at `level` and searches below it
    /// for a leaf that yields an automorphism.
    fn explore(
        &mut self,
        mut node: OrderedPartition,
        single: usize,
        level: usize,
    ) -> Result<Option<Vec<usize>>, AtopError> {
        self.ticker.tick()?;
        let mut t = Trace::new();
        refine(self.g, &mut node, &[single], &mut t);
        if level >= self.traces.len() || t != self.traces[level] {
            return Ok(None);
        }
        if node.is_discrete() {
            let mut image = vec![0; node.len()];
            for (&a, &b) in self.first_leaf.iter().zip(node.elements()) {
                image[a] = b;
            }
            return Ok(self.g.is_automorphism(&image).then_some(image));
        }
        let s = node.target_cell().expect("not discrete");
        for idx in 0..node.cell(s).len() {
            let mut child = node.clone();
            let v = child.cell(s)[idx];
            let single = child.individualize(v);
            if let Some(found) = self.explore(child, single, level + 1)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_graph(n: usize) -> ColoredGraph {
        ColoredGraph::uncolored(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    fn cycle(n: usize) -> ColoredGraph {
        ColoredGraph::uncolored(n, (0..n).map(|u| (u, (u + 1) % n)))
    }

    #[test]
    fn small_groups() {
        assert_eq!(automorphisms(&complete_graph(4), 100).perms.len(), 24);
        assert_eq!(automorphisms(&cycle(4), 100).perms.len(), 8);
        let k4 = complete_graph(4);
        let colored = ColoredGraph::new(vec![1, 1, 2, 2], k4.edges());
        assert_eq!(automorphisms(&colored, 100).perms.len(), 4);
        assert_eq!(
            automorphisms(&ColoredGraph::uncolored(0, []), 10)
                .perms
                .len(),
            1
        );
        assert_eq!(
            automorphisms(&ColoredGraph::uncolored(1, []), 10)
                .perms
                .len(),
            1
        );
    }

    #[test]
    fn cap_is_reported() {
        let list = automorphisms(&complete_graph(5), 100);
        assert!(list.cap_hit && !list.complete);
        assert_eq!(list.perms.len(), 100);
        let s = group_structure(&complete_graph(5), &Limits::default()).unwrap();
        assert_eq!(s.order, BigUint::from(120u8));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(orbits(&cycle(4)), vec![vec![0, 1, 2, 3]]);
        let path = ColoredGraph::uncolored(3, [(0, 1), (1, 2)]);
        assert_eq!(orbits(&path), vec![vec![0, 2], vec![1]]);
        let star = ColoredGraph::new(vec![2, 1, 1, 1], [(0, 1), (0, 2), (0, 3)]);
        assert_eq!(orbits(&star), vec![vec![0], vec![1, 2, 3]]);
    }

    #[test]
    fn petersen_graph() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let g = ColoredGraph::uncolored(10, edges);
        let list = automorphisms(&g, 1000);
        assert_eq!(list.perms.len(), 120);
        assert!(list.perms.iter().all(|p| g.is_automorphism(p.images())));
    }
}
