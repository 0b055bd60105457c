use std::fmt::Write as _;

/// Simple undirected vertex-colored graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    colors: Vec<usize>,
    adj: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("graph text line {line}: {message}")]
pub struct GraphTextError {
    pub line: usize,
    pub message: String,
}

impl ColoredGraph {
    /// Colors are relabeled densely from 1, keeping their relative order.
    /// Duplicate edges are merged.
    ///
    /// # Panics
    /// On a loop or an endpoint out of range.
    pub fn new(colors: Vec<usize>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let n = colors.len();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range");
            assert_ne!(u, v, "loop at vertex {u}");
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let mut distinct = colors.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let colors = colors
            .iter()
            .map(|c| distinct.binary_search(c).expect("present") + 1)
            .collect();
        Self { colors, adj }
    }

    pub fn uncolored(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::new(vec![1; n], edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color_count(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Whether the vertex map `image` preserves colors and edges.
    pub fn is_automorphism(&self, image: &[usize]) -> bool {
        if image.len() != self.vertex_count() {
            return false;
        }
        let mut seen = vec![false; image.len()];
        for (v, &w) in image.iter().enumerate() {
            if w >= image.len() || seen[w] || self.colors[v] != self.colors[w] {
                return false;
            }
            seen[w] = true;
            if self.adj[v].len() != self.adj[w].len() {
                return false;
            }
        }
        self.edges().all(|(u, v)| self.has_edge(image[u], image[v]))
    }

    /// One line `GRAPH n`, then one line per vertex: index, color, neighbors.
    pub fn to_text(&self) -> String {
        let mut out = format!("GRAPH {}\n", self.vertex_count());
        for v in 0..self.vertex_count() {
            write!(out, "{v} {}", self.colors[v]).unwrap();
            for &w in &self.adj[v] {
                write!(out, " {w}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, GraphTextError> {
        let err = |line: usize, message: &str| GraphTextError {
            line,
            message: message.to_string(),
        };
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
        let n: usize = header
            .strip_prefix("GRAPH")
            .and_then(|rest| rest.trim().parse().ok())
            .ok_or_else(|| err(1, "expected `GRAPH n`"))?;
        let mut colors = vec![0; n];
        let mut edges = Vec::new();
        let mut count = 0;
        for (idx, line) in lines {
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<_, _>>()
                .map_err(|_| err(idx + 1, "expected integers"))?;
            let (&v, rest) = nums
                .split_first()
                .ok_or_else(|| err(idx + 1, "empty line"))?;
            let (&c, nbrs) = rest
                .split_first()
                .ok_or_else(|| err(idx + 1, "missing color"))?;
            if v >= n || nbrs.iter().any(|&w| w >= n || w == v) {
                return Err(err(idx + 1, "vertex out of range"));
            }
            colors[v] = c;
            edges.extend(nbrs.iter().map(|&w| (v, w)));
            count += 1;
        }
        if count != n {
            return Err(err(0, "vertex count does not match header"));
        }
        Ok(Self::new(colors, edges))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let g = ColoredGraph::new(vec![5, 2, 5], [(0, 1), (1, 2), (2, 1)]);
        assert_eq!(g.colors(), &[2, 1, 2]);
        assert_eq!(g.edge_count(), 2);
        let text = g.to_text();
        assert_eq!(text, "GRAPH 3\n0 2 1\n1 1 0 2\n2 2 1\n");
        assert_eq!(ColoredGraph::from_text(&text).unwrap(), g);
    }

    #[test]
    fn automorphism_check() {
        let path = ColoredGraph::uncolored(3, [(0, 1), (1, 2)]);
        assert!(path.is_automorphism(&[2, 1, 0]));
        assert!(!path.is_automorphism(&[1, 0, 2]));
        assert!(!path.is_automorphism(&[0, 0, 2]));
    }
}
