//! Random rectangle generators for the two benchmark suites.
//!
//! Suite A adds uniformly random triples that do not clash. Suite B takes a
//! random Latin square from the Jacobson-Matthews chain, truncates it to
//! `r x s` and deletes random entries.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::plr::PartialLatinRectangle;

/// A seeded, reproducible random stream.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

/// Mixes a base seed with sample coordinates (splitmix64 finalizer).
pub fn derive_seed(base: u64, parts: &[u64]) -> u64 {
    parts.iter().fold(base, |acc, &p| {
        let mut z = acc ^ p.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(acc << 6);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

/// Suite A: `attempts` uniform triples, each kept unless it clashes.
pub fn gen_set_a(
    rows: usize,
    cols: usize,
    symbols: usize,
    attempts: usize,
    rng: &mut RngStream,
) -> PartialLatinRectangle {
    let mut l = PartialLatinRectangle::empty(rows, cols, symbols);
    if rows == 0 || cols == 0 || symbols == 0 {
        return l;
    }
    for _ in 0..attempts {
        let i = rng.rng.gen_range(0..rows);
        let j = rng.rng.gen_range(0..cols);
        let k = rng.rng.gen_range(0..symbols);
        l.try_place(i, j, k);
    }
    l
}

/// Default number of chain moves for an order-`n` square.
pub fn default_moves(n: usize) -> usize {
    10 * n * n * n
}

/// State of the Jacobson-Matthews chain on `n x n x n` incidence cubes.
///
/// A proper state is a Latin square (every line sum 1, all values 0/1). An
/// improper state has exactly one cell holding `-1`; the three lines through
/// it each contain two `1`s.
#[derive(Debug, Clone)]
pub struct ImproperSquare {
    n: usize,
    cube: Vec<i8>,
    improper: Option<(usize, usize, usize)>,
}

impl ImproperSquare {
    /// The cyclic square `L[i][j] = i + j mod n`.
    pub fn cyclic(n: usize) -> Self {
        let mut cube = vec![0i8; n * n * n];
        for i in 0..n {
            for j in 0..n {
                cube[(i * n + j) * n + (i + j) % n] = 1;
            }
        }
        Self {
            n,
            cube,
            improper: None,
        }
    }

    #[inline]
    fn at(&self, i: usize, j: usize, k: usize) -> i8 {
        self.cube[(i * self.n + j) * self.n + k]
    }

    #[inline]
    fn add(&mut self, i: usize, j: usize, k: usize, d: i8) {
        self.cube[(i * self.n + j) * self.n + k] += d;
    }

    pub fn is_proper(&self) -> bool {
        self.improper.is_none()
    }

    /// Every line sum equals 1 and every cell is 0 or 1.
    pub fn line_sums_ok(&self) -> bool {
        let n = self.n;
        let sums = |f: &dyn Fn(usize, usize, usize) -> i8| {
            (0..n).all(|a| (0..n).all(|b| (0..n).map(|c| f(a, b, c) as i32).sum::<i32>() == 1))
        };
        self.cube.iter().all(|&v| v == 0 || v == 1)
            && sums(&|a, b, c| self.at(a, b, c))
            && sums(&|a, b, c| self.at(a, c, b))
            && sums(&|a, b, c| self.at(c, a, b))
    }

    /// One ±1 move of the chain.
    pub fn step<R: Rng>(&mut self, rng: &mut R) {
        let n = self.n;
        if n < 2 {
            return;
        }
        let (i, j, k, i2, j2, k2) = match self.improper {
            None => {
                // a zero cell of the cube, and the unique 1s on its three lines
                let (i, j, k) = loop {
                    let t = (
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                    );
                    if self.at(t.0, t.1, t.2) == 0 {
                        break t;
                    }
                };
                let i2 = (0..n)
                    .find(|&a| self.at(a, j, k) == 1)
                    .expect("proper line");
                let j2 = (0..n)
                    .find(|&b| self.at(i, b, k) == 1)
                    .expect("proper line");
                let k2 = (0..n)
                    .find(|&c| self.at(i, j, c) == 1)
                    .expect("proper line");
                (i, j, k, i2, j2, k2)
            }
            Some((i, j, k)) => {
                let pick = |cands: Vec<usize>, rng: &mut R| cands[rng.gen_range(0..cands.len())];
                let i2 = pick((0..n).filter(|&a| self.at(a, j, k) == 1).collect(), rng);
                let j2 = pick((0..n).filter(|&b| self.at(i, b, k) == 1).collect(), rng);
                let k2 = pick((0..n).filter(|&c| self.at(i, j, c) == 1).collect(), rng);
                (i, j, k, i2, j2, k2)
            }
        };
        self.add(i, j, k, 1);
        self.add(i, j2, k2, 1);
        self.add(i2, j, k2, 1);
        self.add(i2, j2, k, 1);
        self.add(i, j, k2, -1);
        self.add(i, j2, k, -1);
        self.add(i2, j, k, -1);
        self.add(i2, j2, k2, -1);
        self.improper = (self.at(i2, j2, k2) < 0).then_some((i2, j2, k2));
    }

    /// The Latin square of a proper state.
    pub fn to_square(&self) -> Option<PartialLatinRectangle> {
        if !self.is_proper() {
            return None;
        }
        let n = self.n;
        let cells = (0..n * n)
            .map(|cell| (0..n).find(|&k| self.cube[cell * n + k] == 1))
            .collect();
        PartialLatinRectangle::from_cells(n, n, n, cells).ok()
    }
}

/// A random Latin square of order `n` after `moves` chain moves from the
/// cyclic square, continuing past the budget until the state is proper.
pub fn jacobson_matthews(n: usize, moves: usize, rng: &mut RngStream) -> PartialLatinRectangle {
    let mut state = ImproperSquare::cyclic(n);
    for _ in 0..moves {
        state.step(&mut rng.rng);
    }
    while !state.is_proper() {
        state.step(&mut rng.rng);
    }
    state.to_square().expect("proper state is a Latin square")
}

/// Suite B: a random order-`n` Latin square truncated to `rows x cols`, then
/// thinned to exactly `entries` uniformly chosen entries.
pub fn gen_set_b(
    rows: usize,
    cols: usize,
    symbols: usize,
    entries: usize,
    rng: &mut RngStream,
) -> Result<PartialLatinRectangle, GeneratorError> {
    gen_set_b_with_moves(rows, cols, symbols, entries, default_moves(symbols), rng)
}

pub fn gen_set_b_with_moves(
    rows: usize,
    cols: usize,
    symbols: usize,
    entries: usize,
    moves: usize,
    rng: &mut RngStream,
) -> Result<PartialLatinRectangle, GeneratorError> {
    if symbols < rows.max(cols) {
        return Err(GeneratorError::BadParameters(format!(
            "need n >= max(r, s), got r={rows} s={cols} n={symbols}"
        )));
    }
    if entries > rows * cols {
        return Err(GeneratorError::BadParameters(format!(
            "x={entries} exceeds r*s={}",
            rows * cols
        )));
    }
    let square = jacobson_matthews(symbols, moves, rng);
    let mut l = PartialLatinRectangle::empty(rows, cols, symbols);
    for i in 0..rows {
        for j in 0..cols {
            let placed = l.try_place(i, j, square.get(i, j).expect("full square"));
            debug_assert!(placed);
        }
    }
    let mut cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (0..cols).map(move |j| (i, j)))
        .collect();
    cells.shuffle(&mut rng.rng);
    for &(i, j) in &cells[entries..] {
        l.clear(i, j);
    }
    Ok(l)
}
