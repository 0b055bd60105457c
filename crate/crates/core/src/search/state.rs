use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Alpha,
    Beta,
    Gamma,
}

/// Why a designation `from -> to` was refused.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clash {
    /// `map(from)` is already something else.
    Forward {
        kind: MapKind,
        from: usize,
        existing: usize,
    },
    /// `map⁻¹(to)` is already something else.
    Backward {
        kind: MapKind,
        to: usize,
        existing: usize,
    },
}

/// Partial row, column and symbol maps with their inverses, plus an undo log.
#[derive(Debug, Clone)]
pub struct PartialAssignment {
    fwd: [Vec<Option<usize>>; 3],
    inv: [Vec<Option<usize>>; 3],
    log: Vec<(MapKind, usize)>,
}

fn slot(kind: MapKind) -> usize {
    match kind {
        MapKind::Alpha => 0,
        MapKind::Beta => 1,
        MapKind::Gamma => 2,
    }
}

impl PartialAssignment {
    pub fn new(rows: usize, cols: usize, symbols: usize) -> Self {
        Self {
            fwd: [vec![None; rows], vec![None; cols], vec![None; symbols]],
            inv: [vec![None; rows], vec![None; cols], vec![None; symbols]],
            log: Vec::new(),
        }
    }

    #[inline]
    pub fn get(&self, kind: MapKind, from: usize) -> Option<usize> {
        self.fwd[slot(kind)][from]
    }

    #[inline]
    pub fn get_inverse(&self, kind: MapKind, to: usize) -> Option<usize> {
        self.inv[slot(kind)][to]
    }

    /// Designates `from -> to` unless it clashes; a repeat of an existing
    /// designation is accepted without logging.
    pub fn assign(&mut self, kind: MapKind, from: usize, to: usize) -> Result<(), Clash> {
        let s = slot(kind);
        match (self.fwd[s][from], self.inv[s][to]) {
            (Some(t), _) if t != to => Err(Clash::Forward {
                kind,
                from,
                existing: t,
            }),
            (_, Some(f)) if f != from => Err(Clash::Backward {
                kind,
                to,
                existing: f,
            }),
            (Some(_), _) => Ok(()),
            _ => {
                self.fwd[s][from] = Some(to);
                self.inv[s][to] = Some(from);
                self.log.push((kind, from));
                Ok(())
            }
        }
    }

    pub fn mark(&self) -> usize {
        self.log.len()
    }

    /// Reverts every designation made since `mark`.
    pub fn undo_to(&mut self, mark: usize) {
        while self.log.len() > mark {
            let (kind, from) = self.log.pop().expect("log entry");
            let s = slot(kind);
            let to = self.fwd[s][from].take().expect("logged designation");
            self.inv[s][to] = None;
        }
    }

    /// The full permutation, if every point is designated.
    pub fn permutation(&self, kind: MapKind) -> Option<Permutation> {
        let image = self.fwd[slot(kind)]
            .iter()
            .copied()
            .collect::<Option<Vec<_>>>()?;
        Permutation::from_images(image).ok()
    }
}
