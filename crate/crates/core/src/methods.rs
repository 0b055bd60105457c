//! One entry point for every solver family.

use std::fmt;
use std::str::FromStr;

use crate::aut::{automorphisms_within, orbits_within};
use crate::budget::Limits;
use crate::error::AtopError;
use crate::graph::{build_graph, decode_automorphisms, GraphKind, VertexTag};
use crate::group::AutotopismGroup;
use crate::invariants::{triviality_certificate, InvariantKind, InvariantTable};
use crate::plr::{Isotopism, PartialLatinRectangle};
use crate::search::{alphabeta_reduced, entrywise_reduced, LineConstraints, SearchOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    AlphaBeta,
    AlphaBetaCv,
    Entrywise,
    Mmm,
    Bipartite,
    BipartiteOrbitsEntrywise,
    BipartiteOrbitsAlphaBeta,
    PlrFlat,
    PlrExpanded,
    RookFlat,
    RookExpanded,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::AlphaBeta,
        Family::AlphaBetaCv,
        Family::Entrywise,
        Family::Mmm,
        Family::Bipartite,
        Family::BipartiteOrbitsEntrywise,
        Family::BipartiteOrbitsAlphaBeta,
        Family::PlrFlat,
        Family::PlrExpanded,
        Family::RookFlat,
        Family::RookExpanded,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::AlphaBeta => "alpha-beta",
            Family::AlphaBetaCv => "alpha-beta-cv",
            Family::Entrywise => "entrywise",
            Family::Mmm => "mmm",
            Family::Bipartite => "bipartite",
            Family::BipartiteOrbitsEntrywise => "bipartite-orbits-ew",
            Family::BipartiteOrbitsAlphaBeta => "bipartite-orbits-ab",
            Family::PlrFlat => "plr-flat",
            Family::PlrExpanded => "plr-expanded",
            Family::RookFlat => "rook-flat",
            Family::RookExpanded => "rook-expanded",
        }
    }

    fn graph_kind(self) -> Option<GraphKind> {
        match self {
            Family::Mmm => Some(GraphKind::Mmm),
            Family::Bipartite => Some(GraphKind::Bipartite),
            Family::PlrFlat => Some(GraphKind::PlrFlat),
            Family::PlrExpanded => Some(GraphKind::PlrExpanded),
            Family::RookFlat => Some(GraphKind::RookFlat),
            Family::RookExpanded => Some(GraphKind::RookExpanded),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

/// A family plus an optional entry invariant, written `family` or
/// `family:invariant`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MethodSpec {
    pub family: Family,
    pub invariant: Option<InvariantKind>,
}

impl MethodSpec {
    pub fn new(family: Family, invariant: Option<InvariantKind>) -> Self {
        Self { family, invariant }
    }

    /// Every family with no invariant and with each invariant kind.
    pub fn all() -> Vec<MethodSpec> {
        Family::ALL
            .into_iter()
            .flat_map(|f| {
                std::iter::once(None)
                    .chain(InvariantKind::ALL.map(Some))
                    .map(move |k| MethodSpec::new(f, k))
            })
            .collect()
    }

    pub fn invariant_name(&self) -> &'static str {
        self.invariant.map_or("none", InvariantKind::name)
    }
}

impl fmt::Display for MethodSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.invariant {
            Some(k) => write!(f, "{}:{}", self.family, k),
            None => write!(f, "{}", self.family),
        }
    }
}

impl FromStr for MethodSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (family, invariant) = match s.split_once(':') {
            Some((f, k)) => (f, parse_invariant(k)?),
            None => (s, None),
        };
        Ok(Self::new(family.trim().parse()?, invariant))
    }
}

/// `none` or an invariant kind.
pub fn parse_invariant(s: &str) -> Result<Option<InvariantKind>, String> {
    match s.trim() {
        "none" | "" => Ok(None),
        k => k.parse().map(Some),
    }
}

/// Computes `Atop(l)` with the given method.
pub fn compute_atop(
    l: &PartialLatinRectangle,
    spec: MethodSpec,
    limits: &Limits,
) -> Result<AutotopismGroup, AtopError> {
    let reduction = l.reduce();
    let red = &reduction.reduced;
    if red.entry_count() == 0 {
        return Ok(AutotopismGroup::trivial(&reduction));
    }
    let table = spec.invariant.map(|k| InvariantTable::compute(red, k));
    if let Some(t) = &table {
        if triviality_certificate(red, t).is_trivial() {
            return Ok(AutotopismGroup::trivial(&reduction));
        }
    }
    let autos = reduced_autotopisms(red, spec, table.as_ref(), limits)?;
    Ok(AutotopismGroup::from_reduction(&reduction, autos))
}

fn reduced_autotopisms(
    red: &PartialLatinRectangle,
    spec: MethodSpec,
    table: Option<&InvariantTable>,
    limits: &Limits,
) -> Result<Vec<Isotopism>, AtopError> {
    let opts = SearchOptions {
        invariant: spec.invariant,
        use_cv: spec.family == Family::AlphaBetaCv,
        orbit_constraints: None,
        limits: *limits,
    };
    match spec.family {
        Family::AlphaBeta | Family::AlphaBetaCv => alphabeta_reduced(red, table, &opts),
        Family::Entrywise => entrywise_reduced(red, table, &opts),
        Family::BipartiteOrbitsEntrywise | Family::BipartiteOrbitsAlphaBeta => {
            let model = build_graph(red, GraphKind::Bipartite, table);
            let cells = orbits_within(&model.graph, limits)?;
            let mut rows = vec![0; red.rows()];
            let mut cols = vec![0; red.cols()];
            for (id, cell) in cells.iter().enumerate() {
                for &v in cell {
                    match model.tags[v] {
                        VertexTag::Row(i) => rows[i] = id,
                        VertexTag::Col(j) => cols[j] = id,
                        _ => unreachable!("bipartite graph has only line vertices"),
                    }
                }
            }
            let opts = SearchOptions {
                orbit_constraints: Some(LineConstraints { rows, cols }),
                ..opts
            };
            if spec.family == Family::BipartiteOrbitsEntrywise {
                entrywise_reduced(red, table, &opts)
            } else {
                alphabeta_reduced(red, table, &opts)
            }
        }
        family => {
            let kind = family.graph_kind().expect("graph family");
            let model = build_graph(red, kind, table);
            let list = automorphisms_within(&model.graph, limits)?;
            if list.cap_hit {
                return Err(AtopError::CapExceeded { cap: limits.cap });
            }
            let out = decode_automorphisms(red, kind, &model.tags, &list.perms);
            if out.autotopisms.len() > limits.cap {
                return Err(AtopError::CapExceeded { cap: limits.cap });
            }
            Ok(out.autotopisms)
        }
    }
}

/// Whether a search is still needed once reduction and the triviality
/// certificate for `kind` have been applied.
pub fn requires_computation(l: &PartialLatinRectangle, kind: Option<InvariantKind>) -> bool {
    let reduction = l.reduce();
    let red = &reduction.reduced;
    if red.entry_count() == 0 {
        return false;
    }
    match kind {
        None => true,
        Some(k) => !triviality_certificate(red, &InvariantTable::compute(red, k)).is_trivial(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use num_bigint::BigUint;

    #[test]
    fn spec_strings() {
        let s: MethodSpec = "bipartite-orbits-ew:square".parse().unwrap();
        assert_eq!(s.family, Family::BipartiteOrbitsEntrywise);
        assert_eq!(s.invariant, Some(InvariantKind::Square));
        assert_eq!(s.to_string(), "bipartite-orbits-ew:square");
        assert_eq!(
            "mmm:none".parse::<MethodSpec>().unwrap(),
            MethodSpec::new(Family::Mmm, None)
        );
        assert!("nauty".parse::<MethodSpec>().is_err());
        assert_eq!(MethodSpec::all().len(), 44);
    }

    #[test]
    fn every_method_on_eq1() {
        let l = fixtures::eq1();
        for spec in MethodSpec::all() {
            let g = compute_atop(&l, spec, &Limits::default()).unwrap();
            assert_eq!(g.total_order, BigUint::from(2u8), "{spec}");
            assert!(
                g.reduced_autotopisms.contains(&fixtures::eq1_autotopism()),
                "{spec}"
            );
        }
    }

    #[test]
    fn computation_flag() {
        assert!(!requires_computation(
            &PartialLatinRectangle::empty(5, 5, 5),
            None
        ));
        let one = crate::text::parse_plr("PLR 2 2 2\n1 .\n. .\n").unwrap();
        assert!(!requires_computation(&one, Some(InvariantKind::Sei)));
        assert!(requires_computation(&one, None));
        assert!(requires_computation(
            &fixtures::eq2(),
            Some(InvariantKind::Square)
        ));
    }
}
