use crate::perm::Permutation;
use crate::plr::{Isotopism, PartialLatinRectangle};
use crate::search::{MapKind, PartialAssignment};

use super::{GraphKind, VertexTag};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    /// Sorted, without duplicates.
    pub autotopisms: Vec<Isotopism>,
    /// Graph automorphisms that did not give an autotopism.
    pub rejected: usize,
}

/// Turns automorphisms of `build_graph(l, kind, _)` into autotopisms of `l`.
pub fn decode_automorphisms(
    l: &PartialLatinRectangle,
    kind: GraphKind,
    tags: &[VertexTag],
    autos: &[Permutation],
) -> DecodeOutcome {
    let entries = l.entries();
    let mut autotopisms = Vec::new();
    let mut rejected = 0;
    for auto in autos {
        let candidate = match kind {
            GraphKind::Mmm => from_line_vertices(l, tags, auto, true),
            GraphKind::Bipartite => from_line_vertices(l, tags, auto, false).and_then(|t| {
                l.complete_symbol_permutation(&t.alpha, &t.beta)
                    .ok()
                    .map(|c| Isotopism::new(t.alpha, t.beta, c.canonical_gamma()))
            }),
            GraphKind::PlrFlat
            | GraphKind::PlrExpanded
            | GraphKind::RookFlat
            | GraphKind::RookExpanded => {
                let mut state = PartialAssignment::new(l.rows(), l.cols(), l.symbols());
                let mut ok = true;
                for (v, tag) in tags.iter().enumerate() {
                    let image = tags[auto.apply(v)];
                    let pair = match (*tag, image, kind) {
                        (VertexTag::Entry(a), VertexTag::Entry(b), _) => {
                            let (e, f) = (entries[a], entries[b]);
                            state.assign(MapKind::Alpha, e.row, f.row).is_ok()
                                && state.assign(MapKind::Beta, e.col, f.col).is_ok()
                                && (kind == GraphKind::RookExpanded
                                    || state.assign(MapKind::Gamma, e.sym, f.sym).is_ok())
                        }
                        (VertexTag::Sym(k), VertexTag::Sym(k2), GraphKind::RookExpanded) => {
                            state.assign(MapKind::Gamma, k, k2).is_ok()
                        }
                        (VertexTag::Entry(_), _, _) => false,
                        _ => true,
                    };
                    if !pair {
                        ok = false;
                        break;
                    }
                }
                ok.then(|| {
                    Some(Isotopism::new(
                        state.permutation(MapKind::Alpha)?,
                        state.permutation(MapKind::Beta)?,
                        state.permutation(MapKind::Gamma)?,
                    ))
                })
                .flatten()
            }
        };
        match candidate {
            Some(t) if l.is_autotopism(&t).unwrap_or(false) => autotopisms.push(t),
            _ => rejected += 1,
        }
    }
    autotopisms.sort();
    autotopisms.dedup();
    DecodeOutcome {
        autotopisms,
        rejected,
    }
}

/// Reads `α` and `β` (and `γ` when `with_symbols`) off the row, column and
/// symbol vertices.
fn from_line_vertices(
    l: &PartialLatinRectangle,
    tags: &[VertexTag],
    auto: &Permutation,
    with_symbols: bool,
) -> Option<Isotopism> {
    let mut alpha = vec![usize::MAX; l.rows()];
    let mut beta = vec![usize::MAX; l.cols()];
    let mut gamma = vec![usize::MAX; l.symbols()];
    for (v, tag) in tags.iter().enumerate() {
        match (*tag, tags[auto.apply(v)]) {
            (VertexTag::Row(i), VertexTag::Row(i2)) => alpha[i] = i2,
            (VertexTag::Col(j), VertexTag::Col(j2)) => beta[j] = j2,
            (VertexTag::Sym(k), VertexTag::Sym(k2)) => gamma[k] = k2,
            (VertexTag::Row(_) | VertexTag::Col(_) | VertexTag::Sym(_), _) => return None,
            _ => {}
        }
    }
    let alpha = Permutation::from_images(alpha).ok()?;
    let beta = Permutation::from_images(beta).ok()?;
    let gamma = if with_symbols {
        Permutation::from_images(gamma).ok()?
    } else {
        Permutation::identity(l.symbols())
    };
    Some(Isotopism::new(alpha, beta, gamma))
}
