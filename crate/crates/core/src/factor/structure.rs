use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexFunction, VertexId};
use crate::packing::{self, omega_without};

use super::search::{min_excess_factor_with, SearchOptions};
use super::FactorResult;

/// Components up to this size are searched exhaustively for replacements.
const EXACT_COMPONENT: usize = 12;

/// The set `S = V_n` certifying that a minimum-excess factor cannot be
/// improved, together with the chain `V_1 ⊆ V_2 ⊆ … ⊆ V_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureSet {
    pub set: Vec<VertexId>,
    pub chain: Vec<Vec<VertexId>>,
}

/// Computes the fixpoint for a minimally m-tree-connected factor `factor`
/// (whose `forced` edges play the role of `M`) against the budget `h`.
///
/// A vertex `v` outside `V_{i−1}` joins `V_i` when no rearrangement of the
/// factor inside the tree-connected component `X` of `H∖V_{i−1}` holding `v`
/// brings `d(v)` below `h(v)` while keeping every other vertex of `X` within
/// budget. That question is itself a zero-excess search on `G[X]`.
pub fn structure_set(
    g: &Multigraph,
    m: usize,
    factor: &FactorResult,
    h: &VertexFunction,
) -> Result<StructureSet> {
    structure_set_with(g, m, factor, h, 50)
}

pub fn structure_set_with(
    g: &Multigraph,
    m: usize,
    factor: &FactorResult,
    h: &VertexFunction,
    plateau_factor: usize,
) -> Result<StructureSet> {
    h.check_total(g.n())?;
    let n = g.n();
    let hg = g.spanning_subgraph(&factor.edges)?;
    let dh = hg.degrees();
    let v1: Vec<VertexId> = (0..n).filter(|&v| dh[v] as i64 > h[v]).collect();
    let mut chain = vec![v1.clone()];
    let mut current = v1;

    while !current.is_empty() {
        let rest = hg.delete_vertices(&current)?;
        let kept: Vec<VertexId> = {
            let gone = hg.mask_of(&current);
            (0..n).filter(|&v| !gone[v]).collect()
        };
        if kept.is_empty() {
            break;
        }
        let comps = packing::tree_connected_components(&rest, m)?;
        let mut added = Vec::new();
        for part in comps.parts() {
            let x: Vec<VertexId> = part.iter().map(|&i| kept[i]).collect();
            for &v in &x {
                if !has_relief(g, m, &hg, &dh, factor, h, &x, v, plateau_factor)? {
                    added.push(v);
                }
            }
        }
        if added.is_empty() {
            break;
        }
        current.extend(added);
        current.sort_unstable();
        chain.push(current.clone());
    }

    let set = current;
    let mask = g.mask_of(&set);
    if omega_without(g, m, &mask) != omega_without(&hg, m, &mask) {
        return Err(Error::Internal(
            "structure set does not equalise Ω_m(G∖S) and Ω_m(H∖S)".into(),
        ));
    }
    if let Some(&v) = set.iter().find(|&&v| (dh[v] as i64) < h[v]) {
        return Err(Error::Internal(format!(
            "structure set contains vertex {v} below its budget"
        )));
    }
    Ok(StructureSet { set, chain })
}

/// Is there a replacement of `H[X]` keeping `M`, with `d(v) < h(v)` and every
/// other vertex of `X` within budget?
#[allow(clippy::too_many_arguments)]
fn has_relief(
    g: &Multigraph,
    m: usize,
    hg: &Multigraph,
    dh: &[usize],
    factor: &FactorResult,
    h: &VertexFunction,
    x: &[VertexId],
    v: VertexId,
    plateau_factor: usize,
) -> Result<bool> {
    let gx = g.induced_subgraph(x)?;
    let inside = hg.induced_subgraph(x)?;
    let d_inside = inside.degrees();
    let caps = VertexFunction::from_fn(x.len(), |i| {
        let w = x[i];
        let outside = dh[w] - d_inside[i];
        let slack = if w == v { 1 } else { 0 };
        h[w] - slack - outside as i64
    });
    let forced: Vec<EdgeId> = factor
        .forced
        .iter()
        .copied()
        .filter(|&id| gx.contains_edge(id))
        .collect();
    let opts = SearchOptions {
        plateau_factor,
        exhaustive: Some(x.len() <= EXACT_COMPONENT),
        ..Default::default()
    };
    let r = min_excess_factor_with(&gx, m, &forced, &caps, &opts)?;
    Ok(r.te == 0)
}
