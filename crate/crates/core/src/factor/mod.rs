//! Degree-bounded tree-connected factors.
//!
//! The pipeline mirrors the existence proofs: pick a maximal sub-factor `M`
//! of the forced edges with `Δ(M) ≤ m`, find a minimally m-tree-connected
//! factor containing `M` with least total excess over the degree budget,
//! and, once the excess is zero, merge the remaining forced edges back in
//! with the swap loop of [`extend_with_factor`].

mod pipeline;
mod search;
mod structure;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexFunction, VertexId};
use crate::packing::{self, ForestPacking};

pub use pipeline::{
    degree_bounded_tc_factor, edge_connected_factor, edge_connected_budget, extend_with_factor,
    Extension, FactorOutcome, Regime,
};
pub use search::{min_excess_factor, min_excess_factor_with, SearchOptions};
pub use structure::{structure_set, StructureSet};

/// A spanning factor with its degree data against a budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorResult {
    /// Edge ids of the factor, ascending.
    #[serde(rename = "factor")]
    pub edges: Vec<EdgeId>,
    pub m: usize,
    pub forced: Vec<EdgeId>,
    pub degrees: Vec<usize>,
    pub budget: VertexFunction,
    pub te: i64,
    pub bound_violations: Vec<VertexId>,
    /// True when `te` is known to be the minimum over all candidates.
    pub optimal: bool,
}

impl FactorResult {
    pub(crate) fn new(
        g: &Multigraph,
        m: usize,
        mut edges: Vec<EdgeId>,
        forced: &[EdgeId],
        budget: VertexFunction,
        optimal: bool,
    ) -> Self {
        edges.sort_unstable();
        let degrees = degrees_of(g, &edges);
        let te = total_excess(&degrees, budget.values());
        let bound_violations = (0..g.n())
            .filter(|&v| degrees[v] as i64 > budget[v])
            .collect();
        let mut forced = forced.to_vec();
        forced.sort_unstable();
        Self {
            edges,
            m,
            forced,
            degrees,
            budget,
            te,
            bound_violations,
            optimal,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "factor": self.edges,
            "m": self.m,
            "te": self.te,
            "bound_violations": self.bound_violations,
            "forced": self.forced,
            "degrees": self.degrees,
        })
    }
}

/// `te(H, h) = Σ_v max{0, d_H(v) − h(v)}`.
pub fn total_excess(degrees: &[usize], h: &[i64]) -> i64 {
    degrees
        .iter()
        .zip(h)
        .map(|(&d, &b)| (d as i64 - b).max(0))
        .sum()
}

pub(crate) fn degrees_of(g: &Multigraph, ids: &[EdgeId]) -> Vec<usize> {
    let mut d = vec![0; g.n()];
    for &id in ids {
        let e = g.edge(id).expect("edge of g");
        d[e.u] += 1;
        d[e.v] += 1;
    }
    d
}

pub(crate) fn check_forced(g: &Multigraph, m: usize, forced: &[EdgeId]) -> Result<Vec<EdgeId>> {
    g.check_edge_ids(forced)?;
    let mut ids = forced.to_vec();
    ids.sort_unstable();
    ids.dedup();
    let d = degrees_of(g, &ids);
    if let Some(v) = (0..g.n()).find(|&v| d[v] > m) {
        return Err(Error::Input(format!(
            "forced subgraph has degree {} > m = {m} at vertex {v}",
            d[v]
        )));
    }
    Ok(ids)
}

/// A maximal `M ⊆ F` with `Δ(M) ≤ m`, chosen greedily by ascending id.
pub fn maximal_bounded_subfactor(g: &Multigraph, m: usize, f: &[EdgeId]) -> Result<Vec<EdgeId>> {
    g.check_edge_ids(f)?;
    let mut ids = f.to_vec();
    ids.sort_unstable();
    ids.dedup();
    let mut d = vec![0; g.n()];
    let mut out = Vec::new();
    for id in ids {
        let e = g.edge(id).expect("checked");
        if d[e.u] < m && d[e.v] < m {
            d[e.u] += 1;
            d[e.v] += 1;
            out.push(id);
        }
    }
    Ok(out)
}

/// The packing of `M` extended to a spanning basis; the basis is a
/// minimally m-tree-connected factor containing `M`.
pub(crate) fn seeded_basis(g: &Multigraph, m: usize, forced: &[EdgeId]) -> ForestPacking {
    let rest = g.edges().iter().map(|e| e.id).filter(|id| forced.binary_search(id).is_err());
    packing::pack_edges(g, m, forced.iter().copied().chain(rest))
}

/// A minimally m-tree-connected factor of `g` containing `forced`.
pub fn minimally_tc_factor(g: &Multigraph, m: usize, forced: &[EdgeId]) -> Result<FactorResult> {
    packing::require_tree_connected(g, m)?;
    let forced = check_forced(g, m, forced)?;
    let p = seeded_basis(g, m, &forced);
    debug_assert!(forced.iter().all(|&id| p.contains(id)));
    let budget = VertexFunction::from_fn(g.n(), |v| g.degree(v) as i64);
    Ok(FactorResult::new(g, m, p.edge_ids(), &forced, budget, false))
}
