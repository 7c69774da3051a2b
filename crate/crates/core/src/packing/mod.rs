//! Tree packing: maximum forest unions, tree-connectivity with partition
//! certificates, Ω_m, tree-connected components, sparsity and minimal
//! tree-connected subgraphs.
//!
//! Everything is driven by [`ForestPacking`]. Ω_m is read off the rank
//! identity `Ω_m(G) = m·|V(G)| − rank`, and the tree-connected components are
//! found by probing whether an extra parallel copy of `uv` would still be
//! independent.

mod forest;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DisjointSets, EdgeId, Multigraph, VertexId, VertexPartition};

pub use forest::ForestPacking;

fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::Input("multiplicity m must be at least 1".into()));
    }
    Ok(())
}

fn check_nonnull(g: &Multigraph) -> Result<()> {
    if g.is_null() {
        return Err(Error::Input("operation needs a nonnull graph".into()));
    }
    Ok(())
}

/// Packs the edges of `g` in ascending id order.
pub fn max_forest_union(g: &Multigraph, m: usize) -> Result<ForestPacking> {
    check_m(m)?;
    Ok(pack_edges(g, m, g.edges().iter().map(|e| e.id)))
}

/// Packs the listed edges first (in the given order), then fills up greedily.
pub(crate) fn pack_edges(
    g: &Multigraph,
    m: usize,
    order: impl IntoIterator<Item = EdgeId>,
) -> ForestPacking {
    let mut p = ForestPacking::new(g.n(), m);
    for id in order {
        let e = *g.edge(id).expect("edge id from the graph");
        let _ = p.insert(e);
    }
    p
}

/// Rank of the m-fold forest union over the edges of `g` avoiding `removed`.
pub(crate) fn rank_avoiding(g: &Multigraph, m: usize, removed: &[bool]) -> usize {
    let mut p = ForestPacking::new(g.n(), m);
    for e in g.edges() {
        if !removed[e.u] && !removed[e.v] {
            let _ = p.insert(*e);
        }
    }
    p.rank()
}

/// `Ω_m(G∖S)` for `S` given as a membership mask. The null graph gives 0.
pub fn omega_without(g: &Multigraph, m: usize, removed: &[bool]) -> usize {
    let remaining = removed.iter().filter(|&&b| !b).count();
    m * remaining - rank_avoiding(g, m, removed)
}

/// `Ω_m(G)` as a number, without the component partition.
pub fn omega_value(g: &Multigraph, m: usize) -> Result<usize> {
    check_m(m)?;
    Ok(omega_without(g, m, &vec![false; g.n()]))
}

/// A partition refuting m-tree-connectivity: `e_G(P) < m(|P| − 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionCertificate {
    pub m: usize,
    pub partition: VertexPartition,
    /// `m(|P| − 1) − e_G(P)`, strictly positive.
    pub deficiency: usize,
}

impl PartitionCertificate {
    /// Recomputes the deficiency against `g`.
    pub fn verify(&self, g: &Multigraph) -> bool {
        if !self.partition.is_partition_of(g.n()) || self.partition.is_empty() {
            return false;
        }
        let need = self.m * (self.partition.len() - 1);
        let have = g.crossing_edges(&self.partition);
        have < need && need - have == self.deficiency
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "kind": "partition",
            "m": self.m,
            "parts": self.partition,
            "deficiency": self.deficiency,
        })
    }
}

/// Outcome of [`is_m_tree_connected`].
#[derive(Debug, Clone)]
pub enum TreeConnectivity {
    /// `m` edge-disjoint spanning trees.
    Connected(ForestPacking),
    Deficient(PartitionCertificate),
}

pub fn packing_json(p: &ForestPacking) -> serde_json::Value {
    serde_json::json!({
        "schema": 1,
        "kind": "packing",
        "m": p.m(),
        "forests": p.forests(),
    })
}

pub fn is_m_tree_connected(g: &Multigraph, m: usize) -> Result<TreeConnectivity> {
    check_m(m)?;
    check_nonnull(g)?;
    let p = max_forest_union(g, m)?;
    if p.rank() == m * (g.n() - 1) {
        return Ok(TreeConnectivity::Connected(p));
    }
    let partition = components_from_packing(&p);
    let deficiency = m * (partition.len() - 1) - g.crossing_edges(&partition);
    Ok(TreeConnectivity::Deficient(PartitionCertificate {
        m,
        partition,
        deficiency,
    }))
}

/// Convenience wrapper returning the certificate as an error.
pub fn require_tree_connected(g: &Multigraph, m: usize) -> Result<ForestPacking> {
    match is_m_tree_connected(g, m)? {
        TreeConnectivity::Connected(p) => Ok(p),
        TreeConnectivity::Deficient(c) => Err(Error::NotTreeConnected(c)),
    }
}

/// Ω_m with its witness partition (the m-tree-connected components).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OmegaValue {
    pub m: usize,
    pub value: usize,
    pub witness: VertexPartition,
}

pub fn omega(g: &Multigraph, m: usize) -> Result<OmegaValue> {
    check_m(m)?;
    if g.is_null() {
        return Ok(OmegaValue {
            m,
            value: 0,
            witness: VertexPartition::new(Vec::new())?,
        });
    }
    let p = max_forest_union(g, m)?;
    let value = m * g.n() - p.rank();
    Ok(OmegaValue {
        m,
        value,
        witness: components_from_packing(&p),
    })
}

pub fn tree_connected_components(g: &Multigraph, m: usize) -> Result<VertexPartition> {
    check_m(m)?;
    check_nonnull(g)?;
    Ok(components_from_packing(&max_forest_union(g, m)?))
}

/// `u`, `v` share a component iff a parallel `uv` copy is dependent; each
/// failed probe also hands back a whole tight set, which is merged at once.
pub(crate) fn components_from_packing(p: &ForestPacking) -> VertexPartition {
    let n = p.n();
    let mut dsu = DisjointSets::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if dsu.same(u, v) {
                continue;
            }
            if let Err(k) = p.probe(u, v) {
                for &w in &k[1..] {
                    dsu.union(k[0], w);
                }
            }
        }
    }
    dsu.partition()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sparsity {
    Sparse,
    /// A vertex set with `e_G(S) > m|S| − m`.
    Dense { witness: Vec<VertexId> },
}

pub fn is_m_sparse(g: &Multigraph, m: usize) -> Result<Sparsity> {
    check_m(m)?;
    check_nonnull(g)?;
    let mut p = ForestPacking::new(g.n(), m);
    for e in g.edges() {
        if let Err(k) = p.insert(*e) {
            return Ok(Sparsity::Dense { witness: k });
        }
    }
    Ok(Sparsity::Sparse)
}

/// A subgraph given by vertex and edge-id sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subgraph {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

/// An edge-deletion-minimal m-tree-connected subgraph of `h` containing `x`
/// and `y`.
pub fn minimal_tc_subgraph(
    h: &Multigraph,
    m: usize,
    x: VertexId,
    y: VertexId,
) -> Result<Subgraph> {
    check_m(m)?;
    if x >= h.n() || y >= h.n() {
        return Err(Error::Input(format!("vertex out of range 0..{}", h.n())));
    }
    if x == y {
        return Ok(Subgraph {
            vertices: vec![x],
            edges: Vec::new(),
        });
    }
    let all: Vec<EdgeId> = h.edge_ids();
    let Err(k) = tight_set(h, m, &all, x, y) else {
        return Err(Error::Domain(format!(
            "vertices {x} and {y} lie in different {m}-tree-connected components"
        )));
    };
    let mut current = edges_inside(h, &all, &k);
    let mut i = 0;
    while i < current.len() {
        let e = current[i];
        let without: Vec<EdgeId> = current.iter().copied().filter(|&id| id != e).collect();
        match tight_set(h, m, &without, x, y) {
            Err(k) => {
                current = edges_inside(h, &without, &k);
                // `current` stays sorted; everything below `e` was kept.
                i = current.partition_point(|&id| id < e);
            }
            Ok(()) => i += 1,
        }
    }
    let mut vertices: Vec<VertexId> = current
        .iter()
        .flat_map(|&id| {
            let e = h.edge(id).expect("edge of h");
            [e.u, e.v]
        })
        .collect();
    vertices.sort_unstable();
    vertices.dedup();
    Ok(Subgraph {
        vertices,
        edges: current,
    })
}

fn tight_set(
    h: &Multigraph,
    m: usize,
    ids: &[EdgeId],
    x: VertexId,
    y: VertexId,
) -> std::result::Result<(), Vec<VertexId>> {
    pack_edges(h, m, ids.iter().copied()).probe(x, y)
}

fn edges_inside(h: &Multigraph, ids: &[EdgeId], set: &[VertexId]) -> Vec<EdgeId> {
    let mask = h.mask_of(set);
    ids.iter()
        .copied()
        .filter(|&id| {
            let e = h.edge(id).expect("edge of h");
            mask[e.u] && mask[e.v]
        })
        .collect()
}
