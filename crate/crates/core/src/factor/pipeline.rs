use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::edge_connectivity;
use crate::graph::{EdgeId, Multigraph, VertexFunction, VertexId};
use crate::packing::{self, minimal_tc_subgraph, TreeConnectivity};
use crate::util::ceil_div;
use crate::verify::{self, ConditionReport, Hypothesis, VerifyOptions};

use super::search::{min_excess_factor_with, SearchOptions};
use super::structure::structure_set;
use super::{degrees_of, maximal_bounded_subfactor, FactorResult};

/// Largest order for which a failed search is explained by full enumeration
/// of the hypothesis; larger graphs fall back to the structure set.
const WITNESS_ENUMERATION_MAX_N: usize = 14;

#[derive(Debug, Clone, Serialize)]
pub enum FactorOutcome {
    Found(FactorResult),
    /// A vertex set violating the sufficient condition.
    Witness {
        set: Vec<VertexId>,
        report: Option<ConditionReport>,
    },
    /// The search ended above zero excess without a violating set.
    SearchFailure { best_te: i64 },
}

impl FactorOutcome {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            FactorOutcome::Found(r) => r.to_json(),
            FactorOutcome::Witness { set, report } => serde_json::json!({
                "schema": 1,
                "witness_S": set,
                "report": report.as_ref().map(|r| r.to_json()),
            }),
            FactorOutcome::SearchFailure { best_te } => serde_json::json!({
                "schema": 1,
                "search_failure": true,
                "best_te": best_te,
            }),
        }
    }

    pub fn found(&self) -> Option<&FactorResult> {
        match self {
            FactorOutcome::Found(r) => Some(r),
            _ => None,
        }
    }
}

/// An m-tree-connected factor `H ⊇ F` with `d_H(v) ≤ f(v) + max{0, d_F(v) − m}`
/// on `X` (all vertices when `x` is `None`).
pub fn degree_bounded_tc_factor(
    g: &Multigraph,
    m: usize,
    forced: &[EdgeId],
    f: &VertexFunction,
    x: Option<&[VertexId]>,
) -> Result<FactorOutcome> {
    degree_bounded_tc_factor_with(g, m, forced, f, x, &SearchOptions::default())
}

pub fn degree_bounded_tc_factor_with(
    g: &Multigraph,
    m: usize,
    forced: &[EdgeId],
    f: &VertexFunction,
    x: Option<&[VertexId]>,
    opts: &SearchOptions,
) -> Result<FactorOutcome> {
    let n = g.n();
    f.check_total(n)?;
    let domain: Vec<VertexId> = match x {
        Some(x) => {
            let mut x = x.to_vec();
            x.sort_unstable();
            x.dedup();
            if let Some(&v) = x.iter().find(|&&v| v >= n) {
                return Err(Error::Input(format!("vertex {v} out of range")));
            }
            x
        }
        None => (0..n).collect(),
    };
    f.check_positive_on(&domain)?;
    g.check_edge_ids(forced)?;
    packing::require_tree_connected(g, m)?;

    let mut in_x = vec![false; n];
    for &v in &domain {
        in_x[v] = true;
    }
    let dg = g.degrees();
    let h = VertexFunction::from_fn(n, |v| if in_x[v] { f[v] } else { dg[v] as i64 + 1 });
    let m_edges = maximal_bounded_subfactor(g, m, forced)?;
    let tree = min_excess_factor_with(g, m, &m_edges, &h, opts)?;

    if tree.te == 0 {
        let ext = extend_with_factor(g, m, &tree.edges, &m_edges, forced)?;
        let mut forced_sorted = forced.to_vec();
        forced_sorted.sort_unstable();
        forced_sorted.dedup();
        let df = degrees_of(g, &forced_sorted);
        let bound = VertexFunction::from_fn(n, |v| {
            if in_x[v] {
                f[v] + (df[v] as i64 - m as i64).max(0)
            } else {
                dg[v] as i64
            }
        });
        let result = FactorResult::new(g, m, ext.edges, &forced_sorted, bound, true);
        if !result.bound_violations.is_empty() {
            return Err(Error::Internal(format!(
                "factor violates its degree bound at {:?}",
                result.bound_violations
            )));
        }
        return Ok(FactorOutcome::Found(result));
    }

    let hypothesis = Hypothesis::TreeFactor {
        m,
        f: f.clone(),
        x: x.map(|_| domain.clone()),
    };
    if n <= WITNESS_ENUMERATION_MAX_N {
        let report = verify::check_hypothesis(g, &hypothesis, &VerifyOptions::default())?;
        if !report.holds {
            return Ok(FactorOutcome::Witness {
                set: report.witness.clone().unwrap_or_default(),
                report: Some(report),
            });
        }
    } else if let Ok(s) = structure_set(g, m, &tree, &h) {
        if verify::hypothesis_row(g, &hypothesis, &s.set)?.violated() {
            return Ok(FactorOutcome::Witness {
                set: s.set,
                report: None,
            });
        }
    }
    Ok(FactorOutcome::SearchFailure { best_te: tree.te })
}

/// Result of merging a forced factor into a tree-connected factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extension {
    /// `T₀ ∪ F`, ascending ids.
    pub edges: Vec<EdgeId>,
    /// The rearranged tree-connected factor `T₀`.
    pub base: Vec<EdgeId>,
    /// `|E(T₀) ∩ E(F)|` after each swap, starting with the initial value.
    pub overlap_history: Vec<usize>,
}

/// Extends the forced factor `F` to `T₀ ∪ F`, where `T₀` arises from the
/// m-tree-connected factor `T ⊇ M` by swaps that pull edges of `F` in.
/// `M` must be a maximal sub-factor of `F` with `Δ(M) ≤ m`.
pub fn extend_with_factor(
    g: &Multigraph,
    m: usize,
    t: &[EdgeId],
    m_edges: &[EdgeId],
    forced: &[EdgeId],
) -> Result<Extension> {
    let n = g.n();
    g.check_edge_ids(t)?;
    g.check_edge_ids(m_edges)?;
    g.check_edge_ids(forced)?;
    let sorted = |ids: &[EdgeId]| {
        let mut v = ids.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    };
    let mut t0 = sorted(t);
    let m_set = sorted(m_edges);
    let f_set = sorted(forced);
    let in_f = |id: EdgeId| f_set.binary_search(&id).is_ok();
    let in_m = |id: EdgeId| m_set.binary_search(&id).is_ok();

    if let Some(id) = m_set.iter().find(|&&id| !in_f(id) || t0.binary_search(&id).is_err()) {
        return Err(Error::Input(format!(
            "edge {id} of M must lie in both F and T"
        )));
    }
    let dm = degrees_of(g, &m_set);
    if let Some(v) = (0..n).find(|&v| dm[v] > m) {
        return Err(Error::Input(format!("Δ(M) exceeds m at vertex {v}")));
    }
    let slack: Vec<bool> = dm.iter().map(|&d| d < m).collect();
    if let Some(id) = f_set.iter().find(|&&id| {
        let e = g.edge(id).unwrap();
        !in_m(id) && slack[e.u] && slack[e.v]
    }) {
        return Err(Error::Input(format!(
            "M is not maximal in F: edge {id} could be added"
        )));
    }
    let tg = g.spanning_subgraph(&t0)?;
    if let TreeConnectivity::Deficient(c) = packing::is_m_tree_connected(&tg, m)? {
        return Err(Error::NotTreeConnected(c));
    }

    let df = degrees_of(g, &f_set);
    let overlap = |t0: &[EdgeId]| t0.iter().filter(|&&id| in_f(id)).count();
    let mut history = vec![overlap(&t0)];
    loop {
        let in_t0 = |id: EdgeId| t0.binary_search(&id).is_ok();
        let mut df0 = vec![0usize; n];
        for &id in &f_set {
            if in_t0(id) {
                let e = g.edge(id).unwrap();
                df0[e.u] += 1;
                df0[e.v] += 1;
            }
        }
        let Some(v) = (0..n).find(|&v| slack[v] && df0[v] < m.min(df[v])) else {
            break;
        };
        let vx = *f_set
            .iter()
            .find(|&&id| !in_t0(id) && g.edge(id).unwrap().touches(v))
            .ok_or_else(|| Error::Internal("no forced edge left at a deficient vertex".into()))?;
        let x = g.edge(vx).unwrap().other(v);
        let t0g = g.spanning_subgraph(&t0)?;
        let q = minimal_tc_subgraph(&t0g, m, v, x)?;
        let vy = *q
            .edges
            .iter()
            .find(|&&id| !in_f(id) && g.edge(id).unwrap().touches(v))
            .ok_or_else(|| Error::Internal("minimal subgraph has no free edge at v".into()))?;
        t0.retain(|&id| id != vy);
        let pos = t0.partition_point(|&id| id < vx);
        t0.insert(pos, vx);
        let now = overlap(&t0);
        if now <= *history.last().unwrap() {
            return Err(Error::Internal("swap did not increase the overlap".into()));
        }
        history.push(now);
    }

    let mut edges = t0.clone();
    edges.extend(f_set.iter().copied());
    let edges = sorted(&edges);
    Ok(Extension {
        edges,
        base: t0,
        overlap_history: history,
    })
}

/// Which connectivity assumption the degree bound is derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regime {
    /// `G` is k-edge-connected with `k ≥ 2m`.
    EdgeConnected,
    /// `G` is k-tree-connected with `k ≥ m`.
    TreeConnected,
    /// As [`Regime::EdgeConnected`], bound only on the independent set `X`.
    EdgeConnectedIndependent(Vec<VertexId>),
    /// As [`Regime::TreeConnected`], bound only on the independent set `X`.
    TreeConnectedIndependent(Vec<VertexId>),
}

impl Regime {
    fn independent_set(&self) -> Option<&[VertexId]> {
        match self {
            Regime::EdgeConnectedIndependent(x) | Regime::TreeConnectedIndependent(x) => Some(x),
            _ => None,
        }
    }
}

/// The per-vertex budget used for a regime; `u` gets `⌊m·d_G(u)/k⌋`.
pub fn edge_connected_budget(
    g: &Multigraph,
    m: usize,
    k: usize,
    u: VertexId,
    regime: &Regime,
) -> VertexFunction {
    let (m, k) = (m as i64, k as i64);
    let d = g.degrees();
    VertexFunction::from_fn(g.n(), |v| {
        let d = d[v] as i64;
        if v == u {
            return ceil_div(m * d + 1, k) - 1;
        }
        match regime {
            Regime::EdgeConnected => ceil_div(m * (d - 2 * m), k) + 2 * m,
            Regime::TreeConnected => ceil_div(m * (d - m), k) + m,
            Regime::EdgeConnectedIndependent(_) => ceil_div(m * d, k) + m,
            Regime::TreeConnectedIndependent(_) => ceil_div(m * d, k),
        }
    })
}

/// An m-tree-connected factor containing `M` (`Δ(M) ≤ m`) whose degrees
/// follow the regime's bound, with `u` held to `⌊m·d_G(u)/k⌋`.
pub fn edge_connected_factor(
    g: &Multigraph,
    m: usize,
    k: usize,
    m_edges: &[EdgeId],
    u: VertexId,
    regime: &Regime,
) -> Result<FactorOutcome> {
    if m == 0 || k == 0 {
        return Err(Error::Input("m and k must be positive".into()));
    }
    if u >= g.n() {
        return Err(Error::Input(format!("vertex {u} out of range")));
    }
    match regime {
        Regime::EdgeConnected | Regime::EdgeConnectedIndependent(_) => {
            if k < 2 * m {
                return Err(Error::Input(format!("edge-connected regime needs k ≥ 2m, got k = {k}")));
            }
            let (found, side) = edge_connectivity(g);
            if found < k {
                return Err(Error::CutTooSmall {
                    required: k,
                    found,
                    side: side.unwrap_or_default(),
                });
            }
        }
        Regime::TreeConnected | Regime::TreeConnectedIndependent(_) => {
            if k < m {
                return Err(Error::Input(format!("tree-connected regime needs k ≥ m, got k = {k}")));
            }
            packing::require_tree_connected(g, k)?;
        }
    }
    let x = regime.independent_set();
    if let Some(x) = x {
        if !x.contains(&u) {
            return Err(Error::Input(format!(
                "the reduced vertex {u} must belong to the independent set"
            )));
        }
        let mask = g.mask_of(x);
        if let Some(e) = g.edges().iter().find(|e| mask[e.u] && mask[e.v]) {
            return Err(Error::Input(format!(
                "X is not independent: edge {} joins {} and {}",
                e.id, e.u, e.v
            )));
        }
    }
    super::check_forced(g, m, m_edges)?;
    let f = edge_connected_budget(g, m, k, u, regime);
    degree_bounded_tc_factor(g, m, m_edges, &f, x)
}
