//! Spanning closed trails and walks with bounded visits.
//!
//! The constructive route goes through a 2-tree-connected factor with
//! degrees at most `2f(v) + 1`: its two spanning trees give a spanning
//! connected even subgraph whose degrees are then at most `2f(v)`, and an
//! Euler circuit of it meets every `v` at most `f(v)` times.

mod euler;
mod exhaustive;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{degree_bounded_tc_factor, FactorOutcome};
use crate::generators::edge_connectivity;
use crate::graph::{EdgeId, Multigraph, VertexFunction, VertexId};
use crate::packing::{self, PartitionCertificate};
use crate::util::ceil_div;
use crate::verify::{self, ConditionReport, Hypothesis, VerifyOptions};

pub use euler::{hierholzer, parity_forest, spanning_eulerian_from_2tc};
pub use exhaustive::{exhaustive_spanning_eulerian, EXHAUSTIVE_MAX_EDGES};

/// A closed trail: no edge repeats, and `visits[v] = d_L(v)/2` for its
/// edge set `L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedTrail {
    pub start: VertexId,
    pub edges: Vec<EdgeId>,
    pub visits: Vec<usize>,
}

/// A closed walk in the original graph; an edge may be traversed twice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedWalk {
    pub start: VertexId,
    /// `vertices[i]` and `vertices[i + 1]` are the ends of `edges[i]`; the
    /// last vertex equals `start`.
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub visits: Vec<usize>,
}

/// Replays an edge sequence from `start`, returning the vertex sequence.
fn replay(g: &Multigraph, start: VertexId, edges: &[EdgeId]) -> Result<Vec<VertexId>> {
    let mut seq = vec![start];
    let mut at = start;
    for &id in edges {
        let e = g
            .edge(id)
            .ok_or_else(|| Error::Input(format!("unknown edge id {id}")))?;
        if !e.touches(at) {
            return Err(Error::Input(format!("edge {id} does not leave vertex {at}")));
        }
        at = e.other(at);
        seq.push(at);
    }
    if at != start {
        return Err(Error::Input("sequence does not return to its start".into()));
    }
    Ok(seq)
}

fn visit_counts(n: usize, seq: &[VertexId]) -> Vec<usize> {
    let mut visits = vec![0; n];
    for &v in &seq[..seq.len() - 1] {
        visits[v] += 1;
    }
    visits
}

impl ClosedTrail {
    pub(crate) fn from_edges(g: &Multigraph, start: VertexId, edges: Vec<EdgeId>) -> Self {
        let seq = replay(g, start, &edges).expect("circuit replays");
        let visits = visit_counts(g.n(), &seq);
        Self { start, edges, visits }
    }

    /// Checks adjacency, closure, no repeated edge, spanning, and the
    /// visit counts against `host`.
    pub fn verify(&self, host: &Multigraph) -> Result<()> {
        let seq = replay(host, self.start, &self.edges)?;
        let mut ids = self.edges.clone();
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Input("trail repeats an edge".into()));
        }
        check_spanning(host.n(), &seq)?;
        let d = crate::factor::degrees_of(host, &self.edges);
        if self.visits != visit_counts(host.n(), &seq) || (0..host.n()).any(|v| self.visits[v] * 2 != d[v]) {
            return Err(Error::Input("visit counts do not match the trail".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        tour_json("trail", self.start, &self.edges, &self.visits)
    }
}

impl ClosedWalk {
    pub fn verify(&self, host: &Multigraph) -> Result<()> {
        let seq = replay(host, self.start, &self.edges)?;
        if seq != self.vertices {
            return Err(Error::Input("vertex sequence does not match the edges".into()));
        }
        check_spanning(host.n(), &seq)?;
        if self.visits != visit_counts(host.n(), &seq) {
            return Err(Error::Input("visit counts do not match the walk".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        tour_json("walk", self.start, &self.edges, &self.visits)
    }
}

fn check_spanning(n: usize, seq: &[VertexId]) -> Result<()> {
    if n > 1 {
        let mut seen = vec![false; n];
        for &v in seq {
            seen[v] = true;
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::Input(format!("vertex {v} is never visited")));
        }
    }
    Ok(())
}

fn tour_json(kind: &str, start: VertexId, edges: &[EdgeId], visits: &[usize]) -> serde_json::Value {
    let visits: BTreeMap<String, usize> =
        visits.iter().enumerate().map(|(v, &c)| (v.to_string(), c)).collect();
    serde_json::json!({
        "schema": 1,
        "kind": kind,
        "start": start,
        "edges": edges,
        "visits": visits,
    })
}

/// Either kind of closed tour.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Tour {
    Trail(ClosedTrail),
    Walk(ClosedWalk),
}

impl Tour {
    pub fn visits(&self) -> &[usize] {
        match self {
            Tour::Trail(t) => &t.visits,
            Tour::Walk(w) => &w.visits,
        }
    }

    pub fn edges(&self) -> &[EdgeId] {
        match self {
            Tour::Trail(t) => &t.edges,
            Tour::Walk(w) => &w.edges,
        }
    }

    pub fn verify(&self, host: &Multigraph) -> Result<()> {
        match self {
            Tour::Trail(t) => t.verify(host),
            Tour::Walk(w) => w.verify(host),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Tour::Trail(t) => t.to_json(),
            Tour::Walk(w) => w.to_json(),
        }
    }
}

/// How a positive answer was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Through a degree-bounded 2-tree-connected factor.
    Construction,
    /// By complete search after the construction gave up.
    Exhaustive,
}

/// Everything known when no tour was produced.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Negative {
    /// Complete search proved that no such object exists.
    pub proven_absent: bool,
    /// A set violating the sufficient condition.
    pub witness: Option<Vec<VertexId>>,
    pub report: Option<ConditionReport>,
    /// The host is not 2-tree-connected.
    pub certificate: Option<PartitionCertificate>,
    /// Least total excess reached by the factor search.
    pub best_te: Option<i64>,
}

impl Negative {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "found": false,
            "proven_absent": self.proven_absent,
            "witness_S": self.witness,
            "report": self.report.as_ref().map(|r| r.to_json()),
            "certificate": self.certificate.as_ref().map(|c| c.to_json()),
            "best_te": self.best_te,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub enum Outcome<T> {
    Found { value: T, method: Method },
    Negative(Negative),
}

impl<T> Outcome<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            Outcome::Found { value, .. } => Some(value),
            Outcome::Negative(_) => None,
        }
    }

    pub fn negative(&self) -> Option<&Negative> {
        match self {
            Outcome::Negative(n) => Some(n),
            _ => None,
        }
    }
}

fn check_visit_budget(f: &VertexFunction, g: &Multigraph) -> Result<()> {
    f.check_total(g.n())?;
    f.check_positive_on(&(0..g.n()).collect::<Vec<_>>())
}

fn doubled_budget(f: &VertexFunction) -> VertexFunction {
    VertexFunction::from_fn(f.len(), |v| 2 * f[v] + 1)
}

/// Records what the factor pipeline said when it did not produce a factor.
fn absorb_failure(neg: &mut Negative, outcome: Result<FactorOutcome>) -> Result<Option<Vec<EdgeId>>> {
    match outcome {
        Ok(FactorOutcome::Found(r)) => return Ok(Some(r.edges)),
        Ok(FactorOutcome::Witness { set, .. }) => neg.witness = Some(set),
        Ok(FactorOutcome::SearchFailure { best_te }) => neg.best_te = Some(best_te),
        Err(Error::NotTreeConnected(c)) => neg.certificate = Some(c),
        Err(e) => return Err(e),
    }
    Ok(None)
}

/// Attaches the full enumeration report of `hyp` when the instance is small
/// enough, replacing any witness found along the way.
fn attach_report(neg: &mut Negative, g: &Multigraph, hyp: &Hypothesis) -> Result<()> {
    let cap = if hyp.needs_omega() { verify::OMEGA_CAP } else { verify::COMPONENT_CAP };
    if g.n() <= cap {
        let report = verify::check_hypothesis(g, hyp, &VerifyOptions::default())?;
        if let Some(w) = &report.witness {
            neg.witness = Some(w.clone());
        }
        neg.report = Some(report);
    }
    Ok(())
}

/// A spanning closed trail meeting every vertex `v` at most `f(v)` times.
pub fn f_trail(g: &Multigraph, f: &VertexFunction) -> Result<Outcome<ClosedTrail>> {
    check_visit_budget(f, g)?;
    if g.n() == 1 {
        return Ok(Outcome::Found {
            value: ClosedTrail { start: 0, edges: Vec::new(), visits: vec![0] },
            method: Method::Construction,
        });
    }
    let mut neg = Negative::default();
    let factor = absorb_failure(&mut neg, degree_bounded_tc_factor(g, 2, &[], &doubled_budget(f), None))?;
    if let Some(h_edges) = factor {
        let h = g.spanning_subgraph(&h_edges)?;
        let l = spanning_eulerian_from_2tc(&h)?;
        let trail = hierholzer(&g.spanning_subgraph(&l)?, 0)?;
        check_visits(&trail.visits, f)?;
        return Ok(Outcome::Found { value: trail, method: Method::Construction });
    }
    if g.edge_count() <= EXHAUSTIVE_MAX_EDGES {
        let caps: Vec<usize> = (0..g.n()).map(|v| 2 * f[v] as usize).collect();
        match exhaustive_spanning_eulerian(g, &caps) {
            Some(l) => {
                let trail = hierholzer(&g.spanning_subgraph(&l)?, 0)?;
                check_visits(&trail.visits, f)?;
                return Ok(Outcome::Found { value: trail, method: Method::Exhaustive });
            }
            None => neg.proven_absent = true,
        }
    }
    attach_report(&mut neg, g, &Hypothesis::Trail { f: f.clone() })?;
    Ok(Outcome::Negative(neg))
}

fn check_visits(visits: &[usize], f: &VertexFunction) -> Result<()> {
    if let Some(v) = (0..visits.len()).find(|&v| visits[v] as i64 > f[v]) {
        return Err(Error::Internal(format!(
            "tour meets vertex {v} {} times, above f = {}",
            visits[v], f[v]
        )));
    }
    Ok(())
}

/// A spanning closed walk meeting every `v` at most `f(v)` times and
/// traversing every edge of the matching `matching`.
pub fn f_walk(g: &Multigraph, f: &VertexFunction, matching: &[EdgeId]) -> Result<Outcome<ClosedWalk>> {
    check_visit_budget(f, g)?;
    g.check_edge_ids(matching)?;
    let mut mids = matching.to_vec();
    mids.sort_unstable();
    mids.dedup();
    let mut covered = vec![false; g.n()];
    for &id in &mids {
        let e = g.edge(id).unwrap();
        if covered[e.u] || covered[e.v] {
            return Err(Error::Input(format!("edge {id} makes M not a matching")));
        }
        covered[e.u] = true;
        covered[e.v] = true;
    }
    if g.n() == 1 {
        return Ok(Outcome::Found {
            value: ClosedWalk { start: 0, vertices: vec![0], edges: Vec::new(), visits: vec![0] },
            method: Method::Construction,
        });
    }

    let dup = g.duplicate_edges();
    let mut forced: Vec<EdgeId> = mids.clone();
    forced.extend(mids.iter().map(|&id| dup.copy_of(id).expect("every edge is copied")));
    forced.sort_unstable();

    let mut neg = Negative::default();
    let factor = absorb_failure(
        &mut neg,
        degree_bounded_tc_factor(&dup.graph, 2, &forced, &doubled_budget(f), None),
    )?;
    if let Some(h_edges) = factor {
        let h = dup.graph.spanning_subgraph(&h_edges)?;
        let p = packing::require_tree_connected(&h, 2)?;
        let forests = p.forests();
        // Each tree holds exactly one copy of every matching edge, so the
        // first tree already traverses all of them.
        let l = euler::eulerian_from_trees(&h, &forests[0], &forests[1])?;
        let trail = hierholzer(&dup.graph.spanning_subgraph(&l)?, 0)?;
        let walk = lift(g, &dup.graph, &trail, |id| dup.original(id))?;
        check_visits(&walk.visits, f)?;
        if let Some(id) = mids.iter().find(|id| !walk.edges.contains(id)) {
            return Err(Error::Internal(format!("walk misses matching edge {id}")));
        }
        return Ok(Outcome::Found { value: walk, method: Method::Construction });
    }

    if g.edge_count() <= EXHAUSTIVE_MAX_EDGES / 2 {
        let caps: Vec<usize> = (0..g.n()).map(|v| 2 * f[v] as usize).collect();
        let lo: Vec<u8> = g.edges().iter().map(|e| u8::from(mids.binary_search(&e.id).is_ok())).collect();
        let hi = vec![2u8; g.edge_count()];
        match exhaustive::search(g, &caps, &lo, &hi) {
            Some(mult) => {
                let walk = walk_from_multiplicities(g, &mult)?;
                check_visits(&walk.visits, f)?;
                return Ok(Outcome::Found { value: walk, method: Method::Exhaustive });
            }
            None => neg.proven_absent = true,
        }
    }
    attach_report(&mut neg, g, &Hypothesis::Walk { f: f.clone() })?;
    Ok(Outcome::Negative(neg))
}

/// Maps a trail in a graph with added copies back to a walk in `g`.
fn lift(
    g: &Multigraph,
    host: &Multigraph,
    trail: &ClosedTrail,
    original: impl Fn(EdgeId) -> EdgeId,
) -> Result<ClosedWalk> {
    let vertices = replay(host, trail.start, &trail.edges)?;
    let edges: Vec<EdgeId> = trail.edges.iter().map(|&id| original(id)).collect();
    let walk = ClosedWalk {
        start: trail.start,
        visits: visit_counts(g.n(), &vertices),
        vertices,
        edges,
    };
    walk.verify(g)?;
    Ok(walk)
}

fn walk_from_multiplicities(g: &Multigraph, mult: &[u8]) -> Result<ClosedWalk> {
    let twice: Vec<EdgeId> = g
        .edges()
        .iter()
        .zip(mult)
        .filter(|(_, &k)| k == 2)
        .map(|(e, _)| e.id)
        .collect();
    let copies = g.with_copies(&twice)?;
    let keep: Vec<EdgeId> = copies
        .graph
        .edges()
        .iter()
        .filter(|e| mult[g.edges().partition_point(|x| x.id < copies.original(e.id))] > 0)
        .map(|e| e.id)
        .collect();
    let l = copies.graph.spanning_subgraph(&keep)?;
    let trail = hierholzer(&l, 0)?;
    lift(g, &copies.graph, &trail, |id| copies.original(id))
}

/// The visit budget guaranteed for a k-edge-connected graph.
pub fn k_connected_budget(g: &Multigraph, k: usize) -> VertexFunction {
    let k = k as i64;
    VertexFunction::from_fn(g.n(), |v| {
        let d = g.degree(v) as i64;
        if k >= 4 {
            // ⌈(d + k/2 − 4)/k⌉ + 1
            ceil_div(2 * d + k - 8, 2 * k) + 1
        } else {
            ceil_div(d - 1, k) + 1
        }
    })
}

/// Result of [`k_connected_trail_or_walk`].
#[derive(Debug, Clone)]
pub struct KConnected {
    pub k: usize,
    pub budget: VertexFunction,
    pub outcome: Outcome<Tour>,
    /// For `k = 3`: the even 4-edge-connected graph `G + F` the trail was
    /// found in.
    pub augmented: Option<Multigraph>,
}

/// A spanning closed trail (`k ≥ 4`) or walk (`k ≤ 3`) of a k-edge-connected
/// graph with the visit budget of [`k_connected_budget`].
pub fn k_connected_trail_or_walk(g: &Multigraph, k: usize) -> Result<KConnected> {
    if k == 0 {
        return Err(Error::Input("k must be positive".into()));
    }
    if g.n() < 2 {
        return Err(Error::Input("need at least two vertices".into()));
    }
    let (found, side) = edge_connectivity(g);
    if found < k {
        return Err(Error::CutTooSmall { required: k, found, side: side.unwrap_or_default() });
    }
    let budget = k_connected_budget(g, k);
    let mut augmented = None;
    let outcome = match k {
        1 => {
            let tree = euler::bfs_tree(g).ok_or_else(|| Error::Internal("connected graph without a spanning tree".into()))?;
            let walk = tree_walk(g, &tree)?;
            Outcome::Found { value: Tour::Walk(walk), method: Method::Construction }
        }
        2 => wrap_walk(f_walk(g, &budget, &[])?),
        3 => {
            let (g2, outcome) = three_connected_walk(g)?;
            augmented = Some(g2);
            outcome
        }
        _ => match f_trail(g, &budget)? {
            Outcome::Found { value, method } => Outcome::Found { value: Tour::Trail(value), method },
            Outcome::Negative(n) => Outcome::Negative(n),
        },
    };
    if let Outcome::Found { value, .. } = &outcome {
        value.verify(g)?;
        check_visits(value.visits(), &budget)?;
    }
    Ok(KConnected { k, budget, outcome, augmented })
}

fn wrap_walk(o: Outcome<ClosedWalk>) -> Outcome<Tour> {
    match o {
        Outcome::Found { value, method } => Outcome::Found { value: Tour::Walk(value), method },
        Outcome::Negative(n) => Outcome::Negative(n),
    }
}

/// The walk around a spanning tree: every tree edge twice.
fn tree_walk(g: &Multigraph, tree: &[EdgeId]) -> Result<ClosedWalk> {
    let copies = g.with_copies(tree)?;
    let mut ids = tree.to_vec();
    ids.extend(tree.iter().map(|&id| copies.copy_of(id).unwrap()));
    let l = copies.graph.spanning_subgraph(&ids)?;
    let trail = hierholzer(&l, 0)?;
    lift(g, &copies.graph, &trail, |id| copies.original(id))
}

/// Spanning tree with small degrees, a parity forest inside it making all
/// degrees even once copied into `G`, and a trail of the 4-edge-connected
/// result read back as a walk in `G`.
fn three_connected_walk(g: &Multigraph) -> Result<(Multigraph, Outcome<Tour>)> {
    let tree_budget = VertexFunction::from_fn(g.n(), |v| ceil_div(g.degree(v) as i64 - 2, 3) + 2);
    let tree = match degree_bounded_tc_factor(g, 1, &[], &tree_budget, None)? {
        FactorOutcome::Found(r) => r.edges,
        FactorOutcome::Witness { set, report } => {
            return Ok((
                g.clone(),
                Outcome::Negative(Negative { witness: Some(set), report, ..Default::default() }),
            ))
        }
        FactorOutcome::SearchFailure { best_te } => {
            return Ok((
                g.clone(),
                Outcome::Negative(Negative { best_te: Some(best_te), ..Default::default() }),
            ))
        }
    };
    let odd: Vec<VertexId> = (0..g.n()).filter(|&v| g.degree(v) % 2 == 1).collect();
    let forest = parity_forest(&g.spanning_subgraph(&tree)?, &odd)?;
    let copies = g.with_copies(&forest)?;
    let g2 = copies.graph.clone();
    if let Some(v) = (0..g2.n()).find(|&v| g2.degree(v) % 2 == 1) {
        return Err(Error::Internal(format!("augmented graph has odd degree at {v}")));
    }
    let (lambda, _) = edge_connectivity(&g2);
    if lambda < 4 {
        return Err(Error::Internal(format!("augmented graph is only {lambda}-edge-connected")));
    }
    let budget4 = k_connected_budget(&g2, 4);
    let outcome = match f_trail(&g2, &budget4)? {
        Outcome::Found { value, method } => {
            let walk = lift(g, &g2, &value, |id| copies.original(id))?;
            Outcome::Found { value: Tour::Walk(walk), method }
        }
        Outcome::Negative(n) => Outcome::Negative(n),
    };
    Ok((g2, outcome))
}

/// A connected spanning subgraph with all degrees in `{2, 4}`, read off a
/// spanning closed trail meeting every vertex at most twice.
pub fn connected_24_factor(g: &Multigraph) -> Result<Outcome<Vec<EdgeId>>> {
    if g.n() < 3 {
        return Err(Error::Input("a {2,4}-factor needs at least three vertices".into()));
    }
    match f_trail(g, &VertexFunction::constant(g.n(), 2))? {
        Outcome::Found { value, method } => {
            let mut ids = value.edges;
            ids.sort_unstable();
            Ok(Outcome::Found { value: ids, method })
        }
        Outcome::Negative(mut neg) => {
            if g.n() <= verify::COMPONENT_CAP {
                let report = verify::check_hypothesis(g, &Hypothesis::TwoFourFactor, &VerifyOptions::default())?;
                if let Some(w) = &report.witness {
                    neg.witness = Some(w.clone());
                }
                neg.report = Some(report);
            }
            Ok(Outcome::Negative(neg))
        }
    }
}
