//! Searching streams of small graphs for counterexamples to open
//! conjectures: evaluate the hypothesis by enumeration, try to build the
//! conclusion, and flag any graph where the first holds and the second
//! provably fails.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::generators::edge_connectivity;
use crate::graph::{Multigraph, VertexFunction};
use crate::trails::{self, Outcome};
use crate::util::ceil_div;

use super::{check_hypothesis, with_pool, Hypothesis, Rational, VerifyOptions};

/// Largest order for which all partitions are enumerated.
const PARTITION_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Conjecture {
    /// `ω(G∖S) ≤ |S|/2 + 1` for all `S` (and `n ≥ 3`) gives a connected
    /// {2,4}-factor.
    HalfToughTwoFour,
    /// A k-edge-connected graph has a spanning closed trail meeting every
    /// `v` at most `⌈(d(v) − 2)/k⌉ + 1` times.
    EdgeConnectedTrail { k: usize },
    /// `e_G(P) ≥ (2 − ε)(|P| − 1)` for every partition `P` gives a spanning
    /// Eulerian subgraph.
    PartitionDensityEulerian { eps: Rational },
}

impl Conjecture {
    pub fn id(&self) -> &'static str {
        match self {
            Conjecture::HalfToughTwoFour => "half-tough-two-four",
            Conjecture::EdgeConnectedTrail { .. } => "edge-connected-trail",
            Conjecture::PartitionDensityEulerian { .. } => "partition-density-eulerian",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanEntry {
    pub index: usize,
    pub n: usize,
    pub edges: usize,
    /// `None` when the instance was skipped.
    pub hypothesis: Option<bool>,
    /// `None` when neither a construction nor a refutation was obtained.
    pub conclusion: Option<bool>,
    pub counterexample: bool,
    pub skipped: Option<String>,
    /// Supporting data: the failing set, the constructed edges, or the
    /// partition density.
    pub detail: serde_json::Value,
}

pub fn conjecture_scan(
    graphs: &[Multigraph],
    conjecture: &Conjecture,
    opts: &VerifyOptions,
) -> Result<Vec<ScanEntry>> {
    let inner = VerifyOptions { cap: opts.cap, jobs: None };
    with_pool(opts.jobs, || {
        graphs
            .par_iter()
            .enumerate()
            .map(|(index, g)| scan_one(index, g, conjecture, &inner))
            .collect::<Result<Vec<_>>>()
    })?
}

fn skipped(index: usize, g: &Multigraph, why: String) -> ScanEntry {
    ScanEntry {
        index,
        n: g.n(),
        edges: g.edge_count(),
        hypothesis: None,
        conclusion: None,
        counterexample: false,
        skipped: Some(why),
        detail: serde_json::Value::Null,
    }
}

fn scan_one(
    index: usize,
    g: &Multigraph,
    conjecture: &Conjecture,
    opts: &VerifyOptions,
) -> Result<ScanEntry> {
    let (hypothesis, detail, f) = match conjecture {
        Conjecture::HalfToughTwoFour => {
            if g.n() < 3 {
                return Ok(skipped(index, g, "fewer than three vertices".into()));
            }
            let report = match check_hypothesis(g, &Hypothesis::HalfTough, opts) {
                Ok(r) => r,
                Err(e) => return Ok(skipped(index, g, e.to_string())),
            };
            (report.holds, report.to_json(), VertexFunction::constant(g.n(), 2))
        }
        Conjecture::EdgeConnectedTrail { k } => {
            if g.n() < 2 {
                return Ok(skipped(index, g, "fewer than two vertices".into()));
            }
            let (lambda, _) = edge_connectivity(g);
            let k = *k as i64;
            let f = VertexFunction::from_fn(g.n(), |v| ceil_div(g.degree(v) as i64 - 2, k) + 1);
            (lambda as i64 >= k, serde_json::json!({ "edge_connectivity": lambda }), f)
        }
        Conjecture::PartitionDensityEulerian { eps } => {
            if g.n() > PARTITION_CAP {
                return Ok(skipped(index, g, format!("more than {PARTITION_CAP} vertices")));
            }
            let density = partition_density(g);
            let holds = density.is_none_or(|d| d >= Rational::from_integer(2) - *eps);
            let f = VertexFunction::from_fn(g.n(), |v| ceil_div(g.degree(v) as i64, 2).max(1));
            (
                holds,
                serde_json::json!({ "density": density.map(|d| d.to_string()) }),
                f,
            )
        }
    };
    if !hypothesis {
        return Ok(ScanEntry {
            index,
            n: g.n(),
            edges: g.edge_count(),
            hypothesis: Some(false),
            conclusion: None,
            counterexample: false,
            skipped: None,
            detail,
        });
    }
    let (conclusion, found) = match trails::f_trail(g, &f)? {
        Outcome::Found { value, .. } => (Some(true), serde_json::json!(value.edges)),
        Outcome::Negative(n) if n.proven_absent => (Some(false), n.to_json()),
        Outcome::Negative(n) => (None, n.to_json()),
    };
    Ok(ScanEntry {
        index,
        n: g.n(),
        edges: g.edge_count(),
        hypothesis: Some(true),
        conclusion,
        counterexample: conclusion == Some(false),
        skipped: None,
        detail: serde_json::json!({ "hypothesis": detail, "conclusion": found }),
    })
}

/// `min e_G(P)/(|P| − 1)` over partitions with at least two parts, by
/// enumerating restricted growth strings. `None` for a single vertex.
pub fn partition_density(g: &Multigraph) -> Option<Rational> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    let mut label = vec![0usize; n];
    let mut best: Option<Rational> = None;
    fn rec(g: &Multigraph, v: usize, parts: usize, label: &mut Vec<usize>, best: &mut Option<Rational>) {
        if v == g.n() {
            if parts >= 2 {
                let cross = g.edges().iter().filter(|e| label[e.u] != label[e.v]).count();
                let r = Rational::new(cross as i64, parts as i64 - 1);
                if best.is_none_or(|b| r < b) {
                    *best = Some(r);
                }
            }
            return;
        }
        for l in 0..=parts {
            label[v] = l;
            rec(g, v + 1, parts.max(l + 1), label, best);
        }
    }
    rec(g, 1, 1, &mut label, &mut best);
    best
}
