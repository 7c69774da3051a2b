//! Exhaustive verification of toughness-type conditions on small graphs.
//!
//! Every condition has the shape `LHS(S) ≤ RHS(S)` for all `S` in some
//! ground set, evaluated in exact rational arithmetic. A report keeps the
//! set with the least slack `RHS − LHS` (ties go to the smallest subset
//! bitmask), which is the violating witness whenever the condition fails.

mod scan;
mod toughness;

use num_rational::Ratio;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::edge_connectivity;
use crate::graph::{DisjointSets, Multigraph, VertexFunction, VertexId};
use crate::packing::{self, omega_without};

pub use scan::{conjecture_scan, partition_density, Conjecture, ScanEntry};
pub use toughness::{strong_toughness, toughness, Toughness};

pub type Rational = Ratio<i64>;

/// Default enumeration caps on the size of the ground set.
pub const COMPONENT_CAP: usize = 20;
pub const OMEGA_CAP: usize = 14;

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Overrides the default ground-set cap.
    pub cap: Option<usize>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

/// A sufficient condition, parameterised as in the corresponding existence
/// result.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Hypothesis {
    /// `Ω_m(G∖S) ≤ Σ_S (f − 2m) + m + Ω_m(G[S])` for `S ⊆ X`.
    TreeFactor {
        m: usize,
        f: VertexFunction,
        x: Option<Vec<VertexId>>,
    },
    /// `Ω_m(G∖S) ≤ Σ_S (f − 2m) + 2m` for nonempty `S`, with `G`
    /// m-tree-connected (the `S = ∅` row).
    TreeFactorSimple { m: usize, f: VertexFunction },
    /// `Ω_m(G∖S) ≤ Σ_S (f − m) + m` for `S ⊆ X`, `X` independent.
    TreeFactorIndependent {
        m: usize,
        f: VertexFunction,
        x: Vec<VertexId>,
    },
    /// `½Ω_2(G∖S) ≤ Σ_S (f − 3/2) + 1 + ½Ω_2(G[S])`.
    Trail { f: VertexFunction },
    /// `½Ω_2(G∖S) ≤ Σ_S (f − 3/2) + 2` for nonempty `S`, with `G`
    /// 2-tree-connected (the `S = ∅` row).
    TrailConstantTwo { f: VertexFunction },
    /// `ω(G∖S) ≤ Σ_S (f − 3/2) + 1 + ω(G[S])`.
    Walk { f: VertexFunction },
    /// `ω(G∖S) ≤ Σ_S (f − 1/2) + 1` for `S ⊆ X`, `X` independent.
    WalkIndependent { f: VertexFunction, x: Vec<VertexId> },
    /// `ω(G∖S) ≤ min{2|S|/7, |S|/2 − 3·iso(G∖S)/2} + 1`.
    TwoFourFactor,
    /// `ω(G∖S) ≤ |S|/2 + 1`.
    HalfTough,
    /// `Ω_m(G∖S) ≤ Σ_S m(d − 2m)/k + (2m/k)Ω_m(G[S])` for nonempty `S`.
    EdgeConnectedEstimate { m: usize, k: usize },
    /// `Ω_m(G∖S) ≤ Σ_S (m(d − m)/k − m) + m + (m/k)Ω_m(G[S])`.
    TreeConnectedEstimate { m: usize, k: usize },
    /// `ω(G∖S) + ((m+1)/2)·iso(G∖S) ≤ (ε/m)|S| + c`.
    IsolatedToughness { m: usize, eps: Rational, c: Rational },
    /// `Ω_m(G∖S) ≤ ε|S| + cm`.
    StrongToughnessBound { m: usize, eps: Rational, c: Rational },
}

impl Hypothesis {
    pub fn id(&self) -> &'static str {
        match self {
            Hypothesis::TreeFactor { .. } => "tree-factor",
            Hypothesis::TreeFactorSimple { .. } => "tree-factor-simple",
            Hypothesis::TreeFactorIndependent { .. } => "tree-factor-independent",
            Hypothesis::Trail { .. } => "trail",
            Hypothesis::TrailConstantTwo { .. } => "trail-constant-two",
            Hypothesis::Walk { .. } => "walk",
            Hypothesis::WalkIndependent { .. } => "walk-independent",
            Hypothesis::TwoFourFactor => "two-four-factor",
            Hypothesis::HalfTough => "half-tough",
            Hypothesis::EdgeConnectedEstimate { .. } => "edge-connected-estimate",
            Hypothesis::TreeConnectedEstimate { .. } => "tree-connected-estimate",
            Hypothesis::IsolatedToughness { .. } => "isolated-toughness",
            Hypothesis::StrongToughnessBound { .. } => "strong-toughness-bound",
        }
    }

    fn m(&self) -> usize {
        match self {
            Hypothesis::TreeFactor { m, .. }
            | Hypothesis::TreeFactorSimple { m, .. }
            | Hypothesis::TreeFactorIndependent { m, .. }
            | Hypothesis::EdgeConnectedEstimate { m, .. }
            | Hypothesis::TreeConnectedEstimate { m, .. }
            | Hypothesis::IsolatedToughness { m, .. }
            | Hypothesis::StrongToughnessBound { m, .. } => *m,
            Hypothesis::Trail { .. } | Hypothesis::TrailConstantTwo { .. } => 2,
            _ => 1,
        }
    }

    fn f(&self) -> Option<&VertexFunction> {
        match self {
            Hypothesis::TreeFactor { f, .. }
            | Hypothesis::TreeFactorSimple { f, .. }
            | Hypothesis::TreeFactorIndependent { f, .. }
            | Hypothesis::Trail { f }
            | Hypothesis::TrailConstantTwo { f }
            | Hypothesis::Walk { f }
            | Hypothesis::WalkIndependent { f, .. } => Some(f),
            _ => None,
        }
    }

    fn restriction(&self) -> Option<&[VertexId]> {
        match self {
            Hypothesis::TreeFactor { x, .. } => x.as_deref(),
            Hypothesis::TreeFactorIndependent { x, .. } | Hypothesis::WalkIndependent { x, .. } => {
                Some(x)
            }
            _ => None,
        }
    }

    fn needs_independent(&self) -> bool {
        matches!(
            self,
            Hypothesis::TreeFactorIndependent { .. } | Hypothesis::WalkIndependent { .. }
        )
    }

    fn skips_empty_set(&self) -> bool {
        matches!(self, Hypothesis::EdgeConnectedEstimate { .. })
    }

    /// Whether rows need matroid-union ranks rather than component counts.
    pub fn needs_omega(&self) -> bool {
        !matches!(
            self,
            Hypothesis::Walk { .. }
                | Hypothesis::WalkIndependent { .. }
                | Hypothesis::TwoFourFactor
                | Hypothesis::HalfTough
                | Hypothesis::IsolatedToughness { .. }
        ) && !matches!(self, Hypothesis::StrongToughnessBound { m: 1, .. })
    }

    fn validate(&self, g: &Multigraph) -> Result<()> {
        let m = self.m();
        if m == 0 {
            return Err(Error::Input("m must be positive".into()));
        }
        if let Some(f) = self.f() {
            f.check_total(g.n())?;
        }
        if let Some(x) = self.restriction() {
            if let Some(&v) = x.iter().find(|&&v| v >= g.n()) {
                return Err(Error::Input(format!("vertex {v} out of range")));
            }
            if self.needs_independent() {
                let mask = g.mask_of(x);
                if let Some(e) = g.edges().iter().find(|e| mask[e.u] && mask[e.v]) {
                    return Err(Error::Input(format!(
                        "X is not independent: edge {} joins {} and {}",
                        e.id, e.u, e.v
                    )));
                }
            }
        }
        if let Hypothesis::EdgeConnectedEstimate { k, .. } | Hypothesis::TreeConnectedEstimate { k, .. } =
            self
        {
            if *k == 0 {
                return Err(Error::Input("k must be positive".into()));
            }
        }
        Ok(())
    }
}

/// One evaluated row `LHS(S) ≤ RHS(S)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Row {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Row {
    pub fn violated(&self) -> bool {
        self.lhs > self.rhs
    }

    pub fn slack(&self) -> Rational {
        self.rhs - self.lhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub condition: String,
    pub holds: bool,
    /// The violating set of least slack; `None` when the condition holds.
    pub witness: Option<Vec<VertexId>>,
    /// The set attaining the least slack, violating or not.
    pub extremal: Vec<VertexId>,
    #[serde(serialize_with = "ser_ratio")]
    pub lhs: Rational,
    #[serde(serialize_with = "ser_ratio")]
    pub rhs: Rational,
    #[serde(serialize_with = "ser_ratio")]
    pub slack: Rational,
    pub enumerated: u64,
}

fn ser_ratio<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl ConditionReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "condition": self.condition,
            "holds": self.holds,
            "witness_S": self.witness,
            "extremal_S": self.extremal,
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
            "slack": self.slack.to_string(),
            "enumerated": self.enumerated,
        })
    }
}

fn q(v: i64) -> Rational {
    Rational::from_integer(v)
}

/// Components and isolated vertices of `G∖S`.
fn components_without(g: &Multigraph, removed: &[bool]) -> (usize, usize) {
    let n = g.n();
    let mut dsu = DisjointSets::new(n);
    let mut deg = vec![0usize; n];
    for e in g.edges() {
        if !removed[e.u] && !removed[e.v] {
            dsu.union(e.u, e.v);
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
    }
    let mut roots = std::collections::HashSet::new();
    let mut iso = 0;
    for v in (0..n).filter(|&v| !removed[v]) {
        roots.insert(dsu.find(v));
        if deg[v] == 0 {
            iso += 1;
        }
    }
    (roots.len(), iso)
}

/// Evaluates a validated hypothesis on the set `S` given as a mask.
fn evaluate(g: &Multigraph, hyp: &Hypothesis, in_s: &[bool], degrees: &[usize]) -> Row {
    let size = in_s.iter().filter(|&&b| b).count() as i64;
    let empty = size == 0;
    let complement: Vec<bool> = in_s.iter().map(|&b| !b).collect();
    let omega_out = |m: usize| q(omega_without(g, m, in_s) as i64);
    let omega_in = |m: usize| q(omega_without(g, m, &complement) as i64);
    let comps_out = || components_without(g, in_s);
    let sum_over_s = |term: &dyn Fn(VertexId) -> Rational| -> Rational {
        (0..g.n()).filter(|&v| in_s[v]).map(term).sum()
    };
    let half = Rational::new(1, 2);
    match hyp {
        Hypothesis::TreeFactor { m, f, .. } => {
            let mm = *m as i64;
            let rhs = sum_over_s(&|v| q(f[v] - 2 * mm)) + q(mm) + omega_in(*m);
            Row { lhs: omega_out(*m), rhs }
        }
        Hypothesis::TreeFactorSimple { m, f } => {
            let mm = *m as i64;
            let rhs = if empty {
                q(mm)
            } else {
                sum_over_s(&|v| q(f[v] - 2 * mm)) + q(2 * mm)
            };
            Row { lhs: omega_out(*m), rhs }
        }
        Hypothesis::TreeFactorIndependent { m, f, .. } => {
            let mm = *m as i64;
            let rhs = sum_over_s(&|v| q(f[v] - mm)) + q(mm);
            Row { lhs: omega_out(*m), rhs }
        }
        Hypothesis::Trail { f } => {
            let rhs = sum_over_s(&|v| q(f[v]) - Rational::new(3, 2)) + q(1) + half * omega_in(2);
            Row { lhs: half * omega_out(2), rhs }
        }
        Hypothesis::TrailConstantTwo { f } => {
            let rhs = if empty {
                q(1)
            } else {
                sum_over_s(&|v| q(f[v]) - Rational::new(3, 2)) + q(2)
            };
            Row { lhs: half * omega_out(2), rhs }
        }
        Hypothesis::Walk { f } => {
            let inside = if empty { 0 } else { components_without(g, &complement).0 };
            let rhs = sum_over_s(&|v| q(f[v]) - Rational::new(3, 2)) + q(1) + q(inside as i64);
            Row { lhs: q(comps_out().0 as i64), rhs }
        }
        Hypothesis::WalkIndependent { f, .. } => {
            let rhs = sum_over_s(&|v| q(f[v]) - half) + q(1);
            Row { lhs: q(comps_out().0 as i64), rhs }
        }
        Hypothesis::TwoFourFactor => {
            let (w, iso) = comps_out();
            let a = Rational::new(2 * size, 7);
            let b = Rational::new(size, 2) - Rational::new(3 * iso as i64, 2);
            Row { lhs: q(w as i64), rhs: a.min(b) + q(1) }
        }
        Hypothesis::HalfTough => {
            let (w, _) = comps_out();
            Row { lhs: q(w as i64), rhs: Rational::new(size, 2) + q(1) }
        }
        Hypothesis::EdgeConnectedEstimate { m, k } => {
            let (mm, kk) = (*m as i64, *k as i64);
            let rhs = sum_over_s(&|v| Rational::new(mm * (degrees[v] as i64 - 2 * mm), kk))
                + Rational::new(2 * mm, kk) * omega_in(*m);
            Row { lhs: omega_out(*m), rhs }
        }
        Hypothesis::TreeConnectedEstimate { m, k } => {
            let (mm, kk) = (*m as i64, *k as i64);
            let rhs = sum_over_s(&|v| Rational::new(mm * (degrees[v] as i64 - mm), kk) - q(mm))
                + q(mm)
                + Rational::new(mm, kk) * omega_in(*m);
            Row { lhs: omega_out(*m), rhs }
        }
        Hypothesis::IsolatedToughness { m, eps, c } => {
            let (w, iso) = comps_out();
            let mm = *m as i64;
            let lhs = q(w as i64) + Rational::new(mm + 1, 2) * q(iso as i64);
            Row { lhs, rhs: *eps / q(mm) * q(size) + *c }
        }
        Hypothesis::StrongToughnessBound { m, eps, c } => {
            let lhs = if *m == 1 { q(comps_out().0 as i64) } else { omega_out(*m) };
            Row { lhs, rhs: *eps * q(size) + *c * q(*m as i64) }
        }
    }
}

/// Evaluates the hypothesis on a single set `S`.
pub fn hypothesis_row(g: &Multigraph, hyp: &Hypothesis, set: &[VertexId]) -> Result<Row> {
    hyp.validate(g)?;
    if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
        return Err(Error::Input(format!("vertex {v} out of range")));
    }
    Ok(evaluate(g, hyp, &g.mask_of(set), &g.degrees()))
}

/// Enumerates every `S` in the hypothesis' ground set.
pub fn check_hypothesis(
    g: &Multigraph,
    hyp: &Hypothesis,
    opts: &VerifyOptions,
) -> Result<ConditionReport> {
    hyp.validate(g)?;
    let ground: Vec<VertexId> = match hyp.restriction() {
        Some(x) => {
            let mut x = x.to_vec();
            x.sort_unstable();
            x.dedup();
            x
        }
        None => (0..g.n()).collect(),
    };
    let cap = opts
        .cap
        .unwrap_or(if hyp.needs_omega() { OMEGA_CAP } else { COMPONENT_CAP });
    if ground.len() > cap.min(62) {
        return Err(Error::Capacity {
            what: "ground set size",
            size: ground.len(),
            cap,
        });
    }
    let degrees = g.degrees();
    let start = u64::from(hyp.skips_empty_set());
    let total = 1u64 << ground.len();
    let best = with_pool(opts.jobs, || {
        (start..total)
            .into_par_iter()
            .map(|bits| {
                let mut mask = vec![false; g.n()];
                for (i, &v) in ground.iter().enumerate() {
                    mask[v] = bits >> i & 1 == 1;
                }
                (bits, evaluate(g, hyp, &mask, &degrees))
            })
            .reduce_with(|a, b| {
                let (sa, sb) = (a.1.slack(), b.1.slack());
                if sb < sa || (sb == sa && b.0 < a.0) {
                    b
                } else {
                    a
                }
            })
    })?;
    let Some((bits, row)) = best else {
        return Err(Error::Domain("no set to enumerate".into()));
    };
    let extremal: Vec<VertexId> = ground
        .iter()
        .enumerate()
        .filter(|(i, _)| bits >> i & 1 == 1)
        .map(|(_, &v)| v)
        .collect();
    let holds = !row.violated();
    Ok(ConditionReport {
        condition: hyp.id().to_string(),
        holds,
        witness: (!holds).then(|| extremal.clone()),
        extremal,
        lhs: row.lhs,
        rhs: row.rhs,
        slack: row.slack(),
        enumerated: total - start,
    })
}

pub(crate) fn with_pool<T: Send>(jobs: Option<usize>, op: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(op()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
            Ok(pool.install(op))
        }
    }
}

/// Which connectivity assumption a degree estimate rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EstimateBranch {
    /// `G` is k-edge-connected with `k ≥ 2m`; only nonempty `S`.
    EdgeConnected,
    /// `G` is k-tree-connected with `k ≥ m`.
    TreeConnected,
}

/// Checks the bound on `Ω_m(G∖S)` in terms of degrees that holds in
/// highly connected graphs, after verifying the connectivity assumption.
pub fn check_degree_estimate(
    g: &Multigraph,
    m: usize,
    k: usize,
    branch: EstimateBranch,
    opts: &VerifyOptions,
) -> Result<ConditionReport> {
    if m == 0 || k == 0 {
        return Err(Error::Input("m and k must be positive".into()));
    }
    let hyp = match branch {
        EstimateBranch::EdgeConnected => {
            if k < 2 * m {
                return Err(Error::Input(format!("needs k ≥ 2m, got k = {k}")));
            }
            let (found, side) = edge_connectivity(g);
            if found < k {
                return Err(Error::CutTooSmall {
                    required: k,
                    found,
                    side: side.unwrap_or_default(),
                });
            }
            Hypothesis::EdgeConnectedEstimate { m, k }
        }
        EstimateBranch::TreeConnected => {
            if k < m {
                return Err(Error::Input(format!("needs k ≥ m, got k = {k}")));
            }
            packing::require_tree_connected(g, k)?;
            Hypothesis::TreeConnectedEstimate { m, k }
        }
    };
    check_hypothesis(g, &hyp, opts)
}

/// Outcome of testing "isolated-toughness condition ⇒ strong toughness bound".
#[derive(Debug, Clone, Serialize)]
pub struct Implication {
    pub hypothesis: ConditionReport,
    /// Present only when the hypothesis holds.
    pub conclusion: Option<ConditionReport>,
    /// Hypothesis true and conclusion false. Never expected.
    pub counterexample: bool,
}

impl Implication {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "hypothesis": self.hypothesis.to_json(),
            "conclusion": self.conclusion.as_ref().map(|c| c.to_json()),
            "counterexample": self.counterexample,
        })
    }
}

/// If `ω(G∖S) + ((m+1)/2)·iso(G∖S) ≤ (ε/m)|S| + c` for all `S`, then
/// `Ω_m(G∖S) ≤ ε|S| + cm` for all `S`; both sides are enumerated.
pub fn check_isolated_toughness_implication(
    g: &Multigraph,
    m: usize,
    eps: Rational,
    c: Rational,
    opts: &VerifyOptions,
) -> Result<Implication> {
    if eps < Rational::zero() || eps > q(1) || c < q(1) {
        return Err(Error::Input("requires 0 ≤ ε ≤ 1 ≤ c".into()));
    }
    let hypothesis = check_hypothesis(g, &Hypothesis::IsolatedToughness { m, eps, c }, opts)?;
    if !hypothesis.holds {
        return Ok(Implication {
            hypothesis,
            conclusion: None,
            counterexample: false,
        });
    }
    let conclusion = check_hypothesis(g, &Hypothesis::StrongToughnessBound { m, eps, c }, opts)?;
    let counterexample = !conclusion.holds;
    Ok(Implication {
        hypothesis,
        conclusion: Some(conclusion),
        counterexample,
    })
}

/// Parses `a`, `a/b` or a decimal such as `0.5` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::Input(format!("not a rational number: {text:?}"));
    if let Some((a, b)) = t.split_once('/') {
        let a: i64 = a.trim().parse().map_err(|_| bad())?;
        let b: i64 = b.trim().parse().map_err(|_| bad())?;
        if b == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(a, b));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || frac.len() > 12 || !frac.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let whole: i64 = if int.is_empty() || int == "-" { 0 } else { int.parse().map_err(|_| bad())? };
        let scale = 10i64.pow(frac.len() as u32);
        let part: i64 = frac.parse().map_err(|_| bad())?;
        let value = whole.abs() * scale + part;
        return Ok(Rational::new(if neg { -value } else { value }, scale));
    }
    t.parse::<i64>().map(Rational::from_integer).map_err(|_| bad())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, petersen};

    #[test]
    fn k5_tree_factor_holds() {
        let hyp = Hypothesis::TreeFactor {
            m: 1,
            f: VertexFunction::constant(5, 2),
            x: None,
        };
        let r = check_hypothesis(&complete(5), &hyp, &VerifyOptions::default()).unwrap();
        assert!(r.holds);
        assert_eq!(r.enumerated, 32);
    }

    #[test]
    fn petersen_trail_condition_fails() {
        let hyp = Hypothesis::Trail {
            f: VertexFunction::constant(10, 2),
        };
        let r = check_hypothesis(&petersen(), &hyp, &VerifyOptions::default()).unwrap();
        assert!(!r.holds);
        let w = r.witness.clone().unwrap();
        let row = hypothesis_row(&petersen(), &hyp, &w).unwrap();
        assert_eq!((row.lhs, row.rhs), (r.lhs, r.rhs));
    }

    #[test]
    fn empty_row_is_tree_connectivity() {
        let hyp = Hypothesis::TreeFactor {
            m: 2,
            f: VertexFunction::constant(5, 9),
            x: None,
        };
        let row = hypothesis_row(&cycle(5).unwrap(), &hyp, &[]).unwrap();
        assert_eq!(row.lhs, q(5));
        assert_eq!(row.rhs, q(2));
        assert!(row.violated());
    }

    #[test]
    fn degree_estimates() {
        let opts = VerifyOptions::default();
        let c4 = cycle(4).unwrap();
        assert!(check_degree_estimate(&c4, 1, 2, EstimateBranch::EdgeConnected, &opts).unwrap().holds);
        let k5 = complete(5);
        assert!(check_degree_estimate(&k5, 2, 4, EstimateBranch::EdgeConnected, &opts).unwrap().holds);
        assert!(check_degree_estimate(&c4, 1, 3, EstimateBranch::EdgeConnected, &opts).is_err());
    }

    #[test]
    fn petersen_isolated_toughness_fails() {
        let r = check_isolated_toughness_implication(
            &petersen(),
            2,
            q(1),
            q(1),
            &VerifyOptions::default(),
        )
        .unwrap();
        assert!(!r.hypothesis.holds);
        assert!(!r.counterexample);
    }

    #[test]
    fn rationals_parse() {
        assert_eq!(parse_rational("1/2").unwrap(), Rational::new(1, 2));
        assert_eq!(parse_rational("0.25").unwrap(), Rational::new(1, 4));
        assert_eq!(parse_rational("3").unwrap(), q(3));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
    }
}
