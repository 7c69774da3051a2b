//! Command-line front end.
//!
//! Exit codes: 0 when the requested object was found or the condition
//! holds, 1 for a certified negative answer, 2 for usage, parse, domain or
//! capacity errors.

use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::factor::{self, FactorOutcome, Regime};
use crate::generators::{self, BlowupKind, BlowupParams};
use crate::graph::{text, EdgeId, Multigraph, VertexFunction, VertexId};
use crate::packing::{self, Sparsity, TreeConnectivity};
use crate::trails::{self, Outcome, Tour};
use crate::verify::{self, Conjecture, EstimateBranch, Hypothesis, VerifyOptions};

#[derive(Debug, Parser)]
#[command(name = "treeconn", version, about = "Tree packings, degree-bounded tree-connected factors and spanning closed trails")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, clap::Args)]
struct Input {
    /// Graph file, or `-` for standard input.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Debug, clap::Args)]
struct Parallel {
    /// Enumeration cap on the ground-set size.
    #[arg(long)]
    cap: Option<usize>,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Maximum union of m forests; m disjoint spanning trees or a deficient partition.
    Pack {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Ω_m(G) = m·|P| − e(P) over the tree-connected components P.
    Omega {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// The m-tree-connected components.
    Components {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Whether every vertex set S spans at most m|S| − m edges.
    Sparse {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// An m-tree-connected factor with bounded degrees.
    Factor {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Degree bound: an integer or a `v:int,...` list (others default to 2m+1).
        #[arg(long)]
        f: Option<String>,
        /// Edge ids the factor must contain.
        #[arg(long = "force-edges", value_delimiter = ',')]
        force_edges: Vec<EdgeId>,
        /// Bound degrees only on these vertices.
        #[arg(long, value_delimiter = ',')]
        x: Option<Vec<VertexId>>,
        /// Derive the bound from connectivity instead of --f.
        #[arg(long, value_enum)]
        regime: Option<RegimeArg>,
        #[arg(long)]
        k: Option<usize>,
        /// The vertex held to ⌊m·d(u)/k⌋.
        #[arg(long, default_value_t = 0)]
        u: VertexId,
    },
    /// A spanning closed trail meeting each vertex v at most f(v) times.
    Trail {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        f: Option<String>,
        /// Use the visit budget guaranteed by k-edge-connectivity.
        #[arg(long)]
        k: Option<usize>,
        /// Look for a connected {2,4}-factor instead.
        #[arg(long = "two-four")]
        two_four: bool,
    },
    /// A spanning closed walk meeting each vertex v at most f(v) times.
    Walk {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        f: String,
        /// A matching the walk must traverse.
        #[arg(long = "force-edges", value_delimiter = ',')]
        force_edges: Vec<EdgeId>,
    },
    /// Check a sufficient condition over all vertex sets.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        f: Option<String>,
        #[arg(long, value_delimiter = ',')]
        x: Option<Vec<VertexId>>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value = "1")]
        eps: String,
        #[arg(long, default_value = "1")]
        c: String,
        #[command(flatten)]
        par: Parallel,
    },
    /// Emit a named graph in the text format.
    Generate {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Edge count for `random`.
        #[arg(long, default_value_t = 0)]
        edges: usize,
        #[arg(long)]
        simple: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long, default_value_t = 3)]
        p: usize,
        /// Degree bound defeated by `blowup`.
        #[arg(long, default_value_t = 2)]
        delta: usize,
        #[arg(long, default_value = "1/2")]
        eps: String,
        #[arg(long, default_value_t = 1)]
        beta: usize,
        /// Blowup of the Petersen chain (Eulerian family) instead of a sparse threshold graph.
        #[arg(long)]
        eulerian: bool,
        /// Enforce the clique-order lower bound in `blowup`.
        #[arg(long)]
        strict: bool,
    },
    /// Toughness, or m-strong toughness for m > 1.
    Toughness {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[command(flatten)]
        par: Parallel,
    },
    /// Scan a stream of graphs for counterexamples to a conjecture.
    Scan {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        conjecture: ConjectureArg,
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value = "1/4")]
        eps: String,
        #[command(flatten)]
        par: Parallel,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RegimeArg {
    Edge,
    Tree,
    EdgeIndependent,
    TreeIndependent,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Variant {
    TreeFactor,
    TreeFactorSimple,
    TreeFactorIndependent,
    Trail,
    TrailConstantTwo,
    Walk,
    WalkIndependent,
    TwoFourFactor,
    HalfTough,
    EdgeConnectedEstimate,
    TreeConnectedEstimate,
    IsolatedToughness,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Petersen,
    PetersenChain,
    Complete,
    Cycle,
    Circulant,
    SparseThreshold,
    Blowup,
    Random,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConjectureArg {
    HalfToughTwoFour,
    EdgeConnectedTrail,
    PartitionDensityEulerian,
}

/// What a command produced: its exit code and the payload.
struct Reply {
    code: i32,
    text: String,
    json: serde_json::Value,
}

impl Reply {
    fn ok(text: String, json: serde_json::Value) -> Self {
        Self { code: 0, text, json }
    }

    fn negative(text: String, json: serde_json::Value) -> Self {
        Self { code: 1, text, json }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Graph input named `-` is read from `stdin`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let json = cli.json;
    match execute(cli.command, stdin) {
        Ok(reply) => {
            if json {
                let _ = writeln!(out, "{}", reply.json);
            } else {
                let _ = write!(out, "{}", reply.text);
            }
            reply.code
        }
        Err(Error::NotTreeConnected(c)) => {
            if json {
                let _ = writeln!(out, "{}", c.to_json());
            } else {
                let _ = writeln!(out, "not {}-tree-connected: {}", c.m, parts_text(c.partition.parts()));
            }
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read_graphs(input: &Input, stdin: &mut dyn Read) -> Result<String> {
    let mut buf = String::new();
    if input.input == "-" {
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| Error::Input(format!("reading stdin: {e}")))?;
    } else {
        buf = std::fs::read_to_string(&input.input)
            .map_err(|e| Error::Input(format!("reading {}: {e}", input.input)))?;
    }
    Ok(buf)
}

fn read_graph(input: &Input, stdin: &mut dyn Read) -> Result<Multigraph> {
    text::parse(&read_graphs(input, stdin)?)
}

fn ids_text(ids: &[usize]) -> String {
    ids.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

fn parts_text(parts: &[Vec<VertexId>]) -> String {
    parts
        .iter()
        .map(|p| format!("{{{}}}", ids_text(p)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Reply> {
    match command {
        Command::Pack { input, m } => {
            let g = read_graph(&input, stdin)?;
            match packing::is_m_tree_connected(&g, m)? {
                TreeConnectivity::Connected(p) => {
                    let mut t = String::new();
                    for (i, f) in p.forests().iter().enumerate() {
                        writeln!(t, "tree {i}: {}", ids_text(f)).unwrap();
                    }
                    Ok(Reply::ok(t, packing::packing_json(&p)))
                }
                TreeConnectivity::Deficient(c) => Ok(Reply::negative(
                    format!(
                        "not {m}-tree-connected; deficiency {}: {}\n",
                        c.deficiency,
                        parts_text(c.partition.parts())
                    ),
                    c.to_json(),
                )),
            }
        }
        Command::Omega { input, m } => {
            let g = read_graph(&input, stdin)?;
            let om = packing::omega(&g, m)?;
            Ok(Reply::ok(
                format!("{}\n", om.value),
                serde_json::json!({"schema": 1, "m": m, "omega": om.value, "partition": om.witness}),
            ))
        }
        Command::Components { input, m } => {
            let g = read_graph(&input, stdin)?;
            let parts = packing::tree_connected_components(&g, m)?;
            let mut t = String::new();
            for p in parts.parts() {
                writeln!(t, "{}", ids_text(p)).unwrap();
            }
            Ok(Reply::ok(t, serde_json::json!({"schema": 1, "m": m, "components": parts})))
        }
        Command::Sparse { input, m } => {
            let g = read_graph(&input, stdin)?;
            match packing::is_m_sparse(&g, m)? {
                Sparsity::Sparse => Ok(Reply::ok(
                    "sparse\n".into(),
                    serde_json::json!({"schema": 1, "m": m, "sparse": true}),
                )),
                Sparsity::Dense { witness } => Ok(Reply::negative(
                    format!("dense: {}\n", ids_text(&witness)),
                    serde_json::json!({"schema": 1, "m": m, "sparse": false, "witness": witness}),
                )),
            }
        }
        Command::Factor { input, m, f, force_edges, x, regime, k, u } => {
            let g = read_graph(&input, stdin)?;
            let outcome = match regime {
                Some(r) => {
                    let k = k.ok_or_else(|| Error::Input("--regime needs --k".into()))?;
                    let xs = || x.clone().ok_or_else(|| Error::Input("independent regimes need --x".into()));
                    let regime = match r {
                        RegimeArg::Edge => Regime::EdgeConnected,
                        RegimeArg::Tree => Regime::TreeConnected,
                        RegimeArg::EdgeIndependent => Regime::EdgeConnectedIndependent(xs()?),
                        RegimeArg::TreeIndependent => Regime::TreeConnectedIndependent(xs()?),
                    };
                    factor::edge_connected_factor(&g, m, k, &force_edges, u, &regime)?
                }
                None => {
                    let spec = f.ok_or_else(|| Error::Input("factor needs --f or --regime".into()))?;
                    let f = VertexFunction::parse(&spec, g.n(), 2 * m as i64 + 1)?;
                    factor::degree_bounded_tc_factor(&g, m, &force_edges, &f, x.as_deref())?
                }
            };
            Ok(factor_reply(&outcome))
        }
        Command::Trail { input, f, k, two_four } => {
            let g = read_graph(&input, stdin)?;
            if two_four {
                return Ok(match trails::connected_24_factor(&g)? {
                    Outcome::Found { value, method } => Reply::ok(
                        format!("{{2,4}}-factor: {}\n", ids_text(&value)),
                        serde_json::json!({"schema": 1, "kind": "two-four-factor", "edges": value, "method": method}),
                    ),
                    Outcome::Negative(n) => negative_reply(&n),
                });
            }
            if let Some(k) = k {
                let r = trails::k_connected_trail_or_walk(&g, k)?;
                return Ok(match r.outcome {
                    Outcome::Found { value, .. } => tour_reply(&value),
                    Outcome::Negative(n) => negative_reply(&n),
                });
            }
            let spec = f.ok_or_else(|| Error::Input("trail needs --f, --k or --two-four".into()))?;
            let f = VertexFunction::parse(&spec, g.n(), 1)?;
            Ok(match trails::f_trail(&g, &f)? {
                Outcome::Found { value, .. } => tour_reply(&Tour::Trail(value)),
                Outcome::Negative(n) => negative_reply(&n),
            })
        }
        Command::Walk { input, f, force_edges } => {
            let g = read_graph(&input, stdin)?;
            let f = VertexFunction::parse(&f, g.n(), 1)?;
            Ok(match trails::f_walk(&g, &f, &force_edges)? {
                Outcome::Found { value, .. } => tour_reply(&Tour::Walk(value)),
                Outcome::Negative(n) => negative_reply(&n),
            })
        }
        Command::Verify { input, variant, m, f, x, k, eps, c, par } => {
            let g = read_graph(&input, stdin)?;
            let opts = VerifyOptions { cap: par.cap, jobs: par.jobs };
            let need_f = |default: i64| -> Result<VertexFunction> {
                let spec = f.clone().ok_or_else(|| Error::Input("this variant needs --f".into()))?;
                VertexFunction::parse(&spec, g.n(), default)
            };
            let need_x = || x.clone().ok_or_else(|| Error::Input("this variant needs --x".into()));
            let need_k = || k.ok_or_else(|| Error::Input("this variant needs --k".into()));
            let report = match variant {
                Variant::IsolatedToughness => {
                    let imp = verify::check_isolated_toughness_implication(
                        &g,
                        m,
                        verify::parse_rational(&eps)?,
                        verify::parse_rational(&c)?,
                        &opts,
                    )?;
                    let text = format!(
                        "hypothesis {}; conclusion {}; counterexample {}\n",
                        holds_text(imp.hypothesis.holds),
                        imp.conclusion.as_ref().map_or("not checked", |r| holds_text(r.holds)),
                        imp.counterexample
                    );
                    let code = if imp.counterexample || !imp.hypothesis.holds { 1 } else { 0 };
                    return Ok(Reply { code, text, json: imp.to_json() });
                }
                Variant::EdgeConnectedEstimate => {
                    verify::check_degree_estimate(&g, m, need_k()?, EstimateBranch::EdgeConnected, &opts)?
                }
                Variant::TreeConnectedEstimate => {
                    verify::check_degree_estimate(&g, m, need_k()?, EstimateBranch::TreeConnected, &opts)?
                }
                other => {
                    let hyp = match other {
                        Variant::TreeFactor => Hypothesis::TreeFactor { m, f: need_f(2 * m as i64 + 1)?, x },
                        Variant::TreeFactorSimple => Hypothesis::TreeFactorSimple { m, f: need_f(2 * m as i64 + 1)? },
                        Variant::TreeFactorIndependent => {
                            Hypothesis::TreeFactorIndependent { m, f: need_f(2 * m as i64 + 1)?, x: need_x()? }
                        }
                        Variant::Trail => Hypothesis::Trail { f: need_f(1)? },
                        Variant::TrailConstantTwo => Hypothesis::TrailConstantTwo { f: need_f(1)? },
                        Variant::Walk => Hypothesis::Walk { f: need_f(1)? },
                        Variant::WalkIndependent => Hypothesis::WalkIndependent { f: need_f(1)?, x: need_x()? },
                        Variant::TwoFourFactor => Hypothesis::TwoFourFactor,
                        Variant::HalfTough => Hypothesis::HalfTough,
                        _ => unreachable!("handled above"),
                    };
                    verify::check_hypothesis(&g, &hyp, &opts)?
                }
            };
            let mut text = format!(
                "{} {}: slack {} (lhs {}, rhs {}) over {} sets\n",
                report.condition,
                holds_text(report.holds),
                report.slack,
                report.lhs,
                report.rhs,
                report.enumerated
            );
            if let Some(w) = &report.witness {
                writeln!(text, "witness S: {}", ids_text(w)).unwrap();
            }
            Ok(Reply { code: i32::from(!report.holds), text, json: report.to_json() })
        }
        Command::Generate { family, n, m, edges, simple, seed, s, p, delta, eps, beta, eulerian, strict } => {
            let (g, header) = generate(family, n, m, edges, simple, seed, s, p, delta, &eps, beta, eulerian, strict)?;
            let t = text::write_with_header(&g, std::slice::from_ref(&header));
            Ok(Reply::ok(t.clone(), serde_json::json!({"schema": 1, "family": header, "graph": t})))
        }
        Command::Toughness { input, m, par } => {
            let g = read_graph(&input, stdin)?;
            let opts = VerifyOptions { cap: par.cap, jobs: par.jobs };
            let t = if m == 1 { verify::toughness(&g, &opts)? } else { verify::strong_toughness(&g, m, &opts)? };
            Ok(Reply::ok(format!("{t}\n"), serde_json::json!({"schema": 1, "m": m, "toughness": t})))
        }
        Command::Scan { input, conjecture, k, eps, par } => {
            let graphs = text::parse_many(&read_graphs(&input, stdin)?)?;
            let conj = match conjecture {
                ConjectureArg::HalfToughTwoFour => Conjecture::HalfToughTwoFour,
                ConjectureArg::EdgeConnectedTrail => Conjecture::EdgeConnectedTrail { k },
                ConjectureArg::PartitionDensityEulerian => {
                    Conjecture::PartitionDensityEulerian { eps: verify::parse_rational(&eps)? }
                }
            };
            let entries = verify::conjecture_scan(&graphs, &conj, &VerifyOptions { cap: par.cap, jobs: par.jobs })?;
            let mut t = String::new();
            let opt = |b: Option<bool>| b.map_or("?".to_string(), |b| b.to_string());
            for e in &entries {
                match &e.skipped {
                    Some(why) => writeln!(t, "#{} skipped: {why}", e.index).unwrap(),
                    None => writeln!(
                        t,
                        "#{} n={} e={} hypothesis={} conclusion={}{}",
                        e.index,
                        e.n,
                        e.edges,
                        opt(e.hypothesis),
                        opt(e.conclusion),
                        if e.counterexample { " COUNTEREXAMPLE CANDIDATE" } else { "" }
                    )
                    .unwrap(),
                }
            }
            let found = entries.iter().any(|e| e.counterexample);
            let json = serde_json::json!({"schema": 1, "conjecture": conj.id(), "entries": entries});
            Ok(Reply { code: i32::from(found), text: t, json })
        }
    }
}

fn holds_text(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "violated"
    }
}

fn factor_reply(outcome: &FactorOutcome) -> Reply {
    match outcome {
        FactorOutcome::Found(r) => {
            let mut t = format!("factor: {}\n", ids_text(&r.edges));
            writeln!(t, "degrees: {}", ids_text(&r.degrees)).unwrap();
            Reply::ok(t, outcome.to_json())
        }
        FactorOutcome::Witness { set, .. } => Reply::negative(
            format!("condition violated by S = {{{}}}\n", ids_text(set)),
            outcome.to_json(),
        ),
        FactorOutcome::SearchFailure { best_te } => Reply::negative(
            format!("search failure: best total excess {best_te}\n"),
            outcome.to_json(),
        ),
    }
}

fn tour_reply(tour: &Tour) -> Reply {
    let kind = match tour {
        Tour::Trail(_) => "trail",
        Tour::Walk(_) => "walk",
    };
    let mut t = format!("{kind}: {}\n", ids_text(tour.edges()));
    writeln!(t, "visits: {}", ids_text(tour.visits())).unwrap();
    Reply::ok(t, tour.to_json())
}

fn negative_reply(n: &trails::Negative) -> Reply {
    let mut t = String::from("no tour found");
    if n.proven_absent {
        t.push_str("; exhaustive search proves none exists");
    }
    if let Some(w) = &n.witness {
        write!(t, "; condition violated by S = {{{}}}", ids_text(w)).unwrap();
    }
    if n.certificate.is_some() {
        t.push_str("; graph is not 2-tree-connected");
    }
    t.push('\n');
    Reply::negative(t, n.to_json())
}

#[allow(clippy::too_many_arguments)]
fn generate(
    family: Family,
    n: usize,
    m: usize,
    edges: usize,
    simple: bool,
    seed: u64,
    s: usize,
    p: usize,
    delta: usize,
    eps: &str,
    beta: usize,
    eulerian: bool,
    strict: bool,
) -> Result<(Multigraph, String)> {
    Ok(match family {
        Family::Petersen => (generators::petersen(), "petersen".into()),
        Family::PetersenChain => (generators::petersen_chain(n)?, format!("petersen-chain n={n}")),
        Family::Complete => (generators::complete(n), format!("complete n={n}")),
        Family::Cycle => (generators::cycle(n)?, format!("cycle n={n}")),
        Family::Circulant => (generators::circulant(n, m)?, format!("circulant n={n} m={m}")),
        Family::SparseThreshold => {
            let base = generators::circulant(n, m)?;
            let t = generators::sparse_threshold_graph(&base, m)?;
            (t.graph, format!("sparse-threshold base=circulant n={n} m={m} removed={:?}", t.removed))
        }
        Family::Blowup => {
            let eps = verify::parse_rational(eps)?;
            let (h, kind) = if eulerian {
                (generators::petersen_chain(n.max(1))?, BlowupKind::Eulerian)
            } else {
                let base = generators::circulant(2 * m + 3, m)?;
                (generators::sparse_threshold_graph(&base, m)?.graph, BlowupKind::TreeFactor { m })
            };
            let clique = h.max_degree().max(1);
            let params = BlowupParams {
                n: clique,
                s,
                p,
                max_degree: delta,
                eps: Ratio::new(*eps.numer(), *eps.denom()),
                beta,
                kind,
                strict,
            };
            (
                generators::blowup(&h, &params)?,
                format!("blowup clique={clique} s={s} p={p} delta={delta} eps={eps} beta={beta}"),
            )
        }
        Family::Random => (
            generators::random_graph(n, edges, simple, seed)?,
            format!("random n={n} edges={edges} simple={simple} seed={seed}"),
        ),
    })
}
