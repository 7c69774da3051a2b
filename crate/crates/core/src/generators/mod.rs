//! Sharpness constructions and small named graphs.

mod connectivity;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::packing;

pub use connectivity::{edge_connectivity, essential_edge_connectivity, vertex_connectivity};

pub fn complete(n: usize) -> Multigraph {
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    Multigraph::new(n, &pairs).expect("valid pairs")
}

pub fn cycle(n: usize) -> Result<Multigraph> {
    if n < 3 {
        return Err(Error::Input(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph::new(n, &pairs)
}

/// A random loopless graph with `edges` edges drawn from a seeded stream.
/// With `simple` the edges are distinct pairs, so at most `n(n−1)/2`.
pub fn random_graph(n: usize, edges: usize, simple: bool, seed: u64) -> Result<Multigraph> {
    if n < 2 && edges > 0 {
        return Err(Error::Input("edges need at least two vertices".into()));
    }
    if simple && edges > n * n.saturating_sub(1) / 2 {
        return Err(Error::Input(format!("a simple graph on {n} vertices has at most {} edges", n * n.saturating_sub(1) / 2)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(VertexId, VertexId)> = if simple {
        let mut all: Vec<_> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        all.shuffle(&mut rng);
        all.truncate(edges);
        all
    } else {
        (0..edges)
            .map(|_| {
                let u = rng.gen_range(0..n);
                let v = (u + rng.gen_range(1..n)) % n;
                (u, v)
            })
            .collect()
    };
    Multigraph::new(n, &pairs)
}

/// `C_n(1, …, m)`: vertex `i` adjacent to `i ± 1, …, i ± m` (mod n).
pub fn circulant(n: usize, m: usize) -> Result<Multigraph> {
    if m == 0 || n < 2 * m + 1 {
        return Err(Error::Input(format!(
            "circulant C_{n}(1..{m}) needs m ≥ 1 and n ≥ 2m + 1"
        )));
    }
    let pairs: Vec<_> = (1..=m)
        .flat_map(|j| (0..n).map(move |i| (i, (i + j) % n)))
        .collect();
    Multigraph::new(n, &pairs)
}

/// The Petersen graph: outer 5-cycle `0..5`, spokes `i – i+5`, inner
/// pentagram on `5..10`.
pub fn petersen() -> Multigraph {
    let mut pairs = Vec::with_capacity(15);
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        pairs.push((i, i + 5));
    }
    for i in 0..5 {
        pairs.push((i + 5, (i + 2) % 5 + 5));
    }
    let g = Multigraph::new(10, &pairs).expect("valid pairs");
    assert!(g.degrees().iter().all(|&d| d == 3));
    assert_eq!(girth(&g), Some(5));
    g
}

/// Length of a shortest cycle, `None` for forests. Parallel edges count as
/// 2-cycles.
pub fn girth(g: &Multigraph) -> Option<usize> {
    let inc = g.incidence();
    let mut best: Option<usize> = None;
    for root in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut via = vec![usize::MAX; g.n()];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &i in &inc[x] {
                let e = &g.edges()[i];
                if e.id == via[x] {
                    continue;
                }
                let y = e.other(x);
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    via[y] = e.id;
                    queue.push_back(y);
                } else {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// `n` Petersen copies glued along a fixed edge `xy`: every copy of `x`
/// becomes vertex 0, every copy of `y` vertex 1, and the `n` parallel `xy`
/// edges collapse to a single edge, so the result is simple with
/// `8n + 2` vertices and `14n + 1` edges.
pub fn petersen_chain(copies: usize) -> Result<Multigraph> {
    if copies == 0 {
        return Err(Error::Input("petersen_chain needs at least one copy".into()));
    }
    let base = petersen();
    let (x, y) = (0, 1);
    let n = 8 * copies + 2;
    let mut pairs = Vec::with_capacity(14 * copies + 1);
    for c in 0..copies {
        let map = |v: VertexId| match v {
            0 => x,
            1 => y,
            _ => 2 + 8 * c + (v - 2),
        };
        for e in base.edges() {
            let is_xy = (e.u, e.v) == (x, y) || (e.u, e.v) == (y, x);
            if is_xy && c > 0 {
                continue;
            }
            pairs.push((map(e.u), map(e.v)));
        }
    }
    let g = Multigraph::new(n, &pairs)?;
    debug_assert_eq!(g.edge_count(), 14 * copies + 1);
    debug_assert_eq!(g.degree(x), 2 * copies + 1);
    Ok(g)
}

/// A 2m-regular base minus `m + 1` edges not all incident to one vertex:
/// `m(n − 1) − 1` edges, hence never m-tree-connected, while every
/// partition still has many crossing edges when the base is essentially
/// `(2m + 2)`-edge-connected.
#[derive(Debug, Clone)]
pub struct SparseThreshold {
    pub graph: Multigraph,
    /// Ids (in the base) of the removed edges.
    pub removed: Vec<EdgeId>,
}

pub fn sparse_threshold_graph(base: &Multigraph, m: usize) -> Result<SparseThreshold> {
    if m == 0 {
        return Err(Error::Input("m must be positive".into()));
    }
    let n = base.n();
    if let Some(v) = (0..n).find(|&v| base.degree(v) != 2 * m) {
        return Err(Error::Input(format!(
            "base must be {}-regular; vertex {v} has degree {}",
            2 * m,
            base.degree(v)
        )));
    }
    if n > 24 {
        return Err(Error::Capacity {
            what: "base order for essential edge-connectivity check",
            size: n,
            cap: 24,
        });
    }
    if let Some(lambda) = essential_edge_connectivity(base) {
        if lambda < 2 * m + 2 {
            return Err(Error::Input(format!(
                "base is only essentially {lambda}-edge-connected, {} required",
                2 * m + 2
            )));
        }
    }
    let removed = first_uncovered_set(base, m + 1).ok_or_else(|| {
        Error::Input(format!(
            "base has no {} edges avoiding a common vertex",
            m + 1
        ))
    })?;
    let keep: Vec<EdgeId> = base
        .edge_ids()
        .into_iter()
        .filter(|id| !removed.contains(id))
        .collect();
    let graph = base.spanning_subgraph(&keep)?;
    debug_assert_eq!(graph.edge_count() + 1, m * (n - 1));
    let om = packing::omega_value(&graph, m)?;
    if om != m + 1 {
        return Err(Error::Internal(format!(
            "sparse threshold graph has Ω_m = {om}, expected {}",
            m + 1
        )));
    }
    Ok(SparseThreshold { graph, removed })
}

/// Lexicographically first set of `size` edge ids not all incident to a
/// single vertex.
fn first_uncovered_set(g: &Multigraph, size: usize) -> Option<Vec<EdgeId>> {
    let ids = g.edge_ids();
    let mut chosen = Vec::with_capacity(size);
    fn rec(
        g: &Multigraph,
        ids: &[EdgeId],
        start: usize,
        size: usize,
        chosen: &mut Vec<EdgeId>,
    ) -> bool {
        if chosen.len() == size {
            let first = g.edge(chosen[0]).unwrap();
            return ![first.u, first.v]
                .iter()
                .any(|&w| chosen.iter().all(|&id| g.edge(id).unwrap().touches(w)));
        }
        for i in start..ids.len() {
            chosen.push(ids[i]);
            if rec(g, ids, i + 1, size, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    if size == 0 || ids.len() < size {
        return None;
    }
    rec(g, &ids, 0, size, &mut chosen).then_some(chosen)
}

/// Which negative property the glued copies inherit from the base `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum BlowupKind {
    /// `H` has no m-tree-connected factor; density constant `m − ε`.
    TreeFactor { m: usize },
    /// `H` has no spanning Eulerian subgraph; density constant `7/4 − ε`.
    Eulerian,
}

#[derive(Debug, Clone, Serialize)]
pub struct BlowupParams {
    /// Clique order replacing each vertex of `H`.
    pub n: usize,
    /// Order of the universal clique `R_s`.
    pub s: usize,
    /// Number of copies of the blown-up base.
    pub p: usize,
    /// Degree bound the construction defeats; requires `p > Δ·s`.
    pub max_degree: usize,
    pub eps: Ratio<i64>,
    pub beta: usize,
    pub kind: BlowupKind,
    /// Enforce the lower bound on `n`; off for toy instances.
    pub strict: bool,
}

/// Replaces every vertex of `h` by `K_n` (each new vertex carrying at most
/// one edge of `h`), takes `p` copies, joins the cliques standing for vertex
/// 0 of `h` completely across copies, and adds a clique `R_s` joined to
/// every other vertex. The result is `s`-connected.
pub fn blowup(h: &Multigraph, params: &BlowupParams) -> Result<Multigraph> {
    let BlowupParams { n, s, p, max_degree, .. } = *params;
    let hn = h.n();
    if hn == 0 || n == 0 || s == 0 || p == 0 {
        return Err(Error::Input("blowup parameters must be positive".into()));
    }
    if p <= max_degree * s {
        return Err(Error::Input(format!("need p > Δ·s, got p = {p}, Δ·s = {}", max_degree * s)));
    }
    if h.max_degree() > n {
        return Err(Error::Input(format!(
            "clique order {n} is below the base's maximum degree {}",
            h.max_degree()
        )));
    }
    let zero = Ratio::from_integer(0);
    let one = Ratio::from_integer(1);
    if params.eps <= zero || params.eps >= one {
        return Err(Error::Input("ε must lie strictly between 0 and 1".into()));
    }
    if params.strict {
        let density = match params.kind {
            BlowupKind::TreeFactor { m } => Ratio::from_integer(m as i64),
            BlowupKind::Eulerian => Ratio::new(7, 4),
        };
        let need = (density - params.eps) * Ratio::from_integer(((params.beta + 1) * hn) as i64) + one;
        if Ratio::from_integer(n as i64) < need {
            return Err(Error::Input(format!(
                "clique order {n} is below the required {need}"
            )));
        }
    }

    let block = n * hn;
    let total = p * block + s;
    let mut pairs = Vec::new();
    let vertex = |copy: usize, w: usize, j: usize| copy * block + w * n + j;
    for copy in 0..p {
        for w in 0..hn {
            for a in 0..n {
                for b in (a + 1)..n {
                    pairs.push((vertex(copy, w, a), vertex(copy, w, b)));
                }
            }
        }
        let mut slot = vec![0usize; hn];
        for e in h.edges() {
            let a = vertex(copy, e.u, slot[e.u]);
            let b = vertex(copy, e.v, slot[e.v]);
            slot[e.u] += 1;
            slot[e.v] += 1;
            pairs.push((a, b));
        }
    }
    for c1 in 0..p {
        for c2 in (c1 + 1)..p {
            for a in 0..n {
                for b in 0..n {
                    pairs.push((vertex(c1, 0, a), vertex(c2, 0, b)));
                }
            }
        }
    }
    let r0 = p * block;
    for a in 0..s {
        for b in (a + 1)..s {
            pairs.push((r0 + a, r0 + b));
        }
        for v in 0..r0 {
            pairs.push((r0 + a, v));
        }
    }
    let g = Multigraph::new(total, &pairs)?;
    let kappa = vertex_connectivity(&g);
    if kappa < s {
        return Err(Error::Internal(format!(
            "blowup is only {kappa}-connected, expected at least {s}"
        )));
    }
    Ok(g)
}
