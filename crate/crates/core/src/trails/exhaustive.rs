//! Complete backtracking search for spanning connected even sub-multigraphs
//! with per-vertex degree caps. Used when the constructive pipelines give
//! up, so that a negative answer is still a proof.

use crate::graph::{DisjointSets, EdgeId, Multigraph};

/// Largest edge count (after any duplication) searched exhaustively.
pub const EXHAUSTIVE_MAX_EDGES: usize = 40;

/// Multiplicity of every edge (by position) in a spanning connected even
/// sub-multigraph with `lo ≤ mult ≤ hi` per edge and `d(v) ≤ caps[v]`.
pub(crate) fn search(g: &Multigraph, caps: &[usize], lo: &[u8], hi: &[u8]) -> Option<Vec<u8>> {
    let n = g.n();
    let edges = g.edges();
    if n <= 1 {
        return lo.iter().all(|&l| l == 0).then(|| vec![0; edges.len()]);
    }
    // Decide edges so that vertices complete early; a vertex is complete
    // once its last incident edge is decided.
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by_key(|&i| (edges[i].u.max(edges[i].v), edges[i].u.min(edges[i].v), i));
    let mut last = vec![usize::MAX; n];
    for (pos, &i) in order.iter().enumerate() {
        last[edges[i].u] = pos;
        last[edges[i].v] = pos;
    }
    if last.contains(&usize::MAX) {
        return None;
    }
    let mut completes: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for v in 0..n {
        completes[last[v]].push(v);
    }
    // Remaining capacity of undecided incident edges, for the lower bound.
    let mut deg = vec![0usize; n];
    let mut mult = vec![0u8; edges.len()];
    let mut st = Search {
        g,
        caps,
        lo,
        hi,
        order: &order,
        completes: &completes,
        deg: &mut deg,
        mult: &mut mult,
    };
    st.run(0).then_some(mult)
}

struct Search<'a> {
    g: &'a Multigraph,
    caps: &'a [usize],
    lo: &'a [u8],
    hi: &'a [u8],
    order: &'a [usize],
    completes: &'a [Vec<usize>],
    deg: &'a mut Vec<usize>,
    mult: &'a mut Vec<u8>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return self.connected();
        }
        let i = self.order[pos];
        let e = self.g.edges()[i];
        let (lo, hi) = (self.lo[i], self.hi[i]);
        for k in (lo..=hi).rev() {
            let k_us = k as usize;
            if self.deg[e.u] + k_us > self.caps[e.u] || self.deg[e.v] + k_us > self.caps[e.v] {
                continue;
            }
            self.deg[e.u] += k_us;
            self.deg[e.v] += k_us;
            self.mult[i] = k;
            let ok = self.completes[pos]
                .iter()
                .all(|&v| self.deg[v].is_multiple_of(2) && self.deg[v] > 0);
            if ok && self.run(pos + 1) {
                return true;
            }
            self.deg[e.u] -= k_us;
            self.deg[e.v] -= k_us;
            self.mult[i] = 0;
        }
        false
    }

    fn connected(&self) -> bool {
        let mut dsu = DisjointSets::new(self.g.n());
        for (i, e) in self.g.edges().iter().enumerate() {
            if self.mult[i] > 0 {
                dsu.union(e.u, e.v);
            }
        }
        dsu.count() == 1
    }
}

/// Edge ids of a spanning connected even subgraph with `d(v) ≤ caps[v]`,
/// or `None` if there is none. Panics above [`EXHAUSTIVE_MAX_EDGES`].
pub fn exhaustive_spanning_eulerian(g: &Multigraph, caps: &[usize]) -> Option<Vec<EdgeId>> {
    assert!(g.edge_count() <= EXHAUSTIVE_MAX_EDGES, "too many edges for exhaustive search");
    let m = g.edge_count();
    let mult = search(g, caps, &vec![0; m], &vec![1; m])?;
    Some(
        g.edges()
            .iter()
            .zip(&mult)
            .filter(|(_, &k)| k > 0)
            .map(|(e, _)| e.id)
            .collect(),
    )
}
