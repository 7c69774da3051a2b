//! Edge and vertex connectivity at desk scale.

use std::collections::VecDeque;

use crate::graph::{Multigraph, VertexId};

/// Global minimum edge cut by Stoer–Wagner, with one shore of a minimum cut.
///
/// Graphs with fewer than two vertices have no cut and report `(0, None)`.
pub fn edge_connectivity(g: &Multigraph) -> (usize, Option<Vec<VertexId>>) {
    let n = g.n();
    if n < 2 {
        return (0, None);
    }
    let mut w = vec![vec![0usize; n]; n];
    for e in g.edges() {
        w[e.u][e.v] += 1;
        w[e.v][e.u] += 1;
    }
    // groups[i] holds the original vertices merged into super-vertex i
    let mut groups: Vec<Vec<VertexId>> = (0..n).map(|v| vec![v]).collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut best = (usize::MAX, Vec::new());

    while alive.len() > 1 {
        let mut used = vec![false; n];
        let mut key = vec![0usize; n];
        let mut order = Vec::with_capacity(alive.len());
        for _ in 0..alive.len() {
            let next = *alive
                .iter()
                .filter(|&&v| !used[v])
                .max_by(|&&a, &&b| key[a].cmp(&key[b]).then(b.cmp(&a)))
                .unwrap();
            used[next] = true;
            order.push(next);
            for &v in &alive {
                if !used[v] {
                    key[v] += w[next][v];
                }
            }
        }
        let t = order[order.len() - 1];
        let s = order[order.len() - 2];
        if key[t] < best.0 {
            let mut side = groups[t].clone();
            side.sort_unstable();
            best = (key[t], side);
        }
        let moved = std::mem::take(&mut groups[t]);
        groups[s].extend(moved);
        for &v in &alive {
            w[s][v] += w[t][v];
            w[v][s] = w[s][v];
        }
        w[s][s] = 0;
        alive.retain(|&v| v != t);
    }
    (best.0, Some(best.1))
}

/// Smallest edge cut whose edges are not all incident to one vertex, found by
/// enumerating every shore containing vertex 0. `None` when no such cut exists.
pub fn essential_edge_connectivity(g: &Multigraph) -> Option<usize> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    assert!(n <= 24, "essential edge connectivity enumerates 2^(n-1) cuts");
    let mut best: Option<usize> = None;
    for bits in 0u64..(1u64 << (n - 1)) {
        let side = |v: usize| v == 0 || (bits >> (v - 1)) & 1 == 1;
        if (0..n).all(side) {
            continue;
        }
        let cut: Vec<_> = g.edges().iter().filter(|e| side(e.u) != side(e.v)).collect();
        let covered = !cut.is_empty()
            && [cut[0].u, cut[0].v]
                .iter()
                .any(|&w| cut.iter().all(|e| e.touches(w)));
        if !covered && best.is_none_or(|b| cut.len() < b) {
            best = Some(cut.len());
        }
    }
    best
}

/// Vertex connectivity κ(G) via unit-capacity flows between non-adjacent
/// pairs, scanning only pairs whose first vertex is among the first κ + 1.
/// Complete graphs report `n − 1`.
pub fn vertex_connectivity(g: &Multigraph) -> usize {
    let n = g.n();
    if n < 2 {
        return 0;
    }
    let mut adj = vec![vec![false; n]; n];
    for e in g.edges() {
        adj[e.u][e.v] = true;
        adj[e.v][e.u] = true;
    }
    let mut kappa = n - 1;
    let mut i = 0;
    while i <= kappa && i < n {
        for j in (i + 1)..n {
            if !adj[i][j] {
                kappa = kappa.min(local_vertex_connectivity(&adj, i, j, kappa));
            }
        }
        i += 1;
    }
    kappa
}

/// Number of internally disjoint s–t paths (capped at `limit`), by
/// augmenting paths in the vertex-split network.
fn local_vertex_connectivity(adj: &[Vec<bool>], s: usize, t: usize, limit: usize) -> usize {
    let n = adj.len();
    // node 2v = v_in, 2v+1 = v_out; arcs stored with residual capacities
    let nodes = 2 * n;
    let mut head: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    let mut to = Vec::new();
    let mut cap = Vec::new();
    let mut add = |a: usize, b: usize, c: usize, head: &mut Vec<Vec<usize>>| {
        head[a].push(to.len());
        to.push(b);
        cap.push(c);
        head[b].push(to.len());
        to.push(a);
        cap.push(0);
    };
    let big = n;
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        add(2 * v, 2 * v + 1, c, &mut head);
        for w in 0..n {
            if adj[v][w] {
                add(2 * v + 1, 2 * w, big, &mut head);
            }
        }
    }
    let (src, dst) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < limit {
        let mut prev_arc = vec![usize::MAX; nodes];
        let mut seen = vec![false; nodes];
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            if x == dst {
                break;
            }
            for &a in &head[x] {
                let y = to[a];
                if cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    prev_arc[y] = a;
                    queue.push_back(y);
                }
            }
        }
        if !seen[dst] {
            break;
        }
        let mut x = dst;
        while x != src {
            let a = prev_arc[x];
            cap[a] -= 1;
            cap[a ^ 1] += 1;
            x = to[a ^ 1];
        }
        flow += 1;
    }
    flow
}
