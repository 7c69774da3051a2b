//! Brute-force oracles and random instance generators shared by the
//! integration tests. Nothing here calls into the algorithms under test
//! except to build `Multigraph` values.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treeconn::graph::{Multigraph, VertexPartition};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All set partitions of `0..n` as part-index vectors (restricted growth strings).
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut a = vec![0usize; n];
    fn rec(i: usize, max: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == a.len() {
            out.push(a.clone());
            return;
        }
        for b in 0..=max + 1 {
            a[i] = b;
            rec(i + 1, max.max(b), a, out);
        }
    }
    rec(1, 0, &mut a, &mut out);
    out
}

pub fn part_count(labels: &[usize]) -> usize {
    labels.iter().max().map_or(0, |m| m + 1)
}

pub fn crossing(g: &Multigraph, labels: &[usize]) -> usize {
    g.edges().iter().filter(|e| labels[e.u] != labels[e.v]).count()
}

/// Rank of the m-fold forest union by the partition formula
/// `min_P m(n − |P|) + e_G(P)`.
pub fn rank_oracle(g: &Multigraph, m: usize) -> usize {
    let n = g.n();
    set_partitions(n)
        .iter()
        .map(|p| m * (n - part_count(p)) + crossing(g, p))
        .min()
        .unwrap_or(0)
}

pub fn omega_oracle(g: &Multigraph, m: usize) -> usize {
    m * g.n() - rank_oracle(g, m)
}

/// `Ω_m(G∖S)` by the partition formula on the remaining graph.
pub fn omega_without_oracle(g: &Multigraph, m: usize, s_mask: u64) -> usize {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| s_mask >> v & 1 == 0).collect();
    if keep.is_empty() {
        return 0;
    }
    omega_oracle(&g.induced_subgraph(&keep).unwrap(), m)
}

/// Union-find acyclicity check for one edge-id set.
pub fn is_forest(g: &Multigraph, ids: &[usize]) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for &id in ids {
        let Some(e) = g.edge(id) else { return false };
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

pub fn is_spanning_tree(g: &Multigraph, ids: &[usize]) -> bool {
    ids.len() + 1 == g.n() && is_forest(g, ids)
}

pub fn pairwise_disjoint(sets: &[Vec<usize>]) -> bool {
    let mut seen = std::collections::HashSet::new();
    sets.iter().flatten().all(|&id| seen.insert(id))
}

/// Connectivity of the spanning subgraph on `ids` via DFS.
pub fn spans_connected(g: &Multigraph, ids: &[usize]) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for &id in ids {
        let e = g.edge(id).unwrap();
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|b| b)
}

pub fn degrees_of(g: &Multigraph, ids: &[usize]) -> Vec<usize> {
    let mut d = vec![0; g.n()];
    for &id in ids {
        let e = g.edge(id).unwrap();
        d[e.u] += 1;
        d[e.v] += 1;
    }
    d
}

/// Number of components of `G∖S` via DFS (0 for the null graph).
pub fn omega1_without(g: &Multigraph, s_mask: u64) -> usize {
    let n = g.n();
    let mut adj = vec![Vec::new(); n];
    for e in g.edges() {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut seen: Vec<bool> = (0..n).map(|v| s_mask >> v & 1 == 1).collect();
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

/// Random loopless multigraph with `n` vertices and `e` edges.
pub fn random_multigraph(r: &mut impl Rng, n: usize, e: usize) -> Multigraph {
    let pairs: Vec<(usize, usize)> = (0..e)
        .map(|_| {
            let u = r.gen_range(0..n);
            let mut v = r.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            (u, v)
        })
        .collect();
    Multigraph::new(n, &pairs).unwrap()
}

/// Random simple graph G(n, p).
pub fn random_simple(r: &mut impl Rng, n: usize, p: f64) -> Multigraph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if r.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Multigraph::new(n, &pairs).unwrap()
}

/// Random multigraph that is a union of `m` random spanning trees plus
/// `extra` random edges — always m-tree-connected.
pub fn random_tree_connected(r: &mut impl Rng, n: usize, m: usize, extra: usize) -> Multigraph {
    let mut pairs = Vec::new();
    for _ in 0..m {
        pairs.extend(random_tree_pairs(r, n));
    }
    for _ in 0..extra {
        let u = r.gen_range(0..n);
        let mut v = r.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        pairs.push((u, v));
    }
    Multigraph::new(n, &pairs).unwrap()
}

/// Edges of a uniformly shuffled random recursive tree on `0..n`.
pub fn random_tree_pairs(r: &mut impl Rng, n: usize) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = r.gen_range(0..=i);
        order.swap(i, j);
    }
    (1..n)
        .map(|i| (order[r.gen_range(0..i)], order[i]))
        .collect()
}

/// Edge connectivity by brute force over all vertex bipartitions.
pub fn edge_connectivity_oracle(g: &Multigraph) -> usize {
    let n = g.n();
    if n < 2 {
        return 0;
    }
    (1u64..(1 << (n - 1)))
        .map(|mask| {
            g.edges()
                .iter()
                .filter(|e| (mask >> e.u & 1) != (mask >> e.v & 1))
                .count()
        })
        .min()
        .unwrap()
}

/// Every connected simple graph on `n` vertices up to isomorphism, as edge lists.
pub fn connected_simple_graphs(n: usize) -> Vec<Multigraph> {
    if n <= 1 {
        return vec![Multigraph::new(n, &[]).unwrap()];
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let perms = permutations(n);
    // Grow from graphs on n − 1 vertices: any connected graph has a
    // non-cut vertex, so deleting it leaves a connected graph.
    let smaller: Vec<Vec<(usize, usize)>> = connected_simple_graphs(n - 1)
        .iter()
        .map(|g| g.edges().iter().map(|e| (e.u, e.v)).collect())
        .collect();
    for base in smaller {
        for nb in 1u32..(1 << (n - 1)) {
            let mut edges = base.clone();
            for w in 0..(n - 1) {
                if nb >> w & 1 == 1 {
                    edges.push((w, n - 1));
                }
            }
            let key = canonical_key(n, &edges, &perms);
            if seen.insert(key) {
                out.push(Multigraph::new(n, &edges).unwrap());
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            if k.is_multiple_of(2) {
                p.swap(i, k - 1);
            } else {
                p.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut p, &mut out);
    out
}

fn canonical_key(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u64 {
    let bit = |u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        // index of pair (a, b) in row-major upper triangle
        a * n + b
    };
    perms
        .iter()
        .map(|p| {
            edges
                .iter()
                .fold(0u64, |acc, &(u, v)| acc | 1 << bit(p[u], p[v]))
        })
        .min()
        .unwrap()
}

pub fn partition_from_labels(labels: &[usize]) -> VertexPartition {
    let k = part_count(labels);
    let mut parts = vec![Vec::new(); k];
    for (v, &l) in labels.iter().enumerate() {
        parts[l].push(v);
    }
    VertexPartition::new(parts).unwrap()
}

/// The Petersen graph from its Kneser description: 2-subsets of a 5-set,
/// adjacent when disjoint. Independent of the library generator.
pub fn kneser_petersen() -> Multigraph {
    let subsets: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
        .collect();
    let mut pairs = Vec::new();
    for i in 0..10 {
        for j in (i + 1)..10 {
            let (a, b) = subsets[i];
            let (c, d) = subsets[j];
            if a != c && a != d && b != c && b != d {
                pairs.push((i, j));
            }
        }
    }
    Multigraph::new(10, &pairs).unwrap()
}

/// Does `g` have a spanning connected even subgraph? Brute force over all
/// edge subsets (fine up to ~20 edges).
pub fn has_spanning_eulerian_subgraph(g: &Multigraph) -> bool {
    spanning_even_subgraphs(g, usize::MAX).next().is_some()
}

/// Edge subsets that are spanning, connected and even, with max degree ≤ `cap`.
pub fn spanning_even_subgraphs(g: &Multigraph, cap: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    let ids = g.edge_ids();
    assert!(ids.len() < 30, "brute force limited to < 30 edges");
    (0u64..(1 << ids.len())).filter_map(move |mask| {
        let chosen: Vec<usize> = (0..ids.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| ids[i])
            .collect();
        let d = degrees_of(g, &chosen);
        if d.iter().any(|&x| x % 2 == 1 || x == 0 || x > cap) && g.n() > 1 {
            return None;
        }
        spans_connected(g, &chosen).then_some(chosen)
    })
}

pub type Q = num_rational::Ratio<i64>;

pub fn q(a: i64) -> Q {
    Q::from_integer(a)
}

pub fn mask_set(n: usize, mask: u64) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// `Ω_m(G[S])` by the partition formula (0 for `S = ∅`).
pub fn omega_inside_oracle(g: &Multigraph, m: usize, s_mask: u64) -> usize {
    let set = mask_set(g.n(), s_mask);
    if set.is_empty() {
        return 0;
    }
    omega_oracle(&g.induced_subgraph(&set).unwrap(), m)
}

/// Isolated vertices of `G∖S`.
pub fn isolated_without(g: &Multigraph, s_mask: u64) -> usize {
    let n = g.n();
    let mut deg = vec![0usize; n];
    for e in g.edges() {
        if s_mask >> e.u & 1 == 0 && s_mask >> e.v & 1 == 0 {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
    }
    (0..n).filter(|&v| s_mask >> v & 1 == 0 && deg[v] == 0).count()
}

/// `Ω_m(G∖S) ≤ Σ_S (f − 2m) + m + Ω_m(G[S])` for every `S`.
pub fn tree_factor_condition_oracle(g: &Multigraph, m: usize, f: &[i64]) -> bool {
    let n = g.n();
    (0u64..(1 << n)).all(|mask| {
        let lhs = omega_without_oracle(g, m, mask) as i64;
        let sum: i64 = mask_set(n, mask).iter().map(|&v| f[v] - 2 * m as i64).sum();
        lhs <= sum + m as i64 + omega_inside_oracle(g, m, mask) as i64
    })
}

/// Toughness as `min |S|/ω(G∖S)` over sets with `ω ≥ 2`; `None` if none.
pub fn toughness_oracle(g: &Multigraph) -> Option<Q> {
    let n = g.n();
    (0u64..(1 << n))
        .filter_map(|mask| {
            let w = omega1_without(g, mask);
            (w >= 2).then(|| Q::new(mask.count_ones() as i64, w as i64))
        })
        .min()
}

/// Is the subgraph on `ids` m-tree-connected (rank `m(n−1)` by the partition formula)?
pub fn is_tree_connected_oracle(g: &Multigraph, ids: &[usize], m: usize) -> bool {
    let h = g.spanning_subgraph(ids).unwrap();
    rank_oracle(&h, m) == m * (g.n().max(1) - 1)
}

/// Random multigraph whose edge connectivity is at least `k` (by rejection,
/// adding edges until the oracle agrees).
pub fn random_k_edge_connected(r: &mut impl Rng, n: usize, k: usize, simple: bool) -> Multigraph {
    loop {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let max = n * (n - 1) / 2;
        for _ in 0..(k * n * 2) {
            let u = r.gen_range(0..n);
            let mut v = r.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            let key = (u.min(v), u.max(v));
            if simple && pairs.contains(&key) {
                continue;
            }
            pairs.push(key);
            let g = Multigraph::new(n, &pairs).unwrap();
            if pairs.len() >= k * n / 2 && edge_connectivity_oracle(&g) >= k {
                return g;
            }
            if simple && pairs.len() == max {
                break;
            }
        }
    }
}

/// Replays a closed edge sequence from `start`; returns how often each
/// vertex occurs in the cyclic vertex sequence, or `None` if it is not a
/// closed walk.
pub fn replay_visits(g: &Multigraph, start: usize, edges: &[usize]) -> Option<Vec<usize>> {
    let mut visits = vec![0; g.n()];
    let mut at = start;
    for &id in edges {
        let e = g.edge(id)?;
        if e.u != at && e.v != at {
            return None;
        }
        visits[at] += 1;
        at = if e.u == at { e.v } else { e.u };
    }
    (at == start).then_some(visits)
}
