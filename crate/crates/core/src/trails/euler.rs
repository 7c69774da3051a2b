use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::packing;

use super::ClosedTrail;

/// A forest `F ⊆ E(G)` whose odd-degree vertices are exactly `q`.
///
/// Takes the BFS tree from vertex 0 (lowest-id edges first) and keeps a tree
/// edge iff the subtree below it holds an odd number of `q`-vertices.
pub fn parity_forest(g: &Multigraph, q: &[VertexId]) -> Result<Vec<EdgeId>> {
    let n = g.n();
    let mut odd = vec![false; n];
    for &v in q {
        if v >= n {
            return Err(Error::Input(format!("vertex {v} out of range")));
        }
        odd[v] = !odd[v];
    }
    if odd.iter().filter(|&&b| b).count() % 2 == 1 {
        return Err(Error::Input(
            "parity forest needs an even number of odd vertices".into(),
        ));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let inc = g.incidence();
    let mut parent_edge = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &i in &inc[x] {
            let e = &g.edges()[i];
            let y = e.other(x);
            if !seen[y] {
                seen[y] = true;
                parent_edge[y] = i;
                queue.push_back(y);
            }
        }
    }
    if order.len() < n {
        return Err(Error::Domain("parity forest needs a connected graph".into()));
    }
    let mut forest = Vec::new();
    for &v in order.iter().rev().filter(|&&v| v != 0) {
        if odd[v] {
            let e = &g.edges()[parent_edge[v]];
            forest.push(e.id);
            let p = e.other(v);
            odd[p] = !odd[p];
        }
    }
    forest.sort_unstable();
    Ok(forest)
}

/// A spanning connected even subgraph `L = T₁ ∪ F` of a 2-tree-connected
/// graph, where `T₁, T₂` are edge-disjoint spanning trees and `F ⊆ T₂`
/// fixes the parity of `T₁`.
pub fn spanning_eulerian_from_2tc(h: &Multigraph) -> Result<Vec<EdgeId>> {
    let p = packing::require_tree_connected(h, 2)?;
    let forests = p.forests();
    eulerian_from_trees(h, &forests[0], &forests[1])
}

pub(crate) fn eulerian_from_trees(
    h: &Multigraph,
    t1: &[EdgeId],
    t2: &[EdgeId],
) -> Result<Vec<EdgeId>> {
    let mut d1 = vec![0usize; h.n()];
    for &id in t1 {
        let e = h.edge(id).expect("tree edge");
        d1[e.u] += 1;
        d1[e.v] += 1;
    }
    let odd: Vec<VertexId> = (0..h.n()).filter(|&v| d1[v] % 2 == 1).collect();
    let tree2 = h.spanning_subgraph(t2)?;
    let fix = parity_forest(&tree2, &odd)?;
    let mut l: Vec<EdgeId> = t1.iter().chain(&fix).copied().collect();
    l.sort_unstable();
    Ok(l)
}

/// Euler circuit of a connected even multigraph, always leaving a vertex by
/// its lowest-id unused edge.
pub fn hierholzer(l: &Multigraph, start: VertexId) -> Result<ClosedTrail> {
    let n = l.n();
    if start >= n {
        return Err(Error::Input(format!("start vertex {start} out of range")));
    }
    if let Some(v) = (0..n).find(|&v| l.degree(v) % 2 == 1) {
        return Err(Error::Input(format!("vertex {v} has odd degree")));
    }
    if !l.is_connected() {
        return Err(Error::Input("Euler circuit needs a connected graph".into()));
    }
    let inc = l.incidence();
    let mut next = vec![0usize; n];
    let mut used = vec![false; l.edge_count()];
    let mut stack: Vec<(VertexId, Option<usize>)> = vec![(start, None)];
    let mut circuit = Vec::with_capacity(l.edge_count());
    while let Some(&(v, via)) = stack.last() {
        while next[v] < inc[v].len() && used[inc[v][next[v]]] {
            next[v] += 1;
        }
        if let Some(&i) = inc[v].get(next[v]) {
            used[i] = true;
            stack.push((l.edges()[i].other(v), Some(i)));
        } else {
            stack.pop();
            if let Some(i) = via {
                circuit.push(i);
            }
        }
    }
    circuit.reverse();
    let edges: Vec<EdgeId> = circuit.iter().map(|&i| l.edges()[i].id).collect();
    Ok(ClosedTrail::from_edges(l, start, edges))
}

/// Spanning tree edges in BFS order from vertex 0 (lowest ids first).
pub(crate) fn bfs_tree(g: &Multigraph) -> Option<Vec<EdgeId>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    let inc = g.incidence();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut tree = Vec::new();
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &i in &inc[x] {
            let e = &g.edges()[i];
            let y = e.other(x);
            if !seen[y] {
                seen[y] = true;
                tree.push(e.id);
                queue.push_back(y);
            }
        }
    }
    (tree.len() + 1 == n).then_some(tree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_examples() {
        let path = Multigraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(parity_forest(&path, &[]).unwrap(), Vec::<EdgeId>::new());
        assert_eq!(parity_forest(&path, &[0, 2]).unwrap(), vec![0, 1]);
        let star = Multigraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(parity_forest(&star, &[1, 2]).unwrap(), vec![0, 1]);
        assert!(parity_forest(&star, &[1]).is_err());
        let split = Multigraph::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(parity_forest(&split, &[]), Err(Error::Domain(_))));
    }

    #[test]
    fn circuits() {
        let bowtie =
            Multigraph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let t = hierholzer(&bowtie, 0).unwrap();
        assert_eq!(t.edges.len(), 6);
        assert_eq!(t.visits[0], 2);
        let doubled = Multigraph::new(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(hierholzer(&doubled, 0).unwrap().edges, vec![0, 1]);
        let path = Multigraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(hierholzer(&path, 0).is_err());
    }

    #[test]
    fn k4_even_subgraph() {
        let k4 = crate::generators::complete(4);
        let l = spanning_eulerian_from_2tc(&k4).unwrap();
        let sub = k4.spanning_subgraph(&l).unwrap();
        assert!(sub.is_connected());
        assert!(sub.degrees().iter().all(|&d| d % 2 == 0 && d > 0));
    }
}
