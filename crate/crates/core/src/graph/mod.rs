//! Loopless multigraphs with stable edge ids.
//!
//! Vertices are dense indices `0..n`. Every edge record carries an id that is
//! preserved by all subgraph operations, so forests, factors and trails can be
//! expressed as id sets regardless of which derived graph produced them.
//! Parallel edges are separate records; there is no multiplicity field.

mod function;
mod partition;
pub mod text;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

pub use function::VertexFunction;
pub use partition::VertexPartition;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    /// The endpoint opposite to `w`.
    pub fn other(&self, w: VertexId) -> VertexId {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    // Sorted by id, ids unique.
    edges: Vec<Edge>,
    labels: Vec<String>,
}

impl Multigraph {
    /// Builds a graph whose edge ids are the positions in `pairs`.
    pub fn new(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(id, &(u, v))| Edge { id, u, v })
            .collect();
        Self::from_edges(n, edges)
    }

    /// Builds a graph from explicit edge records. Ids must be unique.
    pub fn from_edges(n: usize, mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort_by_key(|e| e.id);
        for w in edges.windows(2) {
            if w[0].id == w[1].id {
                return Err(Error::Input(format!("duplicate edge id {}", w[0].id)));
            }
        }
        for e in &edges {
            if e.u >= n || e.v >= n {
                return Err(Error::Input(format!(
                    "edge {} = ({}, {}) has an endpoint outside 0..{n}",
                    e.id, e.u, e.v
                )));
            }
            if e.u == e.v {
                return Err(Error::Input(format!("edge {} is a loop at {}", e.id, e.u)));
            }
        }
        let labels = (0..n).map(|v| v.to_string()).collect();
        Ok(Self { n, edges, labels })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            labels: (0..n).map(|v| v.to_string()).collect(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Input(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_null(&self) -> bool {
        self.n == 0
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn contains_edge(&self, id: EdgeId) -> bool {
        self.edge(id).is_some()
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges.iter().map(|e| e.id).collect()
    }

    pub fn max_edge_id(&self) -> Option<EdgeId> {
        self.edges.last().map(|e| e.id)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            d[e.u] += 1;
            d[e.v] += 1;
        }
        d
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Incidence lists: for each vertex the positions (not ids) of its edges.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            inc[e.u].push(i);
            inc[e.v].push(i);
        }
        inc
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &[VertexId]) -> usize {
        let mask = self.mask_of(set);
        self.edges.iter().filter(|e| mask[e.u] && mask[e.v]).count()
    }

    /// Number of edges with exactly one end in `set`.
    pub fn boundary_size(&self, set: &[VertexId]) -> usize {
        let mask = self.mask_of(set);
        self.edges.iter().filter(|e| mask[e.u] != mask[e.v]).count()
    }

    /// `e_G(P)`: edges whose ends lie in different parts.
    pub fn crossing_edges(&self, partition: &VertexPartition) -> usize {
        let part = partition.part_index(self.n);
        self.edges
            .iter()
            .filter(|e| part[e.u] != part[e.v])
            .count()
    }

    pub(crate) fn mask_of(&self, set: &[VertexId]) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        for &v in set {
            if v < self.n {
                mask[v] = true;
            }
        }
        mask
    }

    fn check_vertices(&self, set: &[VertexId]) -> Result<()> {
        match set.iter().find(|&&v| v >= self.n) {
            Some(v) => Err(Error::Input(format!(
                "vertex {v} is not in the graph (n = {})",
                self.n
            ))),
            None => Ok(()),
        }
    }

    pub(crate) fn check_edge_ids(&self, ids: &[EdgeId]) -> Result<()> {
        match ids.iter().find(|&&id| !self.contains_edge(id)) {
            Some(id) => Err(Error::Input(format!("edge id {id} is not in the graph"))),
            None => Ok(()),
        }
    }

    /// `G[X]`: vertices of `X` renumbered in ascending order, edge ids kept.
    pub fn induced_subgraph(&self, set: &[VertexId]) -> Result<Multigraph> {
        if set.is_empty() {
            return Err(Error::Input("induced subgraph of an empty vertex set".into()));
        }
        self.check_vertices(set)?;
        Ok(self.restrict(&self.mask_of(set)))
    }

    /// `G \ S`. Deleting every vertex yields the null graph.
    pub fn delete_vertices(&self, set: &[VertexId]) -> Result<Multigraph> {
        self.check_vertices(set)?;
        let mut keep = self.mask_of(set);
        keep.iter_mut().for_each(|b| *b = !*b);
        Ok(self.restrict(&keep))
    }

    fn restrict(&self, keep: &[bool]) -> Multigraph {
        let mut new_index = vec![usize::MAX; self.n];
        let mut labels = Vec::new();
        for v in 0..self.n {
            if keep[v] {
                new_index[v] = labels.len();
                labels.push(self.labels[v].clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep[e.u] && keep[e.v])
            .map(|e| Edge {
                id: e.id,
                u: new_index[e.u],
                v: new_index[e.v],
            })
            .collect();
        Multigraph {
            n: labels.len(),
            edges,
            labels,
        }
    }

    /// Spanning subgraph on the same vertex set keeping only the listed edge ids.
    pub fn spanning_subgraph(&self, ids: &[EdgeId]) -> Result<Multigraph> {
        self.check_edge_ids(ids)?;
        let keep: BTreeSet<EdgeId> = ids.iter().copied().collect();
        Ok(Multigraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .filter(|e| keep.contains(&e.id))
                .copied()
                .collect(),
            labels: self.labels.clone(),
        })
    }

    /// `G/P`: one vertex per part (in partition order); intra-part edges are
    /// dropped, crossing edges keep their ids.
    pub fn contract(&self, partition: &VertexPartition) -> Result<Multigraph> {
        if !partition.is_partition_of(self.n) {
            return Err(Error::Input(
                "contraction requires a partition of the vertex set".into(),
            ));
        }
        let part = partition.part_index(self.n);
        let edges = self
            .edges
            .iter()
            .filter(|e| part[e.u] != part[e.v])
            .map(|e| Edge {
                id: e.id,
                u: part[e.u],
                v: part[e.v],
            })
            .collect();
        let labels = partition
            .parts()
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&v| self.labels[v].as_str())
                    .collect::<Vec<_>>()
                    .join("+")
            })
            .collect();
        Ok(Multigraph {
            n: partition.len(),
            edges,
            labels,
        })
    }

    /// Adds one extra copy of each listed edge. Copies get fresh ids above the
    /// current maximum; [`EdgeCopies::original`] maps any id back.
    pub fn with_copies(&self, ids: &[EdgeId]) -> Result<EdgeCopies> {
        self.check_edge_ids(ids)?;
        let offset = self.max_edge_id().map_or(0, |m| m + 1);
        let mut edges = self.edges.clone();
        let mut sorted = ids.to_vec();
        sorted.sort_unstable();
        let mut origin = Vec::with_capacity(sorted.len());
        for (k, id) in sorted.into_iter().enumerate() {
            let e = *self.edge(id).expect("checked above");
            edges.push(Edge {
                id: offset + k,
                u: e.u,
                v: e.v,
            });
            origin.push(id);
        }
        Ok(EdgeCopies {
            graph: Multigraph {
                n: self.n,
                edges,
                labels: self.labels.clone(),
            },
            offset,
            origin,
        })
    }

    /// Every edge doubled.
    pub fn duplicate_edges(&self) -> EdgeCopies {
        self.with_copies(&self.edge_ids())
            .expect("all ids belong to the graph")
    }

    /// Connected components and the number of isolated vertices.
    pub fn components(&self) -> (VertexPartition, usize) {
        let mut dsu = DisjointSets::new(self.n);
        for e in &self.edges {
            dsu.union(e.u, e.v);
        }
        let partition = dsu.partition();
        let deg = self.degrees();
        let iso = partition
            .parts()
            .iter()
            .filter(|p| p.len() == 1 && deg[p[0]] == 0)
            .count();
        (partition, iso)
    }

    /// ω(G); zero for the null graph.
    pub fn component_count(&self) -> usize {
        let mut dsu = DisjointSets::new(self.n);
        for e in &self.edges {
            dsu.union(e.u, e.v);
        }
        dsu.count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Same graph with edges sorted by (min end, max end, id) and ids
    /// renumbered to positions. This is the order the text writer uses.
    pub fn canonical(&self) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.sort_by_key(|e| (e.u.min(e.v), e.u.max(e.v), e.id));
        let edges = edges
            .into_iter()
            .enumerate()
            .map(|(id, e)| Edge {
                id,
                u: e.u.min(e.v),
                v: e.u.max(e.v),
            })
            .collect();
        Multigraph {
            n: self.n,
            edges,
            labels: self.labels.clone(),
        }
    }
}

/// A graph with extra edge copies and the map back to the source ids.
#[derive(Debug, Clone)]
pub struct EdgeCopies {
    pub graph: Multigraph,
    offset: EdgeId,
    origin: Vec<EdgeId>,
}

impl EdgeCopies {
    pub fn original(&self, id: EdgeId) -> EdgeId {
        if id >= self.offset {
            self.origin[id - self.offset]
        } else {
            id
        }
    }

    pub fn is_copy(&self, id: EdgeId) -> bool {
        id >= self.offset
    }

    /// The id of the copy of original edge `id`, if one was made.
    pub fn copy_of(&self, id: EdgeId) -> Option<EdgeId> {
        self.origin
            .binary_search(&id)
            .ok()
            .map(|k| self.offset + k)
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    count: usize,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            count: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.count -= 1;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn partition(&mut self) -> VertexPartition {
        self.partition_of(&(0..self.parent.len()).collect::<Vec<_>>())
    }

    /// Groups the listed elements by representative.
    pub fn partition_of(&mut self, ground: &[usize]) -> VertexPartition {
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for &v in ground {
            let r = self.find(v);
            groups.entry(r).or_default().push(v);
        }
        VertexPartition::from_parts_unchecked(groups.into_values().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Multigraph {
        Multigraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn k4() -> Multigraph {
        Multigraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_bad_endpoints() {
        assert!(Multigraph::new(2, &[(1, 1)]).is_err());
        assert!(Multigraph::new(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn induced_subgraph_keeps_ids() {
        let g = triangle();
        let h = g.induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.edge_ids(), vec![0]);
        assert_eq!(k4().induced_subgraph(&[0, 1, 2, 3]).unwrap(), k4());
        assert!(g.induced_subgraph(&[]).is_err());
        assert!(g.induced_subgraph(&[5]).is_err());
    }

    #[test]
    fn delete_vertices_cases() {
        let p3 = Multigraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let d = p3.delete_vertices(&[1]).unwrap();
        assert_eq!((d.n(), d.edge_count()), (2, 0));
        assert_eq!(p3.delete_vertices(&[]).unwrap(), p3);
        let all = p3.delete_vertices(&[0, 1, 2]).unwrap();
        assert!(all.is_null());
        assert_eq!(all.component_count(), 0);
    }

    #[test]
    fn contraction_counts() {
        let c4 = Multigraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p = VertexPartition::new(vec![vec![0, 2], vec![1, 3]]).unwrap();
        let q = c4.contract(&p).unwrap();
        assert_eq!((q.n(), q.edge_count()), (2, 4));

        let p = VertexPartition::new(vec![vec![0, 1], vec![2, 3]]).unwrap();
        let q = k4().contract(&p).unwrap();
        assert_eq!((q.n(), q.edge_count()), (2, 4));
        assert!(!q.contains_edge(0) && !q.contains_edge(5));

        let singletons = VertexPartition::singletons(4);
        assert_eq!(k4().contract(&singletons).unwrap().edges(), k4().edges());

        let bad = VertexPartition::new(vec![vec![0, 1]]).unwrap();
        assert!(k4().contract(&bad).is_err());
    }

    #[test]
    fn duplication_maps_back() {
        let g = Multigraph::new(2, &[(0, 1)]).unwrap();
        let d = g.duplicate_edges();
        assert_eq!(d.graph.edge_count(), 2);
        assert_eq!(d.original(1), 0);
        let t = triangle().duplicate_edges();
        assert!(t.graph.degrees().iter().all(|&x| x == 4));
        assert_eq!(t.copy_of(2), Some(5));
    }

    #[test]
    fn components_and_isolated() {
        // K3 + K3 + isolated vertex
        let g = Multigraph::new(
            7,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        )
        .unwrap();
        let (p, iso) = g.components();
        assert_eq!((p.len(), iso), (3, 1));
        assert_eq!(k4().components().0.len(), 1);
    }

    #[test]
    fn canonical_order() {
        let g = Multigraph::new(3, &[(2, 1), (0, 2), (1, 0)]).unwrap();
        let c = g.canonical();
        let pairs: Vec<_> = c.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 2)]);
    }
}
