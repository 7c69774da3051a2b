//! Incremental union of `m` edge-disjoint forests.
//!
//! Independence in the union of `m` graphic matroids is tested by the
//! classical breadth-first exchange search: a new edge either fits directly
//! into some forest, or it displaces an edge on the fundamental cycle it
//! closes, which then looks for room elsewhere, and so on. When the search
//! dies out, every forest restricted to the endpoints of the labelled edges
//! is a spanning tree of that vertex set, which is exactly the tight set the
//! callers need as a certificate.

use std::collections::{HashMap, VecDeque};

use crate::graph::{Edge, EdgeId, VertexId};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone)]
pub struct ForestPacking {
    m: usize,
    n: usize,
    slots: Vec<Edge>,
    owner: Vec<usize>,
    slot_of: HashMap<EdgeId, usize>,
    // adj[forest][vertex] = (neighbour, edge id)
    adj: Vec<Vec<Vec<(VertexId, EdgeId)>>>,
}

/// Rooted view of every forest, valid for one search.
struct Rooted {
    root: Vec<Vec<VertexId>>,
    parent: Vec<Vec<VertexId>>,
    parent_edge: Vec<Vec<EdgeId>>,
    depth: Vec<Vec<usize>>,
}

enum Search {
    /// (slot, new forest) moves; the virtual start edge is reported with slot `NONE`.
    Augment(Vec<(usize, usize)>),
    /// Slots of every labelled edge (the virtual start edge excluded) and the
    /// endpoints of the start edge.
    Blocked(Vec<usize>),
}

impl ForestPacking {
    pub fn new(n: usize, m: usize) -> Self {
        Self {
            m,
            n,
            slots: Vec::new(),
            owner: Vec::new(),
            slot_of: HashMap::new(),
            adj: vec![vec![Vec::new(); n]; m],
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of packed edges.
    pub fn rank(&self) -> usize {
        self.slots.len()
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.slot_of.contains_key(&id)
    }

    /// Forest index holding `id`.
    pub fn forest_of(&self, id: EdgeId) -> Option<usize> {
        self.slot_of.get(&id).map(|&s| self.owner[s])
    }

    /// The forests as sorted edge-id lists.
    pub fn forests(&self) -> Vec<Vec<EdgeId>> {
        let mut out = vec![Vec::new(); self.m];
        for (s, e) in self.slots.iter().enumerate() {
            out[self.owner[s]].push(e.id);
        }
        for f in out.iter_mut() {
            f.sort_unstable();
        }
        out
    }

    /// All packed edge ids, ascending.
    pub fn edge_ids(&self) -> Vec<EdgeId> {
        let mut ids: Vec<_> = self.slots.iter().map(|e| e.id).collect();
        ids.sort_unstable();
        ids
    }

    pub fn edges(&self) -> &[Edge] {
        &self.slots
    }

    /// Adds `e` if the packing stays independent, augmenting as needed.
    /// Otherwise leaves the packing unchanged and returns the tight vertex set
    /// spanned by the exchange search (it contains both ends of `e` and
    /// induces an `m`-tree-connected subgraph of the packed edges).
    pub fn insert(&mut self, e: Edge) -> Result<(), Vec<VertexId>> {
        debug_assert!(!self.contains(e.id), "edge {} already packed", e.id);
        match self.search(e.u, e.v) {
            Search::Augment(moves) => {
                for &(slot, _) in &moves {
                    if slot != NONE {
                        self.detach(slot);
                    }
                }
                self.slots.push(e);
                self.owner.push(NONE);
                let new_slot = self.slots.len() - 1;
                self.slot_of.insert(e.id, new_slot);
                for (slot, forest) in moves {
                    let slot = if slot == NONE { new_slot } else { slot };
                    self.attach(slot, forest);
                }
                Ok(())
            }
            Search::Blocked(labelled) => Err(self.span(e.u, e.v, &labelled)),
        }
    }

    /// Would a new `uv` edge be independent? On `Err` returns the tight set.
    pub fn probe(&self, u: VertexId, v: VertexId) -> Result<(), Vec<VertexId>> {
        if u == v {
            return Err(vec![u]);
        }
        match self.search(u, v) {
            Search::Augment(_) => Ok(()),
            Search::Blocked(labelled) => Err(self.span(u, v, &labelled)),
        }
    }

    /// Removes a packed edge; returns whether it was present.
    pub fn remove(&mut self, id: EdgeId) -> bool {
        let Some(slot) = self.slot_of.get(&id).copied() else {
            return false;
        };
        self.detach(slot);
        self.slot_of.remove(&id);
        let last = self.slots.len() - 1;
        if slot != last {
            self.slots.swap(slot, last);
            self.owner.swap(slot, last);
            self.slot_of.insert(self.slots[slot].id, slot);
        }
        self.slots.pop();
        self.owner.pop();
        true
    }

    fn span(&self, u: VertexId, v: VertexId, labelled: &[usize]) -> Vec<VertexId> {
        let mut mark = vec![false; self.n];
        mark[u] = true;
        mark[v] = true;
        for &s in labelled {
            mark[self.slots[s].u] = true;
            mark[self.slots[s].v] = true;
        }
        (0..self.n).filter(|&w| mark[w]).collect()
    }

    fn detach(&mut self, slot: usize) {
        let f = self.owner[slot];
        if f == NONE {
            return;
        }
        let e = self.slots[slot];
        for w in [e.u, e.v] {
            let list = &mut self.adj[f][w];
            let pos = list
                .iter()
                .position(|&(_, id)| id == e.id)
                .expect("forest adjacency out of sync");
            list.swap_remove(pos);
        }
        self.owner[slot] = NONE;
    }

    fn attach(&mut self, slot: usize, forest: usize) {
        let e = self.slots[slot];
        self.adj[forest][e.u].push((e.v, e.id));
        self.adj[forest][e.v].push((e.u, e.id));
        self.owner[slot] = forest;
    }

    fn rooted(&self) -> Rooted {
        let n = self.n;
        let mut r = Rooted {
            root: vec![vec![NONE; n]; self.m],
            parent: vec![vec![NONE; n]; self.m],
            parent_edge: vec![vec![NONE; n]; self.m],
            depth: vec![vec![0; n]; self.m],
        };
        let mut stack = Vec::new();
        for f in 0..self.m {
            for s in 0..n {
                if r.root[f][s] != NONE {
                    continue;
                }
                r.root[f][s] = s;
                stack.push(s);
                while let Some(x) = stack.pop() {
                    for &(y, id) in &self.adj[f][x] {
                        if r.root[f][y] == NONE {
                            r.root[f][y] = s;
                            r.parent[f][y] = x;
                            r.parent_edge[f][y] = id;
                            r.depth[f][y] = r.depth[f][x] + 1;
                            stack.push(y);
                        }
                    }
                }
            }
        }
        r
    }

    fn search(&self, u: VertexId, v: VertexId) -> Search {
        let rooted = self.rooted();
        let virt = self.slots.len();
        let ends = |s: usize| -> (VertexId, VertexId) {
            if s == virt {
                (u, v)
            } else {
                (self.slots[s].u, self.slots[s].v)
            }
        };
        let owner = |s: usize| if s == virt { NONE } else { self.owner[s] };

        let mut prev = vec![NONE; virt + 1];
        let mut labelled = vec![false; virt + 1];
        labelled[virt] = true;
        let mut queue = VecDeque::from([virt]);
        let mut order = Vec::new();
        let mut path = Vec::new();

        while let Some(g) = queue.pop_front() {
            let (a, b) = ends(g);
            for f in 0..self.m {
                if owner(g) == f {
                    continue;
                }
                if rooted.root[f][a] != rooted.root[f][b] {
                    // g moves into f, each predecessor into the forest its
                    // successor vacated.
                    let mut moves = vec![(g, f)];
                    let mut cur = g;
                    while prev[cur] != NONE {
                        let p = prev[cur];
                        moves.push((p, owner(cur)));
                        cur = p;
                    }
                    let moves = moves
                        .into_iter()
                        .map(|(s, f)| (if s == virt { NONE } else { s }, f))
                        .collect();
                    return Search::Augment(moves);
                }
                path.clear();
                let (mut x, mut y) = (a, b);
                let depth = &rooted.depth[f];
                while x != y {
                    if depth[x] >= depth[y] {
                        path.push(rooted.parent_edge[f][x]);
                        x = rooted.parent[f][x];
                    } else {
                        path.push(rooted.parent_edge[f][y]);
                        y = rooted.parent[f][y];
                    }
                }
                path.sort_unstable();
                for &id in &path {
                    let s = self.slot_of[&id];
                    if !labelled[s] {
                        labelled[s] = true;
                        prev[s] = g;
                        queue.push_back(s);
                        order.push(s);
                    }
                }
            }
        }
        Search::Blocked(order)
    }
}
