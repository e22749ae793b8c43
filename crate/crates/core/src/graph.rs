//! Finite simple undirected graphs on dense vertex labels `0..n`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

/// Errors raised by graph construction and graph queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex index {index} out of range for order {order}")]
    BadIndex { index: usize, order: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),
    #[error("graph of order {order} exceeds the limit of {limit} vertices")]
    TooLarge { order: usize, limit: usize },
}

/// A simple undirected graph. Neighbor lists are kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); order],
        }
    }

    /// Builds the simple graph with exactly the given edges.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    fn check_index(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::BadIndex {
                index: v,
                order: self.order(),
            })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_index(v)?;
        Ok(self.adj[v].len())
    }

    pub fn max_degree(&self) -> Result<usize, GraphError> {
        self.adj
            .iter()
            .map(Vec::len)
            .max()
            .ok_or(GraphError::EmptyGraph)
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        self.adj
            .iter()
            .map(Vec::len)
            .min()
            .ok_or(GraphError::EmptyGraph)
    }

    /// Degrees in ascending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).sorted().collect()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|n| n.len() == d)
    }

    /// Appends a new isolated vertex and returns its label.
    pub(crate) fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_index(u)?;
        self.check_index(v)?;
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub(crate) fn try_remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_index(u)?;
        self.check_index(v)?;
        let pos = self.adj[u]
            .binary_search(&v)
            .map_err(|_| GraphError::MissingEdge(u.min(v), u.max(v)))?;
        self.adj[u].remove(pos);
        let pos = self.adj[v].binary_search(&u).expect("symmetric adjacency");
        self.adj[v].remove(pos);
        Ok(())
    }

    /// Deletes a vertex set. Surviving vertices are relabelled in increasing
    /// order; the returned map sends each new label to its old label.
    pub fn delete_vertices(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut gone = vec![false; self.order()];
        for &v in vertices {
            self.check_index(v)?;
            gone[v] = true;
        }
        let keep: Vec<usize> = self.vertices().filter(|&v| !gone[v]).collect();
        let mut new_label = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            new_label[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| !gone[w])
                    .map(|&w| new_label[w])
                    .collect()
            })
            .collect();
        Ok((Graph { adj }, keep))
    }

    /// Deletes edges; labels are preserved.
    pub fn delete_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.try_remove_edge(u, v)?;
        }
        Ok(g)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length");
        let mut adj = vec![Vec::new(); self.order()];
        for (v, nbrs) in self.adj.iter().enumerate() {
            let mut row: Vec<usize> = nbrs.iter().map(|&w| perm[w]).collect();
            row.sort_unstable();
            adj[perm[v]] = row;
        }
        Graph { adj }
    }

    /// Vertices reachable from `start` while avoiding `blocked`.
    fn reach(&self, start: usize, blocked: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] && !blocked[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    fn connected_avoiding(&self, blocked: &[bool]) -> bool {
        let Some(start) = self.vertices().find(|&v| !blocked[v]) else {
            return true;
        };
        let seen = self.reach(start, blocked);
        self.vertices().all(|v| blocked[v] || seen[v])
    }

    /// True iff every vertex is reachable from vertex 0. Graphs of order at
    /// most one are connected.
    pub fn is_connected(&self) -> bool {
        self.connected_avoiding(&vec![false; self.order()])
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.order()];
        let mut out: Vec<Vec<usize>> = Vec::new();
        let none = vec![false; self.order()];
        for v in self.vertices() {
            if comp[v] != usize::MAX {
                continue;
            }
            let seen = self.reach(v, &none);
            let members: Vec<usize> = self.vertices().filter(|&w| seen[w]).collect();
            for &w in &members {
                comp[w] = out.len();
            }
            out.push(members);
        }
        out
    }

    /// True iff removing `v` disconnects the graph.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let mut blocked = vec![false; self.order()];
        blocked[v] = true;
        !self.connected_avoiding(&blocked)
    }

    /// True iff the graph has at least `k + 1` vertices and stays connected
    /// after removing any set of fewer than `k` vertices. Checked by removing
    /// every such subset.
    pub fn connectivity_at_least(&self, k: usize) -> bool {
        let n = self.order();
        if n < k + 1 {
            return false;
        }
        let mut blocked = vec![false; n];
        for size in 0..k {
            for subset in (0..n).combinations(size) {
                for &v in &subset {
                    blocked[v] = true;
                }
                let ok = self.connected_avoiding(&blocked);
                for &v in &subset {
                    blocked[v] = false;
                }
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// A smallest separating vertex set of size below `k`, if one exists.
    pub fn small_separator(&self, k: usize) -> Option<Vec<usize>> {
        let n = self.order();
        let mut blocked = vec![false; n];
        for size in 0..k.min(n.saturating_sub(1)) {
            for subset in (0..n).combinations(size) {
                for &v in &subset {
                    blocked[v] = true;
                }
                let ok = self.connected_avoiding(&blocked);
                for &v in &subset {
                    blocked[v] = false;
                }
                if !ok {
                    return Some(subset);
                }
            }
        }
        None
    }

    /// Largest `k <= cap` with `connectivity_at_least(k)`.
    pub fn connectivity_capped(&self, cap: usize) -> usize {
        (1..=cap)
            .take_while(|&k| self.connectivity_at_least(k))
            .last()
            .unwrap_or(0)
    }

    /// True iff `u`, `v`, `w` are pairwise adjacent.
    pub fn is_triangle(&self, u: usize, v: usize, w: usize) -> bool {
        self.has_edge(u, v) && self.has_edge(v, w) && self.has_edge(u, w)
    }

    /// Edges as an ordered set.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges().into_iter().collect()
    }
}
