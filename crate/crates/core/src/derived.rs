//! Line, medial and radial graphs, and root recovery from line graphs.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::graph::Graph;
use crate::planarity::{is_3polytope, Embedding};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivedError {
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is too small for this construction")]
    TooSmall,
    #[error("graph is not a 3-polytope")]
    NotPolytopal,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not a line graph")]
    NotLineGraph,
}

/// A line graph together with the root edge behind each of its vertices.
#[derive(Debug, Clone)]
pub struct LabeledLineGraph {
    pub graph: Graph,
    /// `origin[x]` is the root edge `(u, v)`, `u < v`, represented by `x`.
    pub origin: Vec<(usize, usize)>,
}

impl LabeledLineGraph {
    /// Line-graph vertex for a root edge.
    pub fn vertex_for(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.origin.binary_search(&e).ok()
    }

    /// Vertices of the clique formed by the root edges at `u`.
    pub fn star_of(&self, u: usize) -> Vec<usize> {
        self.origin
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == u || b == u)
            .map(|(i, _)| i)
            .collect()
    }

    /// Labels `ab` in the style of the root's edge names.
    pub fn labels(&self) -> Vec<String> {
        self.origin
            .iter()
            .map(|&(a, b)| {
                if a < 10 && b < 10 {
                    format!("{a}{b}")
                } else {
                    format!("{a},{b}")
                }
            })
            .collect()
    }
}

/// `L(G)`: one vertex per edge of `G` (in `G.edges()` order), adjacent when
/// the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<LabeledLineGraph, DerivedError> {
    let origin = g.edges();
    if origin.is_empty() {
        return Err(DerivedError::NoEdges);
    }
    let index: HashMap<(usize, usize), usize> =
        origin.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut lg = Graph::empty(origin.len());
    for v in g.vertices() {
        let inc: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| index[&(v.min(w), v.max(w))])
            .collect();
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                lg.try_add_edge(inc[i], inc[j])
                    .expect("two edges of a simple graph share at most one endpoint");
            }
        }
    }
    Ok(LabeledLineGraph { graph: lg, origin })
}

/// The medial graph of a plane graph: edges become vertices (in
/// `G.edges()` order), adjacent when consecutive along a face boundary.
pub fn medial_graph(e: &Embedding) -> Result<Graph, DerivedError> {
    let g = e.graph();
    if g.size() < 2 || !g.is_connected() {
        return Err(DerivedError::TooSmall);
    }
    let index: HashMap<(usize, usize), usize> = g
        .edges()
        .into_iter()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for f in e.faces() {
        let ids: Vec<usize> = f.boundary().iter().map(|(_, edge)| index[edge]).collect();
        for t in 0..ids.len() {
            let (a, b) = (ids[t], ids[(t + 1) % ids.len()]);
            if a != b {
                pairs.insert((a.min(b), a.max(b)));
            }
        }
    }
    let pairs: Vec<_> = pairs.into_iter().collect();
    Ok(Graph::from_edges(g.size(), &pairs).expect("deduplicated pairs"))
}

/// The vertex-face incidence graph of a 3-polytope: vertices `0..n` are the
/// original vertices, `n..n+F` the faces in embedding order.
pub fn radial_graph(e: &Embedding) -> Result<Graph, DerivedError> {
    let g = e.graph();
    if !is_3polytope(g) {
        return Err(DerivedError::NotPolytopal);
    }
    let n = g.order();
    let mut edges = Vec::new();
    for (i, f) in e.faces().iter().enumerate() {
        for v in f.vertex_set() {
            edges.push((v, n + i));
        }
    }
    Ok(Graph::from_edges(n + e.faces().len(), &edges).expect("incidences are distinct"))
}

/// Edge-clique partition witnessing that a graph is a line graph.
#[derive(Debug, Clone)]
pub struct KrauszPartition {
    /// Vertex sets of the cliques; every edge lies in exactly one of them.
    pub cliques: Vec<Vec<usize>>,
    /// For each vertex of the line graph, the cliques containing it.
    pub assignment: Vec<Vec<usize>>,
    /// The recovered root graph.
    pub root: Graph,
    /// `root_edge[x]` is the root edge represented by line-graph vertex `x`.
    pub root_edge: Vec<(usize, usize)>,
}

impl KrauszPartition {
    /// Checks the partition properties and that `L(root)` is `p`, with the
    /// labelled correspondence given by `root_edge`.
    pub fn verify(&self, p: &Graph) -> bool {
        let mut covered: BTreeSet<(usize, usize)> = BTreeSet::new();
        for c in &self.cliques {
            if c.len() < 2 {
                return false;
            }
            for (i, &a) in c.iter().enumerate() {
                for &b in &c[i + 1..] {
                    if !p.has_edge(a, b) || !covered.insert((a.min(b), a.max(b))) {
                        return false;
                    }
                }
            }
        }
        if covered.len() != p.size() || self.assignment.iter().any(|a| a.len() > 2) {
            return false;
        }
        if self.root_edge.len() != p.order() {
            return false;
        }
        let distinct: BTreeSet<(usize, usize)> = self
            .root_edge
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        if distinct.len() != p.order() || distinct.iter().any(|&(a, b)| !self.root.has_edge(a, b)) {
            return false;
        }
        let shares = |x: usize, y: usize| {
            let (a, b) = self.root_edge[x];
            let (c, d) = self.root_edge[y];
            a == c || a == d || b == c || b == d
        };
        for x in p.vertices() {
            for y in x + 1..p.order() {
                if shares(x, y) != p.has_edge(x, y) {
                    return false;
                }
            }
        }
        self.root.size() == p.order()
    }
}

/// Result of root recovery. `alternative` is set only for the triangle,
/// which is the line graph of both `K3` and `K_{1,3}`.
#[derive(Debug, Clone)]
pub struct RootRecovery {
    pub partition: KrauszPartition,
    pub alternative: Option<KrauszPartition>,
}

impl RootRecovery {
    pub fn root(&self) -> &Graph {
        &self.partition.root
    }

    pub fn is_ambiguous(&self) -> bool {
        self.alternative.is_some()
    }
}

struct KrauszSearch<'a> {
    p: &'a Graph,
    covered: Vec<Vec<bool>>,
    count: Vec<usize>,
    cliques: Vec<Vec<usize>>,
}

impl KrauszSearch<'_> {
    fn uncovered_nbrs(&self, v: usize) -> Vec<usize> {
        self.p
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !self.covered[v][w])
            .collect()
    }

    fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &a)| {
            vs[i + 1..]
                .iter()
                .all(|&b| self.p.has_edge(a, b) && !self.covered[a][b])
        })
    }

    fn place(&mut self, c: &[usize], on: bool) {
        for (i, &a) in c.iter().enumerate() {
            for &b in &c[i + 1..] {
                self.covered[a][b] = on;
                self.covered[b][a] = on;
            }
            if on {
                self.count[a] += 1;
            } else {
                self.count[a] -= 1;
            }
        }
    }

    fn feasible(&self, c: &[usize]) -> bool {
        c.iter().all(|&v| self.count[v] < 2)
    }

    /// Candidate cliques through the vertex `v` covering edge `v`-`w`,
    /// largest first, ties broken by sorted vertex list.
    fn candidates(&self, v: usize, w: usize) -> Vec<Vec<usize>> {
        let open = self.uncovered_nbrs(v);
        let mut out = Vec::new();
        if self.count[v] == 1 {
            // the second clique at v must take every remaining edge
            let mut c = open.clone();
            c.push(v);
            c.sort_unstable();
            if self.is_clique(&c) {
                out.push(c);
            }
            return out;
        }
        let others: Vec<usize> = open.iter().copied().filter(|&x| x != w).collect();
        for mask in 0u64..(1u64 << others.len()) {
            let mut chosen = vec![v, w];
            let mut rest = Vec::new();
            for (i, &x) in others.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    chosen.push(x);
                } else {
                    rest.push(x);
                }
            }
            chosen.sort_unstable();
            if !self.is_clique(&chosen) {
                continue;
            }
            // edges left at v must form one further clique with v
            let mut second = rest.clone();
            second.push(v);
            if rest.is_empty() || self.is_clique(&second) {
                out.push(chosen);
            }
        }
        out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        out
    }

    fn solve(&mut self) -> bool {
        // next uncovered edge, seeded at a vertex of maximum open degree
        let next = self
            .p
            .vertices()
            .filter(|&v| !self.uncovered_nbrs(v).is_empty())
            .max_by_key(|&v| {
                (
                    self.count[v],
                    self.uncovered_nbrs(v).len(),
                    std::cmp::Reverse(v),
                )
            });
        let Some(v) = next else {
            return true;
        };
        if self.count[v] >= 2 {
            return false;
        }
        let w = self.uncovered_nbrs(v)[0];
        for c in self.candidates(v, w) {
            if !self.feasible(&c) {
                continue;
            }
            self.place(&c, true);
            self.cliques.push(c.clone());
            if self.solve() {
                return true;
            }
            self.cliques.pop();
            self.place(&c, false);
        }
        false
    }
}

fn build_partition(p: &Graph, cliques: Vec<Vec<usize>>) -> KrauszPartition {
    let mut assignment = vec![Vec::new(); p.order()];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            assignment[v].push(i);
        }
    }
    let mut next = cliques.len();
    let mut ends: Vec<Vec<usize>> = assignment.clone();
    for e in ends.iter_mut() {
        while e.len() < 2 {
            e.push(next);
            next += 1;
        }
    }
    let root_edge: Vec<(usize, usize)> = ends
        .iter()
        .map(|e| (e[0].min(e[1]), e[0].max(e[1])))
        .collect();
    let root = Graph::from_edges(next, &root_edge).expect("two cliques meet in at most one vertex");
    KrauszPartition {
        cliques,
        assignment,
        root,
        root_edge,
    }
}

/// Recovers a root graph of a connected graph by Krausz-partition search.
pub fn root_graph(p: &Graph) -> Result<RootRecovery, DerivedError> {
    if p.order() == 0 {
        return Err(DerivedError::TooSmall);
    }
    if !p.is_connected() {
        return Err(DerivedError::NotConnected);
    }
    let n = p.order();
    let mut search = KrauszSearch {
        p,
        covered: vec![vec![false; n]; n],
        count: vec![0; n],
        cliques: Vec::new(),
    };
    if !search.solve() {
        return Err(DerivedError::NotLineGraph);
    }
    let partition = build_partition(p, search.cliques);
    assert!(
        partition.verify(p),
        "Krausz partition must rebuild the input"
    );

    if n == 3 && p.size() == 3 {
        let singles = p.edges().into_iter().map(|(a, b)| vec![a, b]).collect();
        let alternative = build_partition(p, singles);
        return Ok(RootRecovery {
            partition,
            alternative: Some(alternative),
        });
    }
    Ok(RootRecovery {
        partition,
        alternative: None,
    })
}
