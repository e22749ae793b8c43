//! Planarity testing with rotation-system witnesses, face tracing, duals and
//! the 3-polytope predicates.
//!
//! Each biconnected block is embedded by path addition: start from a cycle,
//! then repeatedly pick a fragment (a chord, or a component of the
//! unembedded vertices with its attachment edges), and route a path of it
//! through a face containing all of its attachments. A fragment with no such
//! face proves the block non-planar; fragments with a single admissible face
//! are forced and handled first. Block rotations are concatenated at cut
//! vertices. Non-planar inputs are shrunk edge by edge to a minimal non-planar
//! subgraph, which is a Kuratowski subdivision.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarityError {
    #[error("graph is not connected")]
    ComponentError,
    #[error("graph has no vertices")]
    Empty,
    #[error("precondition failed: {0}")]
    PreconditionError(&'static str),
    #[error("graph is not a 3-polytope")]
    NotPolytopal,
}

/// A closed boundary walk `walk[0] -> walk[1] -> .. -> walk[0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    walk: Vec<usize>,
}

impl Face {
    pub fn walk(&self) -> &[usize] {
        &self.walk
    }

    /// Number of edge traversals on the boundary.
    pub fn len(&self) -> usize {
        if self.walk.len() == 1 {
            0
        } else {
            self.walk.len()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(vertex, edge)` pairs: each vertex with the edge leaving it along the
    /// walk, edges normalised as `(min, max)`.
    pub fn boundary(&self) -> Vec<(usize, (usize, usize))> {
        self.darts()
            .map(|(u, v)| (u, (u.min(v), u.max(v))))
            .collect()
    }

    /// Directed edges of the walk.
    pub fn darts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = if self.walk.len() > 1 {
            self.walk.len()
        } else {
            0
        };
        (0..k).map(move |i| (self.walk[i], self.walk[(i + 1) % k]))
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.walk.iter().copied().collect()
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.boundary().into_iter().map(|(_, e)| e).collect()
    }
}

/// A combinatorial planar embedding: the cyclic order of neighbours around
/// each vertex, and the faces traced from it.
#[derive(Debug, Clone)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Face>,
}

impl Embedding {
    /// Builds an embedding from a rotation system, tracing its faces.
    /// Returns `None` unless the rotation lists are permutations of the
    /// neighbourhoods and the faces satisfy Euler's formula.
    pub fn from_rotation(graph: Graph, rotation: Vec<Vec<usize>>) -> Option<Embedding> {
        if rotation.len() != graph.order() || !graph.is_connected() || graph.order() == 0 {
            return None;
        }
        for v in graph.vertices() {
            let mut r = rotation[v].clone();
            r.sort_unstable();
            if r != graph.neighbors(v) {
                return None;
            }
        }
        let faces = trace_faces(&graph, &rotation);
        let emb = Embedding {
            graph,
            rotation,
            faces,
        };
        emb.satisfies_euler().then_some(emb)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// `V - E + F == 2`.
    pub fn satisfies_euler(&self) -> bool {
        self.graph.order() + self.faces.len() == self.graph.size() + 2
    }

    /// Every undirected edge occupies exactly two dart slots over all faces,
    /// one per direction.
    pub fn darts_partitioned(&self) -> bool {
        let mut seen = BTreeSet::new();
        for f in &self.faces {
            for d in f.darts() {
                if !seen.insert(d) {
                    return false;
                }
            }
        }
        seen.len() == 2 * self.graph.size()
            && self
                .graph
                .edges()
                .iter()
                .all(|&(u, v)| seen.contains(&(u, v)) && seen.contains(&(v, u)))
    }

    /// Index of the face containing each dart.
    pub(crate) fn dart_faces(&self) -> HashMap<(usize, usize), usize> {
        let mut map = HashMap::new();
        for (i, f) in self.faces.iter().enumerate() {
            for d in f.darts() {
                map.insert(d, i);
            }
        }
        map
    }

    /// True iff some face boundary is exactly the triangle on these vertices.
    pub fn has_triangular_face(&self, a: usize, b: usize, c: usize) -> bool {
        let want: BTreeSet<usize> = [a, b, c].into_iter().collect();
        self.faces
            .iter()
            .any(|f| f.len() == 3 && f.vertex_set() == want)
    }
}

fn trace_faces(graph: &Graph, rotation: &[Vec<usize>]) -> Vec<Face> {
    if graph.size() == 0 {
        return graph.vertices().map(|v| Face { walk: vec![v] }).collect();
    }
    // position of w in the rotation at v
    let pos: Vec<HashMap<usize, usize>> = rotation
        .iter()
        .map(|r| r.iter().enumerate().map(|(i, &w)| (w, i)).collect())
        .collect();
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut faces = Vec::new();
    for (u, v) in graph
        .edges()
        .into_iter()
        .flat_map(|(u, v)| [(u, v), (v, u)])
    {
        if used.contains(&(u, v)) {
            continue;
        }
        let mut walk = Vec::new();
        let (mut a, mut b) = (u, v);
        while used.insert((a, b)) {
            walk.push(a);
            let r = &rotation[b];
            let next = r[(pos[b][&a] + 1) % r.len()];
            a = b;
            b = next;
        }
        faces.push(Face { walk });
    }
    faces
}

/// Kind of Kuratowski subdivision found in a non-planar graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of `K5` or `K3,3` contained in the input graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonPlanarWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    /// Internally disjoint paths between branch vertices, as vertex lists.
    pub paths: Vec<Vec<usize>>,
}

impl NonPlanarWitness {
    /// Checks that the witness is a genuine subdivision inside `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let branch: BTreeSet<usize> = self.branch_vertices.iter().copied().collect();
        let (nb, np) = match self.kind {
            KuratowskiKind::K5 => (5, 10),
            KuratowskiKind::K33 => (6, 9),
        };
        if branch.len() != nb || self.paths.len() != np {
            return false;
        }
        let mut interior_seen = BTreeSet::new();
        let mut pairs = BTreeSet::new();
        for p in &self.paths {
            if p.len() < 2 || p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            let (s, t) = (p[0], p[p.len() - 1]);
            if !branch.contains(&s) || !branch.contains(&t) || s == t {
                return false;
            }
            for &x in &p[1..p.len() - 1] {
                if branch.contains(&x) || !interior_seen.insert(x) {
                    return false;
                }
            }
            if !pairs.insert((s.min(t), s.max(t))) {
                return false;
            }
        }
        match self.kind {
            KuratowskiKind::K5 => true,
            KuratowskiKind::K33 => {
                // the pair graph must be bipartite with two sides of three
                let bv: Vec<usize> = branch.iter().copied().collect();
                let mut side = HashMap::new();
                side.insert(bv[0], 0);
                let mut changed = true;
                while changed {
                    changed = false;
                    for &(s, t) in &pairs {
                        match (side.get(&s).copied(), side.get(&t).copied()) {
                            (Some(a), None) => {
                                side.insert(t, 1 - a);
                                changed = true;
                            }
                            (None, Some(b)) => {
                                side.insert(s, 1 - b);
                                changed = true;
                            }
                            (Some(a), Some(b)) if a == b => return false,
                            _ => {}
                        }
                    }
                }
                side.len() == 6 && side.values().filter(|&&x| x == 0).count() == 3
            }
        }
    }
}

/// Outcome of a planarity test.
#[derive(Debug, Clone)]
pub enum Planarity {
    Planar(Embedding),
    NonPlanar(NonPlanarWitness),
}

impl Planarity {
    pub fn embedding(self) -> Option<Embedding> {
        match self {
            Planarity::Planar(e) => Some(e),
            Planarity::NonPlanar(_) => None,
        }
    }

    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

/// Biconnected components as edge lists (Hopcroft-Tarjan).
pub(crate) fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State, u: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for &w in s.g.neighbors(u) {
            if s.disc[w] == 0 {
                s.stack.push((u, w));
                dfs(s, w, Some(u));
                s.low[u] = s.low[u].min(s.low[w]);
                if s.low[w] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if Some(w) != parent && s.disc[w] < s.disc[u] {
                s.stack.push((u, w));
                s.low[u] = s.low[u].min(s.disc[w]);
            }
        }
    }
    let mut s = State {
        g,
        disc: vec![0; g.order()],
        low: vec![0; g.order()],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in g.vertices() {
        if s.disc[v] == 0 {
            dfs(&mut s, v, None);
        }
    }
    s.out
}

/// A 2-connected block relabelled to `0..k`, with a map back to the host.
struct Block {
    graph: Graph,
    to_host: Vec<usize>,
}

fn extract_block(edges: &[(usize, usize)]) -> Block {
    let verts: BTreeSet<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let to_host: Vec<usize> = verts.into_iter().collect();
    let local: HashMap<usize, usize> = to_host.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let local_edges: Vec<(usize, usize)> =
        edges.iter().map(|(u, v)| (local[u], local[v])).collect();
    let graph = Graph::from_edges(to_host.len(), &local_edges).expect("block edges are simple");
    Block { graph, to_host }
}

/// Any cycle of a 2-connected graph with at least three vertices.
fn find_cycle(g: &Graph) -> Vec<usize> {
    let mut parent = vec![usize::MAX; g.order()];
    let mut depth = vec![usize::MAX; g.order()];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some((u, i)) = stack.pop() {
        if i < g.neighbors(u).len() {
            stack.push((u, i + 1));
            let w = g.neighbors(u)[i];
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                stack.push((w, 0));
            } else if w != parent[u] && depth[w] < depth[u] {
                let mut cyc = vec![u];
                let mut x = u;
                while x != w {
                    x = parent[x];
                    cyc.push(x);
                }
                return cyc;
            }
        }
    }
    unreachable!("2-connected block has a cycle")
}

/// Path-addition embedding of a 2-connected graph with >= 3 vertices.
/// Returns oriented face cycles, or `None` if the graph is non-planar.
fn embed_biconnected(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    let cycle = find_cycle(g);
    let mut in_h = vec![false; n];
    let mut edge_in_h: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[a] = true;
        edge_in_h.insert((a.min(b), a.max(b)));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];

    while edge_in_h.len() < g.size() {
        let fragments = fragments(g, &in_h, &edge_in_h);
        let face_sets: Vec<BTreeSet<usize>> =
            faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut chosen: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&i| frag.attachments.iter().all(|a| face_sets[i].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    chosen = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = chosen.expect("at least one fragment remains");
        let path = fragment_path(g, &fragments[fi], &in_h);
        for w in path.windows(2) {
            edge_in_h.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    Some(faces)
}

struct Fragment {
    /// Unembedded vertices of the fragment (empty for a chord).
    inner: Vec<usize>,
    attachments: BTreeSet<usize>,
    chord: Option<(usize, usize)>,
}

fn fragments(g: &Graph, in_h: &[bool], edge_in_h: &BTreeSet<(usize, usize)>) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if in_h[u] && in_h[v] && !edge_in_h.contains(&(u, v)) {
            out.push(Fragment {
                inner: Vec::new(),
                attachments: [u, v].into_iter().collect(),
                chord: Some((u, v)),
            });
        }
    }
    let mut seen = vec![false; g.order()];
    for s in g.vertices() {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut inner = vec![s];
        let mut attachments = BTreeSet::new();
        seen[s] = true;
        let mut i = 0;
        while i < inner.len() {
            let u = inner[i];
            i += 1;
            for &w in g.neighbors(u) {
                if in_h[w] {
                    attachments.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    inner.push(w);
                }
            }
        }
        out.push(Fragment {
            inner,
            attachments,
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(g: &Graph, frag: &Fragment, in_h: &[bool]) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let inner: BTreeSet<usize> = frag.inner.iter().copied().collect();
    let a = *frag
        .attachments
        .iter()
        .next()
        .expect("fragment has attachments");
    let start = *g
        .neighbors(a)
        .iter()
        .find(|w| inner.contains(w))
        .expect("attachment touches the fragment");
    let mut parent: HashMap<usize, usize> = HashMap::new();
    parent.insert(start, usize::MAX);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if let Some(&b) = g.neighbors(u).iter().find(|&&w| in_h[w] && w != a) {
            let mut path = vec![b, u];
            let mut x = u;
            while parent[&x] != usize::MAX {
                x = parent[&x];
                path.push(x);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &w in g.neighbors(u) {
            if inner.contains(&w) && !parent.contains_key(&w) {
                parent.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment of a 2-connected graph has two attachments")
}

/// Splits an oriented face cycle along `path` (whose ends lie on the face).
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let a = path[0];
    let b = path[path.len() - 1];
    let i = face
        .iter()
        .position(|&x| x == a)
        .expect("path start on face");
    let j = face.iter().position(|&x| x == b).expect("path end on face");
    let interior = &path[1..path.len() - 1];

    let mut f1 = Vec::new();
    let mut t = i;
    loop {
        f1.push(face[t]);
        if t == j {
            break;
        }
        t = (t + 1) % k;
    }
    f1.extend(interior.iter().rev());

    let mut f2 = Vec::new();
    let mut t = j;
    loop {
        f2.push(face[t]);
        if t == i {
            break;
        }
        t = (t + 1) % k;
    }
    f2.extend(interior.iter());
    (f1, f2)
}

/// Rotation lists for one block from its oriented faces: for a face walk
/// `u -> v -> w`, `w` follows `u` in the rotation at `v`.
fn rotation_from_faces(n: usize, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for f in faces {
        let k = f.len();
        for t in 0..k {
            let (u, v, w) = (f[t], f[(t + 1) % k], f[(t + 2) % k]);
            succ[v].insert(u, w);
        }
    }
    succ.iter()
        .map(|s| {
            let Some((&first, _)) = s.iter().min_by_key(|(k, _)| **k) else {
                return Vec::new();
            };
            let mut r = vec![first];
            let mut x = s[&first];
            while x != first {
                r.push(x);
                x = s[&x];
            }
            r
        })
        .collect()
}

/// Planarity of an arbitrary graph (every block planar).
pub fn is_planar(g: &Graph) -> bool {
    blocks(g).iter().all(|b| {
        b.len() < 9 || {
            let block = extract_block(b);
            block.graph.order() < 5 || embed_biconnected(&block.graph).is_some()
        }
    })
}

fn embed_connected(g: &Graph) -> Option<Embedding> {
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for b in blocks(g) {
        let block = extract_block(&b);
        let local_rot = if block.graph.order() == 2 {
            vec![vec![1], vec![0]]
        } else {
            let faces = embed_biconnected(&block.graph)?;
            rotation_from_faces(block.graph.order(), &faces)
        };
        for (lv, r) in local_rot.iter().enumerate() {
            let hv = block.to_host[lv];
            rotation[hv].extend(r.iter().map(|&w| block.to_host[w]));
        }
    }
    let emb = Embedding::from_rotation(g.clone(), rotation)
        .expect("path addition yields a valid rotation system");
    debug_assert!(emb.darts_partitioned());
    Some(emb)
}

/// Tests planarity of a connected graph, returning an embedding or a
/// Kuratowski subdivision.
pub fn check_planarity(g: &Graph) -> Result<Planarity, PlanarityError> {
    if g.order() == 0 {
        return Err(PlanarityError::Empty);
    }
    if !g.is_connected() {
        return Err(PlanarityError::ComponentError);
    }
    match embed_connected(g) {
        Some(e) => {
            assert!(e.satisfies_euler() && e.darts_partitioned());
            Ok(Planarity::Planar(e))
        }
        None => Ok(Planarity::NonPlanar(kuratowski_witness(g))),
    }
}

/// Embedding of a connected planar graph, if any.
pub fn embed(g: &Graph) -> Option<Embedding> {
    check_planarity(g).ok().and_then(Planarity::embedding)
}

fn kuratowski_witness(g: &Graph) -> NonPlanarWitness {
    let mut h = g.clone();
    for (u, v) in g.edges() {
        let trial = h.delete_edges(&[(u, v)]).expect("edge present");
        if !is_planar(&trial) {
            h = trial;
        }
    }
    let branch: Vec<usize> = h
        .vertices()
        .filter(|&v| h.neighbors(v).len() >= 3)
        .collect();
    let kind = if branch.len() == 5 {
        KuratowskiKind::K5
    } else {
        KuratowskiKind::K33
    };
    let is_branch = |v: usize| h.neighbors(v).len() >= 3;
    let mut paths = Vec::new();
    for &s in &branch {
        for &first in h.neighbors(s) {
            let mut path = vec![s, first];
            let (mut prev, mut cur) = (s, first);
            while !is_branch(cur) {
                let next = *h
                    .neighbors(cur)
                    .iter()
                    .find(|&&w| w != prev)
                    .expect("minimal subdivision has no pendant paths");
                prev = cur;
                cur = next;
                path.push(cur);
            }
            if s < cur {
                paths.push(path);
            }
        }
    }
    let w = NonPlanarWitness {
        kind,
        branch_vertices: branch,
        paths,
    };
    debug_assert!(w.verify(g));
    w
}

/// Planar and 3-connected, on at least four vertices.
pub fn is_3polytope(g: &Graph) -> bool {
    g.order() >= 4 && g.connectivity_at_least(3) && is_planar(g)
}

/// Region-pair test for 3-connectivity of a 2-connected plane graph: every
/// two faces share nothing, one vertex, or exactly one edge.
pub fn region_pair_criterion(e: &Embedding) -> Result<bool, PlanarityError> {
    if !e.graph().connectivity_at_least(2) {
        return Err(PlanarityError::PreconditionError(
            "graph is not 2-connected",
        ));
    }
    let sets: Vec<_> = e
        .faces()
        .iter()
        .map(|f| (f.vertex_set(), f.edge_set()))
        .collect();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let common: Vec<usize> = sets[i].0.intersection(&sets[j].0).copied().collect();
            match common.len() {
                0 | 1 => {}
                2 => {
                    let edge = (common[0], common[1]);
                    if !(sets[i].1.contains(&edge) && sets[j].1.contains(&edge)) {
                        return Ok(false);
                    }
                }
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

/// The dual of a 3-polytope: one vertex per face, adjacent when the faces
/// share an edge.
pub fn dual_graph(e: &Embedding) -> Result<Graph, PlanarityError> {
    if !is_3polytope(e.graph()) {
        return Err(PlanarityError::NotPolytopal);
    }
    let df = e.dart_faces();
    let mut edges = Vec::new();
    for (u, v) in e.graph().edges() {
        let (f, h) = (df[&(u, v)], df[&(v, u)]);
        edges.push((f.min(h), f.max(h)));
    }
    Graph::from_edges(e.faces().len(), &edges).map_err(|_| PlanarityError::NotPolytopal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::named;

    fn faces_of(g: &Graph) -> Vec<usize> {
        let e = embed(g).expect("planar");
        let mut lens: Vec<usize> = e.faces().iter().map(Face::len).collect();
        lens.sort_unstable();
        lens
    }

    #[test]
    fn k4_embeds_with_four_triangles() {
        assert_eq!(faces_of(&named::complete(4)), vec![3, 3, 3, 3]);
    }

    #[test]
    fn cube_and_c4_faces() {
        assert_eq!(faces_of(&named::cube()), vec![4; 6]);
        assert_eq!(faces_of(&named::cycle(4)), vec![4, 4]);
    }

    #[test]
    fn kuratowski_graphs_yield_witnesses() {
        let k5 = named::complete(5);
        match check_planarity(&k5).unwrap() {
            Planarity::NonPlanar(w) => {
                assert_eq!(w.kind, KuratowskiKind::K5);
                assert!(w.verify(&k5));
            }
            Planarity::Planar(_) => panic!("K5 is not planar"),
        }
        let k33 = named::complete_bipartite(3, 3);
        match check_planarity(&k33).unwrap() {
            Planarity::NonPlanar(w) => {
                assert_eq!(w.kind, KuratowskiKind::K33);
                assert!(w.verify(&k33));
            }
            Planarity::Planar(_) => panic!("K33 is not planar"),
        }
        let pet = named::petersen();
        match check_planarity(&pet).unwrap() {
            Planarity::NonPlanar(w) => assert!(w.verify(&pet)),
            Planarity::Planar(_) => panic!("Petersen is not planar"),
        }
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            check_planarity(&g).unwrap_err(),
            PlanarityError::ComponentError
        );
    }

    #[test]
    fn trees_and_cut_vertices_embed() {
        let star = named::star(3);
        let e = embed(&star).unwrap();
        assert_eq!(e.faces().len(), 1);
        assert_eq!(e.faces()[0].len(), 6);
        // two triangles sharing a vertex
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        let e = embed(&bowtie).unwrap();
        assert!(e.satisfies_euler());
        assert_eq!(e.faces().len(), 3);
        let single = embed(&Graph::empty(1)).unwrap();
        assert_eq!(single.faces().len(), 1);
    }

    #[test]
    fn polytope_predicate() {
        assert!(is_3polytope(&named::complete(4)));
        assert!(!is_3polytope(&named::complete_bipartite(2, 3)));
        assert!(is_3polytope(&named::octahedron()));
        assert!(!is_3polytope(&named::complete(5)));
        assert!(!is_3polytope(&named::complete(3)));
    }

    #[test]
    fn region_pair_examples() {
        assert_eq!(
            region_pair_criterion(&embed(&named::complete(4)).unwrap()),
            Ok(true)
        );
        assert_eq!(
            region_pair_criterion(&embed(&named::cycle(4)).unwrap()),
            Ok(false)
        );
        assert_eq!(
            region_pair_criterion(&embed(&named::prism()).unwrap()),
            Ok(true)
        );
        assert!(matches!(
            region_pair_criterion(&embed(&named::path(3)).unwrap()),
            Err(PlanarityError::PreconditionError(_))
        ));
    }

    #[test]
    fn duals() {
        let k4 = named::complete(4);
        assert!(are_isomorphic(
            &dual_graph(&embed(&k4).unwrap()).unwrap(),
            &k4
        ));
        let d = dual_graph(&embed(&named::cube()).unwrap()).unwrap();
        assert!(are_isomorphic(&d, &named::octahedron()));
        assert_eq!(
            dual_graph(&embed(&named::cycle(4)).unwrap()).unwrap_err(),
            PlanarityError::NotPolytopal
        );
    }

    #[test]
    fn triangular_faces() {
        let e = embed(&named::octahedron()).unwrap();
        assert!(e.has_triangular_face(0, 2, 4));
        assert!(!e.has_triangular_face(0, 1, 2));
    }
}
