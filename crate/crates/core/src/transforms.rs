//! Subdivision and pendant moves on roots, their images on line graphs, and
//! the reduction of a root to its cubic base.

use itertools::Itertools;
use thiserror::Error;

use crate::catalog::exception_index;
use crate::graph::{Graph, GraphError};
use crate::planarity::{embed, is_3polytope, is_planar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    DegreeViolation {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error("neighbourhood of vertex {0} does not split into two adjacent pairs")]
    PatternMismatch(usize),
    #[error("vertices {0:?} do not form a triangle")]
    NotATriangle([usize; 3]),
    #[error("triangle {0:?} does not bound a face")]
    NotAFace([usize; 3]),
    #[error("suppressing vertex {0} would create a parallel edge")]
    MultiEdgeRisk(usize),
    #[error("precondition failed: {0}")]
    PreconditionError(&'static str),
    #[error("graph is the exceptional root J_{0}")]
    ExceptionalRoot(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn expect_degree(g: &Graph, v: usize, expected: usize) -> Result<(), TransformError> {
    let degree = g.degree(v)?;
    if degree == expected {
        Ok(())
    } else {
        Err(TransformError::DegreeViolation {
            vertex: v,
            degree,
            expected,
        })
    }
}

/// Replaces the edge `x`-`y` by a path `x`-`z`-`y` through a new vertex
/// `z`, without degree conditions.
pub(crate) fn subdivide_unchecked(
    g: &Graph,
    x: usize,
    y: usize,
) -> Result<(Graph, usize), TransformError> {
    let mut h = g.clone();
    h.try_remove_edge(x, y)
        .map_err(|_| TransformError::MissingEdge(x.min(y), x.max(y)))?;
    let z = h.add_vertex();
    h.try_add_edge(x, z)?;
    h.try_add_edge(z, y)?;
    Ok((h, z))
}

/// Subdivides an edge whose endpoints both have degree 3. The new vertex
/// gets the next free label.
pub fn t1_subdivide(g: &Graph, edge: (usize, usize)) -> Result<Graph, TransformError> {
    let (x, y) = edge;
    if !g.has_edge(x, y) {
        return Err(TransformError::MissingEdge(x.min(y), x.max(y)));
    }
    expect_degree(g, x, 3)?;
    expect_degree(g, y, 3)?;
    Ok(subdivide_unchecked(g, x, y)?.0)
}

/// Attaches a new degree-1 vertex to a degree-3 vertex `u`.
pub fn t2_pendant(g: &Graph, u: usize) -> Result<Graph, TransformError> {
    expect_degree(g, u, 3)?;
    let mut h = g.clone();
    let d = h.add_vertex();
    h.try_add_edge(u, d)?;
    Ok(h)
}

/// Decomposition of a degree-4 neighbourhood into two adjacent pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct T1Witness {
    pub first: (usize, usize),
    pub second: (usize, usize),
}

/// How a triangle is checked against faces: exactly on 3-polytopes (whose
/// embedding is unique), by planarity of the result on other planar graphs,
/// and not at all on non-planar graphs.
fn planar_context(p: &Graph) -> (bool, bool) {
    let planar = p.is_connected() && is_planar(p);
    (planar, planar && is_3polytope(p))
}

fn t1_prime_unchecked(p: &Graph, v: usize, w: &T1Witness) -> Graph {
    let mut h = p.clone();
    let v2 = h.add_vertex();
    let (c, d) = w.second;
    h.try_remove_edge(v, c).expect("c adjacent to v");
    h.try_remove_edge(v, d).expect("d adjacent to v");
    h.try_add_edge(v2, c).expect("fresh vertex");
    h.try_add_edge(v2, d).expect("fresh vertex");
    h.try_add_edge(v, v2).expect("fresh vertex");
    h
}

fn t1_pattern_holds(p: &Graph, v: usize, w: &T1Witness) -> bool {
    let (a, b) = w.first;
    let (c, d) = w.second;
    let mut quad = [a, b, c, d];
    quad.sort_unstable();
    // edges across the two pairs must form a matching, as they do in a
    // line graph where a and b meet x, and c and d meet y
    let crossing = |s: usize| [c, d].iter().filter(|&&t| p.has_edge(s, t)).count() <= 1;
    let crossing_back = |t: usize| [a, b].iter().filter(|&&s| p.has_edge(s, t)).count() <= 1;
    p.neighbors(v).len() == 4
        && quad.iter().dedup().count() == 4
        && quad == *p.neighbors(v)
        && p.has_edge(a, b)
        && p.has_edge(c, d)
        && crossing(a)
        && crossing(b)
        && crossing_back(c)
        && crossing_back(d)
}

/// Splits a degree-4 vertex `v` lying on the triangles `v,a,b` and `v,c,d`
/// into adjacent vertices `v` (keeping `a,b`) and a new vertex (taking
/// `c,d`). On 3-polytopes both triangles must be faces; on other planar
/// graphs the result must stay planar.
pub fn t1_prime(p: &Graph, v: usize, witness: T1Witness) -> Result<Graph, TransformError> {
    p.degree(v)?;
    if !t1_pattern_holds(p, v, &witness) {
        return Err(TransformError::PatternMismatch(v));
    }
    let h = t1_prime_unchecked(p, v, &witness);
    let (planar, polytope) = planar_context(p);
    if polytope {
        let e = embed(p).expect("polytope is planar");
        let (a, b) = witness.first;
        let (c, d) = witness.second;
        if !e.has_triangular_face(v, a, b) {
            return Err(TransformError::NotAFace([v, a, b]));
        }
        if !e.has_triangular_face(v, c, d) {
            return Err(TransformError::NotAFace([v, c, d]));
        }
    } else if planar && !is_planar(&h) {
        return Err(TransformError::PatternMismatch(v));
    }
    Ok(h)
}

/// Every vertex and neighbourhood split accepted by [`t1_prime`]. Each
/// unordered split is listed once, with the pair containing the smallest
/// neighbour first.
pub fn find_t1_sites(p: &Graph) -> Vec<(usize, T1Witness)> {
    let mut out = Vec::new();
    for v in p.vertices().filter(|&v| p.neighbors(v).len() == 4) {
        let n = p.neighbors(v);
        for x in 1..4 {
            let rest: Vec<usize> = (1..4).filter(|&i| i != x).map(|i| n[i]).collect();
            let w = T1Witness {
                first: (n[0], n[x]),
                second: (rest[0], rest[1]),
            };
            if t1_prime(p, v, w).is_ok() {
                out.push((v, w));
            }
        }
    }
    out
}

/// Adds a vertex adjacent to exactly `p`, `q`, `r`, which must form a
/// triangle bounding a face.
pub fn t2_prime(g: &Graph, triangle: [usize; 3]) -> Result<Graph, TransformError> {
    let [p, q, r] = triangle;
    for v in triangle {
        g.degree(v)?;
    }
    if p == q || q == r || p == r || !g.is_triangle(p, q, r) {
        return Err(TransformError::NotATriangle(triangle));
    }
    let mut h = g.clone();
    let x = h.add_vertex();
    for v in triangle {
        h.try_add_edge(v, x)?;
    }
    let (planar, polytope) = planar_context(g);
    if polytope {
        let e = embed(g).expect("polytope is planar");
        if !e.has_triangular_face(p, q, r) {
            return Err(TransformError::NotAFace(triangle));
        }
    } else if planar && !is_planar(&h) {
        return Err(TransformError::NotAFace(triangle));
    }
    Ok(h)
}

/// A deleted pendant vertex and its neighbour, in the caller's labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PendantRecord {
    pub host: usize,
    pub leaf: usize,
}

/// A suppressed degree-2 vertex and the two neighbours it had at the time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Suppression {
    pub vertex: usize,
    pub ends: (usize, usize),
}

/// First reduction stage: all degree-1 vertices deleted.
#[derive(Debug, Clone)]
pub struct PendantStage {
    pub g1: Graph,
    pub pendant_hosts: Vec<PendantRecord>,
    /// Label in the input graph of each vertex of `g1`.
    pub g1_to_input: Vec<usize>,
}

/// Deletes every vertex of degree 1, recording each with its neighbour.
pub fn strip_pendants(g: &Graph) -> PendantStage {
    let leaves: Vec<usize> = g
        .vertices()
        .filter(|&v| g.neighbors(v).len() == 1)
        .collect();
    let pendant_hosts = leaves
        .iter()
        .map(|&leaf| PendantRecord {
            host: g.neighbors(leaf)[0],
            leaf,
        })
        .collect();
    let (g1, g1_to_input) = g
        .delete_vertices(&leaves)
        .expect("leaves are valid vertices");
    PendantStage {
        g1,
        pendant_hosts,
        g1_to_input,
    }
}

/// Second reduction stage: degree-2 vertices off triangles suppressed.
#[derive(Debug, Clone)]
pub struct SmoothStage {
    pub g2: Graph,
    /// In suppression order, labelled as in the input graph.
    pub smoothed: Vec<Suppression>,
    pub g2_to_input: Vec<usize>,
}

/// Suppresses degree-2 vertices whose neighbours are non-adjacent, always
/// taking the smallest eligible label and re-evaluating after each step.
pub fn smooth_degree2(g1: &Graph) -> Result<SmoothStage, TransformError> {
    let mut h = g1.clone();
    let mut removed = vec![false; h.order()];
    let mut smoothed = Vec::new();
    loop {
        let next = h.vertices().find(|&v| {
            !removed[v]
                && h.neighbors(v).len() == 2
                && !h.has_edge(h.neighbors(v)[0], h.neighbors(v)[1])
        });
        let Some(v) = next else { break };
        let (x, y) = (h.neighbors(v)[0], h.neighbors(v)[1]);
        h.try_remove_edge(v, x)?;
        h.try_remove_edge(v, y)?;
        h.try_add_edge(x, y)
            .map_err(|_| TransformError::MultiEdgeRisk(v))?;
        removed[v] = true;
        smoothed.push(Suppression {
            vertex: v,
            ends: (x, y),
        });
    }
    let gone: Vec<usize> = h.vertices().filter(|&v| removed[v]).collect();
    let (g2, g2_to_input) = h.delete_vertices(&gone)?;
    Ok(SmoothStage {
        g2,
        smoothed,
        g2_to_input,
    })
}

/// The chain `G -> G1 -> G2` with everything needed to invert it. All
/// records use the labels of `original`.
#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub original: Graph,
    pub pendant_hosts: Vec<PendantRecord>,
    pub g1: Graph,
    pub g1_to_original: Vec<usize>,
    pub smoothed: Vec<Suppression>,
    pub g2: Graph,
    pub g2_to_original: Vec<usize>,
}

impl ReductionTrace {
    /// Re-inserts suppressed vertices (last first) and then pendants,
    /// giving back `original` with its exact labels.
    pub fn reconstruct(&self) -> Graph {
        let mut g = Graph::empty(self.original.order());
        for (u, v) in self.g2.edges() {
            g.try_add_edge(self.g2_to_original[u], self.g2_to_original[v])
                .expect("distinct base edges");
        }
        for s in self.smoothed.iter().rev() {
            let (x, y) = s.ends;
            g.try_remove_edge(x, y).expect("suppression edge present");
            g.try_add_edge(x, s.vertex).expect("fresh incidence");
            g.try_add_edge(s.vertex, y).expect("fresh incidence");
        }
        for p in &self.pendant_hosts {
            g.try_add_edge(p.host, p.leaf).expect("fresh pendant edge");
        }
        g
    }
}

/// Reduces a connected graph with `1 <= deg <= 4` to its base. Exceptional
/// roots are reported before any smoothing takes place.
pub fn reduce(g: &Graph) -> Result<ReductionTrace, TransformError> {
    if g.order() < 2 || !g.is_connected() {
        return Err(TransformError::PreconditionError(
            "graph must be connected with an edge",
        ));
    }
    if g.max_degree()? > 4 {
        return Err(TransformError::PreconditionError(
            "maximum degree exceeds 4",
        ));
    }
    if let Some(i) = exception_index(g) {
        return Err(TransformError::ExceptionalRoot(i));
    }
    let stage1 = strip_pendants(g);
    let stage2 = smooth_degree2(&stage1.g1)?;
    let to_orig = |v: usize| stage1.g1_to_input[v];
    let smoothed = stage2
        .smoothed
        .iter()
        .map(|s| Suppression {
            vertex: to_orig(s.vertex),
            ends: (to_orig(s.ends.0), to_orig(s.ends.1)),
        })
        .collect();
    let g2_to_original = stage2.g2_to_input.iter().map(|&v| to_orig(v)).collect();
    let trace = ReductionTrace {
        original: g.clone(),
        pendant_hosts: stage1.pendant_hosts,
        g1: stage1.g1,
        g1_to_original: stage1.g1_to_input,
        smoothed,
        g2: stage2.g2,
        g2_to_original,
    };
    debug_assert_eq!(trace.reconstruct(), *g);
    Ok(trace)
}
