//! Deciding whether a line graph is a 3-polytope, from either side.
//!
//! [`classify_root`] never builds a line graph: it works from degree
//! conditions on the root, the reduction to a base, and a polytope test on
//! that base. [`oracle_root_check`] builds `L(G)` and tests it directly.
//! The two are kept independent so that comparing them is meaningful.

use std::fmt;

use serde::Serialize;

use crate::canon::{are_isomorphic, MAX_CANON_ORDER};
use crate::catalog::exception_index;
use crate::derived::{line_graph, root_graph, DerivedError};
use crate::graph::Graph;
use crate::planarity::is_3polytope;
use crate::transforms::{reduce, t1_subdivide, t2_pendant, TransformError};

/// Why a root or polytope was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RejectReason {
    /// Witness: a vertex outside the component of vertex 0 (empty for the
    /// edgeless graphs of order 0 or 1).
    NotConnected,
    /// Witness: a vertex of degree at least 5.
    MaxDegreeExceeded,
    /// Witness: two adjacent degree-2 vertices.
    AdjacentDeg2,
    /// Witness: a degree-1 vertex and its neighbour, or a degree-4 vertex
    /// followed by its degree-1 neighbours.
    BadPendant,
    /// Witness: a degree-4 vertex whose removal leaves the graph connected.
    Deg4NotSeparating,
    /// Witness: a base vertex of wrong degree, or a small separator of the
    /// base (empty when the base is non-planar).
    BaseNotCubicPolytope,
    /// Witness: a subdivision vertex adjacent to another subdivision vertex.
    IllegalDecoration,
    NotLineGraph,
    /// Witness: a small separator, empty when planarity fails.
    NotPolytope,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub reason: RejectReason,
    pub witness: Vec<usize>,
}

/// A root written as a cubic 3-polytope with subdivided edges and pendants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoration {
    pub base: Graph,
    /// Base edges that are subdivided once, in base labels.
    pub subdivided_edges: Vec<(usize, usize)>,
    /// Base vertices carrying a pendant, in base labels.
    pub pendant_hosts: Vec<usize>,
    /// Root label of each base vertex.
    pub base_to_root: Vec<usize>,
}

impl Decoration {
    /// Applies the listed subdivisions and then the pendants to the base.
    pub fn rebuild(&self) -> Result<Graph, TransformError> {
        let mut g = self.base.clone();
        for &e in &self.subdivided_edges {
            g = t1_subdivide(&g, e)?;
        }
        for &h in &self.pendant_hosts {
            g = t2_pendant(&g, h)?;
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Isomorphic to `J_index`, `index` in `1..=7`.
    Exceptional {
        index: usize,
    },
    Decorated(Decoration),
    Rejected(Rejection),
}

impl Certificate {
    pub fn is_accepted(&self) -> bool {
        !matches!(self, Certificate::Rejected(_))
    }

    fn reject(reason: RejectReason, witness: Vec<usize>) -> Certificate {
        Certificate::Rejected(Rejection { reason, witness })
    }
}

/// One part of the degree lemma with a witness when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartResult {
    pub holds: bool,
    pub witness: Vec<usize>,
}

impl PartResult {
    fn from_witness(w: Option<Vec<usize>>) -> Self {
        match w {
            Some(witness) => PartResult {
                holds: false,
                witness,
            },
            None => PartResult {
                holds: true,
                witness: Vec::new(),
            },
        }
    }
}

/// Degree conditions every root of a 3-polytopal line graph satisfies:
/// (a) no two degree-2 vertices are adjacent; (b) every degree-1 vertex is
/// adjacent to a degree-4 vertex; (c) every degree-4 vertex has exactly one
/// degree-1 neighbour, unless the line graph is the tetrahedron.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma14Report {
    pub no_adjacent_deg2: PartResult,
    pub leaves_on_deg4: PartResult,
    pub deg4_one_leaf: PartResult,
    /// The root is `K_{1,4}`, whose line graph is the tetrahedron.
    pub tetrahedron_exempt: bool,
}

impl Lemma14Report {
    pub fn all_pass(&self) -> bool {
        self.no_adjacent_deg2.holds
            && self.leaves_on_deg4.holds
            && (self.deg4_one_leaf.holds || self.tetrahedron_exempt)
    }
}

fn deg(g: &Graph, v: usize) -> usize {
    g.neighbors(v).len()
}

pub fn lemma14_report(g: &Graph) -> Lemma14Report {
    let a = g
        .edges()
        .into_iter()
        .find(|&(u, v)| deg(g, u) == 2 && deg(g, v) == 2)
        .map(|(u, v)| vec![u, v]);
    let b = g
        .vertices()
        .find(|&v| deg(g, v) == 1 && deg(g, g.neighbors(v)[0]) != 4)
        .map(|v| vec![v, g.neighbors(v)[0]]);
    let c = g.vertices().filter(|&u| deg(g, u) == 4).find_map(|u| {
        let leaves: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| deg(g, w) == 1)
            .collect();
        (leaves.len() != 1).then(|| std::iter::once(u).chain(leaves).collect())
    });
    let tetrahedron_exempt =
        g.order() == 5 && g.size() == 4 && g.vertices().any(|v| deg(g, v) == 4);
    Lemma14Report {
        no_adjacent_deg2: PartResult::from_witness(a),
        leaves_on_deg4: PartResult::from_witness(b),
        deg4_one_leaf: PartResult::from_witness(c),
        tetrahedron_exempt,
    }
}

/// Classifies a root `G`: is `L(G)` a 3-polytope, and if so, why.
pub fn classify_root(g: &Graph) -> Certificate {
    use RejectReason::*;
    if g.size() == 0 {
        let witness = if g.order() > 1 { vec![1] } else { Vec::new() };
        return Certificate::reject(NotConnected, witness);
    }
    if !g.is_connected() {
        let first = &g.components()[0];
        let outside = g
            .vertices()
            .find(|v| !first.contains(v))
            .expect("second component");
        return Certificate::reject(NotConnected, vec![outside]);
    }
    if let Some(index) = exception_index(g) {
        return Certificate::Exceptional { index };
    }
    if let Some(v) = g.vertices().find(|&v| deg(g, v) > 4) {
        return Certificate::reject(MaxDegreeExceeded, vec![v]);
    }
    if let Some(v) = g
        .vertices()
        .find(|&v| deg(g, v) == 4 && !g.is_cut_vertex(v))
    {
        return Certificate::reject(Deg4NotSeparating, vec![v]);
    }
    let report = lemma14_report(g);
    if !report.no_adjacent_deg2.holds {
        return Certificate::reject(AdjacentDeg2, report.no_adjacent_deg2.witness);
    }
    if !report.leaves_on_deg4.holds {
        return Certificate::reject(BadPendant, report.leaves_on_deg4.witness);
    }
    if !report.deg4_one_leaf.holds {
        // K_{1,4} is caught by the catalog above
        return Certificate::reject(BadPendant, report.deg4_one_leaf.witness);
    }

    let trace = match reduce(g) {
        Ok(t) => t,
        Err(TransformError::ExceptionalRoot(index)) => return Certificate::Exceptional { index },
        Err(_) => return Certificate::reject(BaseNotCubicPolytope, Vec::new()),
    };
    let base = &trace.g2;
    if let Some(v) = base.vertices().find(|&v| deg(base, v) != 3) {
        return Certificate::reject(BaseNotCubicPolytope, vec![trace.g2_to_original[v]]);
    }
    if !is_3polytope(base) {
        let witness = base
            .small_separator(3)
            .unwrap_or_default()
            .into_iter()
            .map(|v| trace.g2_to_original[v])
            .collect();
        return Certificate::reject(BaseNotCubicPolytope, witness);
    }

    // each base edge subdivided at most once: suppression ends are base
    // vertices, never other subdivision vertices
    let base_label: std::collections::HashMap<usize, usize> = trace
        .g2_to_original
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let mut subdivided_edges = Vec::new();
    for s in &trace.smoothed {
        let (x, y) = s.ends;
        match (base_label.get(&x), base_label.get(&y)) {
            (Some(&bx), Some(&by)) => subdivided_edges.push((bx.min(by), bx.max(by))),
            _ => {
                let other = if base_label.contains_key(&x) { y } else { x };
                return Certificate::reject(IllegalDecoration, vec![s.vertex, other]);
            }
        }
    }
    let mut pendant_hosts = Vec::new();
    for p in &trace.pendant_hosts {
        match base_label.get(&p.host) {
            Some(&b) => pendant_hosts.push(b),
            None => return Certificate::reject(IllegalDecoration, vec![p.host, p.leaf]),
        }
    }
    subdivided_edges.sort_unstable();
    pendant_hosts.sort_unstable();
    let decoration = Decoration {
        base: trace.g2.clone(),
        subdivided_edges,
        pendant_hosts,
        base_to_root: trace.g2_to_original.clone(),
    };
    debug_assert!(
        g.order() > MAX_CANON_ORDER
            || decoration
                .rebuild()
                .map(|r| are_isomorphic(&r, g))
                .unwrap_or(false)
    );
    Certificate::Decorated(decoration)
}

/// Classification of a candidate polytope `P`, with the recovered root.
#[derive(Debug, Clone)]
pub struct PolytopeClassification {
    pub certificate: Certificate,
    pub root: Option<Graph>,
}

/// Classifies `P` as a 3-polytopal line graph, recovering its root.
pub fn classify_polytope(p: &Graph) -> PolytopeClassification {
    let rejected = |reason, witness| PolytopeClassification {
        certificate: Certificate::reject(reason, witness),
        root: None,
    };
    if !is_3polytope(p) {
        return rejected(
            RejectReason::NotPolytope,
            p.small_separator(3).unwrap_or_default(),
        );
    }
    let recovery = match root_graph(p) {
        Ok(r) => r,
        Err(DerivedError::NotLineGraph) => return rejected(RejectReason::NotLineGraph, Vec::new()),
        Err(_) => return rejected(RejectReason::NotPolytope, Vec::new()),
    };
    let root = recovery.root().clone();
    let certificate = classify_root(&root);
    // the Krausz partition is an explicit isomorphism L(root) -> P
    assert!(
        recovery.partition.verify(p),
        "recovered root must rebuild the input"
    );
    PolytopeClassification {
        certificate,
        root: Some(root),
    }
}

/// `L(G)` is a 3-polytope, computed directly.
pub fn oracle_root_check(g: &Graph) -> Result<bool, DerivedError> {
    Ok(is_3polytope(&line_graph(g)?.graph))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn lemma_examples() {
        let r = lemma14_report(&named::cycle(4));
        assert!(!r.no_adjacent_deg2.holds);
        assert_eq!(r.no_adjacent_deg2.witness.len(), 2);

        let g = t2_pendant(&named::complete(4), 0).unwrap();
        let r = lemma14_report(&g);
        assert!(r.all_pass());
        assert!(r.deg4_one_leaf.holds);

        let r = lemma14_report(&named::star(4));
        assert!(!r.deg4_one_leaf.holds);
        assert!(r.tetrahedron_exempt);
        assert!(r.all_pass());
    }

    #[test]
    fn classify_root_examples() {
        match classify_root(&named::complete(4)) {
            Certificate::Decorated(d) => {
                assert_eq!(d.base, named::complete(4));
                assert!(d.subdivided_edges.is_empty() && d.pendant_hosts.is_empty());
            }
            c => panic!("{c:?}"),
        }
        assert_eq!(
            classify_root(&named::diamond()),
            Certificate::Exceptional { index: 2 }
        );
        assert!(matches!(
            classify_root(&named::cycle(5)),
            Certificate::Rejected(Rejection {
                reason: RejectReason::AdjacentDeg2,
                ..
            })
        ));
        assert!(matches!(
            classify_root(&named::star(5)),
            Certificate::Rejected(Rejection {
                reason: RejectReason::MaxDegreeExceeded,
                ..
            })
        ));
        assert!(matches!(
            classify_root(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()),
            Certificate::Rejected(Rejection {
                reason: RejectReason::NotConnected,
                ..
            })
        ));
        assert!(matches!(
            classify_root(&Graph::empty(1)),
            Certificate::Rejected(Rejection {
                reason: RejectReason::NotConnected,
                ..
            })
        ));
        // K5 is 4-regular with no cut vertex
        assert!(matches!(
            classify_root(&named::complete(5)),
            Certificate::Rejected(Rejection {
                reason: RejectReason::Deg4NotSeparating,
                ..
            })
        ));
        // cubic but not a polytope
        assert!(matches!(
            classify_root(&named::complete_bipartite(3, 3)),
            Certificate::Rejected(Rejection {
                reason: RejectReason::BaseNotCubicPolytope,
                ..
            })
        ));
    }

    #[test]
    fn decorated_certificate_rebuilds() {
        let mut g = named::cube();
        g = t1_subdivide(&g, (0, 1)).unwrap();
        g = t2_pendant(&g, 7).unwrap();
        match classify_root(&g) {
            Certificate::Decorated(d) => {
                assert_eq!(d.subdivided_edges.len(), 1);
                assert_eq!(d.pendant_hosts.len(), 1);
                assert!(are_isomorphic(&d.rebuild().unwrap(), &g));
            }
            c => panic!("{c:?}"),
        }
    }

    #[test]
    fn classify_polytope_examples() {
        let c = classify_polytope(&named::octahedron());
        assert!(are_isomorphic(
            c.root.as_ref().unwrap(),
            &named::complete(4)
        ));
        assert!(matches!(c.certificate, Certificate::Decorated(_)));

        let c = classify_polytope(&named::prism());
        assert_eq!(c.certificate, Certificate::Exceptional { index: 5 });

        let c = classify_polytope(&named::cube());
        assert!(matches!(
            c.certificate,
            Certificate::Rejected(Rejection {
                reason: RejectReason::NotLineGraph,
                ..
            })
        ));
        let c = classify_polytope(&named::cycle(5));
        assert!(matches!(
            c.certificate,
            Certificate::Rejected(Rejection {
                reason: RejectReason::NotPolytope,
                ..
            })
        ));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_root_check(&named::complete(4)), Ok(true));
        assert_eq!(oracle_root_check(&named::cycle(4)), Ok(false));
        assert_eq!(
            oracle_root_check(&named::complete_bipartite(2, 3)),
            Ok(true)
        );
        assert_eq!(
            oracle_root_check(&Graph::empty(2)),
            Err(DerivedError::NoEdges)
        );
    }
}
