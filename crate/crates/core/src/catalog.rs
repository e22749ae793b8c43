//! The seven exceptional roots: connected graphs whose line graph is a
//! 3-polytope although they are not decorated cubic 3-polytopes.
//!
//! `J_1` is the star `K_{1,4}` (line graph: the tetrahedron). `J_2..J_4` are
//! the diamond with zero, one and two pendants on its degree-3 vertices, and
//! `J_5..J_7` the same for `K_{2,3}`. The `exceptional_catalog` integration
//! test re-derives the set from an exhaustive search on every run.

use std::sync::OnceLock;

use crate::canon::{canonical_code, CanonicalCode};
use crate::graph::Graph;
use crate::named;

fn with_pendants(base: Graph, hosts: &[usize]) -> Graph {
    let mut g = base;
    for &h in hosts {
        let d = g.add_vertex();
        g.try_add_edge(h, d).expect("fresh pendant vertex");
    }
    g
}

/// `J_1..J_7`, in that order.
pub fn exceptional_roots() -> Vec<Graph> {
    let diamond = named::diamond();
    let k23 = named::complete_bipartite(2, 3);
    vec![
        named::star(4),
        diamond.clone(),
        with_pendants(diamond.clone(), &[0]),
        with_pendants(diamond, &[0, 1]),
        k23.clone(),
        with_pendants(k23.clone(), &[0]),
        with_pendants(k23, &[0, 1]),
    ]
}

fn catalog_codes() -> &'static [CanonicalCode] {
    static CODES: OnceLock<Vec<CanonicalCode>> = OnceLock::new();
    CODES.get_or_init(|| exceptional_roots().iter().map(canonical_code).collect())
}

/// The index `i` in `1..=7` with `g` isomorphic to `J_i`.
pub fn exception_index(g: &Graph) -> Option<usize> {
    if g.order() > 9 || g.size() > 9 || g.size() < 4 {
        return None;
    }
    let code = canonical_code(g);
    catalog_codes()
        .iter()
        .position(|c| *c == code)
        .map(|i| i + 1)
}
