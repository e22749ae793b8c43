//! Whole-class consistency checks shared by `verify` and the test suites.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canon::{are_isomorphic, canonical_code, CanonicalCode};
use crate::derived::{line_graph, medial_graph, radial_graph};
use crate::generator::{enumerate_roots, exhaustive_oracle, GenError};
use crate::graph::Graph;
use crate::planarity::{dual_graph, embed, is_3polytope};
use crate::transforms::{t1_prime, t1_subdivide, t2_pendant, t2_prime, T1Witness};

/// Outcome of one check over a family of cases.
#[derive(Debug, Clone, Default)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn collect(name: &'static str, results: Vec<Vec<String>>, cases: usize) -> Self {
        CheckOutcome {
            name: name.to_string(),
            cases,
            failures: results.into_iter().flatten().collect(),
        }
    }
}

/// `L(T1(G, xy))` against `T1'(L(G), xy)` for every edge of every base.
pub fn t1_commutation(bases: &[Graph]) -> CheckOutcome {
    let cases = bases.iter().map(Graph::size).sum();
    let results = bases
        .par_iter()
        .map(|g| {
            let l = line_graph(g).expect("bases have edges");
            let mut fails = Vec::new();
            for (x, y) in g.edges() {
                let lhs = line_graph(&t1_subdivide(g, (x, y)).expect("cubic base"))
                    .unwrap()
                    .graph;
                let side = |end: usize, other: usize| -> (usize, usize) {
                    let ids: Vec<usize> = g
                        .neighbors(end)
                        .iter()
                        .filter(|&&w| w != other)
                        .map(|&w| l.vertex_for(end, w).unwrap())
                        .collect();
                    (ids[0], ids[1])
                };
                let witness = T1Witness {
                    first: side(x, y),
                    second: side(y, x),
                };
                let v = l.vertex_for(x, y).unwrap();
                match t1_prime(&l.graph, v, witness) {
                    Ok(rhs) if are_isomorphic(&lhs, &rhs) => {}
                    Ok(_) => fails.push(format!("T1 on edge {x}-{y}: results differ")),
                    Err(e) => fails.push(format!("T1 on edge {x}-{y}: {e}")),
                }
            }
            fails
        })
        .collect();
    CheckOutcome::collect("T1 commutation", results, cases)
}

/// `L(T2(G, u))` against `T2'(L(G), star of u)` for every vertex of every
/// base.
pub fn t2_commutation(bases: &[Graph]) -> CheckOutcome {
    let cases = bases.iter().map(Graph::order).sum();
    let results = bases
        .par_iter()
        .map(|g| {
            let l = line_graph(g).expect("bases have edges");
            let mut fails = Vec::new();
            for u in g.vertices() {
                let lhs = line_graph(&t2_pendant(g, u).expect("cubic base"))
                    .unwrap()
                    .graph;
                let star = l.star_of(u);
                match t2_prime(&l.graph, [star[0], star[1], star[2]]) {
                    Ok(rhs) if are_isomorphic(&lhs, &rhs) => {}
                    Ok(_) => fails.push(format!("T2 at vertex {u}: results differ")),
                    Err(e) => fails.push(format!("T2 at vertex {u}: {e}")),
                }
            }
            fails
        })
        .collect();
    CheckOutcome::collect("T2 commutation", results, cases)
}

/// For cubic 3-polytopes the medial graph coincides with the line graph; it
/// is 4-regular and a 3-polytope.
pub fn medial_coincidence(bases: &[Graph]) -> CheckOutcome {
    let results = bases
        .par_iter()
        .map(|g| {
            let e = embed(g).expect("bases are planar");
            let m = medial_graph(&e).expect("bases are connected");
            let l = line_graph(g).unwrap().graph;
            let mut fails = Vec::new();
            if !are_isomorphic(&m, &l) {
                fails.push(format!("medial differs from line graph on {g:?}"));
            }
            if !m.is_regular(4) || !is_3polytope(&m) {
                fails.push(format!("medial of {g:?} is not a quartic 3-polytope"));
            }
            fails
        })
        .collect();
    CheckOutcome::collect("medial coincidence", results, bases.len())
}

/// The medial graph is isomorphic to the dual of the radial graph.
pub fn medial_radial_duality(polytopes: &[Graph]) -> CheckOutcome {
    let results = polytopes
        .par_iter()
        .map(|g| {
            let e = embed(g).expect("polytopes are planar");
            let m = medial_graph(&e).unwrap();
            let r = radial_graph(&e).unwrap();
            let d = embed(&r).and_then(|re| dual_graph(&re).ok());
            match d {
                Some(d) if are_isomorphic(&m, &d) => Vec::new(),
                Some(_) => vec![format!("medial differs from dual of radial on {g:?}")],
                None => vec![format!("radial graph of {g:?} is not a 3-polytope")],
            }
        })
        .collect();
    CheckOutcome::collect("medial-radial duality", results, polytopes.len())
}

/// Generated roots against the exhaustive oracle, as canonical-code sets.
pub fn completeness(max_edges: usize) -> Result<CheckOutcome, GenError> {
    let generated: BTreeSet<CanonicalCode> = enumerate_roots(max_edges)?
        .iter()
        .map(canonical_code)
        .collect();
    let oracle: BTreeSet<CanonicalCode> = exhaustive_oracle(max_edges)?
        .iter()
        .map(canonical_code)
        .collect();
    let mut failures = Vec::new();
    for c in generated.difference(&oracle) {
        failures.push(format!("generated but rejected by the oracle: {c:?}"));
    }
    for c in oracle.difference(&generated) {
        failures.push(format!("accepted by the oracle but not generated: {c:?}"));
    }
    Ok(CheckOutcome {
        name: format!("generator completeness, m = {max_edges}"),
        cases: oracle.len(),
        failures,
    })
}
