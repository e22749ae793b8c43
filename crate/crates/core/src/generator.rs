//! Isomorph-free enumeration of cubic 3-polytopes, of the roots whose line
//! graphs are 3-polytopes, and of those line graphs; plus the brute-force
//! oracle over all small connected graphs.
//!
//! Results are emitted per root edge count, each level sorted by canonical
//! code, so output does not depend on scheduling or worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_code, canonical_form, CanonicalCode};
use crate::catalog::exceptional_roots;
use crate::classifier::oracle_root_check;
use crate::derived::line_graph;
use crate::graph::Graph;
use crate::named;
use crate::planarity::{embed, is_3polytope};
use crate::transforms::{t1_subdivide, t2_pendant, TransformError};

/// Environment variable overriding the size guards, e.g.
/// `LINEPOLY_LIMITS="cubic=16,roots=24,oracle=9"`.
pub const LIMITS_ENV: &str = "LINEPOLY_LIMITS";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("{what} bound {requested} exceeds the limit {limit}")]
    BoundExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
    #[error("invalid {LIMITS_ENV} value: {0}")]
    BadLimits(String),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

/// Size guards for the enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_cubic_vertices: usize,
    pub max_root_edges: usize,
    pub max_oracle_edges: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_cubic_vertices: 16,
            max_root_edges: 24,
            max_oracle_edges: 9,
        }
    }
}

impl Limits {
    /// Defaults, overridden by `key=value` pairs from [`LIMITS_ENV`].
    pub fn from_env() -> Result<Limits, GenError> {
        match std::env::var(LIMITS_ENV) {
            Ok(s) => Limits::parse(&s),
            Err(_) => Ok(Limits::default()),
        }
    }

    pub fn parse(spec: &str) -> Result<Limits, GenError> {
        let mut limits = Limits::default();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| GenError::BadLimits(part.to_string()))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| GenError::BadLimits(part.to_string()))?;
            match key.trim() {
                "cubic" => limits.max_cubic_vertices = value,
                "roots" => limits.max_root_edges = value,
                "oracle" => limits.max_oracle_edges = value,
                _ => return Err(GenError::BadLimits(part.to_string())),
            }
        }
        Ok(limits)
    }

    fn check(what: &'static str, requested: usize, limit: usize) -> Result<(), GenError> {
        if requested > limit {
            Err(GenError::BoundExceeded {
                what,
                requested,
                limit,
            })
        } else {
            Ok(())
        }
    }
}

/// All connected cubic graphs on `n` vertices, one per isomorphism class,
/// in canonical form. Vertices are introduced in breadth-first order, which
/// every connected graph admits, and duplicates are removed by canonical
/// code.
pub fn connected_cubic_graphs(n: usize) -> Vec<Graph> {
    struct Bfs {
        n: usize,
        g: Graph,
        introduced: usize,
        out: BTreeMap<CanonicalCode, Graph>,
    }
    fn rec(s: &mut Bfs, v: usize) {
        if v == s.n {
            let (code, form) = canonical_form(&s.g);
            s.out.entry(code).or_insert(form);
            return;
        }
        if v >= s.introduced {
            return;
        }
        let need = 3 - s.g.neighbors(v).len();
        let existing: Vec<usize> = (v + 1..s.introduced)
            .filter(|&w| s.g.neighbors(w).len() < 3 && !s.g.has_edge(v, w))
            .collect();
        for fresh in 0..=need.min(s.n - s.introduced) {
            for olds in existing.iter().copied().combinations(need - fresh) {
                let start = s.introduced;
                let mut added = olds.clone();
                added.extend(start..start + fresh);
                for _ in 0..fresh {
                    s.g.add_vertex();
                }
                s.introduced += fresh;
                for &w in &added {
                    s.g.try_add_edge(v, w).expect("fresh edge");
                }
                rec(s, v + 1);
                for &w in &added {
                    s.g.try_remove_edge(v, w).expect("edge present");
                }
                s.introduced -= fresh;
                s.g =
                    s.g.delete_vertices(&(start..start + fresh).collect::<Vec<_>>())
                        .unwrap()
                        .0;
            }
        }
    }
    if n < 4 || n % 2 == 1 {
        return Vec::new();
    }
    let mut s = Bfs {
        n,
        g: Graph::empty(1),
        introduced: 1,
        out: BTreeMap::new(),
    };
    rec(&mut s, 0);
    s.out.into_values().collect()
}

/// Cubic 3-polytopes on exactly `n` vertices by face edge insertion: every
/// cubic 3-polytope other than `K4` arises from one with two fewer vertices
/// by joining new vertices placed on two edges of a common face.
fn expand_cubic(smaller: &[Graph]) -> Vec<Graph> {
    let found: BTreeMap<CanonicalCode, Graph> = smaller
        .par_iter()
        .map(|g| {
            let mut local = BTreeMap::new();
            let e = embed(g).expect("cubic polytope is planar");
            for f in e.faces() {
                let edges: Vec<(usize, usize)> = f.boundary().into_iter().map(|(_, e)| e).collect();
                for (i, j) in (0..edges.len()).tuple_combinations() {
                    let mut h = g.clone();
                    let (a, b) = edges[i];
                    let (c, d) = edges[j];
                    h.try_remove_edge(a, b).expect("face edge");
                    h.try_remove_edge(c, d).expect("face edge");
                    let s = h.add_vertex();
                    let t = h.add_vertex();
                    for (x, y) in [(a, s), (s, b), (c, t), (t, d), (s, t)] {
                        h.try_add_edge(x, y).expect("fresh edge");
                    }
                    if is_3polytope(&h) {
                        let (code, form) = canonical_form(&h);
                        local.entry(code).or_insert(form);
                    }
                }
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                a.entry(k).or_insert(v);
            }
            a
        });
    found.into_values().collect()
}

/// Cubic 3-polytopes on exactly `n` vertices via [`connected_cubic_graphs`]
/// filtered by [`is_3polytope`].
pub fn cubic_polytopes_by_filter(n: usize) -> Vec<Graph> {
    connected_cubic_graphs(n)
        .into_iter()
        .filter(is_3polytope)
        .collect()
}

/// All cubic 3-polytopes with `4..=max_vertices` vertices, one per
/// isomorphism class, in canonical form, ordered by order then code.
pub fn enumerate_cubic_polytopes(max_vertices: usize) -> Result<Vec<Graph>, GenError> {
    enumerate_cubic_polytopes_with(max_vertices, &Limits::from_env()?)
}

pub fn enumerate_cubic_polytopes_with(
    max_vertices: usize,
    limits: &Limits,
) -> Result<Vec<Graph>, GenError> {
    Limits::check("cubic vertex", max_vertices, limits.max_cubic_vertices)?;
    let mut out = Vec::new();
    if max_vertices < 4 {
        return Ok(out);
    }
    let mut level = vec![canonical_form(&named::complete(4)).1];
    let mut n = 4;
    loop {
        out.extend(level.iter().cloned());
        n += 2;
        if n > max_vertices {
            break;
        }
        level = expand_cubic(&level);
    }
    Ok(out)
}

/// Applies `t1_subdivide` to each listed edge, then `t2_pendant` to each
/// listed vertex.
pub fn decorate(
    base: &Graph,
    sub_edges: &[(usize, usize)],
    pendant_hosts: &[usize],
) -> Result<Graph, TransformError> {
    let mut g = base.clone();
    for &e in sub_edges {
        g = t1_subdivide(&g, e)?;
    }
    for &h in pendant_hosts {
        g = t2_pendant(&g, h)?;
    }
    Ok(g)
}

/// Summary of an enumeration run.
#[derive(Debug, Clone, Default)]
pub struct EnumerationReport {
    pub max_edges: usize,
    /// Number of results per root edge count.
    pub counts: BTreeMap<usize, usize>,
    pub codes: BTreeSet<CanonicalCode>,
    pub elapsed: Duration,
    /// Decorated roots produced from more than one base.
    pub cross_base_collisions: usize,
}

impl EnumerationReport {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

/// Every decoration of `base` within `budget` extra edges, deduplicated.
fn decorations_of(base: &Graph, budget: usize) -> BTreeMap<CanonicalCode, Graph> {
    let edges = base.edges();
    let mut out = BTreeMap::new();
    for k in 0..=budget.min(edges.len()) {
        for sub in edges.iter().copied().combinations(k) {
            for j in 0..=(budget - k).min(base.order()) {
                for hosts in (0..base.order()).combinations(j) {
                    let g = decorate(base, &sub, &hosts)
                        .expect("decorations of a cubic base are legal");
                    let (code, form) = canonical_form(&g);
                    out.entry(code).or_insert(form);
                }
            }
        }
    }
    out
}

/// Roots with at most `max_edges` edges whose line graphs are 3-polytopes,
/// grouped by edge count and sorted by canonical code, streamed to `sink`.
pub fn stream_roots(
    max_edges: usize,
    limits: &Limits,
    mut sink: impl FnMut(&Graph),
) -> Result<EnumerationReport, GenError> {
    Limits::check("root edge", max_edges, limits.max_root_edges)?;
    let start = Instant::now();
    let bases = enumerate_cubic_polytopes_with(2 * max_edges / 3, limits)?;
    let per_base: Vec<BTreeMap<CanonicalCode, Graph>> = bases
        .par_iter()
        .map(|b| decorations_of(b, max_edges - b.size()))
        .collect();
    let mut merged: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    let mut collisions = 0;
    for map in per_base {
        for (code, g) in map {
            if merged.insert(code, g).is_some() {
                collisions += 1;
            }
        }
    }
    for j in exceptional_roots() {
        if j.size() <= max_edges {
            let (code, form) = canonical_form(&j);
            merged.insert(code, form);
        }
    }
    let mut report = EnumerationReport {
        max_edges,
        cross_base_collisions: collisions,
        ..Default::default()
    };
    let mut by_size: BTreeMap<usize, Vec<(CanonicalCode, Graph)>> = BTreeMap::new();
    for (code, g) in merged {
        by_size.entry(g.size()).or_default().push((code, g));
    }
    for (size, level) in by_size {
        report.counts.insert(size, level.len());
        for (code, g) in level {
            sink(&g);
            report.codes.insert(code);
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// All roots with at most `max_edges` edges whose line graph is a
/// 3-polytope: decorated cubic 3-polytopes plus the exceptional roots.
pub fn enumerate_roots(max_edges: usize) -> Result<Vec<Graph>, GenError> {
    let mut out = Vec::new();
    stream_roots(max_edges, &Limits::from_env()?, |g| out.push(g.clone()))?;
    Ok(out)
}

/// The 3-polytopal line graphs of the roots from [`stream_roots`], in the
/// same order, each in canonical form.
pub fn stream_polytopal_line_graphs(
    max_root_edges: usize,
    limits: &Limits,
    mut sink: impl FnMut(&Graph),
) -> Result<EnumerationReport, GenError> {
    let mut roots = Vec::new();
    let root_report = stream_roots(max_root_edges, limits, |g| roots.push(g.clone()))?;
    let start = Instant::now();
    let lines: Vec<(CanonicalCode, Graph)> = roots
        .par_iter()
        .map(|r| {
            let l = line_graph(r).expect("roots have edges").graph;
            assert!(
                is_3polytope(&l),
                "generated line graph must be a 3-polytope"
            );
            canonical_form(&l)
        })
        .collect();
    let mut report = EnumerationReport {
        max_edges: max_root_edges,
        ..Default::default()
    };
    for (code, l) in lines {
        if report.codes.insert(code) {
            *report.counts.entry(l.order()).or_default() += 1;
            sink(&l);
        }
    }
    report.elapsed = root_report.elapsed + start.elapsed();
    Ok(report)
}

pub fn enumerate_polytopal_line_graphs(max_root_edges: usize) -> Result<Vec<Graph>, GenError> {
    let mut out = Vec::new();
    stream_polytopal_line_graphs(max_root_edges, &Limits::from_env()?, |g| {
        out.push(g.clone())
    })?;
    Ok(out)
}

/// All connected graphs with `1..=max_edges` edges, one per isomorphism
/// class, grouped by edge count and sorted by code. Each level extends the
/// previous one by an edge between existing vertices or to a new vertex;
/// every connected graph with two or more edges has an edge whose removal
/// (with a resulting isolated vertex) leaves a connected graph, so nothing
/// is missed.
pub fn connected_graphs(max_edges: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if max_edges == 0 {
        return out;
    }
    let mut level: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    let k2 = named::complete(2);
    level.insert(canonical_code(&k2), k2);
    for _ in 1..max_edges {
        out.extend(level.values().cloned());
        let next: BTreeMap<CanonicalCode, Graph> = level
            .par_iter()
            .map(|(_, g)| {
                let mut local = BTreeMap::new();
                let n = g.order();
                for u in 0..n {
                    for v in u + 1..n {
                        if !g.has_edge(u, v) {
                            let mut h = g.clone();
                            h.try_add_edge(u, v).expect("non-edge");
                            let (code, form) = canonical_form(&h);
                            local.entry(code).or_insert(form);
                        }
                    }
                    let mut h = g.clone();
                    let w = h.add_vertex();
                    h.try_add_edge(u, w).expect("fresh vertex");
                    let (code, form) = canonical_form(&h);
                    local.entry(code).or_insert(form);
                }
                local
            })
            .reduce(BTreeMap::new, |mut a, b| {
                a.extend(b);
                a
            });
        level = next;
    }
    out.extend(level.into_values());
    out
}

/// Ground truth: every connected graph with at most `max_edges` edges whose
/// line graph is a 3-polytope, tested directly.
pub fn exhaustive_oracle(max_edges: usize) -> Result<Vec<Graph>, GenError> {
    exhaustive_oracle_with(max_edges, &Limits::from_env()?)
}

pub fn exhaustive_oracle_with(max_edges: usize, limits: &Limits) -> Result<Vec<Graph>, GenError> {
    Limits::check("oracle edge", max_edges, limits.max_oracle_edges)?;
    let all = connected_graphs(max_edges);
    let keep: Vec<bool> = all
        .par_iter()
        .map(|g| oracle_root_check(g).expect("connected graphs here have edges"))
        .collect();
    Ok(all
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect())
}
