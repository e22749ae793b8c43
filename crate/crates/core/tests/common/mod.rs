//! Independent reference implementations used only by the test suites.
//! None of them share code paths with the library algorithms they check.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use linepoly::canon::{canonical_form, CanonicalCode};
use linepoly::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// All graphs on exactly `n` vertices up to isomorphism, built by adding a
/// vertex with every possible neighbourhood to each graph on `n - 1`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    let g = Graph::empty(0);
    level.insert(canonical_form(&g).0, g);
    for k in 0..n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for mask in 0u32..(1 << k) {
                let mut edges = g.edges();
                edges.extend((0..k).filter(|i| mask >> i & 1 == 1).map(|i| (i, k)));
                let h = Graph::from_edges(k + 1, &edges).unwrap();
                let (code, form) = canonical_form(&h);
                next.entry(code).or_insert(form);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

pub fn connected_graphs_on(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(bfs_connected).collect()
}

pub fn bfs_connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == n
}

/// Whether `g` contains a subdivision of the pattern graph on `k` vertices
/// with edge list `pattern`: branch vertices are placed injectively and each
/// pattern edge is routed along an internally disjoint path.
pub fn contains_subdivision(g: &Graph, k: usize, pattern: &[(usize, usize)]) -> bool {
    let n = g.order();
    if n < k {
        return false;
    }
    fn route(
        g: &Graph,
        pattern: &[(usize, usize)],
        idx: usize,
        place: &[usize],
        used: &mut [bool],
    ) -> bool {
        if idx == pattern.len() {
            return true;
        }
        let (a, b) = pattern[idx];
        let (s, t) = (place[a], place[b]);
        // depth-first over simple paths from s to t through unused vertices
        fn dfs(
            g: &Graph,
            v: usize,
            t: usize,
            pattern: &[(usize, usize)],
            idx: usize,
            place: &[usize],
            used: &mut [bool],
        ) -> bool {
            for &w in g.neighbors(v) {
                if w == t {
                    if route(g, pattern, idx + 1, place, used) {
                        return true;
                    }
                } else if !used[w] {
                    used[w] = true;
                    if dfs(g, w, t, pattern, idx, place, used) {
                        return true;
                    }
                    used[w] = false;
                }
            }
            false
        }
        dfs(g, s, t, pattern, idx, place, used)
    }
    fn place_rec(
        g: &Graph,
        k: usize,
        pattern: &[(usize, usize)],
        place: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if place.len() == k {
            return route(g, pattern, 0, place, used);
        }
        for v in 0..g.order() {
            if !used[v]
                && g.neighbors(v).len()
                    >= pattern
                        .iter()
                        .filter(|&&(a, b)| a == place.len() || b == place.len())
                        .count()
            {
                used[v] = true;
                place.push(v);
                if place_rec(g, k, pattern, place, used) {
                    return true;
                }
                place.pop();
                used[v] = false;
            }
        }
        false
    }
    place_rec(g, k, pattern, &mut Vec::new(), &mut vec![false; n])
}

pub fn k5_pattern() -> Vec<(usize, usize)> {
    (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect()
}

pub fn k33_pattern() -> Vec<(usize, usize)> {
    (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect()
}

/// Kuratowski: planar iff no subdivision of `K5` or `K3,3`.
pub fn kuratowski_planar(g: &Graph) -> bool {
    !contains_subdivision(g, 5, &k5_pattern()) && !contains_subdivision(g, 6, &k33_pattern())
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths, by unit
/// capacity augmenting paths on the split digraph.
fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.order();
    // node 2v is v_in, 2v+1 is v_out
    let size = 2 * n;
    let mut cap = vec![vec![0i32; size]; size];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == s || v == t { n as i32 } else { 1 };
        for &w in g.neighbors(v) {
            cap[2 * v + 1][2 * w] = n as i32;
        }
    }
    let (src, dst) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; size];
        prev[src] = src;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for y in 0..size {
                if cap[x][y] > 0 && prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[dst] == usize::MAX {
            return flow;
        }
        let mut y = dst;
        while y != src {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// Vertex connectivity by Menger: minimum over non-adjacent pairs of the
/// local connectivity, and `n - 1` for complete graphs.
pub fn menger_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 || !bfs_connected(g) {
        return 0;
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t));
            }
        }
    }
    best
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// The line graph built straight from the definition on an edge list.
pub fn naive_line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                out.push((i, j));
            }
        }
    }
    Graph::from_edges(edges.len(), &out).unwrap()
}

pub fn code_set(gs: &[Graph]) -> BTreeSet<CanonicalCode> {
    gs.iter().map(|g| canonical_form(g).0).collect()
}

/// Every decoration of every base within `max_edges`, by brute force over
/// subset bitmasks.
pub fn brute_decorations(bases: &[Graph], max_edges: usize) -> BTreeSet<CanonicalCode> {
    let mut out = BTreeSet::new();
    for b in bases {
        let edges = b.edges();
        let n = b.order();
        if edges.len() > max_edges {
            continue;
        }
        for emask in 0u64..(1 << edges.len()) {
            let k = emask.count_ones() as usize;
            if edges.len() + k > max_edges {
                continue;
            }
            for vmask in 0u64..(1 << n) {
                let j = vmask.count_ones() as usize;
                if edges.len() + k + j > max_edges {
                    continue;
                }
                let mut list = Vec::new();
                let mut next = n;
                for (i, &(x, y)) in edges.iter().enumerate() {
                    if emask >> i & 1 == 1 {
                        list.push((x, next));
                        list.push((next, y));
                        next += 1;
                    } else {
                        list.push((x, y));
                    }
                }
                for v in 0..n {
                    if vmask >> v & 1 == 1 {
                        list.push((v, next));
                        next += 1;
                    }
                }
                out.insert(canonical_form(&Graph::from_edges(next, &list).unwrap()).0);
            }
        }
    }
    out
}
