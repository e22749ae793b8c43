//! Canonical codes for isomorphism testing.
//!
//! The code of a graph is the lexicographically least upper-triangle
//! adjacency serialization over the labelings explored by an
//! individualization/refinement search. Colour refinement orders the vertices
//! by an isomorphism-invariant partition; whenever the partition is not
//! discrete, each vertex of the first smallest non-singleton cell is
//! individualized in turn. Twin vertices (equal open or closed
//! neighbourhoods) are swapped by an automorphism fixing the current
//! partition, so only one of each twin class is expanded.

use std::fmt;

use crate::graph::{Graph, GraphError};

/// Largest order accepted by the canonical labeller.
pub const MAX_CANON_ORDER: usize = 64;

/// A byte string determined by the isomorphism class of a graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

struct Search<'a> {
    rows: &'a [u64],
    open_twin: Vec<u64>,
    closed_twin: Vec<u64>,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

fn bit_rows(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | (1 << w)))
        .collect()
}

/// Replaces colours by their dense rank.
fn rerank(keys: &[u64]) -> Vec<u32> {
    let mut sorted: Vec<u64> = keys.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap() as u32)
        .collect()
}

fn cell_count(colors: &[u32]) -> usize {
    colors.iter().max().map_or(0, |&m| m as usize + 1)
}

/// Colour refinement to the coarsest equitable partition finer than `colors`.
fn refine(rows: &[u64], colors: &mut Vec<u32>) {
    let n = colors.len();
    let mut cells = cell_count(colors);
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = BitIter(rows[v]).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut order: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        order.sort();
        order.dedup();
        let ranks: Vec<u32> = sigs
            .iter()
            .map(|s| order.binary_search(&s).unwrap() as u32)
            .collect();
        let new_cells = order.len();
        sigs.clear();
        *colors = ranks;
        if new_cells == cells {
            return;
        }
        cells = new_cells;
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

impl Search<'_> {
    fn leaf_code(&self, colors: &[u32]) -> (Vec<u8>, Vec<usize>) {
        let n = colors.len();
        let mut inv = vec![0usize; n];
        for (v, &c) in colors.iter().enumerate() {
            inv[c as usize] = v;
        }
        let mut code = Vec::with_capacity(1 + (n * n) / 16 + 1);
        code.push(n as u8);
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            let row = self.rows[inv[j]];
            for &vi in &inv[..j] {
                acc = (acc << 1) | ((row >> vi) & 1) as u8;
                filled += 1;
                if filled == 8 {
                    code.push(acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            code.push(acc << (8 - filled));
        }
        let perm = colors.iter().map(|&c| c as usize).collect();
        (code, perm)
    }

    fn explore(&mut self, mut colors: Vec<u32>) {
        refine(self.rows, &mut colors);
        let n = colors.len();
        let cells = cell_count(&colors);
        if cells == n {
            let (code, perm) = self.leaf_code(&colors);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, perm));
            }
            return;
        }
        let mut sizes = vec![0usize; cells];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..cells)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c))
            .expect("non-discrete partition has a non-singleton cell") as u32;
        let mut tried: Vec<usize> = Vec::new();
        for v in (0..n).filter(|&v| colors[v] == target) {
            if tried.iter().any(|&w| {
                self.open_twin[w] == self.open_twin[v] || self.closed_twin[w] == self.closed_twin[v]
            }) {
                continue;
            }
            tried.push(v);
            let keys: Vec<u64> = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| 2 * c as u64 + u64::from(c == target && w != v))
                .collect();
            self.explore(rerank(&keys));
        }
    }
}

/// Canonical relabeling permutation (`v` maps to `perm[v]`) and code.
pub fn try_canonical_labeling(g: &Graph) -> Result<(CanonicalCode, Vec<usize>), GraphError> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(GraphError::TooLarge {
            order: n,
            limit: MAX_CANON_ORDER,
        });
    }
    if n == 0 {
        return Ok((CanonicalCode(vec![0]), Vec::new()));
    }
    let rows = bit_rows(g);
    let mut search = Search {
        rows: &rows,
        open_twin: rows.clone(),
        closed_twin: rows.iter().enumerate().map(|(v, r)| r | (1 << v)).collect(),
        best: None,
    };
    search.explore(vec![0; n]);
    let (code, perm) = search.best.expect("search reaches at least one leaf");
    Ok((CanonicalCode(code), perm))
}

/// Canonical code of `g`.
///
/// Panics if `g` has more than [`MAX_CANON_ORDER`] vertices; use
/// [`try_canonical_labeling`] to handle that case.
pub fn canonical_code(g: &Graph) -> CanonicalCode {
    try_canonical_labeling(g)
        .expect("graph within canonical-labelling guard")
        .0
}

/// The canonically relabelled copy of `g` together with its code.
pub fn canonical_form(g: &Graph) -> (CanonicalCode, Graph) {
    let (code, perm) = try_canonical_labeling(g).expect("graph within canonical-labelling guard");
    (code, g.permuted(&perm))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_code(g) == canonical_code(h)
}
