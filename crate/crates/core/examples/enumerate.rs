//! Counts cubic 3-polytopes, roots and polytopal line graphs by size.
//!
//! `cargo run --release --example enumerate -- 12`

use std::collections::BTreeMap;
use std::time::Instant;

use linepoly::generator::{
    enumerate_cubic_polytopes, enumerate_polytopal_line_graphs, enumerate_roots,
};

fn main() {
    let max_edges: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(12);

    let t = Instant::now();
    let bases = enumerate_cubic_polytopes(2 * max_edges / 3).expect("within guard");
    let mut by_order = BTreeMap::new();
    for b in &bases {
        *by_order.entry(b.order()).or_insert(0) += 1;
    }
    println!(
        "cubic 3-polytopes by order: {by_order:?} ({:.2?})",
        t.elapsed()
    );

    let t = Instant::now();
    let roots = enumerate_roots(max_edges).expect("within guard");
    let mut by_size = BTreeMap::new();
    for r in &roots {
        *by_size.entry(r.size()).or_insert(0) += 1;
    }
    println!("roots by edge count: {by_size:?} ({:.2?})", t.elapsed());

    let t = Instant::now();
    let lines = enumerate_polytopal_line_graphs(max_edges).expect("within guard");
    println!(
        "polytopal line graphs: {} ({:.2?})",
        lines.len(),
        t.elapsed()
    );
}
