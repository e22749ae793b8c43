//! Small named graphs used throughout the crate, its examples and its tests.

use crate::graph::Graph;

fn build(order: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(order, edges).expect("named graph edge list is simple")
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    build(n, &edges)
}

/// The cycle `C_n` on `0, 1, .., n-1` (n >= 3).
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// The star `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    build(k + 1, &edges)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    build(a + b, &edges)
}

/// `K_4` minus the edge 2-3; vertices 0 and 1 have degree 3.
pub fn diamond() -> Graph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// The wheel with hub 0 and rim `1..=k`.
pub fn wheel(k: usize) -> Graph {
    let mut edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    edges.extend((1..=k).map(|i| (i, i % k + 1)));
    build(k + 1, &edges)
}

/// The triangular prism: triangles 0-1-2 and 3-4-5 joined by `i`-`i+3`.
pub fn prism() -> Graph {
    build(
        6,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
}

/// The 3-cube graph on bit strings of length three.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in [1, 2, 4] {
            if u & bit == 0 {
                edges.push((u, u | bit));
            }
        }
    }
    build(8, &edges)
}

/// The octahedron `K_{2,2,2}`: antipodal pairs are `(0,1)`, `(2,3)`, `(4,5)`.
pub fn octahedron() -> Graph {
    let mut edges = Vec::new();
    for u in 0..6usize {
        for v in u + 1..6 {
            if u / 2 != v / 2 {
                edges.push((u, v));
            }
        }
    }
    build(6, &edges)
}

/// The Petersen graph: cubic and non-planar.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    build(10, &edges)
}
