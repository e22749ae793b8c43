//! Planarity with embeddings for planar graphs and Kuratowski subdivisions
//! for the rest.

use linepoly::named;
use linepoly::planarity::{check_planarity, is_3polytope, Planarity};

fn main() {
    for (name, g) in [
        ("wheel W6", named::wheel(6)),
        ("K5", named::complete(5)),
        ("K_{3,3}", named::complete_bipartite(3, 3)),
        ("Petersen", named::petersen()),
        ("cube", named::cube()),
    ] {
        match check_planarity(&g).unwrap() {
            Planarity::Planar(e) => {
                let lens: Vec<usize> = e.faces().iter().map(|f| f.len()).collect();
                println!(
                    "{name}: planar, face lengths {lens:?}, Euler {}, 3-polytope {}",
                    e.satisfies_euler(),
                    is_3polytope(&g)
                );
            }
            Planarity::NonPlanar(w) => {
                println!(
                    "{name}: {:?} subdivision on {:?}, verified {}",
                    w.kind,
                    w.branch_vertices,
                    w.verify(&g)
                );
            }
        }
    }
}
