//! Recovers roots from line graphs with Krausz clique partitions, including
//! the one ambiguous case.

use linepoly::canon::are_isomorphic;
use linepoly::classifier::classify_polytope;
use linepoly::derived::{line_graph, root_graph};
use linepoly::named;

fn main() {
    for (name, root) in [
        ("K4", named::complete(4)),
        ("K_{2,3}", named::complete_bipartite(2, 3)),
        ("Petersen", named::petersen()),
    ] {
        let l = line_graph(&root).unwrap();
        let rec = root_graph(&l.graph).unwrap();
        println!(
            "L({name}): {} vertices, {} cliques, root recovered: {}",
            l.graph.order(),
            rec.partition.cliques.len(),
            are_isomorphic(rec.root(), &root)
        );
    }

    let triangle = named::complete(3);
    let rec = root_graph(&triangle).unwrap();
    println!(
        "triangle: ambiguous = {}, roots of order {} and {}",
        rec.is_ambiguous(),
        rec.root().order(),
        rec.alternative.as_ref().unwrap().root.order()
    );

    match root_graph(&named::cube()) {
        Ok(_) => println!("cube: unexpectedly a line graph"),
        Err(e) => println!("cube: {e}"),
    }

    let oct = named::octahedron();
    let c = classify_polytope(&oct);
    println!(
        "octahedron: {:?}, root has {} edges",
        c.certificate.is_accepted(),
        c.root.unwrap().size()
    );
}
