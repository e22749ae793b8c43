//! Medial, radial and dual graphs of the platonic solids, and the
//! medial/dual-of-radial coincidence.

use linepoly::canon::are_isomorphic;
use linepoly::derived::{line_graph, medial_graph, radial_graph};
use linepoly::named;
use linepoly::planarity::{dual_graph, embed};

fn main() {
    for (name, g) in [
        ("tetrahedron", named::complete(4)),
        ("cube", named::cube()),
        ("octahedron", named::octahedron()),
    ] {
        let e = embed(&g).expect("polytopes are planar");
        let medial = medial_graph(&e).unwrap();
        let radial = radial_graph(&e).unwrap();
        let dual = dual_graph(&e).unwrap();
        let dual_of_radial = dual_graph(&embed(&radial).unwrap()).unwrap();
        println!(
            "{name}: {} faces; dual {}v/{}e; medial {}v/{}e; radial {}v/{}e; medial = dual(radial): {}",
            e.faces().len(),
            dual.order(),
            dual.size(),
            medial.order(),
            medial.size(),
            radial.order(),
            radial.size(),
            are_isomorphic(&medial, &dual_of_radial)
        );
        if g.is_regular(3) {
            println!(
                "  cubic, so medial = line graph: {}",
                are_isomorphic(&medial, &line_graph(&g).unwrap().graph)
            );
        }
    }
    let e = embed(&named::complete(4)).unwrap();
    println!(
        "tetrahedron medial is the octahedron: {}, radial is the cube: {}",
        are_isomorphic(&medial_graph(&e).unwrap(), &named::octahedron()),
        are_isomorphic(&radial_graph(&e).unwrap(), &named::cube())
    );
}
