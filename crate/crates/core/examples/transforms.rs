//! Root-side moves and their line-graph images, plus the reduction that
//! undoes a decoration.

use linepoly::canon::are_isomorphic;
use linepoly::derived::line_graph;
use linepoly::named;
use linepoly::transforms::{find_t1_sites, reduce, t1_prime, t1_subdivide, t2_pendant, t2_prime};

fn main() {
    let k4 = named::complete(4);
    let l = line_graph(&k4).unwrap();

    let subdivided = t1_subdivide(&k4, (0, 1)).unwrap();
    let (v, w) = find_t1_sites(&l.graph)
        .into_iter()
        .find(|(v, _)| *v == l.vertex_for(0, 1).unwrap())
        .unwrap();
    let image = t1_prime(&l.graph, v, w).unwrap();
    println!(
        "L(T1(K4)) = T1'(L(K4)): {}",
        are_isomorphic(&line_graph(&subdivided).unwrap().graph, &image)
    );

    let pendant = t2_pendant(&k4, 2).unwrap();
    let star = l.star_of(2);
    let image = t2_prime(&l.graph, [star[0], star[1], star[2]]).unwrap();
    println!(
        "L(T2(K4)) = T2'(L(K4)): {}",
        are_isomorphic(&line_graph(&pendant).unwrap().graph, &image)
    );

    let decorated = t2_pendant(&t1_subdivide(&named::prism(), (0, 3)).unwrap(), 1).unwrap();
    let trace = reduce(&decorated).unwrap();
    println!(
        "reduce: {} pendants stripped, {} vertices smoothed, base of order {}; rebuilds input: {}",
        trace.pendant_hosts.len(),
        trace.smoothed.len(),
        trace.g2.order(),
        trace.reconstruct() == decorated
    );
}
