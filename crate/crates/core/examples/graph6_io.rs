//! Reads graphs in graph6 or edge-list form and writes graph6, edge lists
//! and DOT.

use linepoly::derived::line_graph;
use linepoly::io::{parse_edgelist, parse_graph6, write_dot, write_edgelist, write_graph6};

fn main() {
    let k4 = parse_edgelist("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap();
    let g6 = write_graph6(&k4);
    println!("K4 as graph6: {g6}");
    assert_eq!(parse_graph6(&g6).unwrap(), k4);

    let l = line_graph(&k4).unwrap();
    println!("L(K4) as graph6: {}", write_graph6(&l.graph));
    print!("{}", write_edgelist(&l.graph));
    print!("{}", write_dot(&l.graph, Some(&l.labels())));

    for bad in ["", "C~~", "3 1\n0 5"] {
        println!(
            "{bad:?}: {:?} / {:?}",
            parse_graph6(bad).err(),
            parse_edgelist(bad).err()
        );
    }
}
