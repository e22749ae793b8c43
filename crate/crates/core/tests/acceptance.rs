//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use linepoly::canon::{are_isomorphic, canonical_code};
use linepoly::catalog::exceptional_roots;
use linepoly::checks::{medial_coincidence, medial_radial_duality, t1_commutation, t2_commutation};
use linepoly::classifier::{classify_root, oracle_root_check, Certificate};
use linepoly::derived::{line_graph, medial_graph, radial_graph, root_graph};
use linepoly::generator::{
    connected_graphs, cubic_polytopes_by_filter, enumerate_cubic_polytopes,
    enumerate_polytopal_line_graphs, enumerate_roots, exhaustive_oracle,
};
use linepoly::io::{parse_graph6, write_graph6};
use linepoly::named;
use linepoly::planarity::{check_planarity, embed, is_3polytope, region_pair_criterion, Planarity};
use linepoly::Graph;

use common::{
    brute_decorations, code_set, connected_graphs_on, kuratowski_planar, menger_connectivity,
};

/// Accepted roots per bound `m = 4..=9`, frozen after the first run that
/// matched the exhaustive oracle.
const GOLDEN_ROOT_COUNTS: [(usize, usize); 6] = [(4, 1), (5, 2), (6, 5), (7, 9), (8, 15), (9, 27)];

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn corpus() -> Vec<Graph> {
    connected_graphs(9)
}

fn accepted(corpus: &[Graph]) -> Vec<Graph> {
    corpus
        .iter()
        .filter(|g| oracle_root_check(g).unwrap())
        .cloned()
        .collect()
}

fn bases(max: usize) -> Vec<Graph> {
    enumerate_cubic_polytopes(max).expect("within guard")
}

fn c1_theorem(corpus: &[Graph]) -> Verdict {
    let mut disagreements = Vec::new();
    for g in corpus {
        if classify_root(g).is_accepted() != oracle_root_check(g).unwrap() {
            disagreements.push(write_graph6(g));
        }
    }
    if corpus.len() != 1068 {
        return Err(format!("corpus has {} graphs, expected 1068", corpus.len()));
    }
    if disagreements.is_empty() {
        Ok(format!("{} graphs, 0 disagreements", corpus.len()))
    } else {
        Err(format!(
            "{} disagreements: {:?}",
            disagreements.len(),
            disagreements
        ))
    }
}

fn c2_catalog(accepted: &[Graph]) -> Verdict {
    let exceptional: Vec<&Graph> = accepted
        .iter()
        .filter(|g| matches!(classify_root(g), Certificate::Exceptional { .. }))
        .collect();
    if exceptional.len() != 7 {
        return Err(format!(
            "{} exceptional roots, expected 7",
            exceptional.len()
        ));
    }
    let catalog = exceptional_roots();
    for (i, j) in catalog.iter().enumerate() {
        if !is_3polytope(&line_graph(j).unwrap().graph) {
            return Err(format!("L(J{}) is not a 3-polytope", i + 1));
        }
    }
    let decorated = brute_decorations(&bases(6), 9);
    if !code_set(&catalog).is_disjoint(&decorated) {
        return Err("an exceptional root is also a decorated base".into());
    }
    let found = code_set(&exceptional.into_iter().cloned().collect::<Vec<_>>());
    if found != code_set(&catalog) {
        return Err("classified exceptions differ from the catalog".into());
    }
    Ok("7 exceptions, all polytopal, disjoint from decorated roots".into())
}

fn c3_commutation() -> Verdict {
    let b = bases(10);
    let (t1, t2) = (t1_commutation(&b), t2_commutation(&b));
    let failures = t1.failures.len() + t2.failures.len();
    let summary = format!(
        "{} bases, {} edge cases, {} vertex cases, {failures} failures",
        b.len(),
        t1.cases,
        t2.cases
    );
    if failures == 0 {
        Ok(summary)
    } else {
        Err(format!("{summary}: {:?} {:?}", t1.failures, t2.failures))
    }
}

fn c4_medial() -> Verdict {
    let b = bases(12);
    if b.len() != 23 {
        return Err(format!("{} bases, expected 23", b.len()));
    }
    let c = medial_coincidence(&b);
    if c.passed() {
        Ok("23 bases: medial = line graph, quartic 3-polytope".into())
    } else {
        Err(format!("{:?}", c.failures))
    }
}

fn c5_duality() -> Verdict {
    let mut polys = vec![named::complete(4), named::cube(), named::octahedron()];
    polys.extend(bases(12));
    let d = medial_radial_duality(&polys);
    if !d.passed() {
        return Err(format!("{:?}", d.failures));
    }
    let e = embed(&named::complete(4)).unwrap();
    if !are_isomorphic(&medial_graph(&e).unwrap(), &named::octahedron()) {
        return Err("medial of the tetrahedron is not the octahedron".into());
    }
    if !are_isomorphic(&radial_graph(&e).unwrap(), &named::cube()) {
        return Err("radial of the tetrahedron is not the cube".into());
    }
    Ok(format!(
        "{} polytopes; tetrahedron: medial = octahedron, radial = cube",
        polys.len()
    ))
}

fn c6_completeness() -> Verdict {
    let mut counts = Vec::new();
    for m in 4..=9 {
        let roots = code_set(&enumerate_roots(m).unwrap());
        let oracle = code_set(&exhaustive_oracle(m).unwrap());
        if roots != oracle {
            return Err(format!("m = {m}: generator and oracle differ"));
        }
        counts.push((m, roots.len()));
    }
    if counts != GOLDEN_ROOT_COUNTS {
        return Err(format!(
            "counts {counts:?} differ from golden {GOLDEN_ROOT_COUNTS:?}"
        ));
    }
    Ok(format!(
        "m = 4..9 identical; counts {:?}",
        counts.iter().map(|c| c.1).collect::<Vec<_>>()
    ))
}

fn c7_root_recovery(accepted: &[Graph]) -> Verdict {
    for g in accepted {
        let l = line_graph(g).unwrap().graph;
        let rec = root_graph(&l).map_err(|e| format!("{}: {e}", write_graph6(g)))?;
        if !rec.partition.verify(&l) || !are_isomorphic(rec.root(), g) {
            return Err(format!("root recovery failed on {}", write_graph6(g)));
        }
        if !are_isomorphic(&line_graph(rec.root()).unwrap().graph, &l) {
            return Err(format!("L(root) differs from input on {}", write_graph6(g)));
        }
    }
    Ok(format!(
        "{} roots recovered with valid Krausz partitions",
        accepted.len()
    ))
}

fn c8_planarity() -> Verdict {
    let mut graphs = 0;
    let mut two_connected = 0;
    for n in 1..=7 {
        for g in connected_graphs_on(n) {
            graphs += 1;
            let oracle = kuratowski_planar(&g);
            match check_planarity(&g).unwrap() {
                Planarity::Planar(e) => {
                    if !oracle || !e.satisfies_euler() {
                        return Err(format!(
                            "planar verdict or Euler failed on {}",
                            write_graph6(&g)
                        ));
                    }
                    if menger_connectivity(&g) >= 2 {
                        two_connected += 1;
                        if region_pair_criterion(&e).unwrap() != g.connectivity_at_least(3) {
                            return Err(format!("region pairs disagree on {}", write_graph6(&g)));
                        }
                    }
                }
                Planarity::NonPlanar(w) => {
                    if oracle || !w.verify(&g) {
                        return Err(format!("non-planar verdict failed on {}", write_graph6(&g)));
                    }
                }
            }
        }
    }
    Ok(format!(
        "{graphs} graphs match the subdivision oracle; {two_connected} 2-connected planar checked"
    ))
}

fn generate(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_linepoly"))
        .args(args)
        .env_remove("LINEPOLY_LIMITS")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} exited with {:?}", out.status.code()));
    }
    Ok(out.stdout)
}

fn c9_formats(corpus: &[Graph]) -> Verdict {
    let mut all: Vec<Graph> = corpus.to_vec();
    all.extend(enumerate_roots(15).unwrap());
    all.extend(enumerate_polytopal_line_graphs(15).unwrap());
    all.extend(bases(16));
    all.extend(
        [4, 6, 8, 10]
            .into_iter()
            .flat_map(cubic_polytopes_by_filter),
    );
    for g in &all {
        if parse_graph6(&write_graph6(g)).as_ref() != Ok(g) {
            return Err(format!("graph6 round trip failed on {g:?}"));
        }
    }
    let mut distinct = BTreeSet::new();
    for what in ["--roots", "--polytopes", "--bases-only"] {
        let mut outputs = Vec::new();
        for jobs in ["1", "2", "4", "1", "3"] {
            outputs.push(generate(&[
                "generate",
                "--max-root-edges",
                "14",
                what,
                "--jobs",
                jobs,
            ])?);
        }
        if outputs.iter().any(|o| *o != outputs[0]) {
            return Err(format!("generate {what} output varies across runs"));
        }
        for line in String::from_utf8(outputs[0].clone()).unwrap().lines() {
            distinct.insert(canonical_code(
                &parse_graph6(line).map_err(|e| e.to_string())?,
            ));
        }
    }
    Ok(format!(
        "{} graphs round-trip; generate byte-identical over 5 runs x 3 modes ({} distinct outputs)",
        all.len(),
        distinct.len()
    ))
}

fn main() {
    let corpus = corpus();
    let accepted = accepted(&corpus);
    let criteria: Vec<Criterion> = vec![
        (
            "1 root classification equals the line-graph oracle",
            Box::new(|| c1_theorem(&corpus)),
        ),
        ("2 exceptional catalog", Box::new(|| c2_catalog(&accepted))),
        ("3 T1/T2 commutation", Box::new(c3_commutation)),
        ("4 medial coincidence", Box::new(c4_medial)),
        ("5 medial-radial duality", Box::new(c5_duality)),
        ("6 generator completeness", Box::new(c6_completeness)),
        ("7 root recovery", Box::new(|| c7_root_recovery(&accepted))),
        ("8 planarity soundness", Box::new(c8_planarity)),
        ("9 format fidelity", Box::new(|| c9_formats(&corpus))),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let t = Instant::now();
        let verdict = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        match verdict {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{:.2?}]", t.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} [{:.2?}]", t.elapsed());
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
