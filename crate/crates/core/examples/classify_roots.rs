//! Classifies a handful of roots and prints their certificates.

use linepoly::classifier::{classify_root, lemma14_report, Certificate};
use linepoly::generator::decorate;
use linepoly::io::CertificateJson;
use linepoly::{named, Graph};

fn main() {
    let decorated = decorate(&named::prism(), &[(0, 1), (3, 4)], &[2, 5]).unwrap();
    let cases: Vec<(&str, Graph)> = vec![
        ("K4", named::complete(4)),
        ("decorated prism", decorated),
        ("diamond", named::diamond()),
        ("K_{2,3}", named::complete_bipartite(2, 3)),
        ("C5", named::cycle(5)),
        ("K_{1,5}", named::star(5)),
        ("K5", named::complete(5)),
        ("K_{3,3}", named::complete_bipartite(3, 3)),
    ];
    for (name, g) in cases {
        let cert = classify_root(&g);
        let verdict = match &cert {
            Certificate::Exceptional { index } => format!("exceptional J{index}"),
            Certificate::Decorated(d) => format!(
                "decorated: base of order {}, {} subdivisions, {} pendants",
                d.base.order(),
                d.subdivided_edges.len(),
                d.pendant_hosts.len()
            ),
            Certificate::Rejected(r) => format!("rejected: {} at {:?}", r.reason, r.witness),
        };
        println!("{name:>16}  {verdict}");
        println!(
            "{:>16}  {}",
            "",
            CertificateJson::new(&cert, None).to_json()
        );
        let report = lemma14_report(&g);
        if !report.all_pass() {
            println!("{:>16}  local structure fails: {report:?}", "");
        }
    }
}
