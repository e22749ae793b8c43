//! Command-line front end.
//!
//! Exit codes: 0 success or acceptance, 1 rejection, 2 malformed input or
//! usage, 3 size guard exceeded.

use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::canon::{are_isomorphic, MAX_CANON_ORDER};
use crate::checks::{self, CheckOutcome};
use crate::classifier::{classify_polytope, classify_root, Certificate};
use crate::derived::{line_graph, medial_graph, radial_graph, root_graph, DerivedError};
use crate::generator::{
    enumerate_cubic_polytopes_with, stream_polytopal_line_graphs, stream_roots, EnumerationReport,
    GenError, Limits,
};
use crate::graph::Graph;
use crate::io::{
    parse_edgelist, parse_graph6, write_dot, write_graph6, CertificateJson, FormatError,
};
use crate::named;
use crate::planarity::{dual_graph, embed, is_planar};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "linepoly", version, about = "Line graphs that are 3-polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InFormat {
    G6,
    Edgelist,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutFormat {
    G6,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Side {
    Root,
    Polytope,
}

#[derive(Debug, Args)]
struct Input {
    /// Input file; standard input when absent.
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "g6")]
    format: InFormat,
}

#[derive(Debug, Args)]
struct Transform {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value = "g6")]
    out_format: OutFormat,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Line graph, vertices labelled by their root edges in DOT output.
    Linegraph(Transform),
    /// Medial graph of the unique embedding.
    Medial(Transform),
    /// Radial graph (vertex-face incidence) of a 3-polytope.
    Radial(Transform),
    /// Dual of a 3-polytope.
    Dual(Transform),
    /// Root graph of a line graph.
    Root {
        #[command(flatten)]
        t: Transform,
        /// Print the Krausz clique partition.
        #[arg(long)]
        certificate: bool,
    },
    /// Planarity and connectivity report; exit 0 iff a 3-polytope.
    Check(Input),
    /// Classify a root graph or a candidate polytope; exit 0 iff accepted.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "root")]
        side: Side,
        #[arg(long)]
        json: bool,
    },
    /// Stream enumerated graphs as graph6 lines.
    Generate {
        #[arg(long)]
        max_root_edges: usize,
        #[arg(long, group = "what")]
        bases_only: bool,
        #[arg(long, group = "what")]
        roots: bool,
        #[arg(long, group = "what")]
        polytopes: bool,
        /// Print the per-size count table only.
        #[arg(long)]
        counts: bool,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Generator against the exhaustive oracle, plus the commutation suites.
    Verify {
        #[arg(long)]
        max_edges: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

enum Failure {
    Malformed(String),
    Rejected(String),
    Guard(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Malformed(e.to_string())
    }
}

impl From<GenError> for Failure {
    fn from(e: GenError) -> Self {
        match e {
            GenError::BoundExceeded { .. } => Failure::Guard(e.to_string()),
            GenError::BadLimits(_) => Failure::Malformed(e.to_string()),
            GenError::Transform(_) => Failure::Rejected(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Malformed(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the CLI on `argv` (including the program name), writing to the given
/// streams, and returns the exit code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_MALFORMED
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = dispatch(cli.command, out);
    let _ = out.flush();
    match result {
        Ok(code) => code,
        Err(Failure::Malformed(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_MALFORMED
        }
        Err(Failure::Rejected(m)) => {
            let _ = writeln!(err, "rejected: {m}");
            EXIT_REJECTED
        }
        Err(Failure::Guard(m)) => {
            let _ = writeln!(err, "guard: {m}");
            EXIT_GUARD
        }
    }
}

/// Entry point for the binary: process arguments and standard streams.
pub fn cli_main(argv: &[String]) -> i32 {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    run(argv, &mut out, &mut io::stderr())
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    let mut text = String::new();
    match &input.file {
        Some(p) => text = std::fs::read_to_string(p)?,
        None => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    match input.format {
        InFormat::G6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .unwrap_or("");
            Ok(parse_graph6(line)?)
        }
        InFormat::Edgelist => Ok(parse_edgelist(&text)?),
    }
}

fn emit(
    out: &mut dyn Write,
    g: &Graph,
    format: OutFormat,
    labels: Option<&[String]>,
) -> io::Result<()> {
    match format {
        OutFormat::G6 => writeln!(out, "{}", write_graph6(g)),
        OutFormat::Dot => write!(out, "{}", write_dot(g, labels)),
    }
}

fn thread_pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure::Malformed(e.to_string()))
}

fn base_name(g: &Graph) -> Option<&'static str> {
    [
        ("K4", named::complete(4)),
        ("prism", named::prism()),
        ("cube", named::cube()),
    ]
    .into_iter()
    .find(|(_, h)| g.order() <= MAX_CANON_ORDER && are_isomorphic(g, h))
    .map(|(name, _)| name)
}

fn describe(cert: &Certificate) -> String {
    match cert {
        Certificate::Exceptional { index } => format!("Exceptional J{index}"),
        Certificate::Decorated(d) => {
            let g6 = write_graph6(&d.base);
            let base = match base_name(&d.base) {
                Some(name) => format!("{name} ({g6})"),
                None => g6,
            };
            format!(
                "Decorated base={base} subdivided_edges={:?} pendant_hosts={:?}",
                d.subdivided_edges, d.pendant_hosts
            )
        }
        Certificate::Rejected(r) => format!("Rejected reason={} witness={:?}", r.reason, r.witness),
    }
}

fn write_counts(out: &mut dyn Write, label: &str, report: &EnumerationReport) -> io::Result<()> {
    writeln!(out, "{label}\tcount")?;
    for (size, count) in &report.counts {
        writeln!(out, "{size}\t{count}")?;
    }
    writeln!(out, "total\t{}", report.total())
}

fn report_check(out: &mut dyn Write, c: &CheckOutcome) -> io::Result<bool> {
    let verdict = if c.passed() { "PASS" } else { "FAIL" };
    writeln!(
        out,
        "{verdict} {} ({} cases, {} failures)",
        c.name,
        c.cases,
        c.failures.len()
    )?;
    for f in c.failures.iter().take(10) {
        writeln!(out, "  {f}")?;
    }
    Ok(c.passed())
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Linegraph(t) => {
            let g = read_graph(&t.input)?;
            let l = line_graph(&g).map_err(|e| Failure::Rejected(e.to_string()))?;
            emit(out, &l.graph, t.out_format, Some(&l.labels()))?;
            Ok(EXIT_OK)
        }
        Command::Medial(t) => {
            let g = read_graph(&t.input)?;
            let e = embed(&g).ok_or_else(|| Failure::Rejected("graph is not planar".into()))?;
            let m = medial_graph(&e).map_err(|e| Failure::Rejected(e.to_string()))?;
            emit(out, &m, t.out_format, None)?;
            Ok(EXIT_OK)
        }
        Command::Radial(t) => {
            let g = read_graph(&t.input)?;
            let e = embed(&g).ok_or_else(|| Failure::Rejected("graph is not planar".into()))?;
            let r = radial_graph(&e).map_err(|e| Failure::Rejected(e.to_string()))?;
            emit(out, &r, t.out_format, None)?;
            Ok(EXIT_OK)
        }
        Command::Dual(t) => {
            let g = read_graph(&t.input)?;
            let e = embed(&g).ok_or_else(|| Failure::Rejected("graph is not planar".into()))?;
            let d = dual_graph(&e).map_err(|e| Failure::Rejected(e.to_string()))?;
            emit(out, &d, t.out_format, None)?;
            Ok(EXIT_OK)
        }
        Command::Root { t, certificate } => {
            let p = read_graph(&t.input)?;
            let rec = root_graph(&p).map_err(|e| match e {
                DerivedError::NotLineGraph => Failure::Rejected("not a line graph".into()),
                other => Failure::Rejected(other.to_string()),
            })?;
            emit(out, rec.root(), t.out_format, None)?;
            if certificate {
                for (i, c) in rec.partition.cliques.iter().enumerate() {
                    writeln!(out, "clique {i}: {c:?}")?;
                }
                for (x, e) in rec.partition.root_edge.iter().enumerate() {
                    writeln!(out, "vertex {x} -> root edge {}-{}", e.0, e.1)?;
                }
                if let Some(alt) = &rec.alternative {
                    writeln!(
                        out,
                        "ambiguous: alternative root {}",
                        write_graph6(&alt.root)
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Check(input) => {
            let g = read_graph(&input)?;
            let k = g.connectivity_capped(3);
            let connectivity = if k >= 3 {
                "3+".to_string()
            } else {
                k.to_string()
            };
            let verdict = if !is_planar(&g) {
                "NOT_PLANAR"
            } else if g.order() >= 4 && k >= 3 {
                "POLYTOPE"
            } else {
                "PLANAR_ONLY"
            };
            writeln!(out, "{verdict} connectivity={connectivity}")?;
            Ok(if verdict == "POLYTOPE" {
                EXIT_OK
            } else {
                EXIT_REJECTED
            })
        }
        Command::Classify { input, side, json } => {
            let g = read_graph(&input)?;
            let (cert, root) = match side {
                Side::Root => (classify_root(&g), None),
                Side::Polytope => {
                    if g.order() > MAX_CANON_ORDER {
                        return Err(Failure::Guard(format!(
                            "order {} exceeds the classification limit {MAX_CANON_ORDER}",
                            g.order()
                        )));
                    }
                    let c = classify_polytope(&g);
                    (c.certificate, c.root)
                }
            };
            if let Some(r) = &root {
                writeln!(out, "root={}", write_graph6(r))?;
            }
            writeln!(out, "{}", describe(&cert))?;
            if json {
                writeln!(
                    out,
                    "{}",
                    CertificateJson::new(&cert, root.as_ref()).to_json()
                )?;
            }
            Ok(if cert.is_accepted() {
                EXIT_OK
            } else {
                EXIT_REJECTED
            })
        }
        Command::Generate {
            max_root_edges,
            bases_only,
            roots: _,
            polytopes,
            counts,
            jobs,
        } => {
            let limits = Limits::from_env()?;
            let pool = thread_pool(jobs)?;
            let (label, graphs, report) = pool.install(|| -> Result<_, GenError> {
                let mut graphs = Vec::new();
                if bases_only {
                    let bases = enumerate_cubic_polytopes_with(2 * max_root_edges / 3, &limits)?;
                    let mut report = EnumerationReport {
                        max_edges: max_root_edges,
                        ..Default::default()
                    };
                    for b in &bases {
                        *report.counts.entry(b.order()).or_default() += 1;
                    }
                    return Ok(("vertices", bases, report));
                }
                let sink = |g: &Graph| graphs.push(g.clone());
                if polytopes {
                    let report = stream_polytopal_line_graphs(max_root_edges, &limits, sink)?;
                    Ok(("vertices", graphs, report))
                } else {
                    let report = stream_roots(max_root_edges, &limits, sink)?;
                    Ok(("edges", graphs, report))
                }
            })?;
            if counts {
                write_counts(out, label, &report)?;
            } else {
                for g in &graphs {
                    writeln!(out, "{}", write_graph6(g))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { max_edges, jobs } => {
            let limits = Limits::from_env()?;
            let pool = thread_pool(jobs)?;
            let outcomes = pool.install(|| -> Result<Vec<CheckOutcome>, GenError> {
                let mut outcomes = Vec::new();
                for m in 1..=max_edges {
                    outcomes.push(checks::completeness(m)?);
                }
                let bases =
                    enumerate_cubic_polytopes_with(10.min(limits.max_cubic_vertices), &limits)?;
                outcomes.push(checks::t1_commutation(&bases));
                outcomes.push(checks::t2_commutation(&bases));
                outcomes.push(checks::medial_coincidence(&bases));
                Ok(outcomes)
            })?;
            let mut ok = true;
            for c in &outcomes {
                ok &= report_check(out, c)?;
            }
            Ok(if ok { EXIT_OK } else { EXIT_REJECTED })
        }
    }
}
