use std::io::Write;
use std::process::{Command, Stdio};

use linepoly::cli::run;

fn cli(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_linepoly"))
        .args(args)
        .env_remove("LINEPOLY_LIMITS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

const K4: &str = "C~\n";
const K5: &str = "D~{\n";
const C5: &str = "Dhc\n";

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], &str, i32)] = &[
        (&["classify", "--side", "root"], K4, 0),
        (&["classify", "--side", "root"], C5, 1),
        (&["classify", "--side", "polytope"], "E}lw\n", 0),
        (&["classify", "--side", "polytope"], K5, 1),
        (&["classify"], "!!\n", 2),
        (&["classify"], "", 2),
        (&["check"], K4, 0),
        (&["check"], K5, 1),
        (&["check"], C5, 1),
        (&["check", "--format", "edgelist"], "3 1\n0 5\n", 2),
        (&["linegraph"], K4, 0),
        (&["linegraph"], "@\n", 1),
        (&["medial"], K4, 0),
        (&["medial"], K5, 1),
        (&["radial"], K4, 0),
        (&["dual"], K4, 0),
        (&["dual"], C5, 1),
        (&["root"], "E}lw\n", 0),
        (&["root"], "Gr`HOk\n", 1),
        (&["generate", "--max-root-edges", "6"], "", 0),
        (&["generate", "--max-root-edges", "99"], "", 3),
        (&["verify", "--max-edges", "12"], "", 3),
        (&["verify", "--max-edges", "6"], "", 0),
        (&["no-such-command"], "", 2),
        (&["generate"], "", 2),
    ];
    for (args, input, code) in cases {
        let (got, _, err) = cli(args, input);
        assert_eq!(got, *code, "{args:?} on {input:?}: {err}");
    }
}

#[test]
fn classify_output() {
    let (code, out, _) = cli(&["classify", "--side", "root", "--json"], K4);
    assert_eq!(code, 0);
    assert!(out.contains("Decorated base=K4"), "{out}");
    assert!(
        out.contains(
            r#"{"verdict":"decorated","base_g6":"C~","subdivided_edges":[],"pendant_hosts":[]}"#
        ),
        "{out}"
    );
    let (_, out, _) = cli(&["classify", "--json"], C5);
    assert!(out.contains(r#""reason":"AdjacentDeg2""#), "{out}");
    let (_, out, _) = cli(&["classify", "--json"], "C}\n");
    assert!(
        out.contains(r#""exception_index":2"#) || out.contains("Exceptional"),
        "{out}"
    );
}

#[test]
fn check_output() {
    assert_eq!(cli(&["check"], K5).1, "NOT_PLANAR connectivity=3+\n");
    assert_eq!(cli(&["check"], K4).1, "POLYTOPE connectivity=3+\n");
    assert_eq!(cli(&["check"], C5).1, "PLANAR_ONLY connectivity=2\n");
}

#[test]
fn transforms_output() {
    let (_, out, _) = cli(&["linegraph", "--out-format", "dot"], K4);
    assert!(out.contains("label=\"01\"") && out.contains("label=\"23\""));
    let (_, out, _) = cli(&["medial"], K4);
    let (_, oct, _) = cli(&["check"], &out);
    assert!(oct.starts_with("POLYTOPE"));
    let (_, out, _) = cli(&["root", "--certificate"], "E}lw\n");
    assert!(out.lines().any(|l| l.starts_with("clique")));
}

#[test]
fn generate_counts_match_oracle() {
    let (code, out, _) = cli(&["generate", "--max-root-edges", "6", "--counts"], "");
    assert_eq!(code, 0);
    assert_eq!(out, "edges\tcount\n4\t1\n5\t1\n6\t3\ntotal\t5\n");
}

#[test]
fn generate_is_byte_stable_across_jobs() {
    for what in ["--roots", "--polytopes", "--bases-only"] {
        let runs: Vec<String> = ["1", "2", "4", "1"]
            .iter()
            .map(|j| {
                cli(
                    &["generate", "--max-root-edges", "13", what, "--jobs", j],
                    "",
                )
                .1
            })
            .collect();
        assert!(!runs[0].is_empty());
        assert!(runs.iter().all(|r| *r == runs[0]), "{what}");
    }
}

#[test]
fn in_process_runner() {
    let argv: Vec<String> = ["linepoly", "generate", "--max-root-edges", "5"]
        .map(String::from)
        .to_vec();
    let mut out = Vec::new();
    let mut err = Vec::new();
    assert_eq!(run(&argv, &mut out, &mut err), 0);
    assert_eq!(String::from_utf8(out).unwrap().lines().count(), 2);
}

#[test]
fn limits_env_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_linepoly"))
        .args(["generate", "--max-root-edges", "6"])
        .env("LINEPOLY_LIMITS", "roots=5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_linepoly"))
        .args(["generate", "--max-root-edges", "6"])
        .env("LINEPOLY_LIMITS", "roots=x")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
