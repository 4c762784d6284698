use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn blocker(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blocker"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn solve(graph: &str, op: &str, pi: &str, k: &str, d: &str) -> Output {
    blocker(&[
        "solve", "--graph", graph, "--op", op, "--pi", pi, "--k", k, "--d", d,
    ])
}

#[test]
fn solve_cycle_contraction() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write(dir.path(), "c6.el", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    let out = solve(&c6, "contract", "alpha", "1", "1");
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["answer"], "yes");
    assert_eq!(r["engine"], "bipartite");
    assert_eq!(r["verification"], "passed");
    assert_eq!(r["witness"]["operation"], "contract");
    assert_eq!(r["witness"]["set"].as_array().unwrap().len(), 1);
    assert_eq!(
        (r["pi_before"].as_u64(), r["pi_after"].as_u64()),
        (Some(3), Some(2))
    );
}

#[test]
fn solve_triangle_is_no() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.el", "3 3\n0 1\n1 2\n0 2\n");
    let out = solve(&k3, "contract", "alpha", "3", "1");
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["answer"], "no");
    assert!(r["witness"].is_null());
}

#[test]
fn solve_star_deletion_removes_a_leaf() {
    let dir = tempfile::tempdir().unwrap();
    let star = write(dir.path(), "star.el", "5 4\n0 1\n0 2\n0 3\n0 4\n");
    let out = solve(&star, "delete", "alpha", "1", "1");
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let set = r["witness"]["set"].as_array().unwrap();
    assert_eq!(set.len(), 1);
    assert_ne!(set[0], 0);
}

#[test]
fn solve_engines_agree_and_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let p5 = write(dir.path(), "p5.el", "5 4\n0 1\n1 2\n2 3\n3 4\n");
    for k in ["0", "1", "2", "3"] {
        let mut answers = Vec::new();
        for engine in ["auto", "brute", "bipartite"] {
            let out = blocker(&[
                "solve", "--graph", &p5, "--op", "contract", "--pi", "alpha", "--k", k, "--d", "2",
                "--engine", engine,
            ]);
            answers.push(report(&out)["answer"].clone());
        }
        assert!(
            answers.iter().all(|a| *a == answers[0]),
            "k={k}: {answers:?}"
        );
    }

    let k3 = write(dir.path(), "k3.el", "3 3\n0 1\n1 2\n0 2\n");
    let out = blocker(&[
        "solve",
        "--graph",
        &k3,
        "--op",
        "contract",
        "--pi",
        "alpha",
        "--k",
        "1",
        "--d",
        "1",
        "--engine",
        "bipartite",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        solve("missing.el", "contract", "alpha", "1", "1")
            .status
            .code(),
        Some(2)
    );
    let bad = write(dir.path(), "bad.el", "2 1\n0 5\n");
    let out = solve(&bad, "contract", "alpha", "1", "1");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let big = write(dir.path(), "big.el", "40 0\n");
    assert_eq!(
        solve(&big, "delete", "omega", "1", "1").status.code(),
        Some(2)
    );
}

#[test]
fn reduce_example_instance() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "example.wp2sat",
        "c w x y z\np wp2sat 4 3 1\n0 1\n1 2\n1 3\n",
    );
    let out_path = dir.path().join("example.el");
    let out = blocker(&[
        "reduce",
        "--from",
        "wp2sat",
        "--to",
        "chordal-contract",
        "--in",
        &input,
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["gadget"]["n"], 19);
    assert_eq!(r["pi"], 5);

    let gadget = out_path.to_str().unwrap();
    let roles: Value =
        serde_json::from_str(&fs::read_to_string(format!("{gadget}.roles.json")).unwrap()).unwrap();
    let roles = roles["roles"].as_array().unwrap();
    assert_eq!(roles.len(), 19);
    assert_eq!(roles[4]["role"], "variable_apex");
    assert_eq!(roles[4]["var"], 1);
    assert_eq!(roles[16]["role"], "clause");

    for op in ["contract", "delete"] {
        let out = solve(gadget, op, "alpha", "1", "1");
        assert_eq!(out.status.code(), Some(0), "{op}");
    }
}

#[test]
fn reduce_apex_and_degenerate_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write(dir.path(), "p3.el", "3 2\n0 1\n1 2\n");
    let out_path = dir.path().join("apex.el");
    let out = blocker(&[
        "reduce",
        "--from",
        "vc",
        "--to",
        "apex-omega",
        "--in",
        &p3,
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        fs::read_to_string(&out_path).unwrap(),
        "4 5\n0 1\n0 3\n1 2\n1 3\n2 3\n"
    );

    let k3 = write(dir.path(), "k3.el", "3 3\n0 1\n1 2\n0 2\n");
    let out = blocker(&[
        "reduce",
        "--from",
        "vc",
        "--to",
        "apex-omega",
        "--in",
        &k3,
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    let k0 = write(dir.path(), "k0.wp2sat", "p wp2sat 2 1 0\n0 1\n");
    let out = blocker(&[
        "reduce",
        "--from",
        "wp2sat",
        "--to",
        "chordal-delete",
        "--in",
        &k0,
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));

    let out = blocker(&[
        "reduce",
        "--from",
        "vc",
        "--to",
        "chordal-contract",
        "--in",
        &p3,
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = blocker(&[
        "reduce",
        "--from",
        "vc",
        "--to",
        "chordal-contract",
        "--in",
        &p3,
        "--out",
        out_path.to_str().unwrap(),
        "--k",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["gadget"]["n"], 2 + 3 * 4);
}

#[test]
fn verify_suites() {
    let out = blocker(&["verify", "--suite", "bipartite-oracle", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["passed"], true);

    let out = blocker(&[
        "verify",
        "--suite",
        "gadget-thm6",
        "--count",
        "200",
        "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["instances"], 200);

    let out = blocker(&["verify", "--suite", "koenig", "--max-n", "10"]);
    assert_eq!(out.status.code(), Some(0));

    assert_eq!(
        blocker(&["verify", "--suite", "everything"]).status.code(),
        Some(2)
    );
    assert_eq!(
        blocker(&["verify", "--suite", "forest-criticality", "--max-n", "9"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn reports_are_reproducible() {
    let strip = |out: Output| {
        let mut r = report(&out);
        r.as_object_mut().unwrap().remove("elapsed_ms");
        r
    };
    let args = [
        "verify",
        "--suite",
        "gadget-thm3",
        "--count",
        "15",
        "--seed",
        "3",
    ];
    assert_eq!(strip(blocker(&args)), strip(blocker(&args)));
}

#[test]
fn gen_examples_and_round_trip() {
    let out = blocker(&["gen", "--family", "cycle", "--n", "6"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "6 6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n"
    );

    let dir = tempfile::tempdir().unwrap();
    for family in [
        "bipartite",
        "tree",
        "chordal",
        "triangle-free",
        "path",
        "star",
    ] {
        let a = blocker(&[
            "gen", "--family", family, "--n", "9", "--seed", "4", "--p", "0.4",
        ]);
        let b = blocker(&[
            "gen", "--family", family, "--n", "9", "--seed", "4", "--p", "0.4",
        ]);
        assert_eq!(a.stdout, b.stdout, "{family}");
        let text = String::from_utf8(a.stdout).unwrap();
        // The output is a valid graph file that the solver accepts.
        let path = write(dir.path(), "g.el", &text);
        let out = solve(&path, "delete", "alpha", "1", "1");
        assert!(matches!(out.status.code(), Some(0 | 1)), "{family}");
    }
    assert_eq!(
        blocker(&["gen", "--family", "cycle", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        blocker(&["gen", "--family", "wheel", "--n", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        blocker(&["gen", "--family", "path", "--n", "5", "--p", "2"])
            .status
            .code(),
        Some(2)
    );
}
