use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn data(name: &str) -> String {
    crate_dir().join("data").join(name).display().to_string()
}

fn fixture(name: &str) -> String {
    crate_dir().join("tests/fixtures").join(name).display().to_string()
}

fn smallcover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smallcover")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn assert_same_tree(produced: &Path, golden: &Path) {
    let mut names: Vec<_> = std::fs::read_dir(golden).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    let mut got: Vec<_> = std::fs::read_dir(produced).unwrap().map(|e| e.unwrap().file_name()).collect();
    got.sort();
    assert_eq!(names, got);
    for n in names {
        let a = std::fs::read_to_string(produced.join(&n)).unwrap();
        let b = std::fs::read_to_string(golden.join(&n)).unwrap();
        assert_eq!(a, b, "{}", n.to_string_lossy());
    }
}

#[test]
fn validate_accepts_simplex_with_canonical_lambda() {
    let o = smallcover(&["validate", "--polytope", &data("simplex.json"), "--lambda", &data("simplex.lambda.json")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("valid\n"));
    assert!(out.contains("lambda class=4217 orientable=true"));
}

#[test]
fn validate_reports_star_violation() {
    let o = smallcover(&["validate", "--polytope", &data("simplex.json"), "--lambda", &fixture("star-violation.lambda.json")]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("violation: star-violation vertices=1"));
}

#[test]
fn missing_file_is_an_io_failure() {
    let o = smallcover(&["validate", "--polytope", "/nonexistent/polytope.json"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("violation: io"));
}

#[test]
fn argument_errors_exit_one() {
    assert_eq!(code(&smallcover(&["link", "--polytope", &data("simplex.json")])), 1);
    let o = smallcover(&["link", "--polytope", &data("simplex.json"), "--lambda", "enumerate", "--g", "9"]);
    assert_eq!(code(&o), 1);
    assert_eq!(code(&smallcover(&["--help"])), 0);
}

#[test]
fn analyze_simplex_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let o = smallcover(&[
        "analyze",
        "--polytope",
        &data("simplex.json"),
        "--lambda",
        &data("simplex.lambda.json"),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert_same_tree(dir.path(), &crate_dir().join("tests/golden/simplex-analyze"));
    let report = std::fs::read_to_string(dir.path().join("report.txt")).unwrap();
    assert_eq!(report.matches("k=1 quotient=S³").count(), 3);
    assert!(report.contains("rational_homology_sphere=true"));
}

#[test]
fn analyze_cube_classes() {
    let o = smallcover(&["analyze", "--polytope", &data("cube.json"), "--lambda", &data("cube-torus.lambda.json")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.matches("k=2 quotient=S²×S¹").count(), 3);
    assert!(out.contains("hamiltonian=false") && out.contains("rational_homology_sphere=false"));

    let o = smallcover(&["analyze", "--polytope", &data("cube.json"), "--lambda", &data("cube-mixed.lambda.json")]);
    let out = stdout(&o);
    assert!(out.contains("k=1 quotient=S³") && out.contains("k=2 quotient=S²×S¹"));

    let dir = tempfile::tempdir().unwrap();
    let o = smallcover(&["analyze", "--polytope", &data("cube.json"), "--lambda", "enumerate", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_same_tree(dir.path(), &crate_dir().join("tests/golden/cube-analyze"));
}

#[test]
fn analyze_non_orientable_exits_three() {
    let o = smallcover(&[
        "analyze",
        "--polytope",
        &fixture("triangular-prism.json"),
        "--lambda",
        &fixture("prism-nonorientable.lambda.json"),
    ]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("violation: not-orientable witness="));
}

#[test]
fn link_outputs_match_golden() {
    for (polytope, lambda, g, golden) in [
        ("simplex.json", "simplex.lambda.json", "3", "simplex-link"),
        ("cube.json", "cube-mixed.lambda.json", "5", "cube-link"),
    ] {
        let dir = tempfile::tempdir().unwrap();
        let o = smallcover(&[
            "link",
            "--polytope",
            &data(polytope),
            "--lambda",
            &data(lambda),
            "--g",
            g,
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        assert_same_tree(dir.path(), &crate_dir().join("tests/golden").join(golden));
    }
}

#[test]
fn link_format_selects_one_artifact() {
    let o = smallcover(&[
        "link",
        "--polytope",
        &data("simplex.json"),
        "--lambda",
        &data("simplex.lambda.json"),
        "--format",
        "gauss",
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 2);
    assert!(out.starts_with("component 1: "));
}

#[test]
fn link_rejects_non_hamiltonian_choices() {
    let o = smallcover(&["link", "--polytope", &data("cube.json"), "--lambda", &data("cube-torus.lambda.json")]);
    assert_eq!(code(&o), 4);
    // In the mixed class the involution 6 has two cycles.
    let o = smallcover(&["link", "--polytope", &data("cube.json"), "--lambda", &data("cube-mixed.lambda.json"), "--g", "6"]);
    assert_eq!(code(&o), 4);
    assert!(stderr(&o).contains("k=2"));
    // 7 lies outside the orientation subgroup when xi = 7.
    let o = smallcover(&["link", "--polytope", &data("cube.json"), "--lambda", &data("cube-mixed.lambda.json"), "--g", "7"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn enumerate_simplex_has_one_orientable_class() {
    let o = smallcover(&["enumerate", "--polytope", &data("simplex.json"), "--orientable"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("classes 1 orientable_only=true"));
    let o = smallcover(&["enumerate", "--polytope", &data("cube.json")]);
    assert!(stdout(&o).contains("classes 25 orientable_only=false"));
}

#[test]
fn truncate_simplex_three_times() {
    let o = smallcover(&["truncate", "--polytope", &data("simplex.json"), "0", "1", "2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let p = smallcover::formats::parse_polytope(&text, Path::new("-")).unwrap();
    assert_eq!((p.facet_count(), p.vertex_count(), p.edge_count()), (7, 10, 15));
    let o = smallcover(&["truncate", "--polytope", &data("simplex.json"), "9"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn bundled_truncations_are_reproducible() {
    for (i, seq) in [["0", "0", "0"], ["0", "0", "2"], ["0", "0", "3"]].iter().enumerate() {
        let mut args = vec!["truncate", "--polytope"];
        let simplex = data("simplex.json");
        args.push(&simplex);
        args.extend(seq.iter());
        let o = smallcover(&args);
        let bundled = std::fs::read_to_string(data(&format!("truncated-simplex-{}.json", i + 1))).unwrap();
        assert_eq!(stdout(&o), bundled);
    }
}

#[test]
fn ham2lambda_gives_the_canonical_class() {
    let dir = tempfile::tempdir().unwrap();
    let o = smallcover(&[
        "ham2lambda",
        "--polytope",
        &data("simplex.json"),
        "--cycle",
        "0,1,3,2",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let lambda = dir.path().join("lambda.json");
    let o = smallcover(&["validate", "--polytope", &data("simplex.json"), "--lambda", lambda.to_str().unwrap()]);
    assert!(stdout(&o).contains("class=4217"));

    let o = smallcover(&["ham2lambda", "--polytope", &data("simplex.json"), "--cycle", "0,1,2"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn bundled_examples_analyze() {
    for (p, l) in [
        ("pentagonal-prism.json", "pentagonal-prism.lambda.json"),
        ("truncated-simplex-1.json", "truncated-simplex-1.lambda.json"),
        ("truncated-simplex-2.json", "truncated-simplex-2.lambda.json"),
        ("truncated-simplex-3.json", "truncated-simplex-3.lambda.json"),
    ] {
        let o = smallcover(&["analyze", "--polytope", &data(p), "--lambda", &data(l)]);
        assert_eq!(code(&o), 0, "{p}");
        let o = smallcover(&["link", "--polytope", &data(p), "--lambda", &data(l)]);
        assert_eq!(code(&o), 0, "{p}");
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["link", "--polytope", &data("pentagonal-prism.json"), "--lambda", "enumerate"];
    let a = smallcover(&args);
    let b = smallcover(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}
