use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use matchlab::families::FamilySpec;
use matchlab::invariants::{clique_number, matching_number, vertex_cover_number};
use matchlab::{gen_family, read_khg, FamilyKind};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_matchlab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    fs::read_to_string(path).unwrap()
}

fn value(out: &str, key: &str) -> String {
    out.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
        .to_string()
}

#[test]
fn porcelain_goldens() {
    let cases: [(&[&str], &str); 5] = [
        (&["--porcelain", "bounds", "--n", "7", "--k", "3", "--s", "1"], "bounds_7_3_1.txt"),
        (
            &["--porcelain", "count", "--family", "E1", "--n", "70008", "--k", "7", "--s", "10000"],
            "count_e1_large.txt",
        ),
        (
            &["--porcelain", "search", "--n", "7", "--k", "3", "--s", "1", "--nontrivial"],
            "search_7_3_1_nontrivial.txt",
        ),
        (
            &["--porcelain", "verify", "--n", "6", "--k", "2", "--s", "2", "--modes", "plain,shifted"],
            "verify_6_2_2.txt",
        ),
        (&["--porcelain", "crossint", "--n", "5", "--k", "2", "--t", "3", "--oracle"], "crossint_5_2_3.txt"),
    ];
    for (args, file) in cases {
        let o = run(args);
        assert!(o.status.success(), "{args:?}");
        assert_eq!(stdout(&o), golden(file), "{args:?}");
        assert!(o.stderr.is_empty());
    }
}

#[test]
fn gen_writes_the_family() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.khg");
    let o = run(&["--porcelain", "gen", "--family", "E0", "--n", "6", "--k", "3", "--s", "1", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(value(&stdout(&o), "edges"), "10");
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text, golden("e0_6_3_1.khg"));

    let o = run(&["--porcelain", "nu", path.to_str().unwrap()]);
    assert_eq!(value(&stdout(&o), "nu"), "1");
}

#[test]
fn bounds_include_spot_values() {
    let out = stdout(&run(&["--porcelain", "bounds", "--n", "7", "--k", "3", "--s", "1"]));
    assert!(out.lines().any(|l| l == "e1=13"));
    assert!(out.lines().any(|l| l == "stability=13"));
    let out = stdout(&run(&["--porcelain", "bounds", "--n", "9", "--k", "3", "--s", "2"]));
    assert_eq!(value(&out, "hm"), "absent");
}

#[test]
fn large_counts_are_plain_decimals() {
    let out = stdout(&run(&["--porcelain", "count", "--family", "complete", "--n", "1000", "--k", "40"]));
    let count = value(&out, "count");
    assert!(count.len() > 60 && count.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn invariants_round_trip_through_stdin() {
    for (kind, n, k, s) in [
        (FamilyKind::E0, 9, 3, 2),
        (FamilyKind::E1, 8, 2, 3),
        (FamilyKind::B, 9, 3, 2),
        (FamilyKind::A(2), 10, 3, 2),
    ] {
        let spec = FamilySpec::new(kind, n, k, s);
        let name = match kind {
            FamilyKind::A(i) => format!("A{i}"),
            other => format!("{other:?}"),
        };
        let (n_s, k_s, s_s) = (n.to_string(), k.to_string(), s.to_string());
        let o = run(&["gen", "--family", &name, "--n", &n_s, "--k", &k_s, "--s", &s_s]);
        assert!(o.status.success(), "{spec}");
        let text = stdout(&o);
        let f = read_khg(&text).unwrap();
        assert_eq!(f, gen_family(&spec).unwrap());
        for (verb, want) in [
            ("nu", matching_number(&f).unwrap().value),
            ("tau", vertex_cover_number(&f).unwrap().value),
            ("omega", clique_number(&f).unwrap().value),
        ] {
            let o = run_stdin(&["--porcelain", verb, "-"], &text);
            assert!(o.status.success());
            assert_eq!(value(&stdout(&o), verb), want.to_string(), "{verb} of {spec}");
        }
    }
}

#[test]
fn shifting_verbs() {
    let two = "khg 1\nn=4 k=2\n1 2\n3 4\n";
    let o = run_stdin(&["--porcelain", "shiftproc", "-"], two);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(value(&out, "outcome"), "blocked");
    assert_eq!(value(&out, "pair_link"), "0");
    assert_eq!(value(&out, "cross_links"), "2");
    assert_eq!(value(&out, "limit"), "2");

    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("t.txt");
    let o = run_stdin(&["closure", "-", "--trace", trace.to_str().unwrap()], two);
    assert_eq!(stdout(&o), "khg 1\nn=4 k=2\n1 2\n1 3\n");
    assert_eq!(
        fs::read_to_string(&trace).unwrap(),
        "1 3 moved=1 pot 4->6 perm=id\n3 4 moved=1 pot 6->6 perm=id\n"
    );

    let o = run_stdin(&["shift", "-", "--x", "1", "--y", "3"], two);
    assert_eq!(stdout(&o), "khg 1\nn=4 k=2\n1 2\n1 4\n");
    let o = run_stdin(&["shift", "-", "--x", "3", "--y", "1"], two);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn saturate_verb() {
    let o = run_stdin(&["saturate", "-", "--s", "1"], "khg 1\nn=4 k=2\n");
    assert_eq!(stdout(&o), "khg 1\nn=4 k=2\n1 2\n1 3\n1 4\n");
    let o = run_stdin(&["saturate", "-", "--s", "1"], "khg 1\nn=4 k=2\n1 2\n3 4\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr).unwrap().starts_with("error: "));
}

#[test]
fn crossint_check() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.khg");
    let b = dir.path().join("b.khg");
    fs::write(&a, "khg 1\nn=4 k=2\n1 2\n").unwrap();
    fs::write(&b, "khg 1\nn=4 k=2\n1 3\n3 4\n").unwrap();
    let out = stdout(&run(&["--porcelain", "crossint", a.to_str().unwrap(), b.to_str().unwrap()]));
    assert_eq!(value(&out, "cross_intersecting"), "false");
    assert_eq!(value(&out, "set_a"), "1 2");
    assert_eq!(value(&out, "set_b"), "3 4");

    let c = dir.path().join("c.khg");
    fs::write(&c, "khg 1\nn=5 k=2\n1 2\n").unwrap();
    let o = run(&["crossint", a.to_str().unwrap(), c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn search_writes_certificate_files() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("best");
    let o = run(&["--porcelain", "search", "--n", "6", "--k", "3", "--s", "1", "-o", prefix.to_str().unwrap()]);
    assert!(o.status.success());
    let cert = fs::read_to_string(prefix.with_extension("cert")).unwrap();
    assert!(cert.starts_with("problem=n=6,k=3,s=1,nontrivial=false,shifted=false\nbest=10\nexhaustive=true\n"));
    let f = read_khg(&fs::read_to_string(prefix.with_extension("khg")).unwrap()).unwrap();
    assert_eq!(f.len(), 10);
}

#[test]
fn thread_count_does_not_change_results() {
    let args = |t: &'static str| {
        vec!["--porcelain", "--threads", t, "search", "--n", "9", "--k", "3", "--s", "2", "--shifted"]
    };
    let one = stdout(&run(&args("1")));
    let eight = stdout(&run(&args("8")));
    assert_eq!(one, eight);
}

#[test]
fn exit_codes() {
    // Domain error.
    let o = run(&["gen", "--family", "E0", "--n", "4", "--k", "3", "--s", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    // Unknown flag and unknown verb.
    assert_eq!(run(&["nu", "--frobnicate", "x"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    // Malformed input.
    let o = run_stdin(&["nu", "-"], "khg 1\nn=4 k=2\n2 1\n");
    assert_eq!(o.status.code(), Some(1));
    // Budget exhaustion.
    let o = run_stdin(&["--budget", "1", "nu", "-"], "khg 1\nn=4 k=2\n1 2\n1 3\n2 4\n");
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["--porcelain", "--budget", "5", "search", "--n", "8", "--k", "2", "--s", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(value(&stdout(&o), "exhaustive"), "false");
    // Help and version.
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}
