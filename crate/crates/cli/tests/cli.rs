use std::collections::HashSet;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn coxdiag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxdiag")).args(args).env_remove("COXDIAG_BUDGET").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Minimal structural check of an undirected DOT graph: header, closing brace, and
/// edges only between declared nodes.
fn assert_valid_dot(text: &str) {
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("graph ") && lines[0].ends_with('{'), "{text}");
    assert_eq!(*lines.last().unwrap(), "}");
    let mut nodes = HashSet::new();
    for l in &lines[1..lines.len() - 1] {
        let l = l.trim();
        assert!(l.ends_with("];"), "{l}");
        assert_eq!(l.matches('"').count() % 2, 0, "{l}");
        let head = l.split(" [").next().unwrap();
        match head.split_once(" -- ") {
            Some((a, b)) => assert!(nodes.contains(a) && nodes.contains(b), "{l}"),
            None => {
                nodes.insert(head.to_string());
            }
        }
    }
}

#[test]
fn group_info_reports_order_and_finitary_subsets() {
    let o = coxdiag(&["group", "info", "--system", &data("a3.cox")]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("rank 3\n"));
    assert!(out.contains("order 24\n"));
    assert!(out.contains("finitary {s1,s3} A1xA1\n"));
    assert_eq!(out.matches("finitary ").count(), 7);
}

#[test]
fn word_reduce_deletes_the_square() {
    let o = coxdiag(&["word", "reduce", "--system", &data("a3.cox"), "--word", "s1 s1 s2"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("normal_form s2\nlength 1\n"));
}

#[test]
fn word_equalities() {
    let a2 = data("a2.cox");
    let eq = coxdiag(&["word", "equal", "--system", &a2, "--word", "s t s t", "--word", "t s"]);
    assert!(stdout(&eq).starts_with("equal true\n"));
    let pos = coxdiag(&["word", "positive-equal", "--system", &a2, "--word", "s t s t", "--word", "t s"]);
    assert_eq!(stdout(&pos), "positive_equal false\n");
    let one = coxdiag(&["word", "equal", "--system", &a2, "--word", "s"]);
    assert_eq!(one.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let missing = coxdiag(&["group", "info", "--system", &data("missing_pair.cox")]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(stderr(&missing).contains("pair s,t unspecified"));
    assert_eq!(coxdiag(&["group", "info", "--system", "/nonexistent/x.cox"]).status.code(), Some(1));
    assert_eq!(coxdiag(&["group", "frobnicate", "--system", &data("a3.cox")]).status.code(), Some(2));
    assert_eq!(coxdiag(&["group", "info"]).status.code(), Some(2));
    assert_eq!(coxdiag(&["group", "info", "--system", &data("a3.cox"), "--budget", "12q"]).status.code(), Some(2));
    let unknown = coxdiag(&["word", "reduce", "--system", &data("a3.cox"), "--word", "s9"]);
    assert_eq!(unknown.status.code(), Some(1));
    let infinite = coxdiag(&["group", "enumerate", "--system", &data("affine.cox")]);
    assert_eq!(infinite.status.code(), Some(1));
    assert!(stderr(&infinite).contains("infinite"));
}

#[test]
fn budget_environment_variable() {
    let run = |env: &str| {
        Command::new(env!("CARGO_BIN_EXE_coxdiag"))
            .args(["zam", "generate", "--system", &data("a3.cox"), "--triple", "s1,s2,s3"])
            .env("COXDIAG_BUDGET", env)
            .output()
            .unwrap()
    };
    assert!(run("100000").status.success());
    let tiny = run("3");
    assert_eq!(tiny.status.code(), Some(1));
    assert!(stderr(&tiny).contains("budget"));
    assert_eq!(run("lots").status.code(), Some(2));
}

#[test]
fn zam_generate_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let rel = dir.path().join("a3.zam");
    let a3 = data("a3.cox");
    let o = coxdiag(&["zam", "generate", "--system", &a3, "--triple", "s1,s2,s3", "--seed", "7", "--output", rel.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&rel).unwrap();
    assert!(text.contains("# faces 14\n"));
    let v = coxdiag(&["zam", "verify", "--system", &a3, "--relation", rel.to_str().unwrap()]);
    assert!(v.status.success(), "{}", stderr(&v));
    assert!(stdout(&v).starts_with("verified true\ntype A3\nfaces 14\n"));

    // dropping the last p2 move leaves the hemispheres incomplete
    let mut lines: Vec<&str> = text.lines().collect();
    let last_p2 = lines.iter().rposition(|l| l.starts_with("p2 ")).unwrap();
    lines.remove(last_p2);
    std::fs::write(&rel, lines.join("\n")).unwrap();
    let bad = coxdiag(&["zam", "verify", "--system", &a3, "--relation", rel.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn h3_generation_with_time_budget() {
    let o = coxdiag(&["zam", "generate", "--system", &data("h3.cox"), "--triple", "s1,s2,s3", "--budget", "600s", "--seed", "7"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("# faces 62\n"));
    assert!(out.contains("zam H3\n"));
}

#[test]
fn reports_are_deterministic() {
    let args = ["zam", "generate", "--system", &data("h3.cox"), "--triple", "s1,s2,s3", "--seed", "11"];
    let first = coxdiag(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, coxdiag(&args).stdout);
    let equal = ["diagram", "equal", "--system", &data("a2.cox"), "--diagram", &data("pair.dg"), "--diagram", &data("identity.dg")];
    assert_eq!(coxdiag(&equal).stdout, coxdiag(&equal).stdout);
}

#[test]
fn dot_output() {
    let rex = coxdiag(&["group", "normal-form", "--system", &data("a3.cox"), "--word", "s1 s2 s1 s3 s2 s1", "--emit", "dot"]);
    assert!(rex.status.success());
    let text = stdout(&rex);
    assert_valid_dot(&text);
    assert_eq!(text.matches("label=\"s").count() - text.matches(" -- ").count(), 16);
    let skel = coxdiag(&["complex", "build", "--system", &data("a3.cox"), "--kind", "coxeter", "--emit", "dot"]);
    assert!(skel.status.success());
    assert_valid_dot(&stdout(&skel));
}

#[test]
fn diagram_commands() {
    let a2 = data("a2.cox");
    let eq = coxdiag(&["diagram", "equal", "--system", &a2, "--diagram", &data("pair.dg"), "--diagram", &data("identity.dg")]);
    assert!(eq.status.success());
    assert_eq!(stdout(&eq), "# outcome proven\n# steps 1\ncancel.s.t 0 0 fwd\n");

    let mismatch = coxdiag(&["diagram", "equal", "--system", &a2, "--diagram", &data("pair.dg"), "--diagram", &data("oriented.dg")]);
    assert_eq!(stdout(&mismatch), "outcome boundary-mismatch\n");

    let norm = coxdiag(&["diagram", "normalize", "--system", &a2, "--diagram", &data("oriented.dg")]);
    assert!(stdout(&norm).contains("# slices_after 0\n"));

    let forget = coxdiag(&["diagram", "forget-orientation", "--system", &a2, "--diagram", &data("oriented.dg")]);
    assert_eq!(stdout(&forget), "mode unoriented\ndomain s t\nslice 1 cup s\nslice 0 cap s\n");
    let again = coxdiag(&["diagram", "forget-orientation", "--system", &a2, "--diagram", &data("pair.dg")]);
    assert_eq!(again.status.code(), Some(1));

    let check = coxdiag(&["diagram", "check", "--system", &a2, "--diagram", &data("pair.dg"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&check.stdout).unwrap();
    assert_eq!(v["domain"], "s t s");
    assert_eq!(v["domain_image"], v["codomain_image"]);
}

#[test]
fn complex_commands() {
    let a3 = data("a3.cox");
    let h = coxdiag(&["complex", "homology", "--system", &a3, "--kind", "dual"]);
    assert_eq!(stdout(&h), "counts 24 36 14\neuler 2\nbetti_mod2 1 0 1\n");
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("cx.txt");
    let b = coxdiag(&["complex", "build", "--system", &a3, "--kind", "dual-completed", "--output", dump.to_str().unwrap()]);
    assert!(b.status.success());
    let h2 = coxdiag(&["complex", "homology", "--system", &a3, "--dump", dump.to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&h2.stdout).unwrap();
    assert_eq!(v["betti_mod2"], serde_json::json!([1, 0, 0, 0]));
    let sal = coxdiag(&["complex", "homology", "--system", &a3, "--kind", "salvetti"]);
    assert!(stdout(&sal).contains("incidence_known_through 2\n"));
    let census = coxdiag(&["complex", "census", "--system", &data("a2.cox"), "--pruned"]);
    let out = stdout(&census);
    assert!(out.contains("z 12\nrotation 6\nflip 6\n") && out.contains("kept_z 6\nkept_rotation_flip 5\n"));
}

#[test]
fn install_dump_lists_rules() {
    let o = coxdiag(&["zam", "install-dump", "--system", &data("a3.cox"), "--mode", "oriented"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("# rules 1\n# rule zam.A3.s1-s2-s3\n"));
    assert_eq!(out.matches("mode oriented").count(), 2);
    let none = coxdiag(&["zam", "install-dump", "--system", &data("affine.cox")]);
    assert_eq!(stdout(&none), "rules 0\n");
}
