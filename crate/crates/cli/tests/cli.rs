use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name]
        .iter()
        .collect()
}

fn deflog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deflog"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = deflog(args);
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path(name: &str) -> String {
    data(name).to_str().unwrap().to_string()
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn extensions_counts_and_exit_codes() {
    let (code, out, _) = run(&["extensions", &path("nixon.dfl")]);
    assert_eq!(code, 0);
    assert!(out.ends_with("2 extensions\n"), "{out}");

    let (code, out, _) = run(&["extensions", &path("self_attack.dfl")]);
    assert_eq!(code, 1);
    assert_eq!(out, "0 extensions\n");

    let (code, out, _) = run(&["extensions", &path("empty.dfl")]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "extension 1\n  justified: {}\n  defeated: {}\n1 extension\n"
    );
}

#[test]
fn extensions_full_lists_supported_sentences() {
    let (_, out, _) = run(&["extensions", "--full", &path("testimony.dfl")]);
    assert!(out.contains("  supported: {a, s, a -> s}\n"), "{out}");
    assert!(out.contains("  attacked: {}\n"), "{out}");
}

#[test]
fn justify_verdicts() {
    let (code, out, _) = run(&["justify", &path("reinstatement.dfl"), "p"]);
    assert_eq!(code, 0);
    assert_eq!(out, "JUSTIFIABLE p\n  justified by: {p, r, r -> ~q}\n");

    let (_, out, _) = run(&["justify", &path("mutual.dfl"), "p"]);
    assert!(out.starts_with("AMBIGUOUS p\n"), "{out}");

    let (code, out, _) = run(&["justify", &path("self_attack.dfl"), "p"]);
    assert_eq!(code, 0);
    assert_eq!(out, "UNINTERPRETABLE p\n");

    let (_, out, _) = run(&["justify", &path("reinstatement.dfl"), "q"]);
    assert_eq!(out, "DEFEASIBLE q\n  defeated by: {r, r -> ~q}\n");
}

#[test]
fn verify_theorems_agrees() {
    let (code, out, _) = run(&["verify-theorems", &path("counterexample.dfl")]);
    assert_eq!(code, 0);
    assert!(out.contains("direct enumeration: 0 extensions\n"));
    assert!(out.contains("oracle existence: false\n"));
    assert!(out.ends_with("AGREE\n"));

    let (code, out, _) = run(&["verify-theorems", &path("mutual.dfl")]);
    assert_eq!(code, 0);
    assert!(out.contains("oracle count: 2\n"), "{out}");

    let single = temp_file("p\n");
    let (code, out, _) = run(&["verify-theorems", single.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "direct enumeration: 1 extension\noracle existence: true\noracle count: 1\nAGREE\n"
    );
}

#[test]
fn from_af_matches_stable_semantics() {
    for (file, summary) in [
        ("mutual.apx", "2 stable extensions = 2 extensions: MATCH\n"),
        (
            "self_attack.apx",
            "0 stable extensions = 0 extensions: MATCH\n",
        ),
        ("empty.apx", "1 stable extension = 1 extension: MATCH\n"),
        (
            "reinstatement.af",
            "1 stable extension = 1 extension: MATCH\n",
        ),
    ] {
        let (code, out, _) = run(&["from-af", &path(file)]);
        assert_eq!(code, 0, "{file}");
        assert!(out.ends_with(summary), "{file}: {out}");
    }
}

#[test]
fn from_af_reports_unknown_arguments() {
    let bad = temp_file("arg(a).\natt(a,b).\n");
    let (code, _, err) = run(&["from-af", bad.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(
        err.contains(":2:1: attack references unknown argument `b`"),
        "{err}"
    );
}

#[test]
fn from_defaults() {
    let (code, out, _) = run(&["from-defaults", &path("nixon.dft")]);
    assert_eq!(code, 0);
    assert!(out.contains("  p -> ~(r -> neg_p)\n"), "{out}");
    assert!(out.ends_with("2 extensions\n"));

    let (code, out, _) = run(&["from-defaults", &path("choice.dft")]);
    assert_eq!(code, 0);
    assert!(out.ends_with("2 extensions\n"));

    let blocked = temp_file("true\ntrue : neg_p / p\n");
    let (code, out, _) = run(&["from-defaults", blocked.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.ends_with("0 extensions\n"));
}

#[test]
fn dot_output() {
    let (code, out, _) = run(&["dot", "--annotate", &path("testimony.dfl")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph deflog {"));
    assert!(out.contains("n1 [label=<<B>s</B>>"), "{out}");
    assert!(out.contains("  n0 -> n1;\n"));

    let (_, out, _) = run(&["dot", "--annotate", &path("undercutter.dfl")]);
    assert!(out.contains("<S>a -&gt; s</S>"));
    assert!(out.contains("<I>s</I>"));
    assert!(out.contains("arrowhead=tee"));

    let (code, out, _) = run(&["dot", &path("empty.dfl")]);
    assert_eq!(code, 0);
    assert!(!out.contains("->"));

    let (code, _, err) = run(&["dot", "--annotate", &path("mutual.dfl")]);
    assert_eq!(code, 2);
    assert!(err.contains("exactly one extension, found 2"), "{err}");
}

#[test]
fn parse_errors_exit_with_positions() {
    let bad = temp_file("p\n(q -> \nr &\n");
    let (code, out, err) = run(&["extensions", bad.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert_eq!(err.lines().count(), 2, "{err}");
    let shown = bad.path().display().to_string();
    assert!(err.starts_with(&format!("error: {shown}:2:7: ")), "{err}");
    assert!(err.contains(&format!("error: {shown}:3:3: ")), "{err}");

    let (code, _, err) = run(&["justify", &path("mutual.dfl"), "p ->"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: sentence:"), "{err}");

    let (code, _, _) = run(&["extensions", &path("no_such_file.dfl")]);
    assert_eq!(code, 2);
}

#[test]
fn size_cap_is_a_clean_error() {
    let (code, _, err) = run(&["--max-theory", "4", "extensions", &path("nixon.dfl")]);
    assert_eq!(code, 2);
    assert!(
        err.contains("theory too large: 6 sentences exceeds the limit of 4"),
        "{err}"
    );
}

#[test]
fn json_report() {
    let (code, out, _) = run(&["--json", "justify", &path("reinstatement.dfl"), "p"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "justify");
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
    assert_eq!(v["results"]["verdict"], "JUSTIFIABLE");
    assert_eq!(
        v["results"]["witness_for"],
        serde_json::json!(["p", "r", "r -> ~q"])
    );
    assert!(v.get("elapsed_ms").is_none());

    let (_, out, _) = run(&["--json", "--timing", "verify-theorems", &path("mutual.dfl")]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["elapsed_ms"].is_u64());
    assert_eq!(v["results"]["agree"], true);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["extensions", "--full"],
        vec!["--json", "extensions"],
        vec!["verify-theorems"],
        vec!["dot"],
    ] {
        for file in ["nixon.dfl", "counterexample.dfl", "reinstatement.dfl"] {
            let mut a = args.clone();
            let p = path(file);
            a.push(&p);
            assert_eq!(deflog(&a).stdout, deflog(&a).stdout, "{a:?}");
        }
    }
}
