use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crossed-order")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_example_a() {
    let out = run(&["analyze", &fixture("example_a.json"), "--oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("NOT MAXIMAL; hereditary; |H_f|=2; 2 maximal orders"), "{text}");
    assert!(text.contains("2 components (formula) = 2 (oracle): OK"), "{text}");
}

#[test]
fn analyze_json_is_parseable() {
    let out = run(&["analyze", &fixture("example_b.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["maximal"], true);
    assert_eq!(v["maximal_order_count"], 1);
}

#[test]
fn wild_and_non_abelian_verdicts() {
    let t2 = stdout(&run(&["analyze", &fixture("wild_f2t_t2.json")]));
    assert!(t2.contains("NOT HEREDITARY"), "{t2}");
    let t = stdout(&run(&["analyze", &fixture("wild_f2t_t.json")]));
    assert!(t.contains("MAXIMAL; hereditary"), "{t}");
    let s3 = stdout(&run(&["analyze", &fixture("s3_p3.json")]));
    assert!(s3.contains("NOT HEREDITARY"), "{s3}");
}

#[test]
fn seed_choices_do_not_change_the_verdict() {
    let plain = stdout(&run(&["analyze", &fixture("c6_split_p3.json")]));
    let chosen = stdout(&run(&["analyze", &fixture("c6_split_p3.json"), "--seed-choices", "sigma0=a^3"]));
    let verdict = |s: &str| s.lines().find(|l| l.contains("maximal order")).map(str::to_string);
    assert!(verdict(&plain).is_some());
    assert_eq!(verdict(&plain), verdict(&chosen));
    let bad = run(&["analyze", &fixture("c6_split_p3.json"), "--seed-choices", "colour=red"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["validate", &fixture("example_a.json")]).status.code(), Some(0));
    let invalid = run(&["validate", &fixture("invalid_p2.json")]);
    assert_eq!(invalid.status.code(), Some(1));
    assert!(stdout(&invalid).contains("image order not prime to p"));
    assert_eq!(run(&["validate", &fixture("not_equivariant.json")]).status.code(), Some(1));
    assert_eq!(run(&["validate", &fixture("truncated.json")]).status.code(), Some(2));
    assert_eq!(run(&["analyze", &fixture("no_such_file.json")]).status.code(), Some(2));
    assert_eq!(run(&["census", &fixture("census_budget.json")]).status.code(), Some(3));
    assert_eq!(run(&["reduce", &fixture("global_intransitive.json")]).status.code(), Some(1));
}

#[test]
fn census_and_reduce() {
    let census = run(&["census", &fixture("census_f5_cyclic.json")]);
    assert_eq!(census.status.code(), Some(0));
    assert!(stdout(&census).ends_with("total: 8 scenarios; mismatches: 0\n"));
    let reduce = run(&["reduce", &fixture("global_k3_s3.json")]);
    assert_eq!(reduce.status.code(), Some(0));
    let text = stdout(&reduce);
    assert!(text.starts_with("components: 3; decomposition group G_1 = {1, (23)}"), "{text}");
}
