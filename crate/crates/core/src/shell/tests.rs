use std::path::PathBuf;

use super::*;
use crate::ramification::Choices;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios").join(name)
}

fn text(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

#[test]
fn canonical_files_round_trip() {
    for entry in std::fs::read_dir(fixture("")).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_str().unwrap().to_string();
        if name.starts_with("census") || name == "truncated.json" {
            continue;
        }
        let original = std::fs::read_to_string(&path).unwrap();
        let parsed = AnyScenario::parse(&original).unwrap();
        assert_eq!(parsed.to_canonical_string(), original, "{name}");
    }
}

#[test]
fn rejects_malformed_files() {
    assert!(matches!(AnyScenario::parse(&text("truncated.json")), Err(Error::Parse(_))));
    let extra = text("example_a.json").replacen("\"action\"", "\"colour\": 1,\n  \"action\"", 1);
    assert!(matches!(AnyScenario::parse(&extra), Err(Error::Parse(_))));
    let version = text("example_a.json").replace("crossed-order/1", "crossed-order/9");
    assert!(matches!(AnyScenario::parse(&version), Err(Error::Parse(_))));
    let field = text("example_a.json").replace("\"p\": 5", "\"p\": 5, \"q\": 1");
    assert!(matches!(AnyScenario::parse(&field), Err(Error::Parse(_))));
}

#[test]
fn command_exit_codes() {
    let none = Choices::default();
    assert_eq!(cmd_validate(&fixture("example_a.json"), false).code, 0);
    let bad = cmd_validate(&fixture("invalid_p2.json"), false);
    assert_eq!(bad.code, 1);
    assert!(bad.stdout.contains("image order not prime to p"));
    assert_eq!(cmd_validate(&fixture("truncated.json"), false).code, 2);
    assert_eq!(cmd_validate(&fixture("missing.json"), false).code, 2);
    assert_eq!(cmd_analyze(&fixture("s3_p3.json"), false, false, &none).code, 0);
    assert_eq!(cmd_analyze(&fixture("invalid_p2.json"), false, false, &none).code, 1);
    assert_eq!(cmd_census(&fixture("census_budget.json"), false).code, 3);
    assert_eq!(cmd_reduce(&fixture("global_intransitive.json"), false, &none, None).code, 1);
    assert_eq!(cmd_reduce(&fixture("example_a.json"), false, &none, None).code, 2);
}

#[test]
fn census_examples() {
    let spec = CensusSpec::parse(&text("census_f5_cyclic.json")).unwrap();
    let report = run_census(&spec).unwrap();
    assert_eq!((report.total, report.mismatches), (8, 0));
    let klein = run_census(&CensusSpec::parse(&text("census_f9_klein.json")).unwrap()).unwrap();
    assert_eq!((klein.total, klein.mismatches), (8, 0));
    let empty = cmd_census(&fixture("census_empty.json"), false);
    assert_eq!(empty.code, 0);
    assert!(empty.stdout.contains("total: 0 scenarios"));
}

#[test]
fn reduce_writes_the_local_file() {
    let dir = std::env::temp_dir().join(format!("crossed-order-reduce-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("local.json");
    let r = cmd_reduce(&fixture("global_k2_klein.json"), false, &Choices::default(), Some(&out));
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("decomposition group G_1 = {1, a}"));
    assert!(r.stdout.contains("2 maximal orders"));
    let local = std::fs::read_to_string(&out).unwrap();
    assert_eq!(local, text("example_a.json"));
    std::fs::remove_dir_all(&dir).unwrap();
}
