use std::process::{Command, Output};

use shufflesym::cycle_index::{cycle_index, SeriesJson, TruncatedSeries};
use shufflesym::rational::ratio;
use shufflesym::shuffles::{exact_distribution, DistributionJson, PermDistribution, ShuffleSpec};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shufflesym")).args(args).env_remove("SHUFFLESYM_OUT_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_identities_passes() {
    let o = run(&["verify", "--suite", "identities"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cauchy-classic deg4: PASS"));
}

#[test]
fn verify_all_is_deterministic() {
    let args = ["verify", "--suite", "all", "--seed", "7", "--samples", "5000"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_cycle_index_at_five_cards() {
    let o = run(&["verify", "--suite", "cycle-index", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("cycle-type biased-riffle(1/2,1/2) n=5: PASS"));
    assert!(out.contains("reversal invariance typeC(1/2,1/2) order 8: PASS"));
}

#[test]
fn fixed_point_table_as_csv() {
    let o = run(&["table", "--kind", "fixed-points", "--k", "2", "--n", "8", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let closed: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(closed, ["1", "3/2", "7/4", "15/8", "31/16", "63/32", "127/64", "255/128"]);
    assert!(out.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn separation_table_bounds_hold() {
    let o = run(&[
        "table", "--kind", "separation", "--model", "abg", "--alpha", "1/2", "--gamma", "1/2", "--k", "10", "--n", "4",
        "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 11);
    assert!(out.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn configuration_errors_exit_with_two() {
    assert_eq!(run(&["series", "--model", "biased-riffle", "--q", "1/2,1/3"]).status.code(), Some(2));
    assert_eq!(run(&["series", "--model", "biased-riffle", "--order", "13"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["dist", "--model", "biased-riffle", "--k", "10", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn distribution_json_round_trips() {
    let o = run(&["dist", "--model", "typeC", "--y", "1/2,1/2", "--n", "3", "--reversed"]);
    assert_eq!(o.status.code(), Some(0));
    let json: DistributionJson = serde_json::from_str(&stdout(&o)).unwrap();
    let spec = ShuffleSpec::type_c(vec![ratio(1, 2), ratio(1, 2)]).reversed(true);
    assert_eq!(json.spec.as_ref(), Some(&spec));
    assert_eq!(PermDistribution::from_json(&json).unwrap(), exact_distribution(&spec, 3).unwrap());
}

#[test]
fn series_written_to_output_directory() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_shufflesym"))
        .args(["series", "--model", "biased-riffle", "--k", "3", "--reversed", "--order", "5"])
        .env("SHUFFLESYM_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(dir.path().join("series.json")).unwrap();
    let json: SeriesJson = serde_json::from_str(&text).unwrap();
    let expected = cycle_index(&ShuffleSpec::k_riffle(3).reversed(true), 5).unwrap();
    assert_eq!(TruncatedSeries::from_json(&json).unwrap(), expected);
}

#[test]
fn explicit_output_path_and_sampling() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("draws.json");
    let args = ["dist", "--model", "mu", "--mu", "1,2", "--n", "3", "--samples", "3000", "--seed", "9"];
    let mut with_out: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap();
    with_out.extend(["--out", p]);
    assert_eq!(run(&with_out).status.code(), Some(0));
    let first = std::fs::read_to_string(&path).unwrap();
    assert_eq!(run(&with_out).status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["frequencies"].as_object().unwrap().len(), 3);
}

#[test]
fn unimodal_series_uses_t() {
    let o = run(&["series", "--model", "unimodal", "--order", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let json: SeriesJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(json.terms.iter().any(|t| t.n == 3 && t.monomial.get("t") == Some(&2) && t.monomial.get("3") == Some(&1)));
}
