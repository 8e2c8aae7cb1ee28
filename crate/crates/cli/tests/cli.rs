use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use snr_core::feasibility::{check_witness, to_linear};
use snr_core::{Rational, SnrParams};
use tempfile::TempDir;

const FIVE_THREE_MINUS_BASIS: &str = "snr 5 3\n000|00 P\n100|01 N\n200|01 P\n321|02 N\n";
const FIVE_THREE_PLUS_BASIS: &str = "snr 5 3\n000|00 P\n000|01 N\n320|02 N\n321|12 P\n";
const SIX_THREE_ROWS: &str = "snr 6 3\n< 100|001\n< 200|002\n< 210|003\n< 300|003\n>= 321|123\n";
const GENERATIVE: &str = "snr 6 2\n>= 21|1234\n>= 10|1234\n";
const UNDETERMINED: &str = "snr 6 2\n>= 21|1234\n< 10|0023\n";

fn snr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snr"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn put(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn run_ok(args: &[&str]) -> String {
    let out = snr(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

#[test]
fn feasible_core_system_reports_a_witness() {
    let dir = TempDir::new().unwrap();
    let basis = put(&dir, "basis.txt", FIVE_THREE_MINUS_BASIS);
    let map = put(
        &dir,
        "map.txt",
        &run_ok(&["span", "--basis", s(&basis), "--family", "wminus"]),
    );
    let core = put(&dir, "core.txt", &run_ok(&["core", "--map", s(&map)]));
    let system_text = run_ok(&["system", "--map", s(&core)]);
    assert_eq!(system_text, "snr 5 3\n< 100|01\n>= 200|01\n< 321|02\n");
    let system = put(&dir, "system.txt", &system_text);

    let out = snr(&["feasible", "--system", s(&system), "--witness"]);
    assert_eq!(out.status.code(), Some(0));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["verdict"], "feasible");
    let witness = json["witness"].as_object().unwrap();
    let values: Vec<Rational> = ["x3", "x2", "x1", "y1", "y2"]
        .iter()
        .map(|k| witness[*k].as_str().unwrap().parse().unwrap())
        .collect();
    let parsed = snr_core::NrSystem::from_rows(
        SnrParams::new(5, 3).unwrap(),
        [("100|01", false), ("200|01", true), ("321|02", false)]
            .iter()
            .map(|(t, geq)| {
                let w = snr_core::SnrString::parse(t, SnrParams::new(5, 3).unwrap()).unwrap();
                let rel = if *geq {
                    snr_core::RowRelation::Geq0
                } else {
                    snr_core::RowRelation::Lt0
                };
                (w, rel)
            }),
    )
    .unwrap();
    assert!(check_witness(&to_linear(&parsed), &values));
}

#[test]
fn infeasible_rows_exit_two() {
    let dir = TempDir::new().unwrap();
    let system = put(&dir, "rows.txt", SIX_THREE_ROWS);
    let out = snr(&["feasible", "--system", s(&system)]);
    assert_eq!(out.status.code(), Some(2));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["verdict"], "infeasible");
    assert!(json.get("witness").is_none());
}

#[test]
fn core_of_a_spanned_map_is_the_basis() {
    let dir = TempDir::new().unwrap();
    for (text, family) in [
        (FIVE_THREE_PLUS_BASIS, "wplus"),
        (FIVE_THREE_MINUS_BASIS, "wminus"),
    ] {
        let basis = put(&dir, "basis.txt", text);
        assert_eq!(
            run_ok(&["basis-check", "--basis", s(&basis), "--family", family]),
            "pass\n"
        );
        let map = put(
            &dir,
            "map.txt",
            &run_ok(&["span", "--basis", s(&basis), "--family", family]),
        );
        assert_eq!(run_ok(&["core", "--map", s(&map)]), text);
    }
}

#[test]
fn basis_check_names_the_axiom() {
    let dir = TempDir::new().unwrap();
    let basis = put(&dir, "basis.txt", FIVE_THREE_MINUS_BASIS);
    let out = snr(&["basis-check", "--basis", s(&basis), "--family", "wplus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).starts_with("fail "));
    let comparable = put(&dir, "cmp.txt", "snr 3 2\n21|0 P\n10|0 P\n");
    let out = snr(&[
        "basis-check",
        "--basis",
        s(&comparable),
        "--family",
        "wplus",
    ]);
    assert_eq!(stdout(&out), "fail antichain(Y+)\n");
}

#[test]
fn system_chi_round_trip() {
    let dir = TempDir::new().unwrap();
    let system = put(&dir, "s.txt", UNDETERMINED);
    let map = put(&dir, "m.txt", &run_ok(&["chi", "--system", s(&system)]));
    let back = run_ok(&["system", "--map", s(&map)]);
    assert_eq!(back, "snr 6 2\n< 10|0023\n>= 21|1234\n");
}

#[test]
fn generativity() {
    let dir = TempDir::new().unwrap();
    let system = put(&dir, "g.txt", GENERATIVE);
    let total = dir.path().join("total.txt");
    let json: Value = serde_json::from_str(&run_ok(&[
        "generative",
        "--system",
        s(&system),
        "--out",
        s(&total),
    ]))
    .unwrap();
    assert_eq!(json["verdict"], "generative");
    assert_eq!(json["rows"], 57);
    let total_text = fs::read_to_string(&total).unwrap();
    assert_eq!(total_text.lines().count(), 58);
    let map = put(&dir, "tm.txt", &run_ok(&["chi", "--system", s(&total)]));
    let class: Value = serde_json::from_str(&run_ok(&["classify", "--map", s(&map)])).unwrap();
    assert_eq!(class["w_plus_nr"], true);
    assert_eq!(class["fc_plus"], true);

    let other = put(&dir, "u.txt", UNDETERMINED);
    let json: Value =
        serde_json::from_str(&run_ok(&["generative", "--system", s(&other)])).unwrap();
    assert_eq!(json["verdict"], "not_generative");
    assert!(json["witness"].as_str().unwrap().contains('|'));
}

#[test]
fn weights_from_a_witness() {
    let dir = TempDir::new().unwrap();
    let system = put(&dir, "g.txt", GENERATIVE);
    let weights = dir.path().join("w.txt");
    run_ok(&[
        "feasible",
        "--system",
        s(&system),
        "--weights-out",
        s(&weights),
    ]);
    let json: Value = serde_json::from_str(&run_ok(&["weights", "--file", s(&weights)])).unwrap();
    assert_eq!(json["class"], "positive");
    assert_eq!(
        json["alpha_plus"].as_u64().unwrap() + json["alpha_minus"].as_u64().unwrap(),
        64
    );
    let decimal = put(&dir, "d.txt", "snr 6 2\ntilde 3 1\nbar -1 -1 -1 -1\n");
    let json: Value = serde_json::from_str(&run_ok(&["weights", "--file", s(&decimal)])).unwrap();
    assert_eq!(json["alpha_plus"], 37);
    assert_eq!(json["total"], "0");
}

#[test]
fn lattice_enumerate_and_scan() {
    let out = run_ok(&["lattice", "--n", "5", "--r", "3"]);
    assert_eq!(out, "elements 32\nmin 000|12\nmax 321|00\n");
    let listed = run_ok(&["lattice", "--n", "3", "--r", "2", "--list"]);
    assert_eq!(listed.lines().count(), 3 + 8);
    let count: usize = run_ok(&[
        "enumerate",
        "--n",
        "4",
        "--r",
        "2",
        "--family",
        "wplus-nr",
        "--count-only",
    ])
    .trim()
    .parse()
    .unwrap();
    let maps = run_ok(&["enumerate", "--n", "4", "--r", "2", "--family", "wplus-nr"]);
    assert_eq!(maps.matches("snr 4 2").count(), count);
    let report: Value = serde_json::from_str(&run_ok(&[
        "conjecture",
        "--n",
        "4",
        "--r",
        "2",
        "--which",
        "q3",
    ]))
    .unwrap();
    assert_eq!(report["which"], "q3");
    assert!(report["fc_count"].as_u64() <= report["family_count"].as_u64());
    let capped = snr(&["enumerate", "--n", "6", "--r", "3", "--family", "wplus"]);
    assert_eq!(capped.status.code(), Some(1));
}

#[test]
fn dot_colours_nodes() {
    let dir = TempDir::new().unwrap();
    let basis = put(&dir, "basis.txt", FIVE_THREE_MINUS_BASIS);
    let out = dir.path().join("core.dot");
    run_ok(&["dot", "--map", s(&basis), "--out", s(&out)]);
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.matches("fillcolor=green").count(), 2);
    assert_eq!(text.matches("fillcolor=red").count(), 2);
    assert_eq!(text.matches("fillcolor=gray").count(), 28);
    let plain = dir.path().join("plain.dot");
    run_ok(&["lattice", "--n", "3", "--r", "2", "--dot", s(&plain)]);
    assert_eq!(
        fs::read_to_string(&plain).unwrap().matches(" -> ").count(),
        10
    );
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let basis = put(&dir, "basis.txt", FIVE_THREE_PLUS_BASIS);
    let a = snr(&["span", "--basis", s(&basis), "--family", "wplus"]);
    let b = snr(&["span", "--basis", s(&basis), "--family", "wplus"]);
    assert_eq!(a.stdout, b.stdout);
    let map = put(&dir, "m.txt", &stdout(&a));
    let c = snr(&["classify", "--map", s(&map)]);
    let d = snr(&["classify", "--map", s(&map)]);
    assert_eq!(c.stdout, d.stdout);
    let keys: Vec<String> = serde_json::from_slice::<Value>(&c.stdout)
        .unwrap()
        .as_object()
        .unwrap()
        .keys()
        .cloned()
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn errors_are_one_line_with_exit_one() {
    let dir = TempDir::new().unwrap();
    let bad = put(&dir, "bad.txt", "snr 5 3\n312|00 P\n");
    let out = snr(&["core", "--map", s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.starts_with("error: line 2"), "{err}");
    let not_weighted = put(&dir, "nw.txt", "snr 3 2\n21|1 P\n");
    assert_eq!(
        snr(&["core", "--map", s(&not_weighted)]).status.code(),
        Some(1)
    );
}
