//! Runs the `asnorm` binary as a subprocess and checks exit codes and output bytes.

use std::path::Path;
use std::process::{Command, Output};

fn asnorm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asnorm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(bytes: &[u8]) -> serde_json::Value {
    serde_json::from_slice(bytes).expect("valid JSON")
}

#[test]
fn single_case1_exits_zero() {
    let out = asnorm(&["--p", "7", "--m", "3", "--regime", "CASE1", "--f", "1,0,0,1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json(&out.stdout);
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["verdict"], "PROVEN_NORMAL");
    assert_eq!(doc["curve"]["g"], 6);
    assert_eq!(doc["curve"]["f"], serde_json::json!([1, 0, 0, 1]));
    assert!(out.stdout.ends_with(b"}\n"));
}

#[test]
fn single_case2_exits_zero() {
    let out = asnorm(&["--p", "2", "--k", "2", "--m", "5", "--t", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out.stdout);
    assert_eq!(doc["verdict"], "PROVEN_NORMAL");
    assert_eq!(doc["embedding"]["regime"], "CASE2");
    assert_eq!(doc["embedding"]["l_degree"], 5);
}

#[test]
fn degree_divisible_by_p_exits_two() {
    let out = asnorm(&["--p", "2", "--k", "2", "--m", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("DegreeDivisibleByP"), "{err}");
    assert!(err.contains("--m"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["--mode", "nonsense"][..],
        &["--p", "7", "--m", "3", "--f", "random"],
        &["--p", "6", "--m", "5"],
        &["--p", "7", "--m", "4"],
        &["--mode", "sweep", "--max-q", "128"],
    ] {
        let out = asnorm(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn empty_sweep_prints_empty_array() {
    let out = asnorm(&["--mode", "sweep", "--max-q", "2", "--regime", "CASE1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, b"[]\n");
}

fn sweep_to(path: &Path, format: &str) -> Output {
    asnorm(&[
        "--mode", "sweep", "--max-q", "9", "--t", "2", "--seed", "42", "--format", format,
        "--out", path.to_str().unwrap(),
    ])
}

#[test]
fn sweep_reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for format in ["json", "csv"] {
        let a = dir.path().join(format!("a.{format}"));
        let b = dir.path().join(format!("b.{format}"));
        assert_eq!(sweep_to(&a, format).status.code(), Some(0));
        assert_eq!(sweep_to(&b, format).status.code(), Some(0));
        let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
        assert!(!a.is_empty());
        assert_eq!(a, b, "{format} output differs between runs");
    }
}

#[test]
fn sweep_csv_layout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    assert_eq!(sweep_to(&path, "csv").status.code(), Some(0));
    let text = std::fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "curve_id,p,k,q,m,t,regime,s,rank,target_dim,surjective,verdict"
    );
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut rows = 0;
    for rec in reader.records() {
        let rec = rec.unwrap();
        assert_eq!(rec.len(), 12);
        assert_eq!(&rec[10], "true");
        rows += 1;
    }
    assert!(rows > 20);
}

#[test]
fn sweep_order_is_q_then_m_then_t() {
    let out = asnorm(&["--mode", "sweep", "--max-q", "8", "--n-random", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let docs = json(&out.stdout);
    let keys: Vec<(u64, u64, u64)> = docs
        .as_array()
        .unwrap()
        .iter()
        .map(|d| {
            (
                d["curve"]["q"].as_u64().unwrap(),
                d["curve"]["m"].as_u64().unwrap(),
                d["embedding"]["t"].as_u64().unwrap_or(0),
            )
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(keys.contains(&(8, 7, 0)));
    assert!(keys.contains(&(4, 5, 1)));
}

#[test]
fn witnesses_flag_adds_table() {
    let out = asnorm(&["--p", "7", "--m", "3", "--witnesses"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out.stdout);
    let table = doc["witnesses"].as_array().unwrap();
    assert!(!table.is_empty());
    assert!(table.iter().all(|w| w["s"].as_u64().unwrap() < 3));
    let plain = json(&asnorm(&["--p", "7", "--m", "3"]).stdout);
    assert!(plain.get("witnesses").is_none());
}

#[test]
fn timing_flag_adds_wall_clock() {
    let doc = json(&asnorm(&["--p", "5", "--m", "2", "--timing"]).stdout);
    assert!(doc["timing"]["wall_ms"].is_u64());
    let doc = json(&asnorm(&["--p", "5", "--m", "2"]).stdout);
    assert!(doc["timing"].get("wall_ms").is_none());
    assert!(doc["timing"]["rank_computations"].as_u64().unwrap() >= 1);
}

#[test]
fn pencil_and_quadrics_modes() {
    let out = asnorm(&["--mode", "pencil", "--p", "3", "--m", "2", "--pencil-grid", "2,2,0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out.stdout);
    assert_eq!(doc["all_surjective"], true);
    assert_eq!(doc["grid"].as_array().unwrap().len(), 8 * 2);

    let out = asnorm(&["--mode", "quadrics", "--p", "13", "--m", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out.stdout);
    assert_eq!(doc["quadric"]["kernel_dim"], 3);
    assert_eq!(doc["quadric"]["h0_x_2"], 12);

    let out = asnorm(&["--mode", "quadrics", "--p", "2", "--k", "2", "--m", "5", "--t", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
