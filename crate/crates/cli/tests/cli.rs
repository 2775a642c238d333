use std::path::PathBuf;
use std::process::{Command, Output};

use persalg_core::golden;

fn persalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_persalg")).args(args).output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("persalg-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

const PRESENTATION: &str = r#"{"entries": [["x^2","0","0"],["0","x","y"]]}"#;
const COMPLEX: &str = r#"{"matrices": [{"entries": [["x^2","0","0"],["0","x","y"]]}, {"entries": [["0"],["-y"],["x"]]}]}"#;
const SNAPSHOTS: &str = r#"[
 {"time": 0, "vertices": ["a", "b", "c", "d"], "edges": [{"a": "a", "b": "b", "weight": 0.9}, {"a": "b", "b": "c", "weight": 0.4}]},
 {"time": 1, "vertices": ["a", "b", "c", "d"], "edges": [{"a": "a", "b": "b", "weight": 0.9}, {"a": "b", "b": "c", "weight": 0.8}, {"a": "a", "b": "c", "weight": 0.6}, {"a": "c", "b": "d", "weight": 0.7}]},
 {"time": 2, "vertices": ["a", "b", "c", "d"], "edges": [{"a": "a", "b": "b", "weight": 0.9}, {"a": "b", "b": "c", "weight": 0.8}, {"a": "a", "b": "c", "weight": 0.9}, {"a": "b", "b": "d", "weight": 0.6}]}
]"#;

#[test]
fn generic_matrix_reproduces_the_transcript() {
    let o = persalg(&["generic-matrix", "--vars", "8", "--rows", "2", "--cols", "4"]);
    assert!(o.status.success());
    let case = golden::cases().into_iter().find(|c| c.name == "generic_2x4").unwrap();
    golden::compare(case.expected, &stdout(&o)).unwrap();
    assert_eq!(stdout(&o), "| x_1 x_3 x_5 x_7 |\n| x_2 x_4 x_6 x_8 |\n");
}

#[test]
fn rank_conditions_and_exit_codes() {
    let o = persalg(&["rank-conditions", "--betti", "1,6,8,4,1"]);
    assert_eq!(stdout(&o), "r = 0,1,5,3,1\n");
    let o = persalg(&["rank-conditions", "--betti", "1,3,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("negative rank"));
    assert_eq!(persalg(&["rank-conditions", "--betti", "1,1", "--bogus"]).status.code(), Some(2));
    assert_eq!(persalg(&[]).status.code(), Some(2));
    assert_eq!(persalg(&["rank-conditions", "--betti", "1,1", "--format", "csv"]).status.code(), Some(2));
}

#[test]
fn fitting_and_multipliers_from_files() {
    let d = scratch("fit");
    std::fs::write(d.join("std.json"), PRESENTATION).unwrap();
    std::fs::write(d.join("c.json"), COMPLEX).unwrap();
    let m = d.join("std.json");
    let o = persalg(&["fitting", "--matrix", m.to_str().unwrap(), "--j", "2"]);
    assert_eq!(stdout(&o), "unit ideal\n");
    let o = persalg(&["fitting", "--matrix", m.to_str().unwrap(), "--j", "0"]);
    assert_eq!(stdout(&o), "ideal (x^3, x^2*y)\n");
    let c = d.join("c.json");
    let o = persalg(&["be-multipliers", "--complex", c.to_str().unwrap(), "--ranks", "1,2", "--check"]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("reverse order"));
    assert!(stdout(&o).starts_with("<{1,2}>_1 = x^2\n"));
    assert!(stdout(&o).contains("diagram check: pass"));
    let o = persalg(&["be-multipliers", "--complex", c.to_str().unwrap(), "--ranks", "2,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["levels"][0]["entries"][0]["multiplier"], "x^2");
    std::fs::remove_dir_all(d).unwrap();
}

#[test]
fn algebra_subcommands() {
    let o = persalg(&["minors", "--rows", "2", "--cols", "4", "--k", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);
    let o = persalg(&["extpower", "--rows", "3", "--cols", "3", "--k", "3"]);
    assert_eq!(stdout(&o).lines().count(), 1);
    assert_eq!(stdout(&persalg(&["rank", "--rows", "2", "--cols", "3"])), "rank = 2\n");
    let o = persalg(&["plucker", "--r", "2", "--k", "4"]);
    assert_eq!(stdout(&o), "x_1_4*x_2_3-x_1_3*x_2_4+x_1_2*x_3_4\n");
    let o = persalg(&["straighten", "(2/1 | 1/2)"]);
    assert_eq!(stdout(&o), "(1/2 | 1/2) - (12 | 12)\n");
    let o = persalg(&["hilbert", "--rows", "2", "--cols", "2", "--rank", "1", "--degree", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["groebner"].as_u64(), v["standard"].as_u64()), (Some(16), Some(16)));
    let o = persalg(&["generic-complex", "--betti", "1,2,1", "--catalog"]);
    assert!(stdout(&o).contains("y_1 = D1[1,1]"));
}

#[test]
fn standard_monomials() {
    let o = persalg(&["standard-monomials", "--dims", "2,5,3", "--ranks", "2,3", "--classify", "<2|3>_1<2,3|2,3>_2"]);
    assert!(stdout(&o).ends_with(": standard\n"), "{}", stdout(&o));
    let o = persalg(&["standard-monomials", "--dims", "2,2", "--ranks", "1", "--degree", "2", "--include-max-rank", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 9);
}

#[test]
fn bifiltration_pipeline_is_deterministic() {
    let d = scratch("bif");
    let s = d.join("s.json");
    std::fs::write(&s, SNAPSHOTS).unwrap();
    let o = persalg(&["bifiltration", "build", "--snapshots", s.to_str().unwrap(), "--thresholds", "0.8,0.5"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let b = d.join("b.json");
    std::fs::write(&b, &o.stdout).unwrap();
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_persalg"))
            .env("PERSALG_THREADS", threads)
            .args(["bifiltration", "rank-invariant", "--input", b.to_str().unwrap(), "--format", "csv"])
            .output()
            .unwrap()
            .stdout
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    assert!(String::from_utf8(one).unwrap().starts_with("i,u1,u2,v1,v2,rank\n"));
    let o = persalg(&["bifiltration", "presentation", "--input", b.to_str().unwrap(), "--degree", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!v["generators"].as_array().unwrap().is_empty());
    let o = persalg(&["bifiltration", "presentation", "--input", b.to_str().unwrap(), "--grid", "1,1"]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_dir_all(d).unwrap();
}

#[test]
fn selftest_passes_filters_and_names_corruption() {
    let o = persalg(&["selftest"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = persalg(&["selftest", "--filter", "tableaux"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert!(lines[..lines.len() - 1].iter().all(|l| l.starts_with("ok   tableaux/")));
    assert_eq!(persalg(&["selftest", "--filter", "nonsense"]).status.code(), Some(2));
    let d = scratch("golden");
    for c in golden::cases() {
        std::fs::write(d.join(format!("{}.txt", c.name)), c.expected).unwrap();
    }
    std::fs::write(d.join("product_ab.txt"), "| 0 |").unwrap();
    let o = persalg(&["selftest", "--golden-dir", d.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL polymatrix/golden/product_ab"));
    std::fs::remove_dir_all(d).unwrap();
}
