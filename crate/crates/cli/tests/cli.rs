use std::process::{Command, Output};

use serde_json::Value;

fn chowlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chowlab"))
        .args(args)
        .env_remove("CHOWLAB_MAX_N")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn chow_of_fano() {
    let out = chowlab(&["chow", "pg:2,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["coeffs"], serde_json::json!([1, 8, 1]));
}

#[test]
fn verify_all_boolean() {
    let out = chowlab(&["verify-all", "boolean:4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let r = &v["reports"][0];
    assert_eq!(r["equality_diagnosis"], "boolean_simplification");
    assert_eq!(r["flag_inequality"]["equality"], true);
    assert_eq!(r["chern"]["inequality"]["equality"], true);
}

#[test]
fn verify_all_keeps_input_order() {
    let specs = ["uniform:3,6", "pg:2,2", "boolean:2", "uniform:1,4"];
    let mut args = vec!["verify-all"];
    args.extend(specs);
    let v = json_of(&chowlab(&args));
    let names: Vec<&str> = v["reports"].as_array().unwrap().iter().map(|r| r["name"].as_str().unwrap()).collect();
    assert_eq!(names, specs);
}

#[test]
fn cone_exit_codes() {
    let out = chowlab(&["cone", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["status"], "certified");
    assert_eq!(v["verified"], true);
    assert_eq!(chowlab(&["cone", "--d", "15"]).status.code(), Some(4));
    assert_eq!(chowlab(&["cone", "--d", "5", "--max-d", "4"]).status.code(), Some(4));
}

#[test]
fn input_errors() {
    let out = chowlab(&["chow", "uniform:3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("column"));
    assert_eq!(chowlab(&["chow"]).status.code(), Some(2));
    assert_eq!(chowlab(&["info", "uniform:3,30"]).status.code(), Some(2));
    assert_eq!(chowlab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn matroid_files() {
    let dir = std::env::temp_dir().join(format!("chowlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("u23.json");
    std::fs::write(&good, r#"{"n": 3, "bases": [[0, 1], [0, 2], [1, 2]]}"#).unwrap();
    let out = chowlab(&["chow", good.to_str().unwrap()]);
    assert_eq!(json_of(&out)["coeffs"], serde_json::json!([1, 1]));

    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"n\": 3,\n \"bases\": [[0, 1],\n [0 2]]}").unwrap();
    let out = chowlab(&["chow", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_flag_and_csv() {
    let path = std::env::temp_dir().join(format!("chowlab-flags-{}.csv", std::process::id()));
    let out = chowlab(&["flags", "pg:2,2", "--csv", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, "mask,J,count\n0,,1\n1,1,7\n2,2,7\n3,1 2,21\n");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn other_subcommands() {
    let v = json_of(&chowlab(&["cmfs", "--order", "4"]));
    assert_eq!(v["h"][2], "1/24");
    let v = json_of(&chowlab(&["perm", "--d", "4"]));
    assert_eq!(v["rows"][2]["ck"], "130");
    assert_eq!(v["h4"]["check"], true);
    let v = json_of(&chowlab(&["sweep", "--dmax", "6", "--tmax", "4"]));
    assert!(v["violations"].as_array().unwrap().is_empty());
    let v = json_of(&chowlab(&["chern", "pg:2,2"]));
    assert_eq!((v["c_d"].clone(), v["c1_cd1"].clone()), (10.into(), 2.into()));
    let v = json_of(&chowlab(&["moments", "uniform:2,4"]));
    assert_eq!(v["all_hold"], true);
    let v = json_of(&chowlab(&["info", "pg:2,3"]));
    assert_eq!(v["flats_by_rank"], serde_json::json!([1, 13, 13, 1]));
}

#[test]
fn deterministic_output() {
    let a = chowlab(&["verify-all", "--corpus"]);
    let b = chowlab(&["verify-all", "--corpus"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
