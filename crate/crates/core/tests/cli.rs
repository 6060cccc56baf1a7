use serde_json::Value;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn torjet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torjet")).args(args).env_remove("TORJET_CAP_COLUMNS").output().unwrap()
}

fn torjet_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_torjet"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {:?}", out))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn temp_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("torjet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn cube_second_dual() {
    let out = torjet(&["dual-degree", "--k", "2", &data("cube2.json")]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["degree"], 848);
    assert_eq!(v["branch"], "Formula");
    assert_eq!(v["command"], "dual-degree");
    assert!(v["input_digest"].as_str().unwrap().starts_with("sha256:"));
    for variant in ["1", "2"] {
        let out = torjet(&["dual-degree", "--k", "2", "--variant", variant, &data("cube2.json")]);
        assert_eq!(json(&out)["degree"], 848);
    }
}

#[test]
fn spike_is_torus_disjoint() {
    let out = torjet(&["trop-empty", "--k", "2", &data("spike.json")]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["torus_disjoint"], true);
    assert!(v["witness_Q"].is_object());
    let vals = v["witness_values"].as_array().unwrap();
    let nonzero: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] != 0).collect();
    assert_eq!(nonzero, vec![v["index"].as_u64().unwrap() as usize]);
}

#[test]
fn scroll_example() {
    let v = json(&torjet(&["scroll", "--d", "2,2,3", "--k", "2"]));
    assert_eq!((v["dim"].clone(), v["degree"].clone()), (Value::from(4), Value::from(8)));
    let v = json(&torjet(&["scroll", "--d", "2,2,3", "--k", "3"]));
    assert_eq!((v["dim"].clone(), v["degree"].clone()), (Value::from(0), Value::Null));
}

#[test]
fn trop_member_example() {
    let out = torjet(&["trop-member", &data("trop_example.json"), "--witness", "0,0"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["verdict"]["kind"], "in-trop");
    assert_eq!(v["witness_check"], true);
    let v = json(&torjet(&["trop-member", &data("trop_example.json"), "--witness", "10,10"]));
    assert_eq!(v["witness_check"], false);
    let v = json(&torjet(&["trop-member", &data("spike.json"), "--u", "0,0,0,0,0,0,0,0,0,0,0"]));
    assert_eq!(v["verdict"]["kind"], "not-in-trop");
}

#[test]
fn polytope_info_reports_adjoint_data() {
    let v = json(&torjet(&["polytope-info", "--r", "2", &data("cube2.json")]));
    assert_eq!(v["invariants"]["vol"], 48);
    assert_eq!(v["adjoint"]["vol_adj"], 48);
    assert_eq!(v["smooth"], true);
    let v = json(&torjet_stdin(&["polytope-info", "-"], r#"{"vertices": [[0,0,0],[2,0,0],[0,2,0],[0,0,2]]}"#));
    assert_eq!(v["invariants"]["vol"], 8);
    assert_eq!(v["exceptional"]["tag"], "k-simplex");
}

#[test]
fn jet_matrix_and_tsv() {
    let tsv = temp_path("line.tsv");
    let out = torjet(&["jet", "--k", "2", "--cocircuits", "--tsv", tsv.to_str().unwrap(), &data("trop_example.json")]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["rank"], 6);
    assert_eq!(v["expected_dim"], 5);
    assert_eq!(v["kernel"].as_array().unwrap().len(), 4);
    assert!(!v["cocircuits"].as_array().unwrap().is_empty());
    let text = std::fs::read_to_string(&tsv).unwrap();
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn svg_counts_match_the_curve() {
    let path = temp_path("example.svg");
    let out = torjet(&["trop-curve", "--svg", path.to_str().unwrap(), &data("trop_example.json")]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let svg = std::fs::read_to_string(&path).unwrap();
    let edges = v["edges"].as_array().unwrap().len();
    let rays = v["rays"].as_array().unwrap().len();
    assert_eq!(svg.matches(r#"class="edge""#).count(), edges);
    assert_eq!(svg.matches(r#"class="ray""#).count(), rays);
    assert_eq!(v["balanced"], true);

    let line = temp_path("line.svg");
    let out = torjet(&["trop-curve", "--svg", line.to_str().unwrap(), &data("line.json")]);
    assert_eq!(code(&out), 0);
    let svg = std::fs::read_to_string(&line).unwrap();
    assert_eq!(svg.matches(r#"class="ray""#).count(), 3);
}

#[test]
fn output_round_trips_and_is_deterministic() {
    let runs: Vec<Vec<&str>> = vec![
        vec!["dual-degree", "--k", "2", "--deterministic"],
        vec!["trop-member", "--deterministic"],
        vec!["trop-curve", "--deterministic"],
        vec!["jet", "--k", "2", "--cocircuits", "--deterministic"],
    ];
    let files = ["cube2.json", "trop_example.json", "trop_example.json", "trop_example.json"];
    for (args, file) in runs.iter().zip(files) {
        let mut a = args.clone();
        let f = data(file);
        a.push(&f);
        let first = torjet(&a);
        let second = torjet(&a);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        let v = json(&first);
        let printed = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(printed.as_bytes(), first.stdout.as_slice(), "{args:?}");
        assert_eq!(serde_json::from_str::<Value>(&printed).unwrap(), v);
    }
}

#[test]
fn parse_and_io_errors_exit_2() {
    let out = torjet_stdin(&["jet", "--k", "1", "-"], "{\"points\": [[0,0],\n [1,0");
    assert_eq!(code(&out), 2);
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "Parse");
    assert!(v["error"]["message"].as_str().unwrap().contains("line 2"));

    let out = torjet_stdin(&["jet", "--k", "1", "-"], r#"{"points": []}"#);
    assert_eq!(code(&out), 2);

    let out = torjet(&["jet", "--k", "1", "/nonexistent/points.json"]);
    assert_eq!((code(&out), json(&out)["error"]["kind"].clone()), (2, Value::from("Io")));

    let out = torjet(&["trop-curve", "--svg", "/nonexistent/dir/x.svg", &data("line.json")]);
    assert_eq!(code(&out), 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&torjet(&["scroll", "--k", "2"])), 2);
    assert_eq!(code(&torjet(&["no-such-command"])), 2);
    assert_eq!(code(&torjet(&["dual-degree", "--k", "0", &data("cube2.json")])), 2);
    assert_eq!(code(&torjet(&["trop-member", &data("trop_example.json"), "--u", "1,x"])), 2);
    assert_eq!(code(&torjet(&["--help"])), 0);
}

#[test]
fn precondition_errors_exit_1() {
    let octahedron = r#"{"vertices": [[1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]]}"#;
    let out = torjet_stdin(&["dual-degree", "--k", "1", "-"], octahedron);
    assert_eq!((code(&out), json(&out)["error"]["kind"].clone()), (1, Value::from("NotSmooth")));

    let out = torjet(&["dual-degree", "--k", "3", &data("cube2.json")]);
    assert_eq!((code(&out), json(&out)["error"]["kind"].clone()), (1, Value::from("Unsupported")));

    let out = torjet(&["scroll", "--d", "2,2,3", "--k", "9"]);
    assert_eq!((code(&out), json(&out)["error"]["kind"].clone()), (1, Value::from("KOutOfRange")));

    let out = torjet(&["trop-curve", &data("spike.json"), "--u", "0,0,0,0,0,0,0,0,0,0,0"]);
    assert_eq!((code(&out), json(&out)["error"]["kind"].clone()), (1, Value::from("NotPlanar")));

    let out = Command::new(env!("CARGO_BIN_EXE_torjet"))
        .args(["jet", "--k", "2", "--cocircuits", &data("trop_example.json")])
        .env("TORJET_CAP_COLUMNS", "5")
        .output()
        .unwrap();
    assert_eq!((code(&out), json(&out)["error"]["kind"].clone()), (1, Value::from("CapExceeded")));
}

#[test]
fn caps_in_membership_are_inconclusive_not_errors() {
    let out = torjet(&["trop-member", "--cap-columns", "5", &data("trop_example.json")]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["verdict"]["kind"], "inconclusive");
}
