use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn qtk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtk")).args(args).output().expect("run qtk")
}

fn qtk_stdin(args: &[&str], input: &[u8], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qtk"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn qtk");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(bytes: &[u8]) -> Value {
    serde_json::from_slice(bytes).expect("valid JSON")
}

#[test]
fn present_kite_text() {
    let o = qtk(&["present", "--example", "kite"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let equations = s.lines().filter(|l| l.contains("|z1|^2") || l.contains("|z2|^2")).count();
    assert_eq!(equations, 2, "{s}");
    assert!(s.contains("identity component"));
    assert!(s.contains("component group"));
}

#[test]
fn present_json_has_schema_version() {
    let o = qtk(&["present", "--example", "quasisphere", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o.stdout);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["kind"], "presentation");
    assert_eq!(v["level_rows"].as_array().unwrap().len(), 1);
}

#[test]
fn classify_octahedron_refuses() {
    let o = qtk(&["classify", "--example", "octahedron"]);
    assert_eq!(o.status.code(), Some(2));
    let out = json(&o.stdout);
    assert_eq!(out["kind"], "stratified-by-manifolds");
    let err = json(&o.stderr);
    assert_eq!(err["schema_version"], 1);
    assert_eq!(err["kind"], "refusal");
    assert_eq!(err["classification"]["kind"], "stratified-by-manifolds");
    assert!(err["classification"]["summary"].as_str().unwrap().starts_with("rational but not simple"));
}

#[test]
fn present_icosahedron_refuses() {
    let o = qtk(&["present", "--example", "icosahedron"]);
    assert_eq!(o.status.code(), Some(2));
    let err = json(&o.stderr);
    assert_eq!(err["classification"]["kind"], "stratified-by-quasifolds");
}

#[test]
fn classify_dodecahedron() {
    let o = qtk(&["classify", "--example", "dodecahedron"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o.stdout)["kind"], "quasifold");
}

#[test]
fn every_shipped_example_validates() {
    let dir = tempfile::tempdir().unwrap();
    let list = stdout(&qtk(&["example", "--list"]));
    for name in list.lines() {
        let path = dir.path().join(format!("{name}.json"));
        let o = qtk(&["example", name, "-o", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        let text = std::fs::read_to_string(&path).unwrap();
        if json(text.as_bytes())["kind"] != "triple" {
            continue;
        }
        let o = qtk(&["validate", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&o.stderr));
        let v = json(&o.stdout);
        assert_eq!(v["valid"], true);
        assert_eq!(v["name"], *name);
    }
}

#[test]
fn cut_kite_along_axis() {
    let dir = tempfile::tempdir().unwrap();
    let o = qtk(&["cut", "--axis-of", "kite", "--out-dir", dir.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o.stdout);
    assert_eq!(v["sides"].as_array().unwrap().len(), 2);
    for side in ["plus", "minus"] {
        let t = dir.path().join(format!("kite_{side}.json"));
        assert!(dir.path().join(format!("kite_{side}_presentation.json")).exists());
        let o = qtk(&["present", t.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
}

#[test]
fn cut_with_explicit_hyperplane() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = qtk(&["cut", "--example", "cube", "--normal", "1,0,0", "--lambda", "1/2", "--out-dir", out]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = qtk(&["cut", "--example", "cube", "--normal", "1,0,0", "--lambda", "5", "--out-dir", out]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o.stderr)["reason"], "degenerate cut");
    let o = qtk(&["cut", "--example", "kite", "--normal", "1", "--lambda", "0", "--out-dir", out]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn tile_then_render() {
    let tile = qtk(&["tile", "--type", "p2", "--steps", "4"]);
    assert_eq!(tile.status.code(), Some(0));
    let patch = json(&tile.stdout);
    assert_eq!(patch["schema_version"], 1);
    assert_eq!(patch["depth"], 4);
    let svg = qtk_stdin(&["render"], &tile.stdout, &[]);
    assert_eq!(svg.status.code(), Some(0));
    // acute seed: (1,0) (2,1) (5,3) (13,8) (34,21)
    assert_eq!(stdout(&svg).matches("<polygon").count(), 55);
}

#[test]
fn render_respects_precision() {
    let tile = qtk(&["tile", "--type", "p3", "--steps", "1"]);
    let svg = stdout(&qtk_stdin(&["render"], &tile.stdout, &[("QTK_PRECISION", "3")]));
    let points = svg.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
    for coord in points.split([' ', ',']) {
        assert_eq!(coord.split('.').nth(1).map(str::len), Some(3), "{coord}");
    }
}

#[test]
fn render_pairs_whole_tiles() {
    let tile = qtk(&["tile", "--type", "p3", "--steps", "3", "--whole"]);
    let svg = stdout(&qtk_stdin(&["render", "--pair"], &tile.stdout, &[]));
    assert!(svg.contains("class=\"thick\"") || svg.contains("class=\"thin\""));
}

#[test]
fn render_star() {
    let o = qtk(&["render", "--star"]);
    assert_eq!(stdout(&o).matches("<line").count(), 5);
}

#[test]
fn inflate_too_far_refuses() {
    let tile = qtk(&["tile", "--type", "p2", "--steps", "1"]);
    let o = qtk_stdin(&["render", "--inflate", "2"], &tile.stdout, &[]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o.stderr)["reason"], "cannot inflate");
}

#[test]
fn malformed_input_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let text = stdout(&qtk(&["example", "kite"])).replacen("\"a\": \"-1\"", "\"a\": \"1//2\"", 1);
    std::fs::write(&path, text).unwrap();
    let o = qtk(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("$.polytope.halfspaces["));
}

#[test]
fn report_and_charts() {
    let o = qtk(&["report", "--example", "orbisphere", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o.stdout);
    assert_eq!(v["kind"], "report");
    assert_eq!(v["charts"].as_array().unwrap().len(), 2);
    let o = qtk(&["charts", "--example", "kite"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o.stdout)["charts"].as_array().unwrap().len(), 4);
}

#[test]
fn output_bytes_are_deterministic() {
    let a = qtk(&["report", "--example", "dodecahedron", "--format", "json"]);
    let b = qtk(&["report", "--example", "dodecahedron", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
