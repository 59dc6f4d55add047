use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arcroute"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn plan_prints_segment_table() {
    let o = run(&["plan", "--from", "O", "--to", "A"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("Total length 471.0372"), "{text}");
    assert_eq!(text.matches("straight line").count(), 2);
    assert_eq!(text.matches("arc about").count(), 1);
}

#[test]
fn plan_accepts_coordinates_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("plan.json");
    let svg = dir.path().join("plan.svg");
    let o = run(&[
        "plan",
        "--from",
        "0,0",
        "--to",
        "100, 700",
        "--out",
        json.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let plan: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert!((plan["length"].as_f64().unwrap() - 853.700125800678).abs() < 1e-6);
    let drawing = std::fs::read_to_string(svg).unwrap();
    assert_eq!(drawing.matches(r#"class="line""#).count(), 6);
    assert_eq!(drawing.matches(r#"class="arc""#).count(), 5);
}

#[test]
fn aco_writes_curve() {
    let dir = tempfile::tempdir().unwrap();
    let curve = dir.path().join("curve.txt");
    let o = run(&["aco", "--seed", "5", "--out", curve.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("chromosome: "));
    let text = std::fs::read_to_string(curve).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 101);
}

#[test]
fn bad_scene_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        "{\n  \"bounds\": [800, 800],\n  \"clearance\": ten\n}\n",
    )
    .unwrap();
    let o = run(&["plan", "--scene", path.to_str().unwrap(), "--to", "A"]);
    assert!(!o.status.success());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3"), "{err}");
    assert!(err.contains("\"clearance\": ten"), "{err}");
}

#[test]
fn infeasible_request_exits_nonzero() {
    let o = run(&["plan", "--to", "400,500"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn enumerate_lists_k_routes() {
    let o = run(&["enumerate", "--to", "B", "--k", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
    assert!(text.starts_with("1  853.7001"));
}

#[test]
fn export_svg_without_route() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("scene.svg");
    let o = run(&["export-svg", "--svg", svg.to_str().unwrap()]);
    assert!(o.status.success());
    let drawing = std::fs::read_to_string(svg).unwrap();
    assert_eq!(drawing.matches(r#"class="obstacle""#).count(), 12);
    assert_eq!(drawing.matches(r#"class="envelope""#).count(), 12);
}

#[test]
fn verify_honours_fixture_override() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_arcroute"))
        .arg("verify")
        .env("ARCROUTE_FIXTURES", dir.path())
        .output()
        .unwrap();
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}
