use std::process::{Command, Output};

use fano_core::barycentric::{BkReport, StrictType};
use fano_core::constructions::{make_phk, Refinement, SearchHit};
use fano_core::ehrhart::DualDilationSeries;
use fano_core::mutation::MutationClass;
use fano_core::reference::{ke_quadrilateral, one_third_hexagon, weighted_triangle};
use fano_core::report::AnalysisReport;
use fano_core::{LatticePolygon, Orientation};
use serde_json::Value;

fn fano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano")).args(args).output().expect("spawn fano")
}

fn ok_stdout(args: &[&str]) -> String {
    let out = fano(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn quad() -> String {
    ke_quadrilateral().to_string()
}

#[test]
fn analyze_quadrilateral() {
    let out = ok_stdout(&["analyze", &quad()]);
    let r: AnalysisReport = serde_json::from_str(&out).unwrap();
    assert!(r.fano && r.ke && !r.symmetric);
    assert_eq!(r.aut_order, 1);
    assert_eq!(r.polygon, ke_quadrilateral());
}

#[test]
fn analyze_triangle_weights() {
    let out = ok_stdout(&["analyze", &weighted_triangle().to_string()]);
    let r: AnalysisReport = serde_json::from_str(&out).unwrap();
    let mut w = r.weights.unwrap();
    w.sort();
    assert_eq!(w, vec![3, 7, 13]);
    assert!(!r.ke);
}

#[test]
fn analyze_non_fano_is_reported() {
    let out = ok_stdout(&["analyze", "[[1,0],[0,1],[1,1]]"]);
    let r: AnalysisReport = serde_json::from_str(&out).unwrap();
    assert!(!r.fano);
    assert_eq!(r.minimal, None);
}

#[test]
fn malformed_polygon_exits_2() {
    assert_eq!(fano(&["analyze", "[[1]]"]).status.code(), Some(2));
    assert_eq!(fano(&["analyze", "[[0,0],[1,1],[2,2]]"]).status.code(), Some(2));
    assert_eq!(fano(&["bogus"]).status.code(), Some(2));
}

#[test]
fn polygon_from_file() {
    let dir = std::env::temp_dir().join(format!("fano-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("quad.json");
    std::fs::write(&path, quad()).unwrap();
    let out = ok_stdout(&["analyze", path.to_str().unwrap()]);
    let r: AnalysisReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.polygon, ke_quadrilateral());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn class_of_hexagon() {
    let out = ok_stdout(&["class", &one_third_hexagon().to_string()]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["size"], 1);
    assert_eq!(v["exhausted"], true);
    assert_eq!(v["distinguished"]["symmetric"], 1);
    assert_eq!(v["distinguished"]["ke_triangles"], 0);
    assert_eq!(v["invariants_consistent"], true);
    let class: MutationClass = serde_json::from_value(v["class"].clone()).unwrap();
    assert_eq!(class.len(), 1);
}

#[test]
fn class_of_triangle() {
    let out = ok_stdout(&["class", &weighted_triangle().to_string()]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["size"], 1);
    assert_eq!(v["distinguished"]["symmetric"], 0);
    assert_eq!(v["distinguished"]["ke_triangles"], 0);
}

#[test]
fn class_caps_stop_exploration() {
    let out = ok_stdout(&["class", "[[1,0],[0,1],[-1,-1]]", "--max-polygons", "10", "--max-boundary", "60"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["size"].as_u64().unwrap() >= 2);
    assert_eq!(v["exhausted"], false);
}

#[test]
fn class_requires_fano() {
    assert_eq!(fano(&["class", "[[1,0],[0,1],[1,1]]"]).status.code(), Some(3));
}

#[test]
fn mutate_projective_plane() {
    let out = ok_stdout(&["mutate", "[[1,0],[0,1],[-1,-1]]", "--w", "[-1,2]", "--d", "[2,1]"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let q: LatticePolygon = serde_json::from_value(v["polygon"].clone()).unwrap();
    assert_eq!(q, LatticePolygon::from_coords(&[(-1, -1), (4, 3), (0, 1)]).unwrap());

    let all: Vec<Value> = serde_json::from_str(&ok_stdout(&["mutate", "[[1,0],[0,1],[-1,-1]]"])).unwrap();
    assert_eq!(all.len(), 3);
}

#[test]
fn mutate_rejects_bad_spec() {
    let out = fano(&["mutate", "[[1,0],[0,1],[-1,-1]]", "--w", "[2,4]"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bary_strict_type() {
    let out = ok_stdout(&["bary", &quad(), "--cap", "10"]);
    let r: BkReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.strict_type, StrictType::Exact(2));
    assert_eq!(r.iterates.len(), 4);
}

#[test]
fn phk_valid_and_raw() {
    let p: LatticePolygon = serde_json::from_str(&ok_stdout(&["phk", "2", "5"])).unwrap();
    assert_eq!(p, make_phk(2, 5).unwrap());
    assert_eq!(fano(&["phk", "2", "3"]).status.code(), Some(3));
    let raw: LatticePolygon = serde_json::from_str(&ok_stdout(&["phk", "2", "3", "--raw"])).unwrap();
    assert_eq!(raw, LatticePolygon::from_coords(&[(-6, -1), (-3, -2), (9, -2), (9, -1), (-3, 3), (-6, 3)]).unwrap());
}

#[test]
fn refine_projective_plane() {
    let out = ok_stdout(&["refine", "[[1,0],[0,1],[-1,-1]]", "--k", "9", "--v", "[1,2]"]);
    let r: Refinement = serde_json::from_str(&out).unwrap();
    let t = LatticePolygon::from_coords(&[(-5, 1), (1, -2), (4, 1)]).unwrap();
    assert!(r.fano);
    assert!(r.polygon.is_isomorphic(&t, Orientation::Gl));
}

#[test]
fn ehrhart_series_and_heights() {
    let decagon = fano_core::reference::decagon().to_string();
    let s: DualDilationSeries = serde_json::from_str(&ok_stdout(&["ehrhart", &decagon, "--k-max", "7"])).unwrap();
    assert_eq!(s.counts, vec![1, 1, 1, 1, 1, 3, 3, 5]);
    let v: Value = serde_json::from_str(&ok_stdout(&["ehrhart", &decagon, "--k-max", "7", "--heights"])).unwrap();
    assert_eq!(v["heights"], serde_json::json!([5, 7]));
    assert_eq!(fano(&["ehrhart", "[[1,0],[0,1],[-1,-1]]", "--heights"]).status.code(), Some(3));
}

#[test]
fn search_finds_quadrilateral() {
    let dir = std::env::temp_dir().join(format!("fano-search-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("cfg.json");
    let saved = dir.join("hits.json");
    let body = serde_json::json!({
        "a": [48, 48], "b": [17, 21], "c": [15, 19], "d": [36, 36],
        "l": [1, 1], "m": [-1, -1], "r": [1, 1], "s": [5, 5],
        "output": saved.to_str().unwrap(),
    });
    std::fs::write(&cfg, body.to_string()).unwrap();
    let hits: Vec<SearchHit> = serde_json::from_str(&ok_stdout(&["search-ke", cfg.to_str().unwrap()])).unwrap();
    assert!(hits.iter().any(|h| h.polygon.is_isomorphic(&ke_quadrilateral(), Orientation::Gl)));
    let again: Vec<SearchHit> = serde_json::from_str(&std::fs::read_to_string(&saved).unwrap()).unwrap();
    assert_eq!(again, hits);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn search_config_parse_error() {
    let dir = std::env::temp_dir().join(format!("fano-badcfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("cfg.json");
    std::fs::write(&cfg, "{\"a\": 1}").unwrap();
    assert_eq!(fano(&["search-ke", cfg.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_paper_passes() {
    let out = ok_stdout(&["verify-paper"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), fano_core::reference::fixtures().len());
    assert!(lines.iter().all(|l| l.starts_with("PASS ")), "{out}");
}

#[test]
fn output_is_deterministic() {
    let a = ok_stdout(&["class", "[[1,0],[0,1],[-1,-1]]", "--max-polygons", "20", "--max-boundary", "80"]);
    let b = ok_stdout(&["class", "[[1,0],[0,1],[-1,-1]]", "--max-polygons", "20", "--max-boundary", "80"]);
    assert_eq!(a, b);
}
