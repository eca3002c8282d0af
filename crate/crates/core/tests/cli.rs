use std::path::{Path, PathBuf};
use std::process::Command;

use schnyder::cli::run;
use schnyder::format::{parse_graph, parse_orders};
use schnyder::sigma::sigma2;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name]
        .iter()
        .collect();
    p.to_str().unwrap().to_string()
}

fn schnyder(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("schnyder").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write_temp(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn roundtrip_on_octahedron() {
    let (code, out, _) = schnyder(&["roundtrip", &data("octahedron.graph")]);
    assert_eq!(code, 0);
    assert_eq!(out, "graphs equal, 12 edges\n");
}

#[test]
fn check_rep_reports_dominated_pair() {
    let (code, _, err) = schnyder(&["check-rep", &data("dominated.orders")]);
    assert_eq!(code, 1);
    assert!(err.contains("witness (1, 3)"), "{err}");
}

#[test]
fn check_rep_on_valid_orders() {
    let (code, out, err) = schnyder(&["check-rep", &data("k4.orders")]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("apexes a b c"));
    assert!(out.contains("fan of a: c d b"));
    assert_eq!(out.matches(": holds").count(), 6);
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_temp(dir.path(), "bad.orders", "a b c\nb c a\n");
    let (code, _, err) = schnyder(&["sigma2", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("expected 3 order lines"));
    let (code, _, _) = schnyder(&["sigma2", "/nonexistent/file"]);
    assert_eq!(code, 2);
    let bad_graph = write_temp(dir.path(), "bad.graph", "outer a b c\na b c d\n");
    assert_eq!(schnyder(&["realize", &bad_graph]).0, 2);
}

#[test]
fn realize_then_sigma2_reproduces_the_graph() {
    let dir = tempfile::tempdir().unwrap();
    let (code, orders, _) = schnyder(&["realize", "--verify", &data("octahedron.graph")]);
    assert_eq!(code, 0);
    let path = write_temp(dir.path(), "oct.orders", &orders);
    let (code, graph, _) = schnyder(&["sigma2", &path]);
    assert_eq!(code, 0);
    let expected =
        parse_graph(&std::fs::read_to_string(data("octahedron.graph")).unwrap()).unwrap();
    let got = parse_graph(&graph).unwrap();
    let rename = |doc: &schnyder::format::GraphDoc| -> Vec<(String, String)> {
        let mut e: Vec<(String, String)> = doc
            .graph
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (doc.labels.name(u), doc.labels.name(v));
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        e.sort();
        e
    };
    assert_eq!(rename(&got), rename(&expected));
}

#[test]
fn embed_output_reparses_with_rotation() {
    let (code, out, _) = schnyder(&["embed", &data("k4.orders")]);
    assert_eq!(code, 0);
    assert!(out.contains("rotation a: "));
    let doc = parse_graph(&out).unwrap();
    assert!(doc.rotation.is_some());
    assert_eq!(doc.faces.as_ref().unwrap().len(), 4);
    assert_eq!(doc.to_triangulation().unwrap().edge_count(), 6);
}

#[test]
fn sigma3_lists_bounded_faces() {
    let (code, out, _) = schnyder(&["sigma3", &data("k4.orders")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().all(|l| l.split_whitespace().any(|v| v == "d")));
}

#[test]
fn json_outputs_parse_back() {
    let dir = tempfile::tempdir().unwrap();
    let (code, json, _) = schnyder(&["--format", "json", "realize", &data("octahedron.graph")]);
    assert_eq!(code, 0);
    let doc = parse_orders(&json).unwrap();
    let (code, text, _) = schnyder(&["realize", &data("octahedron.graph")]);
    assert_eq!(code, 0);
    assert_eq!(doc, parse_orders(&text).unwrap());

    let path = write_temp(dir.path(), "oct.json", &json);
    let (code, g_json, _) = schnyder(&["--format", "json", "sigma2", &path]);
    assert_eq!(code, 0);
    let (labels, rep) = doc.into_representation().unwrap();
    let parsed = parse_graph(&g_json).unwrap();
    assert_eq!(parsed.labels, labels);
    assert_eq!(parsed.graph, sigma2(&rep));

    let (code, t_json, _) = schnyder(&["--format", "json", "embed", &path]);
    assert_eq!(code, 0);
    let t = parse_graph(&t_json).unwrap().to_triangulation().unwrap();
    assert_eq!(*t.graph(), sigma2(&rep));
}

#[test]
fn dot_output() {
    let (code, out, _) = schnyder(&["--format", "dot", "sigma2", &data("k4.orders")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("graph G {"));
    assert_eq!(out.matches(" -- ").count(), 6);
    assert_eq!(
        schnyder(&["--format", "dot", "realize", &data("octahedron.graph")]).0,
        2
    );
}

#[test]
fn oracle_search_and_gen() {
    let (code, out, _) = schnyder(&["oracle", "search", &data("octahedron.graph")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);
    let (code, _, err) = schnyder(&["oracle", "search", &data("k33.graph")]);
    assert_eq!(code, 1);
    assert!(err.contains("no standard representation"));
    let (code, _, err) = schnyder(&["oracle", "search", "--cap", "5", &data("octahedron.graph")]);
    assert_eq!(code, 2);
    assert!(err.contains("cap"));

    let dir = tempfile::tempdir().unwrap();
    let (code, gen, _) = schnyder(&["oracle", "gen", "--n", "30", "--seed", "11"]);
    assert_eq!(code, 0);
    let path = write_temp(dir.path(), "gen.graph", &gen);
    let (code, out, _) = schnyder(&["roundtrip", &path]);
    assert_eq!(code, 0);
    assert_eq!(out, "graphs equal, 84 edges\n");
}

#[test]
fn non_triangulation_is_a_property_failure() {
    let (code, _, err) = schnyder(&["realize", &data("k33.graph")]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: "));
}

#[test]
fn binary_uses_the_same_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_schnyder");
    let ok = Command::new(bin)
        .args(["roundtrip", &data("octahedron.graph")])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&ok.stdout),
        "graphs equal, 12 edges\n"
    );
    let bad = Command::new(bin)
        .args(["check-rep", &data("dominated.orders")])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let usage = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
