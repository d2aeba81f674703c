use std::fs;

use cgw::cli::{run, EXIT_NOT_VERIFIED, EXIT_OK};
use cgw_core::catalog::{Catalog, ConfigurationFile};
use cgw_core::tikz::export_tikz;

fn run_ok(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = run(std::iter::once("cgw").chain(args.iter().copied()), &mut out).unwrap();
    (code, String::from_utf8(out).unwrap())
}

const CHAIN: &str = r#"{"n":2,"labels":["a","b"],"circles":[{"label":"a","x":0.2,"y":0.1,"r":0},{"label":"b","x":0,"y":0,"r":1}]}"#;

#[test]
fn enumerate_writes_a_readable_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g4.jsonl");
    let (code, msg) = run_ok(&["enumerate", "-n", "4", "-o", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(msg.contains("34"));
    let back = Catalog::read_jsonl(fs::read(&path).unwrap().as_slice()).unwrap();
    assert_eq!(back, Catalog::build(4).unwrap());
}

#[test]
fn describe_by_id_and_mask() {
    let (_, by_id) = run_ok(&["describe", "--id", "G3-1"]);
    let v: serde_json::Value = serde_json::from_str(&by_id).unwrap();
    assert_eq!(v["family_mask"], 139);
    // {∅, c, bc, abc} is a relabelled chain
    let (_, by_mask) = run_ok(&["describe", "--mask", &(1u32 | 1 << 4 | 1 << 6 | 1 << 7).to_string()]);
    assert_eq!(by_id, by_mask);
    let (_, with_n) = run_ok(&["describe", "--mask", "139", "-n", "3"]);
    assert_eq!(with_n, by_id);
    let mut out = Vec::new();
    assert!(run(["cgw", "describe", "--mask", "139", "-n", "4"], &mut out).is_err());
    assert!(run(["cgw", "describe", "--id", "G3-7"], &mut out).is_err());
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let chain = dir.path().join("chain.json");
    fs::write(&chain, CHAIN).unwrap();
    let path = chain.to_str().unwrap();
    let (code, out) = run_ok(&["verify", "--geometry", "G2-1", "--circles", path]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("\"verified\""));
    let (code, _) = run_ok(&["verify", "--geometry", "G2-1", "--circles", path, "--by-propositions"]);
    assert_eq!(code, EXIT_OK);
    let (code, out) = run_ok(&["verify", "--geometry", "G2-2", "--circles", path]);
    assert_eq!(code, EXIT_NOT_VERIFIED);
    assert!(out.contains("\"failed\""));

    let mut sink = Vec::new();
    let missing = dir.path().join("missing.json");
    assert!(run(["cgw", "verify", "--geometry", "G2-1", "--circles", missing.to_str().unwrap()], &mut sink).is_err());
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{").unwrap();
    assert!(run(["cgw", "verify", "--geometry", "G2-1", "--circles", bad.to_str().unwrap()], &mut sink).is_err());
}

#[test]
fn obstructions_and_search() {
    let (_, out) = run_ok(&["obstructions", "-n", "5"]);
    assert!(out.ends_with("7 of 672 geometries have an obstruction\n"), "{out}");
    assert_eq!(out.lines().filter(|l| l.contains("wedge")).count() + out.lines().filter(|l| l.contains("cascade")).count(), 7);
    let (_, out) = run_ok(&["obstructions", "-n", "4"]);
    assert!(out.starts_with("0 of 34"));

    let (_, out) = run_ok(&["search", "-n", "5", "--cdim", "1"]);
    assert_eq!(out.lines().count(), 1);
    let (_, out) = run_ok(&["search", "-n", "5", "--cdim", "3", "--status", "impossible"]);
    assert!(out.is_empty());
    let (_, out) = run_ok(&["search", "-n", "3", "--iso-to", "209"]);
    assert_eq!(out.trim(), "G3-1");
    let mut sink = Vec::new();
    assert!(run(["cgw", "search", "-n", "5", "--status", "maybe"], &mut sink).is_err());
}

#[test]
fn derive_coatom_from_a_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let fixture = cgw_core::catalog::shipped_fixtures().into_iter().find(|f| f.n == 4).unwrap();
    let from = dir.path().join("rep4.json");
    fs::write(&from, fixture.configuration.to_json()).unwrap();
    // find the record the candidate should land on
    let rep4 = fixture.configuration.to_configuration().unwrap();
    let target = cgw_core::ConvexGeometry::powerset(cgw_core::GroundSet::new(5).unwrap());
    let candidate = cgw_core::derive::derive_representation(&rep4, &target, cgw_core::derive::Strategy::Coatom, 1e-9).unwrap();
    let c5 = Catalog::build(5).unwrap();
    let (record, _) = c5.find_isomorphic(candidate.induced_alignment(1e-9).family).unwrap();

    let out_path = dir.path().join("rep5.json");
    let (code, _) = run_ok(&[
        "derive", "--from", from.to_str().unwrap(), "--target", &record.id, "--strategy", "coatom", "-o", out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let (code, _) = run_ok(&["verify", "--geometry", &record.id, "--circles", out_path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let mut sink = Vec::new();
    assert!(run(["cgw", "derive", "--from", from.to_str().unwrap(), "--target", "G5-1", "--strategy", "triple:a"], &mut sink).is_err());
}

#[test]
fn tikz_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let chain = dir.path().join("chain.json");
    fs::write(&chain, CHAIN).unwrap();
    let (a, b) = (dir.path().join("a.tex"), dir.path().join("b.tex"));
    for out in [&a, &b] {
        let (code, _) = run_ok(&["tikz", "--circles", chain.to_str().unwrap(), "--width", "5", "-o", out.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let conf = ConfigurationFile::from_json(CHAIN).unwrap().to_configuration().unwrap();
    assert_eq!(text, export_tikz(&conf, 5.0));
}

#[test]
fn help_and_bad_arguments() {
    let (code, out) = run_ok(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("enumerate") && out.contains("serve"));
    let mut sink = Vec::new();
    assert!(run(["cgw", "enumerate"], &mut sink).is_err());
    assert!(run(["cgw", "describe"], &mut sink).is_err());
}
