use std::path::{Path, PathBuf};
use std::process::Command;

use starpack_cli::report::stable_section;
use starpack_core::codec::{decode_planar_code, parse_cycle_factor, parse_star_packing};
use starpack_core::transform::Provenance;

fn starpack(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_starpack")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn field<'a>(report: &'a str, key: &str) -> Option<&'a str> {
    report.lines().find_map(|l| l.strip_prefix(key)?.strip_prefix('='))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data").join(name)
}

#[test]
fn report_layout_and_exit_fields() {
    let (code, report) = starpack(&["verify", "fixture:c20"]);
    assert_eq!(code, 0);
    assert!(report.starts_with("starpack-report v1\ncommand=verify\n"));
    assert_eq!(field(&report, "fullerene"), Some("true"));
    assert_eq!(field(&report, "exit"), Some("0"));
    assert!(stable_section(&report).ends_with("status=ok\nexit=0\n"));
}

#[test]
fn truncated_input_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let bytes = std::fs::read(data("c60_ih.pc")).unwrap();
    let cut = dir.path().join("cut.pc");
    std::fs::write(&cut, &bytes[..100]).unwrap();
    let (code, report) = starpack(&["verify", s(&cut)]);
    assert_eq!(code, 1);
    assert_eq!(field(&report, "reason"), Some("TruncatedStream"));
    assert_eq!(field(&report, "offset"), Some("100"));
    assert!(field(&report, "error").is_some());
}

#[test]
fn non_fullerene_fails_verification() {
    let (code, report) = starpack(&["verify", "fixture:cube"]);
    assert_eq!(code, 2);
    assert_eq!(field(&report, "faces_only_5_6"), Some("fail"));
    assert!(field(&report, "faces_only_5_6.witness").unwrap().starts_with("face "));
}

#[test]
fn exit_codes_of_searches() {
    assert_eq!(starpack(&["pack-stars", "fixture:c20"]).0, 2);
    let (code, report) = starpack(&["pack-stars", s(&data("small_fullerenes.pc")), "--graph", "2"]);
    assert_eq!((code, field(&report, "reason")), (2, Some("Exhausted")));
    assert_eq!(starpack(&["factor56", "fixture:c20"]).0, 2);
    let (code, report) = starpack(&["pseudo", "fixture:c80", "--stars", "1", "--budget", "1,1"]);
    assert_eq!((code, field(&report, "reason")), (3, Some("BudgetExceeded")));
    assert_eq!(starpack(&["pseudo", "fixture:c20", "--stars", "6"]).0, 2);
    let (code, report) = starpack(&["hamilton", "fixture:c20", "--split", "4"]);
    assert_eq!((code, field(&report, "split.paths")), (0, Some("5")));
    assert_eq!(starpack(&["hamilton", "fixture:c20", "--split", "3"]).0, 2);
    assert_eq!(starpack(&["verify", "fixture:c21"]).0, 1);
    assert_eq!(starpack(&["verify", s(&data("small_fullerenes.pc")), "--graph", "6"]).0, 1);
}

#[test]
fn artifacts_pass_between_commands() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name);

    let (code, _) = starpack(&["transform", "chamfer", "fixture:c20", "--out", s(&p("c80.pc"))]);
    assert_eq!(code, 0);
    let (code, report) = starpack(&["pack-stars", s(&p("c80.pc")), "--p0", "--out", s(&p("c80.packing"))]);
    assert_eq!((code, field(&report, "packings")), (0, Some("1")));
    let (n, packing) = parse_star_packing(&std::fs::read_to_string(p("c80.packing")).unwrap()).unwrap();
    assert_eq!((n, packing.len()), (80, 20));

    let (code, report) = starpack(&["classify", s(&p("c80.pc")), s(&p("c80.packing"))]);
    assert_eq!(code, 0);
    assert_eq!(field(&report, "p0"), Some("true"));
    assert_eq!(field(&report, "hexagons_with_2_centers"), Some("30"));

    let (code, report) = starpack(&[
        "transform",
        "star",
        s(&p("c80.pc")),
        "--packing",
        s(&p("c80.packing")),
        "--out",
        s(&p("f.pc")),
        "--provenance",
        s(&p("f.prov")),
    ]);
    assert_eq!((code, field(&report, "output.vertices")), (0, Some("180")));
    let f = decode_planar_code(&std::fs::read(p("f.pc")).unwrap()).unwrap().remove(0);
    let prov = Provenance::parse(&std::fs::read_to_string(p("f.prov")).unwrap()).unwrap();
    assert_eq!(prov.output_fingerprint(), f.fingerprint());

    let (code, report) = starpack(&["factor56", s(&p("f.pc")), "--hint", s(&p("f.prov")), "--out", s(&p("f.cycles"))]);
    assert_eq!((code, field(&report, "c5"), field(&report, "c6")), (0, Some("12"), Some("20")));
    let (code, _) = starpack(&["factor56", s(&p("f.pc")), "--hint", s(&p("f.cycles")), "--budget", "1,1"]);
    assert_eq!(code, 0);
    let (n, factor) = parse_cycle_factor(&std::fs::read_to_string(p("f.cycles")).unwrap()).unwrap();
    assert_eq!((n, factor.cycles.len()), (180, 32));

    let (code, report) = starpack(&["factor56", s(&p("c80.pc")), "--hint", s(&p("f.prov"))]);
    assert_eq!(code, 1);
    assert!(field(&report, "error").unwrap().contains("provenance"));

    let (code, report) = starpack(&["transform", "semistar", s(&p("c80.pc")), "--provenance", s(&p("h.prov"))]);
    assert_eq!((code, field(&report, "output.vertices")), (0, Some("140")));
    assert_eq!(field(&report, "chords"), Some("30"));
}

#[test]
fn transform_without_a_p0_packing() {
    // the star image of C80 has 180 vertices, not a multiple of 8
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.pc");
    starpack(&["transform", "star", "fixture:c80", "--out", s(&f)]);
    let (code, report) = starpack(&["transform", "star", s(&f)]);
    assert_eq!((code, field(&report, "pack.reason")), (2, Some("ModuloReject")));
}

#[test]
fn exports() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("c20.svg");
    assert_eq!(starpack(&["export", "svg", "fixture:c20", "--out", s(&svg)]).0, 0);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));

    let out = Command::new(env!("CARGO_BIN_EXE_starpack"))
        .args(["export", "planarcode", "fixture:c80"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let g = decode_planar_code(&out.stdout).unwrap().remove(0);
    assert_eq!(g.vertex_count(), 80);
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("starpack-report v1"));

    let (code, report) = starpack(&["export", "dot", "fixture:c20", "--out", s(&dir.path().join("c20.dot"))]);
    assert_eq!(code, 0);
    assert!(field(&report, "bytes").is_some());
}

#[test]
fn pipeline_reports_the_chain() {
    let (code, report) = starpack(&["pipeline", "c80"]);
    assert_eq!(code, 0);
    for (key, value) in [
        ("c20.vertices", "20"),
        ("c80.vertices", "80"),
        ("star.vertices", "180"),
        ("semistar.vertices", "140"),
        ("star.factor.c5", "12"),
        ("star.factor.c6", "20"),
        ("semistar.spiders", "20"),
        ("star.pseudo.pairs", "86"),
        ("star.p9.paths", "20"),
        ("star.p3.paths", "60"),
    ] {
        assert_eq!(field(&report, key), Some(value), "{key}");
    }
    assert_eq!(field(&report, "files"), None);
}
