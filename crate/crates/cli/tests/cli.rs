use std::fs;
use std::path::Path;

use lrcert_cli::run;

fn lrcert(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("lrcert").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn zoo_dir() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, err) = lrcert(&["zoo", "--modules", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    dir
}

fn path(dir: &Path, f: &str) -> String {
    dir.join(f).to_string_lossy().into_owned()
}

#[test]
fn certify_c2_passes_every_suite() {
    let dir = zoo_dir();
    let (code, out, _) = lrcert(&["certify", &path(dir.path(), "qc2.hsc")]);
    assert_eq!(code, 0);
    for suite in ["hopf", "lr/trivial", "F/from_double_regular", "roundtrip/", "monoidal/", "transport/", "braid/", "double/"] {
        assert!(out.lines().any(|l| l.starts_with(suite) && l.contains("\tPASS\t")), "{suite} missing");
    }
    assert!(!out.contains("\tFAIL\t"));
    assert!(out.ends_with("overall\tverdict\tPASS\t0 of 426 failed\n"));
}

#[test]
fn output_is_deterministic_and_out_flag_writes_file() {
    let dir = zoo_dir();
    let alg = path(dir.path(), "sweedler.hsc");
    let (_, a, _) = lrcert(&["certify", &alg]);
    let target = path(dir.path(), "summary.txt");
    let (code, b, _) = lrcert(&["certify", &alg, "--out", &target]);
    assert_eq!(code, 0);
    assert!(b.is_empty());
    assert_eq!(fs::read_to_string(target).unwrap(), a);
}

#[test]
fn mutated_and_malformed_inputs() {
    let dir = zoo_dir();
    let good = fs::read_to_string(dir.path().join("qc2.hsc")).unwrap();
    fs::write(dir.path().join("bad.hsc"), good.replacen("1 1 0 1\n", "1 1 0 2\n", 1)).unwrap();
    let (code, out, _) = lrcert(&["certify", &path(dir.path(), "bad.hsc")]);
    assert_eq!(code, 1);
    assert!(out.lines().any(|l| l.starts_with("hopf\t") && l.contains("\tFAIL\t")), "{out}");
    assert!(out.contains("overall\tverdict\tFAIL"));

    fs::write(dir.path().join("bad.hsc"), good.replace("dim 2", "dim 2\ndim 2")).unwrap();
    let (code, _, err) = lrcert(&["certify", &path(dir.path(), "bad.hsc")]);
    assert_eq!(code, 2);
    assert!(err.contains("line"), "{err}");
    for text in ["", "hsc 2 algebra\n", "hsc 1 algebra\nfield GF 6\n", "\u{0}\u{ff}"] {
        fs::write(dir.path().join("bad.hsc"), text).unwrap();
        assert_eq!(lrcert(&["validate", &path(dir.path(), "bad.hsc")]).0, 2, "{text:?}");
    }
    assert_eq!(lrcert(&["certify", &path(dir.path(), "missing.hsc")]).0, 2);
    assert_eq!(lrcert(&["frobnicate"]).0, 2);
    assert_eq!(lrcert(&[]).0, 2);
}

#[test]
fn pseudosym_is_a_determination() {
    let dir = zoo_dir();
    let (code, out, _) = lrcert(&["pseudosym", &path(dir.path(), "sweedler.hsc")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("criterion=false"));
    assert!(out.contains("equation=fails\tPASS\tcounterexample ("));
    let (code, out, _) = lrcert(&["pseudosym", &path(dir.path(), "gf7c3.hsc")]);
    assert_eq!(code, 0);
    assert!(out.contains("criterion=true") && out.contains("equation=holds"));
}

#[test]
fn map_f_and_map_g_round_trip_through_files() {
    let dir = zoo_dir();
    let d = dir.path();
    let f = path(d, "fm.hsc");
    assert_eq!(lrcert(&["map-f", &path(d, "sweedler.right_adjoint.hsc"), "--out", &f]).0, 0);
    assert!(fs::read_to_string(&f).unwrap().contains("base tensor_with_dual"));
    assert_eq!(lrcert(&["yd-check", &f]).0, 0);
    let g = path(d, "gfm.hsc");
    assert_eq!(lrcert(&["map-g", &f, "--out", &g]).0, 0);
    assert_eq!(fs::read_to_string(g).unwrap(), fs::read_to_string(d.join("sweedler.right_adjoint.hsc")).unwrap());
    let (code, out, _) = lrcert(&["roundtrip", &path(d, "sweedler.right_adjoint.hsc"), &f]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn map_f_refuses_a_non_lr_input() {
    let dir = zoo_dir();
    let d = dir.path();
    // left regular action and coaction: a bimodule and bicomodule, not LR
    let m = "hsc 1 module lr\nfield Q\nalgdim 2\ndim 2\nalgebra qc2.hsc\n\
             LACT\n0 0 0 1\n0 1 1 1\n1 0 1 1\n1 1 0 1\nRACT\n0 0 0 1\n0 1 1 1\n1 0 0 1\n1 1 1 1\n\
             LCOACT\n0 0 0 1\n1 1 1 1\nRCOACT\n0 0 0 1\n1 1 0 1\n";
    fs::write(d.join("bad.lr.hsc"), m).unwrap();
    let (code, out, _) = lrcert(&["map-f", &path(d, "bad.lr.hsc")]);
    assert_eq!(code, 1, "{out}");
    assert!(out.lines().any(|l| l.starts_with("lr\t") && l.contains("\tFAIL\t")), "{out}");
}

#[test]
fn algebra_reference_by_digest() {
    let dir = zoo_dir();
    let d = dir.path();
    let alg = fs::read_to_string(d.join("sweedler.hsc")).unwrap();
    let digest = lrcert_cli::hsc::digest_text(&alg);
    let m = fs::read_to_string(d.join("sweedler.left_adjoint.hsc")).unwrap();
    fs::write(d.join("m.hsc"), m.replace("algebra sweedler.hsc", &format!("algebra {digest}"))).unwrap();
    assert_eq!(lrcert(&["lr-check", &path(d, "m.hsc")]).0, 0);
    fs::write(d.join("m.hsc"), m.replace("algebra sweedler.hsc", "algebra sha256:00")).unwrap();
    assert_eq!(lrcert(&["lr-check", &path(d, "m.hsc")]).0, 2);
}

#[test]
fn map_g_needs_a_tensor_square_base() {
    let dir = zoo_dir();
    let d = dir.path();
    let y = "hsc 1 module yd\nfield Q\nalgdim 2\ndim 1\nalgebra qc2.hsc\nACT\n0 0 0 1\n1 0 0 1\nCOACT\n0 0 0 1\n";
    fs::write(d.join("y.hsc"), y).unwrap();
    assert_eq!(lrcert(&["yd-check", &path(d, "y.hsc")]).0, 0);
    let (code, _, err) = lrcert(&["map-g", &path(d, "y.hsc")]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn algebra_constructions_validate() {
    let dir = zoo_dir();
    let d = dir.path();
    for (cmd, args) in [("dual", vec!["qs3.hsc"]), ("tensor", vec!["qc2.hsc", "sweedler.hsc"]), ("double", vec!["qc2.hsc"]), ("antipode", vec!["taft3.hsc"])] {
        let out = path(d, "out.hsc");
        let mut argv = vec![cmd.to_string()];
        argv.extend(args.iter().map(|a| path(d, a)));
        argv.extend(["--out".to_string(), out.clone()]);
        let argv: Vec<&str> = argv.iter().map(String::as_str).collect();
        assert_eq!(lrcert(&argv).0, 0, "{cmd}");
        let (code, summary, _) = lrcert(&["validate", &out]);
        assert_eq!(code, 0, "{cmd}: {summary}");
        assert!(summary.contains("antipode\tantipode_left\tPASS"), "{cmd}");
    }
}

#[test]
fn braid_and_transport_commands() {
    let dir = zoo_dir();
    let d = dir.path();
    let m = |n: &str| path(d, &format!("qs3.{n}.hsc"));
    let (code, out, _) = lrcert(&["braid-check", &m("left_adjoint"), &m("tensor_adjoint"), &m("right_adjoint")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("braid\tbraid\tPASS"));
    let (code, out, _) = lrcert(&["transport-check", &m("tensor_adjoint"), &m("left_adjoint"), "--sample", "50", "--seed", "7"]);
    assert_eq!(code, 0, "{out}");
}
