use fdq_cli::{parse_root_name, run, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn fdq(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fdq").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn fdq_json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = fdq(&full);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn parabolic_reports_alpha_tilde() {
    let v = fdq_json(&["parabolic", "G2", "--remove", "alpha"]);
    assert_eq!(v["alphaTilde"], serde_json::json!([2, 1]));
    assert_eq!(v["rhoP"], serde_json::json!([5, "5/2"]));
    assert_eq!(v["mLS"], 2);
}

#[test]
fn unknown_inputs_exit_with_usage() {
    for args in [
        &["roots", "NoSuchType"][..],
        &["frobnicate"],
        &["verify-case", "no-such-case"],
        &["parabolic", "G2", "--remove", "gamma"],
        &["roots", "G2", "--format", "yaml"],
    ] {
        let (code, out, err) = fdq(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, _) = fdq(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify-case"));
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let (code, first, _) = fdq(&["verify-case", "--all", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let (_, second, _) = fdq(&["verify-case", "--all", "--format", "json"]);
    assert_eq!(first, second);
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 9);
    let (code, md, _) = fdq(&["verify-case", "--all"]);
    assert_eq!(code, EXIT_OK);
    assert!(!md.contains("FAIL"));
}

#[test]
fn single_case_and_derivation() {
    let v = fdq_json(&["verify-case", "gl2n-n3"]);
    assert_eq!(v["overall"], true);
    let d = fdq_json(&["derive", "g2-pi-beta-one"]);
    assert_eq!(d["constant"], 2);
    assert_eq!(d["pass"], true);
}

#[test]
fn other_subcommands() {
    let m = fdq_json(&["motive", "GL3"]);
    assert_eq!(m["pointCountText"], "q^9 - q^8 - q^7 + q^5 + q^4 - q^3");
    let g = fdq_json(&["gamma-gm", "G2", "--remove", "beta"]);
    assert_eq!(g["gammaGMText"], "(q^5 + q^4 + q^3 + q^2 + q + 1)/q^5");
    let c = fdq_json(&["constants", "GL4", "--remove", "alpha2"]);
    assert_eq!((c["chiPairing"].as_i64(), c["mIdx"].as_i64()), (Some(2), Some(2)));
    let c = fdq_json(&["constants", "g2-pi-alpha-half"]);
    assert_eq!(c["chi"], serde_json::json!([3, 2]));
    let l = fdq_json(&["list-cases"]);
    assert_eq!(l.as_array().unwrap().len(), 9);
}

#[test]
fn root_names() {
    assert_eq!(parse_root_name(2, "beta").unwrap(), 1);
    assert_eq!(parse_root_name(4, "alpha3").unwrap(), 2);
    assert!(parse_root_name(4, "beta").is_err());
}
