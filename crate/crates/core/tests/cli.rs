use std::path::{Path, PathBuf};
use std::process::Command;

use k3cert::cli::run;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn k3(args: &[&str]) -> k3cert::cli::CliOutput {
    run(std::iter::once("k3cert").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = k3(args);
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("k3cert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn dataset_show_and_list() {
    let v = json(&["--json", "dataset", "show", "12"]);
    assert_eq!(v["polynomial"], "x^2 + y^3 + z^9 + w^18");
    assert_eq!(
        v["weight"],
        serde_json::json!(["1/2", "1/3", "1/9", "1/18"])
    );
    assert_eq!(v["milnor"], 272);
    let list = json(&["--json", "dataset", "list"]);
    assert_eq!(list.as_array().unwrap().len(), 12);
    assert_eq!(k3(&["dataset", "show", "15"]).code, 3);
}

#[test]
fn dataset_verify_passes() {
    let v = json(&["--json", "dataset", "verify"]);
    assert_eq!(v["ok"], true);
}

#[test]
fn milnor_of_entry_ten() {
    let v = json(&["--json", "milnor", &fixture("no10.json")]);
    assert_eq!(v["mu-orlik"], 242);
    assert_eq!(v["mu-basis"], 242);
    assert_eq!(v["agreement"], true);
}

#[test]
fn fixture_47_loads() {
    let f = k3cert::io::load_polynomial(Path::new(&fixture("no47.json"))).unwrap();
    assert_eq!(f.to_string(), "x^2 + y^3 + y*z^7 + z^9*w^2 + w^14");
    for e in k3cert::dataset::entries() {
        let g =
            k3cert::io::load_polynomial(Path::new(&fixture(&format!("no{}.json", e.id)))).unwrap();
        assert_eq!(g, e.polynomial);
    }
}

#[test]
fn classify_exit_codes() {
    assert_eq!(k3(&["classify", &fixture("no83.json")]).code, 0);
    let p = scratch("small.json");
    std::fs::write(
        &p,
        "[[1,1,2,0,0,0],[1,1,0,3,0,0],[1,1,0,0,5,0],[1,1,0,0,0,7]]",
    )
    .unwrap();
    let out = k3(&["--json", "classify", p.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("\"simple_k3\": false"));
}

#[test]
fn malformed_input_is_an_input_error() {
    let p = scratch("zero.json");
    std::fs::write(&p, "[[0,1,0,0,0,0]]").unwrap();
    let out = k3(&["milnor", p.to_str().unwrap()]);
    assert_eq!(out.code, 3);
    assert!(out.stderr.contains("zero coefficient"));
    assert_eq!(k3(&["milnor", "/nonexistent/file.json"]).code, 3);
    assert_eq!(k3(&["frobnicate"]).code, 3);
}

#[test]
fn stratum_and_deform() {
    let v = json(&["--json", "stratum", "12"]);
    assert_eq!(v["size"], 272);
    assert_eq!(v["stratum"]["codimension"], 129);
    let below = v["below_one"][5].as_u64().unwrap().to_string();
    let v = json(&[
        "--json",
        "deform",
        "12",
        "--assign",
        &format!("{below}=1/3"),
    ]);
    assert_eq!(v["mu_dropping"], true);
    let out = k3(&["deform", "12", "--assign", "0=0"]);
    assert_eq!(
        out.stdout,
        std::fs::read_to_string(fixture("no12.json")).unwrap()
    );
}

#[test]
fn certify_then_verify() {
    let cert = scratch("cert.json");
    let out = k3(&[
        "certify",
        &fixture("example_deformation.json"),
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let first = std::fs::read_to_string(&cert).unwrap();
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["weight_sum"], "26/25");
    assert_eq!(v["outcome"], "rational-by-curve-case");
    assert_eq!(k3(&["verify", cert.to_str().unwrap()]).code, 0);

    // byte-identical on a second run
    let again = k3(&["--json", "certify", &fixture("example_deformation.json")]);
    assert_eq!(again.stdout, first);

    // any edit breaks verification
    let tampered = scratch("tampered.json");
    std::fs::write(&tampered, first.replace("\"26/25\"", "\"27/25\"")).unwrap();
    assert_eq!(k3(&["verify", tampered.to_str().unwrap()]).code, 1);
}

#[test]
fn certify_undeformed_is_inconclusive() {
    let out = k3(&["--json", "certify", "12"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.contains("\"outcome\": \"inconclusive\""));
}

#[test]
fn lp_min_weight_sum() {
    let v = json(&["--json", "lp", "min-weight-sum", "83"]);
    assert_eq!(v["status"], "optimal");
    assert_eq!(v["value"], serde_json::json!({"num": "1", "den": "1"}));
    assert_eq!(v["interior_optimum"], true);
}

#[test]
fn binary_honours_no_color() {
    let out = Command::new(env!("CARGO_BIN_EXE_k3cert"))
        .args(["dataset", "verify"])
        .env("NO_COLOR", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains('\x1b'));
    assert_eq!(text.lines().count(), 12);
}
