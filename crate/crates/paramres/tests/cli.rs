use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use paramres::{corpus, LoadedRing};

fn paramres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paramres")).args(args).output().unwrap()
}

fn corpus_file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(format!("{name}.ring"))
}

#[test]
fn corpus_files_on_disk_match_builtins() {
    for name in corpus::NAMES {
        let text = fs::read_to_string(corpus_file(name)).unwrap();
        let disk = LoadedRing::parse(&text).unwrap();
        let builtin = corpus::load(name).unwrap();
        assert_eq!(disk.spec, builtin.spec, "{name}");
    }
}

#[test]
fn structured_output_is_reproducible() {
    let path = corpus_file("r2");
    let path = path.to_str().unwrap();
    let a = paramres(&["main-theorem", "--ring", path, "--format", "structured"]);
    let b = paramres(&["main-theorem", "--ring", path, "--format", "structured"]);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let json: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(json["experiment"], "main-theorem");
    assert!(json.get("timings").is_none());
}

#[test]
fn builtin_rings_and_out_flag() {
    let out = std::env::temp_dir().join(format!("paramres-cli-{}.json", std::process::id()));
    let o = paramres(&[
        "scan",
        "--ring",
        "builtin:regular",
        "--power-max",
        "3",
        "--format",
        "structured",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    fs::remove_file(&out).unwrap();
    assert_eq!(json["inputs"]["ring"], "regular");
}

#[test]
fn failed_verdicts_exit_with_one() {
    let o = paramres(&["example"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stdout).contains("FAIL"));
}

#[test]
fn malformed_specs_report_their_location() {
    let path = std::env::temp_dir().join(format!("paramres-bad-{}.ring", std::process::id()));
    fs::write(&path, "[field]\n32003\n[vars]\na b\n[ideal]\na*q\n").unwrap();
    let o = paramres(&["resolve", "--ring", path.to_str().unwrap()]);
    fs::remove_file(&path).unwrap();
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("6:3") && err.contains("unknown variable"), "{err}");
}

#[test]
fn unknown_sop_is_an_error() {
    let o = paramres(&["koszul", "--ring", "builtin:r1", "--sop", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("nope"));
}
