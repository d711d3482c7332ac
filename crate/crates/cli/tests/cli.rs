//! Golden-output tests. Set `UPDATE_GOLDEN=1` to rewrite the expected files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn hspeed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hspeed"))
        .args(args)
        .env_remove("HSPEED_CACHE")
        .output()
        .expect("binary runs")
}

const M4: &str = "G?`@?_";

const CASES: [(&str, &[&str], i32); 12] = [
    ("generate_z5", &["generate", "z", "5"], 0),
    ("generate_co_w2_json", &["--json", "generate", "w", "2", "--co"], 0),
    ("count_s4", &["count", "family:s", "4"], 0),
    ("count_r2", &["count", "family:r", "2"], 0),
    ("count_e1_csv", &["count", "family:e1", "5", "--csv"], 0),
    ("count_p3_free_json", &["--json", "count", "forbidden:3; 0-1 1-2", "5"], 0),
    ("classify_k3", &["classify", "forbidden:Bw"], 0),
    ("index_split_json", &["--json", "index", "forbidden:C`,Cl,Dhc"], 0),
    ("params_c5", &["params", "5; 0-1 1-2 2-3 3-4 0-4"], 0),
    ("params_k4_json", &["--json", "params", "C~"], 0),
    ("extract_nd_m4_json", &["--json", "extract", "nd", M4], 0),
    ("universality_r4", &["universality", "r", "4"], 1),
];

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.out"))
}

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args, code) in CASES {
        let out = hspeed(args);
        assert_eq!(out.status.code(), Some(code), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let stdout = String::from_utf8(out.stdout).unwrap();
        let path = golden_path(name);
        if update {
            std::fs::write(&path, &stdout).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        assert_eq!(stdout, expected, "{name}");
    }
}

#[test]
fn identical_invocations_give_identical_bytes() {
    for (_, args, _) in CASES {
        assert_eq!(hspeed(args).stdout, hspeed(args).stdout);
    }
}

#[test]
fn errors_exit_with_two_and_distinct_messages() {
    let cases: [(&[&str], &str); 5] = [
        (&["generate", "nope", "3"], "unknown family"),
        (&["params", "Z!!"], "malformed graph6"),
        (&["count", "builtin:all", "9"], "capped at 7"),
        (&["extract", "bogus", "Bw"], "unknown procedure"),
        (&["index", "builtin:split"], "forbidden-set"),
    ];
    for (args, needle) in cases {
        let out = hspeed(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.contains(needle), "{args:?}: {err}");
    }
    assert_eq!(hspeed(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn failures_exit_with_one() {
    let out = hspeed(&["--json", "extract", "vc", "C~"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["stage"], "vc");
}

#[test]
fn params_reads_stdin_and_files() {
    use std::io::Write;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.g6");
    std::fs::write(&path, "Bw\nC~\n").unwrap();
    let out = hspeed(&["--json", "params", &format!("@{}", path.display())]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 2);

    let mut child = Command::new(env!("CARGO_BIN_EXE_hspeed"))
        .args(["--json", "params"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Bw\nA_\nC~\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 3);
}

#[test]
fn cache_flag_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("counts.jsonl");
    let cache = cache.to_str().unwrap();
    let first = hspeed(&["count", "family:s", "6", "--cache", cache]).stdout;
    let second = hspeed(&["count", "family:s", "6", "--cache", cache]).stdout;
    let bypass = hspeed(&["count", "family:s", "6", "--no-cache"]).stdout;
    assert_eq!(first, second);
    assert_eq!(first, bypass);
    let text = std::fs::read_to_string(cache).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains(r#""count":"58""#));
}
