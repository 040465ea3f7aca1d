use std::path::Path;
use std::process::{Command, Output};

fn jd(args: &[&str], cache: Option<&Path>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_jd"));
    c.args(args).env_remove("JD_CACHE_DIR");
    if let Some(dir) = cache {
        c.env("JD_CACHE_DIR", dir);
    }
    c.output().expect("jd runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn one_loop_torsion_at_genus_one() {
    let o = jd(&["structure", "--genus", "1", "--ideg", "3", "--space", "c", "--loops", "1"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Z/2 ^ 4");
}

#[test]
fn verify_emits_a_passing_report() {
    let o = jd(&["verify", "y3_structure", "--genus", "1", "--json"], None);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "y3_structure");
    assert_eq!(v["passed"], true);
    assert_eq!(v["params"]["seed"], 20_240_611);
    assert!(v["wallTimeMs"].is_null());
    assert!(v["cases"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(jd(&["frobnicate"], None).status.code(), Some(1));
    assert_eq!(jd(&["verify", "no_such_suite"], None).status.code(), Some(1));
    assert_eq!(jd(&["apply", "--genus", "1", "--op", "delta", "T(1+,"], None).status.code(), Some(1));
    assert_eq!(jd(&["apply", "--genus", "1", "--op", "delta", "T(1+,2+,2-)"], None).status.code(), Some(1));
    assert_eq!(jd(&["apply", "--genus", "1", "--op", "nope", "T(1+,1+,1-)"], None).status.code(), Some(1));
    assert_eq!(jd(&["--help"], None).status.code(), Some(0));
}

#[test]
fn resource_caps_exit_three() {
    let o = jd(&["verify", "oneloop_phi", "--genus", "1", "--max-ideg", "2", "--json"], None);
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], false);
    assert!(v["cases"].as_array().unwrap().iter().any(|c| c["status"] == "skipped-resource"));
    assert_eq!(jd(&["structure", "--genus", "3", "--ideg", "9", "--space", "c"], None).status.code(), Some(3));
}

#[test]
fn apply_output_reparses() {
    let first = jd(&["apply", "--genus", "2", "--op", "delta", "T(1+,2+,2-)"], None);
    assert_eq!(first.status.code(), Some(0));
    let text = stdout(&first).trim().to_string();
    assert!(!text.is_empty());
    let e = jd_diagram::parse_expr(&text).unwrap();
    assert_eq!(jd_diagram::render_expr(&e), text);
    // Feeding the result back through an identity-like operator keeps it.
    let again = jd(&["apply", "--genus", "2", "--op", "rev", &text], None);
    assert_eq!(again.status.code(), Some(0));
    let twice = jd(&["apply", "--genus", "2", "--op", "rev", stdout(&again).trim()], None);
    assert_eq!(stdout(&twice).trim(), text);
}

#[test]
fn cache_warm_matches_cold() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["structure", "--genus", "1", "--ideg", "4", "--space", "c", "--json"];
    let uncached = jd(&args, None);
    let cold = jd(&args, Some(dir.path()));
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    assert_eq!(files.len(), 1);
    assert!(files[0].starts_with("v1-"));
    let warm = jd(&args, Some(dir.path()));
    assert_eq!(cold.status.code(), Some(0));
    assert_eq!(stdout(&uncached), stdout(&cold));
    assert_eq!(stdout(&cold), stdout(&warm));
    let b1 = jd(&["basis", "--genus", "1", "--ideg", "4", "--space", "c"], Some(dir.path()));
    let b2 = jd(&["basis", "--genus", "1", "--ideg", "4", "--space", "c"], None);
    assert_eq!(stdout(&b1), stdout(&b2));
}

#[test]
fn corrupted_cache_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["structure", "--genus", "1", "--ideg", "3", "--space", "c", "--loops", "1"];
    let cold = jd(&args, Some(dir.path()));
    let path = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let good = std::fs::read_to_string(&path).unwrap();
    // Flip the checksum; the entry must be rejected rather than trusted.
    let v: serde_json::Value = serde_json::from_str(&good).unwrap();
    let sum = v["checksum"].as_str().unwrap().to_string();
    let flipped = format!("{}{}", if sum.starts_with('0') { '1' } else { '0' }, &sum[1..]);
    std::fs::write(&path, good.replace(&sum, &flipped)).unwrap();
    let warm = jd(&args, Some(dir.path()));
    assert_eq!(stdout(&cold), stdout(&warm));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), good);
    std::fs::write(&path, "not json").unwrap();
    assert_eq!(stdout(&jd(&args, Some(dir.path()))), stdout(&cold));
}

#[test]
fn counts_and_lie() {
    let o = jd(&["count", "--genus", "2", "--length", "4", "--json"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["necklaces"], 70);
    assert_eq!(v["oneLoopRank"], 55);
    let o = jd(&["lie", "--genus", "1", "--degree", "3"], None);
    assert_eq!(stdout(&o).lines().next(), Some("Z ^ 2"));
    let o = jd(&["verify", "--list"], None);
    assert_eq!(stdout(&o).lines().count(), 16);
}
