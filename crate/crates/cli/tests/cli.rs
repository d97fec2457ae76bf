//! End-to-end runs of the `cfrac` binary. Outputs are compared with the files
//! in `tests/golden` (timings stripped); `UPDATE_GOLDEN=1` rewrites them.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn data(name: &str) -> String {
    dir("data").join(name).to_string_lossy().into_owned()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cfrac(args: &[&str]) -> Run {
    let o = Command::new(env!("CARGO_BIN_EXE_cfrac")).args(args).output().unwrap();
    Run {
        code: o.status.code().unwrap(),
        stdout: String::from_utf8(o.stdout).unwrap(),
        stderr: String::from_utf8(o.stderr).unwrap(),
    }
}

fn json(r: &Run) -> Value {
    let mut v: Value = serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{e}: {}", r.stdout));
    if let Some(m) = v.as_object_mut() {
        m.remove("timing_ms");
    }
    v
}

fn golden(name: &str, actual: &str) {
    let path = dir("golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {name}"));
    assert_eq!(actual, want, "output differs from {name}");
}

fn golden_json(name: &str, v: &Value) {
    golden(name, &(serde_json::to_string_pretty(v).unwrap() + "\n"));
}

fn alphas(v: &Value) -> Vec<String> {
    v["terms"].as_array().unwrap().iter().map(|t| t["alpha"].as_str().unwrap().to_string()).collect()
}

#[test]
fn expand_factorial_s_fraction() {
    let r = cfrac(&["expand", "--family", "factorial", "--order", "8", "--shape", "s"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r);
    assert_eq!(v["schema"], "cfrac/1");
    assert_eq!(v["alpha0"], "1");
    assert_eq!(alphas(&v), ["1", "1", "2", "2", "3", "3", "4", "4"]);
    golden_json("expand_factorial_s.json", &v);
}

#[test]
fn expand_literal_j_fraction() {
    let r = cfrac(&["expand", "--input", &data("factorial5.json"), "--order", "4", "--shape", "j"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r);
    assert_eq!(v["terms"][0]["delta"][0], "1");
    assert_eq!(v["terms"][0]["alpha"], "1");
    assert_eq!(v["terms"][0]["p"], 2);
    golden_json("expand_factorial_j.json", &v);
}

#[test]
fn expand_bell_symbolic_text() {
    let r = cfrac(&["expand", "--family", "bell", "--params", "x=sym,y=sym", "--order", "6", "--output", "text"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    for (k, a) in ["x", "y", "x", "2*y", "x", "3*y"].iter().enumerate() {
        assert!(r.stdout.contains(&format!("level {}: alpha = {a}, p = 1", k + 1)), "{}", r.stdout);
    }
    golden("expand_bell.txt", &r.stdout);
}

#[test]
fn expand_family_from_file_and_stdin() {
    let a = json(&cfrac(&["expand", "--input", &data("rr.json")]));
    let b = json(&cfrac(&["expand", "--family", "rr", "--order", "6"]));
    assert_eq!(a, b);
    let mut child = Command::new(env!("CARGO_BIN_EXE_cfrac"))
        .args(["expand", "--input", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(std::fs::read(data("tagged.json")).unwrap().as_slice()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    // 1 + x t + 2x^2 t^2: alpha_1 = x, alpha_2 = x
    assert_eq!(alphas(&v), ["x", "x"]);
    assert_eq!(v["domain"]["variables"][0], "x");
}

#[test]
fn algorithms_and_digest_agree() {
    let a = json(&cfrac(&["expand", "--family", "f20", "--order", "6", "--algorithm", "primitive"]));
    let b = json(&cfrac(&["expand", "--family", "f20", "--order", "6", "--algorithm", "refined"]));
    assert_eq!(a["terms"], b["terms"]);
    assert_eq!(a["status"], b["status"]);
    assert_eq!(a["input_digest"], b["input_digest"]);
    assert!(a["input_digest"].as_str().unwrap().starts_with("sha256:"));
}

#[test]
fn expansion_errors_exit_2_with_error_object() {
    let r = cfrac(&["expand", "--input", &data("not_exact.json")]);
    assert_eq!(r.code, 2);
    let v = json(&r);
    assert_eq!(v["error"]["kind"], "NonExactDivision");
    assert_eq!(v["error"]["level"], 2);
    assert_eq!(alphas(&v["error"]["partial"]), ["1"]);
    golden_json("error_not_exact.json", &v);

    let r = cfrac(&["expand", "--input", &data("factorial5.json"), "--shape", "j", "--order", "3"]);
    assert_eq!(r.code, 0);
    let r = cfrac(&["expand", "--input", &data("gap.json"), "--shape", "s"]);
    assert_eq!(r.code, 2);
    assert_eq!(json(&r)["error"]["kind"], "StrictShapeViolation");
    let r = cfrac(&["expand", "--input", &data("factorial5.json"), "--g-minus-one", &data("g_minus_one_bad.json")]);
    assert_eq!(r.code, 2);
    assert_eq!(json(&r)["error"]["kind"], "BadGMinus1");
    golden_json("error_g_minus_one.json", &json(&r));
}

#[test]
fn malformed_input_exits_1() {
    for args in [
        vec!["expand", "--family", "nope", "--order", "3"],
        vec!["expand", "--family", "factorial"],
        vec!["expand", "--bogus"],
        vec!["expand", "--family", "factorial", "--order", "4", "--shape", "custom:x"],
        vec!["expand", "--family", "rising_factorial", "--params", "b=1", "--order", "4"],
        vec!["table", "--kind", "S", "--size", "3"],
    ] {
        let r = cfrac(&args);
        assert_eq!(r.code, 1, "{args:?}: {}", r.stdout);
        assert!(r.stderr.contains("error"), "{args:?}");
        assert!(r.stdout.is_empty());
    }
    let r = cfrac(&["expand", "--input", &data("bad_coeff.json")]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("coefficient 1"), "{}", r.stderr);
    let r = cfrac(&["expand", "--input", &data("factorial5.json"), "--order", "9"]);
    assert_eq!(r.code, 1);
    let r = cfrac(&["expand", "--input", "/nonexistent.json"]);
    assert_eq!(r.code, 1);
    assert_eq!(cfrac(&["--help"]).code, 0);
}

#[test]
fn verify_checks() {
    for args in [
        vec!["verify", "--check", "euler-gauss", "--family", "rr", "--order", "8"],
        vec!["verify", "--check", "euler-gauss", "--family", "rr_a", "--params", "a=1/3", "--order", "6"],
        vec!["verify", "--check", "hankel", "--family", "factorial", "--size", "6"],
        vec!["verify", "--check", "flajolet", "--betas", "1,1,1", "--gammas", "1,1,1", "--order", "8"],
        vec!["verify", "--check", "flajolet", "--alphas", "1,1,2,2,3,3,4", "--order", "5"],
        vec!["verify", "--check", "gtable", "--alphas", "1,1,2,2,3,3,4,4,5,5,6,6,7,7", "--size", "6"],
        vec!["verify", "--check", "gtable", "--betas", "1,4,9,16,25,36,49", "--gammas", "1,3,5,7,9,11,13"],
        vec!["verify", "--check", "roundtrip", "--family", "bell", "--order", "8"],
        vec!["verify", "--check", "roundtrip", "--input", &data("factorial5.json"), "--shape", "j"],
    ] {
        let r = cfrac(&args);
        assert_eq!(r.code, 0, "{args:?}: {}{}", r.stdout, r.stderr);
        assert!(r.stdout.contains(": pass"), "{}", r.stdout);
    }
    let r = cfrac(&["verify", "--check", "hankel", "--family", "factorial", "--size", "2", "--output", "json"]);
    golden_json("verify_hankel.json", &json(&r));
}

#[test]
fn verify_reports_counterexamples() {
    // weights of n! paired with the moments of the Bell numbers
    let r = cfrac(&["verify", "--check", "hankel", "--family", "bell", "--params", "x=1,y=1", "--alphas", "1,1,2,2,3,3,4,4,5,5", "--size", "3", "--output", "json"]);
    assert_eq!(r.code, 3);
    let v = json(&r);
    assert_eq!(v["passed"], false);
    assert_eq!(v["counterexample"]["hankel"], "5");
    assert_eq!(v["counterexample"]["product"], "6");
    let r = cfrac(&["verify", "--check", "euler-gauss", "--family", "secant_power", "--order", "4"]);
    assert_eq!(r.code, 1);
}

#[test]
fn tables() {
    let r = cfrac(&["table", "--kind", "S", "--alphas", "1,1,2,2,3,3,4,4,5,5,6,6", "--size", "6"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r);
    assert_eq!(v["rows"][6], serde_json::json!(["720", "4320", "5400", "2400", "450", "36", "1"]));
    golden_json("table_s.json", &v);
    let r = cfrac(&["table", "--kind", "Sprime", "--alphas", "1,1,2,2,3,3,4,4,5,5,6,6,7,7", "--size", "6", "--output", "text"]);
    assert_eq!(r.stdout.lines().last().unwrap(), "5040 15120 12600 4200 630 42 1");
    golden("table_sprime.txt", &r.stdout);
    let r = cfrac(&["table", "--kind", "J", "--betas", "1..", "--gammas", "1..", "--size", "5", "--output", "text"]);
    // column 0 holds the Motzkin numbers
    let col: Vec<&str> = r.stdout.lines().map(|l| l.split(' ').next().unwrap()).collect();
    assert_eq!(col, ["1", "1", "2", "4", "9", "21"]);
    let r = cfrac(&["table", "--kind", "J", "--alphas", "1", "--size", "2"]);
    assert_eq!(r.code, 2);
    let r = cfrac(&["table", "--kind", "S", "--alphas", "x,y", "--size", "2", "--output", "text"]);
    // S_{2,1} = alpha_1 + alpha_2 + alpha_3, with alpha_3 repeating y
    assert_eq!(r.stdout, "1\nx 1\nx^2 + x*y x + 2*y 1\n");
}

#[test]
fn moments() {
    let r = cfrac(&["moments", "--family", "moment_probe", "--params", "eps=1", "--budget", "10"]);
    assert_eq!(r.code, 0);
    assert_eq!(json(&r)["first_negative"]["index"], 6);
    let r = cfrac(&["moments", "--family", "moment_probe", "--params", "eps=1/2", "--budget", "30", "--output", "text"]);
    assert!(r.stdout.starts_with("n = 20 "));
    let r = cfrac(&["moments", "--family", "factorial", "--budget", "12"]);
    let v = json(&r);
    assert_eq!(v["first_negative"], Value::Null);
    golden_json("moments_none.json", &v);
    let r = cfrac(&["moments", "--input", &data("gap.json")]);
    assert_eq!(r.code, 2);
    assert_eq!(json(&r)["error"]["kind"], "PEncountered");
}

#[test]
fn bench_csv() {
    let plot = std::env::temp_dir().join(format!("cfrac-plot-{}.dat", std::process::id()));
    let r = cfrac(&["bench", "--family", "factorial", "--Ns", "10,20", "--emit-plot", plot.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines[0], "algorithm,family,N,ms,size-metric");
    assert_eq!(lines.len(), 5);
    let rows: Vec<Vec<&str>> = lines[1..].iter().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.iter().map(|r| (r[0], r[2])).collect::<Vec<_>>(), [
        ("primitive", "10"),
        ("refined", "10"),
        ("primitive", "20"),
        ("refined", "20")
    ]);
    for r in &rows {
        assert_eq!(r[1], "factorial");
        assert!(r[3].parse::<f64>().unwrap() >= 0.0);
    }
    let p = std::fs::read_to_string(&plot).unwrap();
    assert_eq!(p.lines().count(), 5);
    std::fs::remove_file(plot).ok();

    let r = cfrac(&["bench", "--family", "rising_factorial", "--Ns", "6", "--algorithms", "refined"]);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    // symbolic runs report the largest degree in a
    assert!(lines[1].starts_with("refined,rising_factorial,6,"));
    assert!(lines[1].ends_with(",6"));
    assert_eq!(cfrac(&["bench", "--family", "bell", "--Ns", "5"]).code, 1);
}

#[test]
fn catalog_listing() {
    let r = cfrac(&["catalog", "list"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("after Euler"));
    assert!(r.stdout.contains("Rogers"));
    let v = json(&cfrac(&["catalog", "list", "--output", "json"]));
    let names: Vec<&str> = v["families"].as_array().unwrap().iter().map(|f| f["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"moment_probe") && names.contains(&"tan_ratio"));
    assert!(v["families"].as_array().unwrap().iter().all(|f| !f["attribution"].as_str().unwrap().is_empty()));
    golden("catalog.txt", &r.stdout);
}
