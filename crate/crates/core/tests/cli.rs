use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn gridcarve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gridcarve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn json(path: impl AsRef<Path>) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn square(side: u32) -> String {
    (1..=side)
        .flat_map(|r| (1..=side).map(move |c| format!("{r} {c}\n")))
        .collect()
}

#[test]
fn gen_full_81_is_the_9x9_grid() {
    let out = gridcarve(&["gen", "--seed", "42", "-n", "81", "--shape", "full"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), square(9));
}

#[test]
fn decompose_single_vertex() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "one.txt", "# a lone vertex\n5 7\n");
    let out = gridcarve(&["decompose", &input]);
    assert_eq!(code(&out), 0);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let r = &doc["rectangles"][0];
    assert_eq!(doc["rectangles"].as_array().unwrap().len(), 1);
    assert_eq!((&r["c1"], &r["c2"], &r["r1"], &r["r2"]), (&0.into(), &2.into(), &0.into(), &2.into()));
    assert_eq!(r["cells"], serde_json::json!([[1, 1]]));
}

#[test]
fn decompose_verify_and_svg() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "g.txt", &square(9));
    let cover = dir.path().join("cover.json");
    let svg = dir.path().join("cover.svg");
    let out = gridcarve(&[
        "decompose",
        &input,
        "--verify",
        "--out",
        cover.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&cover)["rectangles"].as_array().unwrap().len(), 9);
    assert!(fs::read_to_string(svg).unwrap().starts_with("<svg"));
}

#[test]
fn disconnected_input() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "two.txt", "1 1\n1 3\n2 3\n");
    for cmd in ["decompose", "pathdecomp", "verify"] {
        let out = gridcarve(&[cmd, &input]);
        assert_eq!(code(&out), 3, "{cmd}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("not connected"));
    }
    let out = gridcarve(&["decompose", &input, "--per-component", "--verify"]);
    assert_eq!(code(&out), 0);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let comps = doc["components"].as_array().unwrap();
    assert_eq!(comps.len(), 2);
    assert_eq!(comps[0]["origin"], serde_json::json!([1, 1]));
    assert_eq!(comps[1]["origin"], serde_json::json!([1, 3]));
    assert_eq!(comps[1]["cover"]["n"], 2);
}

#[test]
fn parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    for (name, text) in [("neg.txt", "1 1\n-1 2\n"), ("junk.txt", "1 1\nabc\n"), ("empty.txt", "# none\n")] {
        let input = write(&dir, name, text);
        assert_eq!(code(&gridcarve(&["decompose", &input])), 2, "{name}");
    }
}

#[test]
fn bad_arguments_exit_64() {
    assert_eq!(code(&gridcarve(&["decompose"])), 64);
    assert_eq!(code(&gridcarve(&["frobnicate"])), 64);
    assert_eq!(code(&gridcarve(&["gen", "-n", "0"])), 64);
    assert_eq!(code(&gridcarve(&["bench", "--sizes", "10", "--repeats", "0"])), 64);
    assert_eq!(code(&gridcarve(&["--help"])), 0);
}

#[test]
fn pathdecomp_9x9() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "g.txt", &square(9));
    let out = gridcarve(&["pathdecomp", &input, "--verify"]);
    assert_eq!(code(&out), 0);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let width = doc["width"].as_u64().unwrap();
    let biggest = doc["bags"].as_array().unwrap().iter().map(|b| b.as_array().unwrap().len()).max();
    assert_eq!(Some(width as usize + 1), biggest);
    assert!(width < 99);
}

#[test]
fn verify_flags_a_tampered_cover() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "g.txt", &square(9));
    let out = gridcarve(&["verify", &input]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["ok"], true);

    let cover_path = dir.path().join("cover.json");
    assert_eq!(code(&gridcarve(&["decompose", &input, "-o", cover_path.to_str().unwrap()])), 0);
    let mut cover = json(&cover_path);
    let last = cover["rectangles"].as_array().unwrap().len() - 1;
    cover["rectangles"][last]["r2"] = 9.into();
    fs::write(&cover_path, cover.to_string()).unwrap();

    let report_path = dir.path().join("report.json");
    let out = gridcarve(&[
        "verify",
        &input,
        "--cover",
        cover_path.to_str().unwrap(),
        "--out",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 4);
    let report = json(&report_path);
    assert_eq!(report["ok"], false);
    let ids: Vec<_> = report["violations"].as_array().unwrap().iter().map(|v| v["condition"].clone()).collect();
    assert!(ids.contains(&"RCL.4".into()), "{ids:?}");
}

#[test]
fn outputs_are_byte_stable() {
    let dir = TempDir::new().unwrap();
    let g = gridcarve(&["gen", "--seed", "7", "-n", "2000", "--shape", "walk"]);
    let input = write(&dir, "w.txt", std::str::from_utf8(&g.stdout).unwrap());
    let a = gridcarve(&["decompose", &input]);
    let b = gridcarve(&["decompose", &input]);
    assert_eq!(a.stdout, b.stdout);
    let again = gridcarve(&["gen", "--seed", "7", "-n", "2000", "--shape", "walk"]);
    assert_eq!(g.stdout, again.stdout);
}

#[test]
fn debug_asserts_env() {
    let dir = TempDir::new().unwrap();
    let g = gridcarve(&["gen", "--seed", "3", "-n", "5000", "--shape", "blob"]);
    let input = write(&dir, "b.txt", std::str::from_utf8(&g.stdout).unwrap());
    let out = Command::new(env!("CARGO_BIN_EXE_gridcarve"))
        .args(["decompose", &input, "--verify"])
        .env("GRIDCARVE_DEBUG_ASSERTS", "1")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn bench_prints_csv() {
    let out = gridcarve(&["bench", "--sizes", "1,500", "--repeats", "3"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("1,3,") && lines[2].starts_with("500,3,"));
}
