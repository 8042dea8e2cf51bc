mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

use numrange::cli::io::{emit_json, parse_json};
use numrange::linalg::{ComplexMatrix, ComplexScalar};
use proptest::prelude::*;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn numrange(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_numrange"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_stdout(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path_str(p: &std::path::Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn bounds_on_shift() {
    let out = numrange(&["bounds", path_str(&fixture("shift.json"))]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["classical"], 1.0);
    assert_eq!(v["corollary"], 0.541196100146);
    assert_eq!(v["kittaneh_power"], 0.5);
    // Printed values are rounded to 12 significant digits.
    assert_eq!(v["kittaneh_mean"].as_f64().unwrap().to_string(), "0.707106781187");
}

#[test]
fn octagon_on_shift_is_regular() {
    let out = numrange(&["octagon", path_str(&fixture("shift.json"))]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["kind"], "octagon");
    assert_eq!(v["norm"], "spectral");
    let vertices = v["vertices"].as_array().unwrap();
    assert_eq!(vertices.len(), 8);
    for p in vertices {
        let (x, y) = (p[0].as_f64().unwrap(), p[1].as_f64().unwrap());
        assert!((x.hypot(y) - 0.541196100146).abs() < 1e-11);
        assert!(x.abs() == 0.5 || y.abs() == 0.5);
    }
}

#[test]
fn octagon_respects_norm_flag() {
    let out = numrange(&[
        "--norm",
        "frobenius",
        "octagon",
        path_str(&fixture("diag_hexagon.json")),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_stdout(&out)["norm"], "frobenius");
}

#[test]
fn check_passes_on_reference_matrices() {
    for name in [
        "matrix_a.txt",
        "matrix_b.txt",
        "shift.json",
        "identity2.json",
        "diag_hexagon.json",
    ] {
        let out = numrange(&["check", path_str(&fixture(name))]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{name}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let v = json_stdout(&out);
        assert_eq!(v["containment"], true);
        assert_eq!(v["tangency_ok"], true);
    }
}

#[test]
fn check_detects_a_shrunken_region() {
    let out = numrange(&[
        "check",
        path_str(&fixture("matrix_a.txt")),
        "--debug-scale-region",
        "0.5",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(json_stdout(&out)["containment"], false);
}

#[test]
fn zero_operator_exit_code() {
    let out = numrange(&["bounds", path_str(&fixture("zero2.json"))]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn input_errors_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"dim":2,"entries":[[1,0]]}"#).unwrap();
    let out = numrange(&["bounds", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("entries"));

    assert_eq!(numrange(&["bounds", "/nonexistent/matrix.json"]).status.code(), Some(2));
    assert_eq!(numrange(&["--bogus"]).status.code(), Some(2));
    assert_eq!(numrange(&["ensemble", "--trials", "0"]).status.code(), Some(2));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(numrange(&["--help"]).status.code(), Some(0));
    assert_eq!(numrange(&["--version"]).status.code(), Some(0));
}

#[test]
fn plot_is_deterministic_svg() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for target in [&a, &b] {
        let out = numrange(&["plot", path_str(&fixture("matrix_b.txt")), path_str(target)]);
        assert_eq!(out.status.code(), Some(0));
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    let text = String::from_utf8(bytes).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("<circle").count(), 3);
}

#[test]
fn plot_to_unwritable_path_is_an_io_error() {
    let out = numrange(&["plot", path_str(&fixture("shift.json")), "/nonexistent/dir/out.svg"]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn ensemble_is_reproducible() {
    let args = ["--seed", "7", "ensemble", "--sizes", "3,5", "--trials", "20"];
    let first = numrange(&args);
    let second = numrange(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let v = json_stdout(&first);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for row in rows {
        for key in ["kittaneh_power", "kittaneh_mean", "corollary"] {
            let r = row[key].as_f64().unwrap();
            assert!(r > 0.5 && r <= 1.0 + 1e-12, "{key} = {r}");
        }
    }

    let csv = numrange(&["ensemble", "--sizes", "4", "--trials", "5", "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("m,trials,kittaneh_power,kittaneh_mean,corollary\n4,5,"));
}

#[test]
fn in_process_run_matches_binary() {
    let file = fixture("matrix_a.txt");
    let args = ["numrange", "bounds", path_str(&file)];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = numrange::cli::run(args, &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(out, numrange(&args[1..]).stdout);
}

fn matrix_strategy() -> impl Strategy<Value = ComplexMatrix> {
    (1..=5usize).prop_flat_map(|m| {
        prop::collection::vec((any::<f64>(), any::<f64>()), m * m).prop_map(move |v| {
            let data = v
                .into_iter()
                .map(|(a, b)| {
                    let fix = |x: f64| if x.is_finite() { x } else { 0.0 };
                    ComplexScalar::new(fix(a), fix(b))
                })
                .collect();
            ComplexMatrix::from_row_major(m, data).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn json_round_trip_is_bit_exact(t in matrix_strategy()) {
        let back = parse_json(&emit_json(&t)).unwrap();
        prop_assert_eq!(back.dim(), t.dim());
        for (a, b) in back.as_slice().iter().zip(t.as_slice()) {
            prop_assert_eq!(a.re.to_bits(), b.re.to_bits());
            prop_assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }
}
