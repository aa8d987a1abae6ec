use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ptpartner::Hamiltonian64;
use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ptpartner"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const BB3: &str = r#"{"mass":0.5,"terms":[{"kind":"ix_power","coef":2.0,"nu":3.0}]}"#;
const OSC_HALF: &str = r#"{"mass":0.5,"terms":[{"kind":"shifted_power","coef":[1,0],"shift":[0,1],"exp":2,"mass_scaling":"proportional"}]}"#;

#[test]
fn rotate_minus_gives_negative_cube() {
    let d = TempDir::new().unwrap();
    let input = write(&d, "h.json", BB3);
    let out = d.path().join("r.json");
    let o = run(&[
        "transform",
        "--in",
        s(&input),
        "--map",
        "rotate-minus",
        "--out",
        s(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let t = &v["terms"][0];
    assert_eq!(t["kind"], "shifted_power");
    assert_eq!(t["coef"], serde_json::json!([-2.0, 0.0]));
    assert_eq!(t["exp"], 3);
}

#[test]
fn rotation_round_trip_is_canonical_identity() {
    let d = TempDir::new().unwrap();
    let src = r#"{"mass":0.5,"terms":[{"kind":"ix_power","coef":1.5,"nu":4.0},{"kind":"sech2","coef":[-2,0],"shift":[0,0.5]},{"kind":"shifted_power","coef":[0.25,-1],"shift":[0.3,1],"exp":-2}]}"#;
    let input = write(&d, "h.json", src);
    let mid = d.path().join("mid.json");
    let back = d.path().join("back.json");
    assert_eq!(
        code(&run(&[
            "transform",
            "--in",
            s(&input),
            "--map",
            "rotate-minus",
            "--out",
            s(&mid)
        ])),
        0
    );
    assert_eq!(
        code(&run(&[
            "transform",
            "--in",
            s(&mid),
            "--map",
            "rotate-plus",
            "--out",
            s(&back)
        ])),
        0
    );
    let canonical = Hamiltonian64::from_json(src).unwrap().to_canonical_json();
    assert_eq!(fs::read_to_string(&back).unwrap(), canonical);
}

#[test]
fn other_maps() {
    let d = TempDir::new().unwrap();
    let input = write(&d, "h.json", OSC_HALF);
    let out = d.path().join("o.json");
    assert_eq!(
        code(&run(&[
            "transform",
            "--in",
            s(&input),
            "--map",
            "mass-flip",
            "--out",
            s(&out)
        ])),
        0
    );
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["mass"], -0.5);
    assert_eq!(v["terms"][0]["coef"], serde_json::json!([-1.0, 0.0]));

    assert_eq!(
        code(&run(&[
            "transform",
            "--in",
            s(&input),
            "--map",
            "coupling-flip:0",
            "--out",
            s(&out)
        ])),
        0
    );
    let o = run(&[
        "transform",
        "--in",
        s(&input),
        "--map",
        "coupling-flip:3",
        "--out",
        s(&out),
    ]);
    assert_eq!(code(&o), 2);
    let o = run(&[
        "transform",
        "--in",
        s(&input),
        "--map",
        "spin",
        "--out",
        s(&out),
    ]);
    assert_eq!(code(&o), 2);
    assert_eq!(String::from_utf8_lossy(&o.stderr).lines().count(), 1);
}

#[test]
fn exact_spectrum_csv() {
    let d = TempDir::new().unwrap();
    let input = write(&d, "h.json", OSC_HALF);
    let out = d.path().join("s.csv");
    let o = run(&[
        "spectrum",
        "--in",
        s(&input),
        "--method",
        "exact",
        "--levels",
        "4",
        "--out",
        s(&out),
    ]);
    assert_eq!(code(&o), 0);
    let csv = fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "index,re,im,residual,method,n_points,contour_kind,imag_offset"
    );
    let re: Vec<f64> = lines
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(re, vec![1.0, 3.0, 5.0, 7.0]);
}

#[test]
fn fd_spectrum_is_deterministic() {
    let d = TempDir::new().unwrap();
    let input = write(&d, "h.json", OSC_HALF);
    let a = d.path().join("a.csv");
    let b = d.path().join("b.csv");
    for out in [&a, &b] {
        let o = run(&[
            "spectrum",
            "--in",
            s(&input),
            "--method",
            "fd",
            "--contour",
            "shifted:-10:10:-1:800",
            "--levels",
            "3",
            "--out",
            s(out),
        ]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    assert!(text.contains(",qr,800,shifted,-1.0000000000000000e0"));
}

#[test]
fn malformed_input_exits_2_without_output() {
    let d = TempDir::new().unwrap();
    let input = write(&d, "bad.json", "{\"mass\": 0.5, \"terms\": [");
    let out = d.path().join("report.json");
    let o = run(&[
        "verify",
        "--pt",
        s(&input),
        "--contour",
        "real:-5:5:200",
        "--tol",
        "1e-3",
        "--out",
        s(&out),
    ]);
    assert_eq!(code(&o), 2);
    assert!(!out.exists());
    let o = run(&[
        "verify",
        "--pt",
        s(&d.path().join("missing.json")),
        "--contour",
        "real:-5:5:200",
        "--out",
        s(&out),
    ]);
    assert_eq!(code(&o), 2);
    let unknown = write(
        &d,
        "u.json",
        r#"{"mass":0.5,"terms":[{"kind":"cosh","coef":[1,0]}]}"#,
    );
    let o = run(&[
        "spectrum",
        "--in",
        s(&unknown),
        "--method",
        "exact",
        "--out",
        s(&out),
    ]);
    assert_eq!(code(&o), 2);
    assert!(!out.exists());
}

#[test]
fn bad_flags_exit_2() {
    assert_eq!(code(&run(&["spectrum"])), 2);
    assert_eq!(
        code(&run(&[
            "experiment",
            "znojil",
            "--m2",
            "1",
            "--f",
            "0.1",
            "--tol",
            "-1",
            "--out",
            "x"
        ])),
        2
    );
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn overflow_exits_3() {
    let d = TempDir::new().unwrap();
    let input = write(
        &d,
        "h.json",
        r#"{"mass":0.5,"terms":[{"kind":"shifted_power","coef":[1,0],"exp":400}]}"#,
    );
    let out = d.path().join("s.csv");
    let o = run(&[
        "spectrum",
        "--in",
        s(&input),
        "--method",
        "fd",
        "--contour",
        "real:-100:100:64",
        "--out",
        s(&out),
    ]);
    assert_eq!(code(&o), 3);
    assert!(!out.exists());
}

#[test]
fn verify_report_and_strict_gate() {
    let d = TempDir::new().unwrap();
    let input = write(&d, "h.json", OSC_HALF);
    let out = d.path().join("r.json");
    let o = run(&[
        "verify",
        "--pt",
        s(&input),
        "--contour",
        "shifted:-10:10:-1:1000",
        "--tol",
        "1e-2",
        "--out",
        s(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["verdict"], "isospectral");
    let modes: Vec<&str> = v["pairings"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["mode"].as_str().unwrap())
        .collect();
    assert_eq!(modes, ["direct", "sign_flipped", "constant_shifted"]);
    assert_eq!(v["pairings"][1]["verdict"], "isospectral");
    assert_eq!(v["pairings"][0]["verdict"], "failed");

    // an impossible tolerance fails every mode
    let cubic = write(&d, "c.json", BB3);
    let args = [
        "verify",
        "--pt",
        s(&cubic),
        "--contour",
        "real:-6:6:600",
        "--tol",
        "1e-14",
        "--out",
        s(&out),
    ];
    assert_eq!(code(&run(&args)), 0);
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["verdict"], "failed");
    let mut strict = args.to_vec();
    strict.push("--strict");
    assert_eq!(code(&run(&strict)), 1);
}

#[test]
fn ortho_report() {
    let d = TempDir::new().unwrap();
    let input = write(
        &d,
        "h.json",
        r#"{"mass":0.5,"terms":[{"kind":"shifted_power","coef":[1,0],"exp":2}]}"#,
    );
    let out = d.path().join("o.json");
    let o = run(&[
        "ortho",
        "--in",
        s(&input),
        "--contour",
        "real:-10:10:1001",
        "--levels",
        "3",
        "--out",
        s(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["dim"], 3);
    assert!(v["dev_hermitian"].as_f64().unwrap() < 1e-6);
    assert!(v["dev_pt_plus"].as_f64().unwrap() > 0.1);
    let o = run(&[
        "ortho",
        "--in",
        s(&input),
        "--contour",
        "real:0:10:1001",
        "--out",
        s(&out),
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn convergence_csv_and_svg() {
    let d = TempDir::new().unwrap();
    let input = write(
        &d,
        "h.json",
        r#"{"mass":0.5,"terms":[{"kind":"shifted_power","coef":[1,0],"exp":2}]}"#,
    );
    let out = d.path().join("c.csv");
    let svg = d.path().join("c.svg");
    let o = run(&[
        "experiment",
        "convergence",
        "--in",
        s(&input),
        "--levels",
        "2",
        "--contour",
        "real:-10:10:200",
        "--out",
        s(&out),
        "--svg",
        s(&svg),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let csv = fs::read_to_string(&out).unwrap();
    assert_eq!(csv.lines().count(), 1 + 2 * 4);
    let order: f64 = csv
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .nth(5)
        .unwrap()
        .parse()
        .unwrap();
    assert!((1.8..=2.2).contains(&order), "{order}");
    let plot = fs::read_to_string(&svg).unwrap();
    assert!(plot.starts_with("<svg") && plot.contains("<polyline"));
}

#[test]
fn znojil_small() {
    let d = TempDir::new().unwrap();
    let out = d.path().join("z.json");
    let o = run(&[
        "experiment",
        "znojil",
        "--m2",
        "1",
        "--f",
        "0.1",
        "--levels",
        "2",
        "--step",
        "0.04",
        "--out",
        s(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["pairing"]["mode"], "constant_shifted");
    assert!(v["pairing"]["fitted_shift"].is_array());
    assert!(v["plus"]["truncation_shift"].is_array());
    assert!(v["minus"]["unreliable"].is_array());
}
