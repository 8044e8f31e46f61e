use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use specladder::args::{Format, ModelArgs, RunConfig};
use specladder::config::Config;
use specladder::render::SpectrumDoc;
use specladder::verify::{model_spectrum, verify, Verification};
use specladder_core::Model;

fn specladder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specladder"))
        .args(args)
        .env_remove("SPECLADDER_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "{contents}").unwrap();
    file
}

#[test]
fn ho_csv_rows() {
    let out = specladder(&["spectrum", "ho1d", "--levels", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "k,energy\n0,0.5\n1,1.5\n2,2.5\n");
}

#[test]
fn hydrogen_json_ground_state() {
    let out = specladder(&["spectrum", "hydrogen", "--N", "3", "--l", "0", "--levels", "1", "--format", "json"]);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["levels"][0]["energy"], -0.5);
    let keys: Vec<&String> = doc.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["model", "units", "params", "levels"]);
    let level_keys: Vec<&String> = doc["levels"][0].as_object().unwrap().keys().collect();
    assert_eq!(level_keys, ["k", "l", "n", "energy"]);
}

#[test]
fn angular_mu_column() {
    let out = specladder(&["spectrum", "angular", "--two-j", "2", "--format", "csv"]);
    let mu: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(mu, ["-1", "0", "1"]);
}

#[test]
fn perturb_is_an_alias() {
    let a = specladder(&["perturb", "--epsilon", "0.5", "--levels", "4"]);
    let b = specladder(&["spectrum", "perturbed-ho", "--epsilon", "0.5", "--levels", "4"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("9.375"));
}

#[test]
fn verify_iso_oscillator() {
    let out = specladder(&["verify", "iso-ho", "--N", "3", "--l", "0", "--levels", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Verification = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v.report.pass);
    assert!(v.report.max_rel_err() <= 1e-3);
}

#[test]
fn verify_perturbed_oscillator() {
    let out = specladder(&["verify", "perturbed-ho", "--epsilon", "1e-4", "--levels", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Verification = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v.report.max_rel_err() <= 5e-3);
    let r = specladder(&["verify", "perturbed-ho", "--levels", "4", "--richardson", "--format", "json"]);
    let v: Verification = serde_json::from_str(&stdout(&r)).unwrap();
    assert!(v.report.pass && v.report.max_rel_err() <= 1e-5);
}

#[test]
fn empty_verification_is_vacuous() {
    let out = specladder(&["verify", "ho1d", "--levels", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning"));
}

#[test]
fn validation_errors_name_the_flag() {
    let cases: [(&[&str], &str); 5] = [
        (&["spectrum", "iso-ho", "--N", "4"], "--N"),
        (&["spectrum", "hydrogen", "--N", "1", "--l", "1"], "--l"),
        (&["spectrum", "angular", "--two-j", "-3"], "--two-j"),
        (&["spectrum", "dirac", "--alpha", "0.5"], "--alpha"),
        (&["spectrum", "ho1d", "--epsilon", "1"], "--epsilon"),
    ];
    for (args, flag) in cases {
        let out = specladder(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = stderr(&out);
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(err.contains(flag), "{err}");
    }
}

#[test]
fn tolerance_failure_exits_one() {
    let out = specladder(&["verify", "iso-ho", "--levels", "3", "--tol-abs", "1e-9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn oracle_failure_exits_three() {
    let out = specladder(&["verify", "hydrogen", "--levels", "4", "--q-max", "5", "--points", "400"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("bound states"));
}

#[test]
fn config_file_overrides_defaults() {
    let tight = temp_file("oscillator.tol_abs = 1e-9\n");
    let out = Command::new(env!("CARGO_BIN_EXE_specladder"))
        .args(["verify", "iso-ho"])
        .env("SPECLADDER_CONFIG", tight.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let broken = temp_file("oscillator.points = \"many\"\n");
    let out = Command::new(env!("CARGO_BIN_EXE_specladder"))
        .args(["verify", "iso-ho"])
        .env("SPECLADDER_CONFIG", broken.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn consistency_examples() {
    let cases = [
        (r#"{"s": [0.5, 1.5], "a": [0.5, 0.5]}"#, 0, "consistent"),
        (r#"{"s": [1, 2], "a": [1, 0.5]}"#, 1, "violation at k=0"),
        (r#"{"coeffs": [1, 1, 0], "finite": true}"#, 0, "s_max = -a_max satisfied"),
        (r#"{"coeffs": [1, [0, 1], 0.5], "finite": true}"#, 1, "violation at k=2"),
        (r#"{"s": [1, 2]}"#, 2, ""),
        (r#"{"s": [1, 2], "a": [1]}"#, 2, ""),
        ("not json", 2, ""),
    ];
    for (input, code, text) in cases {
        let file = temp_file(input);
        let out = specladder(&["consistency", file.path().to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(code), "{input}");
        assert!(stdout(&out).contains(text), "{input}: {}", stdout(&out));
    }
}

#[test]
fn verify_all_in_declaration_order() {
    let out = specladder(&["verify", "--all"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let positions: Vec<usize> = Model::ALL
        .iter()
        .map(|m| text.find(&format!("== {m} ==")).expect("every model reported"))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(text.matches("result: PASS").count(), 7);

    let json = specladder(&["verify", "--all", "--format", "json"]);
    assert_eq!(stdout(&json).lines().count(), 7);
    for line in stdout(&json).lines() {
        let _: Verification = serde_json::from_str(line).unwrap();
    }
    assert_eq!(specladder(&["verify", "--all", "--levels", "2"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "dirac", "--l", "1", "--levels", "2", "--points", "1500"];
    assert_eq!(stdout(&specladder(&args)), stdout(&specladder(&args)));
}

#[test]
fn json_round_trips() {
    let config = Config::defaults();
    for model in Model::ALL {
        let run = RunConfig::defaults(model, Format::Json);
        let doc = SpectrumDoc::new(&model_spectrum(&run).unwrap(), false);
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(serde_json::from_str::<SpectrumDoc>(&text).unwrap(), doc, "{model}");

        let verify_run = RunConfig::resolve(model, &ModelArgs::default(), true).unwrap();
        let (_, v) = verify(&verify_run, &config).unwrap();
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<Verification>(&text).unwrap(), v, "{model}");
    }
}
