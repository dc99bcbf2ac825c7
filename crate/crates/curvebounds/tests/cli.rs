//! Golden tests for the command-line interface: output strings, formats,
//! exit codes, environment overrides, and figure files.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_curvebounds"));
    cmd.env_remove("CURVEBOUNDS_MAX_ENUM");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("curvebounds-cli-{tag}-{}", std::process::id()));
    fs::create_dir_all(&dir).expect("scratch dir");
    dir
}

#[test]
fn bound_text_reports_the_sharp_bound() {
    let out = run(&["bound", "--d1", "6", "--d2", "8"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("B=21"), "{text}");
    assert!(text.contains("best proved: 21"), "{text}");
    assert!(text.contains("case XI"), "{text}");
}

#[test]
fn bound_json_carries_both_bound_fields() {
    let out = run(&["bound", "--d1", "5", "--d2", "5", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("\"b\":9"), "{text}");
    assert!(text.contains("\"b_g\":9"), "{text}");
    assert!(text.contains("\"best_proved\":9"), "{text}");
}

#[test]
fn bound_text_cites_the_del_pezzo_attainment_for_odd_pairs() {
    let out = run(&["bound", "--d1", "7", "--d2", "7"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("case XII"), "{text}");
    assert!(text.contains("del Pezzo"), "{text}");
    assert!(text.contains("best proved: 19"), "{text}");
}

#[test]
fn bound_flags_nonbinding_genus_bound() {
    let out = run(&["bound", "--d1", "30", "--d2", "450"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("best proved: 12150"), "{text}");
    assert!(text.contains("non-binding"), "{text}");
}

#[test]
fn bound_below_four_reports_only_the_product() {
    let out = run(&["bound", "--d1", "2", "--d2", "9"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("informational"), "{text}");
    assert!(text.contains("best proved: 18"), "{text}");
}

#[test]
fn bound_rejects_degenerate_input() {
    let out = run(&["bound", "--d1", "0", "--d2", "4"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("at least 1"), "{}", stderr(&out));

    let out = run(&["bound", "--d1", "1", "--d2", "2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn bound_csv_has_header_and_one_row() {
    let out = run(&["bound", "--d1", "6", "--d2", "8", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "d1,d2,trivial,b_dg,b,b_g,g_extremal_sum,best_proved\n6,8,48,24,21,19,18,21\n"
    );
}

#[test]
fn hvec_genus_prints_the_bare_number() {
    let out = run(&["hvec", "genus", "1,3,5,4,3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "22\n");

    let out = run(&["hvec", "genus", "1,2,3,3,1", "--defect", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "11\n");
}

#[test]
fn hvec_genus_rejects_malformed_vectors() {
    for bad in ["2,3", "1,,3", "1,x,3", ""] {
        let out = run(&["hvec", "genus", bad]);
        assert_eq!(code(&out), 2, "literal {bad:?}");
    }
}

#[test]
fn hvec_enumerate_streams_vectors_with_genera() {
    let out = run(&["hvec", "enumerate", "--d", "9"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1,3,4,1 g=6\n1,3,5 g=5\n");

    let out = run(&["hvec", "enumerate", "--d", "12", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("hvector,genus"));
    assert!(text.lines().any(|l| l.starts_with("1,3,4,3,1,")), "{text}");

    let out = run(&["hvec", "enumerate", "--d", "8"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn hvec_enumerate_honors_the_cap_override() {
    let out = bin()
        .args(["hvec", "enumerate", "--d", "16"])
        .env("CURVEBOUNDS_MAX_ENUM", "15")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("15"), "{}", stderr(&out));

    let out = bin()
        .args(["hvec", "enumerate", "--d", "15"])
        .env("CURVEBOUNDS_MAX_ENUM", "15")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);

    // Values below the floor fall back to the default cap.
    let out = bin()
        .args(["hvec", "enumerate", "--d", "10"])
        .env("CURVEBOUNDS_MAX_ENUM", "5")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn hvec_extremal_prints_vector_and_genus() {
    let out = run(&["hvec", "extremal", "--d", "20"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1,3,4,4,4,3,1\ng_extremal=41\n");
}

#[test]
fn surface_scroll_renders_the_maximizing_classes() {
    let out = run(&["surface", "scroll", "--d1", "6", "--d2", "8"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "max=21 at (3,1): 3h and 7h-6e\n");

    let out = run(&["surface", "scroll", "--d1", "6", "--d2", "8", "--bruteforce"]);
    assert!(stdout(&out).contains("bruteforce=21"));
}

#[test]
fn surface_cone_prints_bound_first() {
    let out = run(&[
        "surface", "cone", "--d1", "6", "--d2", "6", "--vertex1", "false", "--vertex2", "false",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().next(), Some("12"));

    let out = run(&[
        "surface", "cone", "--d1", "6", "--d2", "9", "--vertex1", "true", "--vertex2", "true",
    ]);
    assert_eq!(stdout(&out).lines().next(), Some("16"));

    // A vertex-avoiding curve needs degree divisible by 3.
    let out = run(&["surface", "cone", "--d1", "5", "--d2", "6"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn surface_delpezzo_reports_intersection_and_genera() {
    let out = run(&["surface", "delpezzo", "--k", "2", "--l", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("intersection = 13"), "{text}");
    assert!(text.contains("genus 0"), "{text}");
}

#[test]
fn verify_table1_flags_the_misprint_and_exits_zero() {
    let out = run(&["verify", "table1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("48/49 match; (100,100) flagged"), "{text}");
    assert!(text.contains("printed 9700, computed 9606"), "{text}");
}

#[test]
fn verify_cases_reports_zero_failures() {
    let out = run(&["verify", "cases", "--max", "200"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("identity: 0 failures"), "{text}");
    assert!(text.contains("threshold: 0 failures"), "{text}");

    let out = run(&["verify", "cases", "--max", "9"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_extremality_states_the_conclusion() {
    let out = run(&["verify", "extremality", "--max", "20"]);
    assert_eq!(code(&out), 0);
    assert!(
        stdout(&out).contains("max genus = g_extremal for all d"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn verify_acm_sweep_confirms_the_expected_profile() {
    let out = run(&["verify", "acm-sweep", "--max", "20"]);
    assert_eq!(code(&out), 0);
    assert!(
        stdout(&out).contains("expected profile: true"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn verify_rejects_csv_format() {
    let out = run(&["verify", "table1", "--format", "csv"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not available"), "{}", stderr(&out));
}

#[test]
fn figures_write_deterministic_files() {
    let dir = scratch_dir("figs");
    let first = dir.join("one");
    let second = dir.join("two");
    for prefix in [&first, &second] {
        let out = run(&[
            "figures",
            "--reference",
            "b",
            "--d-min",
            "4",
            "--d-max",
            "40",
            "--out-prefix",
            prefix.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
        let listed = stdout(&out);
        for suffix in ["_sign.ppm", "_mag.pgm", ".csv"] {
            assert!(listed.contains(suffix), "{listed}");
        }
    }
    for suffix in ["_sign.ppm", "_mag.pgm", ".csv"] {
        let a = fs::read(format!("{}{suffix}", first.display())).unwrap();
        let b = fs::read(format!("{}{suffix}", second.display())).unwrap();
        assert_eq!(a, b, "{suffix} must be byte-identical across runs");
    }

    let ppm = fs::read_to_string(format!("{}_sign.ppm", first.display())).unwrap();
    let mut lines = ppm.lines();
    assert_eq!(lines.next(), Some("P3"));
    assert_eq!(lines.next(), Some("37 37"));
    assert_eq!(lines.next(), Some("255"));

    let csv = fs::read_to_string(format!("{}.csv", first.display())).unwrap();
    assert_eq!(csv.lines().next(), Some("d1,d2,b_dg,b,b_g,sign,magnitude"));
    assert_eq!(csv.lines().count(), 1 + 37 * 37);

    fs::remove_dir_all(&dir).ok();
}

#[test]
fn figures_reject_out_of_range_domains() {
    let dir = scratch_dir("figs-bad");
    let prefix = dir.join("bad");
    let out = run(&[
        "figures",
        "--reference",
        "bdg",
        "--d-min",
        "4",
        "--d-max",
        "2001",
        "--out-prefix",
        prefix.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);

    let out = run(&[
        "figures",
        "--reference",
        "bdg",
        "--d-min",
        "3",
        "--d-max",
        "10",
        "--out-prefix",
        prefix.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    fs::remove_dir_all(&dir).ok();
}
