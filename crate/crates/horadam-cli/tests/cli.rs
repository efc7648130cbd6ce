//! Scripted invocations of the binary: output shapes and the exit-code
//! contract (0 success, 1 violation, 2 usage/config/parse error).

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_horadam"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn term_pell() {
    let out = run(&["term", "--preset", "pell", "--n", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "29");
}

#[test]
fn term_negative_index_and_custom_params() {
    let out = run(&["term", "--preset", "lucas", "--n", "-3"]);
    assert_eq!(stdout(&out).trim(), "-4");
    let out = run(&[
        "term", "--a", "1+i", "--b", "2", "--p", "1+i", "--q", "-i", "--n", "3",
    ]);
    assert_eq!(code(&out), 0);
    // w2 = p·b - q·a = (2+2i) - 1-i... exact: (1+i)·2 - (-i)(1+i) = 2+2i + i-1 = 1+3i
    // w3 = p·w2 - q·w1 = (1+i)(1+3i) + i·2 = 1+4i-3 + 2i = -2+6i
    assert_eq!(stdout(&out).trim(), "-2+6i");
}

#[test]
fn term_respects_index_guard() {
    let out = run(&["term", "--preset", "pell", "--n", "50", "--max-index", "10"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("guard"));
}

#[test]
fn check_pass_skip_and_violation() {
    let out = run(&[
        "check", "--id", "kernel-eq-11", "--preset", "fibonacci", "--m", "3", "--r", "2",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "PASS lhs=rhs=6");

    let out = run(&[
        "check", "--id", "thm-xvb2v42", "--preset", "fibonacci", "--r", "1", "--m", "0", "--k",
        "0",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "SKIP precondition w_{r-1}!=0");

    // the quarantined printed spelling violates at odd k
    let out = run(&[
        "check", "--id", "eq-d00yx5i-printed", "--preset", "fibonacci", "--m", "1", "--r", "1",
        "--k", "1",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("VIOLATION"));
}

#[test]
fn check_values_round_trip_through_the_scalar_grammar() {
    let out = run(&[
        "check", "--id", "kernel-eq-12", "--preset", "custom", "--a", "1+i", "--b", "2", "--p",
        "1+i", "--q", "-i", "--m", "2", "--n", "3", "--r", "1",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let value = text.trim().strip_prefix("PASS lhs=rhs=").expect("pass line");
    let parsed = horadam::parse_scalar(value).expect("round-trippable scalar");
    assert_eq!(horadam::format_scalar(&parsed), value);
}

#[test]
fn check_rejects_unused_and_missing_index_flags() {
    // kernel-eq-11 takes m and r only
    let out = run(&[
        "check", "--id", "kernel-eq-11", "--preset", "fibonacci", "--m", "3", "--r", "2", "--k",
        "1",
    ]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not take --k"));

    let out = run(&["check", "--id", "kernel-eq-11", "--preset", "fibonacci", "--m", "3"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("requires --r"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&["check", "--id", "nope", "--preset", "pell", "--m", "1"])), 2);
    assert_eq!(code(&run(&["term", "--preset", "tribonacci", "--n", "1"])), 2);
    // no floating point anywhere
    assert_eq!(code(&run(&["term", "--a", "1.5", "--b", "1", "--p", "1", "--q", "1", "--n", "1"])), 2);
    // q = 0 is rejected at construction
    assert_eq!(code(&run(&["term", "--a", "0", "--b", "1", "--p", "1", "--q", "0", "--n", "1"])), 2);
    // stray scalar flag with a fixed preset
    assert_eq!(code(&run(&["term", "--preset", "pell", "--p", "2", "--n", "1"])), 2);
    // unknown subcommand / flags are clap usage errors
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn identities_listing_matches_the_catalog() {
    let out = run(&["identities"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), horadam::identities::registry().len());
    let kernel12 = lines
        .iter()
        .find(|l| l.starts_with("kernel-eq-12"))
        .expect("kernel-eq-12 listed");
    assert!(kernel12.contains("e=pab-qa^2-b^2"));
    assert!(text.contains("[quarantined]"));
}

#[test]
fn every_listed_identity_is_accepted_by_check() {
    let text = stdout(&run(&["identities"]));
    for line in text.lines() {
        let id = line.split_whitespace().next().unwrap();
        let indices_field = line
            .split_whitespace()
            .find(|f| f.starts_with("indices="))
            .unwrap()
            .trim_start_matches("indices=");
        let params_field = line
            .split_whitespace()
            .find(|f| f.starts_with("params="))
            .unwrap()
            .trim_start_matches("params=");
        let mut args: Vec<String> = vec!["check".into(), "--id".into(), id.into()];
        match params_field {
            "any" | "p=1,q=-1" => {
                args.extend(["--preset".into(), "fibonacci".into()]);
            }
            preset => args.extend(["--preset".into(), preset.into()]),
        }
        if indices_field != "-" {
            for axis in indices_field.split(',') {
                args.push(format!("--{}", axis));
                args.push("2".into());
            }
        }
        let arg_refs: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
        let out = run(&arg_refs);
        let result = stdout(&out);
        assert!(
            result.starts_with("PASS") || result.starts_with("SKIP") || result.starts_with("VIOLATION"),
            "{}: unexpected output {:?} / {}",
            id,
            result,
            String::from_utf8_lossy(&out.stderr)
        );
        // quarantined printed spellings may violate; everything else must not
        if !line.contains("[quarantined]") {
            assert_ne!(code(&out), 1, "{} violated: {}", id, result);
        }
    }
}

#[test]
fn verify_runs_a_config_grid_and_writes_json() {
    let dir = std::env::temp_dir().join(format!("horadam-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let grid = dir.join("grid.conf");
    std::fs::write(
        &grid,
        "params = fibonacci, lucas\nm = -2..3\nn = -1..2\nr = 1..3\nk = 0..2\nwitness_limit = 4\n",
    )
    .unwrap();
    let out_path = dir.join("report.json");
    let out = run(&[
        "verify",
        "--grid",
        grid.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
        "--jobs",
        "2",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let table = stdout(&out);
    assert!(table.contains("identity"));
    assert!(table.contains("total"));
    assert!(table.contains("quarantined: "));
    let json = std::fs::read_to_string(&out_path).unwrap();
    for field in ["\"identity\"", "\"pass\"", "\"skip\"", "\"violation\"", "\"witnesses\""] {
        assert!(json.contains(field), "missing {}", field);
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_rejects_bad_grid_files() {
    let dir = std::env::temp_dir().join(format!("horadam-cli-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let grid = dir.join("grid.conf");
    std::fs::write(&grid, "k = -1..2\n").unwrap();
    assert_eq!(code(&run(&["verify", "--grid", grid.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["verify", "--grid", "/no/such/file"])), 2);
    assert_eq!(code(&run(&["verify", "--quarantine", "not-an-id"])), 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bench_reports_rows_for_each_k() {
    let out = run(&[
        "bench", "--id", "eq-f9x35z3", "--preset", "fibonacci", "--k", "4,16",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("closed(ms)"));
    assert_eq!(text.lines().count(), 3); // header + one row per k
}
