//! Binary-level tests of the `obo` command surface and exit codes.

mod support;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use support::{fixtures_dir, write_synth_corpus};

fn obo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_obo"))
        .args(args)
        .env_remove("OBO_SEED")
        .output()
        .expect("binary runs")
}

fn obo_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_obo"))
        .current_dir(dir)
        .args(args)
        .env_remove("OBO_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn help_exits_zero_everywhere() {
    assert_eq!(code(&obo(&["--help"])), 0);
    for sub in [
        "mutate", "split", "vocab", "encode", "train", "eval", "predict",
    ] {
        let out = obo(&[sub, "--help"]);
        assert_eq!(code(&out), 0, "{sub} --help");
        assert!(stdout(&out).contains("--"));
    }
}

#[test]
fn unknown_flags_exit_64() {
    assert_eq!(code(&obo(&["mutate", "--no-such-flag"])), 64);
    assert_eq!(code(&obo(&["frobnicate"])), 64);
    assert_eq!(code(&obo(&[])), 64);
}

#[test]
fn mutate_on_the_listing_directory_emits_one_pair() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("corpus.tsv");
    let listing = fixtures_dir().join("listing");
    let out = obo(&[
        "mutate",
        "--in",
        listing.to_str().unwrap(),
        "--out",
        out_file.to_str().unwrap(),
        "--seed",
        "5",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&out_file).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].contains("\t0\tFORless\t"));
    assert!(lines[1].contains("\t1\tFORlessEquals\t"));
    // Distribution sidecar rides along.
    let sidecar = std::fs::read_to_string(dir.path().join("corpus.tsv.dist.tsv")).unwrap();
    assert!(sidecar.contains("less\t1\t100.00%"));
}

#[test]
fn mutate_on_an_empty_directory_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty");
    std::fs::create_dir_all(&empty).unwrap();
    let out_file = dir.path().join("corpus.tsv");
    let out = obo(&[
        "mutate",
        "--in",
        empty.to_str().unwrap(),
        "--out",
        out_file.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn context_filter_that_matches_nothing_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("corpus.tsv");
    let listing = fixtures_dir().join("listing");
    // The listing corpus only has a FOR site.
    let out = obo(&[
        "mutate",
        "--in",
        listing.to_str().unwrap(),
        "--out",
        out_file.to_str().unwrap(),
        "--only-context",
        "DO",
    ]);
    assert_eq!(code(&out), 2);
    let out = obo(&[
        "mutate",
        "--in",
        listing.to_str().unwrap(),
        "--out",
        out_file.to_str().unwrap(),
        "--only-context",
        "NOPE",
    ]);
    assert_eq!(code(&out), 64, "bad context value is a usage error");
}

/// Full pipeline on a small synthetic corpus, exercising each subcommand
/// through the binary.
fn run_pipeline(dir: &Path, tag: &str, seed: &str) -> PathBuf {
    let src = dir.join(format!("src-{tag}"));
    write_synth_corpus(&src, 60, 6, 21);
    let run = dir.join(format!("run-{tag}"));
    std::fs::create_dir_all(&run).unwrap();
    let p = |name: &str| run.join(name).to_str().unwrap().to_string();
    let steps: Vec<Vec<String>> = vec![
        vec![
            "mutate".into(),
            "--in".into(),
            src.to_str().unwrap().into(),
            "--out".into(),
            p("corpus.tsv"),
            "--seed".into(),
            seed.into(),
        ],
        vec![
            "split".into(),
            "--in".into(),
            p("corpus.tsv"),
            "--train".into(),
            p("tr.tsv"),
            "--val".into(),
            p("va.tsv"),
            "--test".into(),
            p("te.tsv"),
            "--seed".into(),
            seed.into(),
        ],
        vec![
            "vocab".into(),
            "--corpus".into(),
            p("tr.tsv"),
            "--out".into(),
            p("vocab.txt"),
        ],
        vec![
            "encode".into(),
            "--corpus".into(),
            p("tr.tsv"),
            "--vocab".into(),
            p("vocab.txt"),
            "--out".into(),
            p("tr.enc"),
            "--seed".into(),
            seed.into(),
        ],
        vec![
            "encode".into(),
            "--corpus".into(),
            p("va.tsv"),
            "--vocab".into(),
            p("vocab.txt"),
            "--out".into(),
            p("va.enc"),
            "--seed".into(),
            seed.into(),
        ],
        vec![
            "encode".into(),
            "--corpus".into(),
            p("te.tsv"),
            "--vocab".into(),
            p("vocab.txt"),
            "--out".into(),
            p("te.enc"),
            "--seed".into(),
            seed.into(),
        ],
        vec![
            "train".into(),
            "--train".into(),
            p("tr.enc"),
            "--val".into(),
            p("va.enc"),
            "--vocab".into(),
            p("vocab.txt"),
            "--out-weights".into(),
            p("weights.obo"),
            "--embed-dim".into(),
            "8".into(),
            "--max-epochs".into(),
            "2".into(),
            "--seed".into(),
            seed.into(),
        ],
    ];
    for step in steps {
        let args: Vec<&str> = step.iter().map(String::as_str).collect();
        let out = obo_in(dir, &args);
        assert_eq!(
            code(&out),
            0,
            "step {args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    run
}

#[test]
fn pipeline_subcommands_compose_and_rerun_identically() {
    let dir = tempfile::tempdir().unwrap();
    let run = run_pipeline(dir.path(), "a", "9");
    // Train history sidecar exists next to the weights.
    assert!(run.join("weights.obo.history.tsv").is_file());

    // Eval: CSV report with the exact header, also written to a file.
    let out = obo(&[
        "eval",
        "--weights",
        run.join("weights.obo").to_str().unwrap(),
        "--test",
        run.join("te.enc").to_str().unwrap(),
        "--group-by",
        "context",
        "--format",
        "csv",
        "--out",
        run.join("report.csv").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let report = stdout(&out);
    assert!(report.starts_with("context_type,tp,tn,fp,fn,total,accuracy,recall,precision,f1\n"));
    assert!(report.lines().last().unwrap().starts_with("Total,"));
    assert_eq!(
        std::fs::read_to_string(run.join("report.csv")).unwrap(),
        report
    );

    // Predict over the listing: one line per method, method-level verdicts.
    let out = obo(&[
        "predict",
        "--weights",
        run.join("weights.obo").to_str().unwrap(),
        "--vocab",
        run.join("vocab.txt").to_str().unwrap(),
        "--in",
        fixtures_dir().join("listing").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let line = text
        .lines()
        .find(|l| l.contains("setContents"))
        .expect("setContents scored");
    assert!(line.starts_with("Loader.java:"), "line was {line}");
    assert!(line.contains("p=0."), "probability printed: {line}");
    assert!(line.ends_with("FLAGGED") || line.ends_with("ok"));

    // Rerunning the pipeline with the same seed reproduces the weights.
    let dir2 = tempfile::tempdir().unwrap();
    let other = run_pipeline(dir2.path(), "a", "9");
    assert_eq!(
        std::fs::read(run.join("weights.obo")).unwrap(),
        std::fs::read(other.join("weights.obo")).unwrap(),
        "same seed, same bytes"
    );
}

#[test]
fn encode_reports_dropped_examples_and_empty_output_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("corpus.tsv");
    let listing = fixtures_dir().join("listing");
    assert_eq!(
        code(&obo(&[
            "mutate",
            "--in",
            listing.to_str().unwrap(),
            "--out",
            out_file.to_str().unwrap(),
        ])),
        0
    );
    let vocab = dir.path().join("vocab.txt");
    assert_eq!(
        code(&obo(&[
            "vocab",
            "--corpus",
            out_file.to_str().unwrap(),
            "--out",
            vocab.to_str().unwrap(),
        ])),
        0
    );
    // A two-node path cap prunes every pair, so every example drops.
    let enc = dir.path().join("all.enc");
    let out = obo(&[
        "encode",
        "--corpus",
        out_file.to_str().unwrap(),
        "--vocab",
        vocab.to_str().unwrap(),
        "--out",
        enc.to_str().unwrap(),
        "--max-path-length",
        "2",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("encoded=0 dropped=2"));
}

#[test]
fn predict_marks_unencodable_methods_as_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let run = run_pipeline(dir.path(), "b", "13");
    let out = obo(&[
        "predict",
        "--weights",
        run.join("weights.obo").to_str().unwrap(),
        "--vocab",
        run.join("vocab.txt").to_str().unwrap(),
        "--in",
        fixtures_dir().join("listing").to_str().unwrap(),
        "--max-path-length",
        "2",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("skipped"));
}

#[test]
fn missing_inputs_exit_one() {
    let out = obo(&[
        "mutate",
        "--in",
        "/nonexistent/path",
        "--out",
        "/tmp/never.tsv",
    ]);
    assert_eq!(code(&out), 1);
    let out = obo(&[
        "eval",
        "--weights",
        "/nonexistent/weights.obo",
        "--test",
        "/nonexistent/te.enc",
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn seed_falls_back_to_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let listing = fixtures_dir().join("listing");
    let with_flag = dir.path().join("flag.tsv");
    let with_env = dir.path().join("env.tsv");
    assert_eq!(
        code(&obo(&[
            "mutate",
            "--in",
            listing.to_str().unwrap(),
            "--out",
            with_flag.to_str().unwrap(),
            "--seed",
            "77",
        ])),
        0
    );
    let out = Command::new(env!("CARGO_BIN_EXE_obo"))
        .args([
            "mutate",
            "--in",
            listing.to_str().unwrap(),
            "--out",
            with_env.to_str().unwrap(),
        ])
        .env("OBO_SEED", "77")
        .output()
        .unwrap();
    assert_eq!(out.status.code().unwrap(), 0);
    assert_eq!(
        std::fs::read(&with_flag).unwrap(),
        std::fs::read(&with_env).unwrap()
    );
}

#[test]
fn incompatible_vocabulary_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let run = run_pipeline(dir.path(), "c", "17");
    // A fresh tiny vocabulary disagrees with the trained weights.
    let tiny_vocab = dir.path().join("tiny.txt");
    std::fs::write(&tiny_vocab, "token-vocab 2\npath-vocab 2\n").unwrap();
    let out = obo(&[
        "predict",
        "--weights",
        run.join("weights.obo").to_str().unwrap(),
        "--vocab",
        tiny_vocab.to_str().unwrap(),
        "--in",
        fixtures_dir().join("listing").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn eval_on_an_empty_test_file_prints_header_and_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let run = run_pipeline(dir.path(), "d", "23");
    let empty = dir.path().join("empty.enc");
    std::fs::write(&empty, "").unwrap();
    let out = obo(&[
        "eval",
        "--weights",
        run.join("weights.obo").to_str().unwrap(),
        "--test",
        empty.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(code(&out), 2);
    assert_eq!(
        stdout(&out),
        "context_type,tp,tn,fp,fn,total,accuracy,recall,precision,f1\n"
    );
}
