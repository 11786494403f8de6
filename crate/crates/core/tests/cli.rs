use std::path::Path;
use std::process::{Command, Output};

use presspose::adapter::{mock, MockSpec};
use presspose::annotation::{propagate, AnnotationStore};
use presspose::checkpoint::load_polishnet;
use presspose::colormap::colormap_by_name;
use presspose::config::ECHO_FILE;
use presspose::dataset::{discover_sequences, load_samples, load_store, subjects, STORE_FILE};
use presspose::evaluation::{evaluate_pipeline, parse_summary_csv, summary_csv, Polish};
use presspose::pressure::{load_sequence, median_filter_3d, trim_transitions};
use presspose::training::make_split_plan;

const SMALL: &str =
    "working_size = [32, 64]\n\n[polishnet]\nchannel_widths = [4, 4, 4]\n\n[train]\nmax_iterations = 3\n";

fn presspose(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_presspose"))
        .args(args)
        .env_remove("PRESSPOSE_DATA_DIR")
        .env("RUST_LOG", "warn")
        .output()
        .unwrap()
}

fn ok(args: &[&str]) -> Output {
    let out = presspose(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Small config plus a synthetic data directory with four subjects.
fn setup(root: &Path, seed_only: bool) -> (std::path::PathBuf, std::path::PathBuf) {
    let config = root.join("small.toml");
    std::fs::write(&config, SMALL).unwrap();
    let data = root.join("data");
    let mut args = vec![
        "--config",
        s(&config),
        "data",
        "synth",
        "--out",
        s(&data),
        "--frames",
        "3",
        "--postures",
        "1",
    ];
    if seed_only {
        args.push("--seed-only");
    }
    ok(&args);
    (config, data)
}

#[test]
fn help_lists_every_subcommand() {
    let out = ok(&["--help"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for cmd in [
        "data",
        "annotate",
        "train",
        "sweep-lambda",
        "eval",
        "benchmark-colormaps",
        "polish",
        "serve",
    ] {
        assert!(text.contains(cmd), "help lacks {cmd}");
    }
}

#[test]
fn missing_data_directory_is_a_usage_error() {
    let out = presspose(&["train", "--out", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--data"));
}

#[test]
fn runtime_errors_are_json_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let (config, data) = setup(dir.path(), false);
    let report = dir.path().join("r");
    let out = presspose(&[
        "--config",
        s(&config),
        "eval",
        "--data",
        s(&data),
        "--report",
        s(&report),
        "--adapter",
        "bogus",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let line = String::from_utf8_lossy(&out.stderr).lines().last().unwrap().to_string();
    let err: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(err["error"], "config");
    assert!(err["message"].as_str().unwrap().contains("bogus"));

    let out = presspose(&[
        "data",
        "colorize",
        "--input",
        s(&dir.path().join("none.txt")),
        "--out",
        s(&report),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains(r#""error":"io""#));
}

#[test]
fn clean_matches_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let (_, data) = setup(dir.path(), false);
    let input = data.join("s01_p01.txt");
    let cleaned = dir.path().join("clean").join("s01_p01.txt");
    // three frames leave one after trimming one from each end
    ok(&[
        "data",
        "clean",
        "--input",
        s(&input),
        "--out",
        s(&cleaned),
        "--trim",
        "1",
    ]);
    let want = trim_transitions(&median_filter_3d(&load_sequence(&input).unwrap()), 1).unwrap();
    assert_eq!(load_sequence(&cleaned).unwrap(), want);
    assert!(cleaned.parent().unwrap().join(ECHO_FILE).is_file());
}

#[test]
fn propagate_and_export_match_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let (config, data) = setup(dir.path(), true);
    let size = (32, 64);
    let mut want = load_store(&data, size).unwrap();
    assert_eq!(want.len(), 4);
    for seq in discover_sequences(&data).unwrap().values() {
        want = propagate(&want, seq).unwrap();
    }
    ok(&["--config", s(&config), "annotate", "propagate", "--data", s(&data)]);
    let got = AnnotationStore::load(&data.join(STORE_FILE), size).unwrap();
    assert_eq!(got, want);
    assert_eq!(got.len(), 12);

    let csv = dir.path().join("labels.csv");
    let out = Command::new(env!("CARGO_BIN_EXE_presspose"))
        .args(["annotate", "export", "--out", s(&csv)])
        .env("PRESSPOSE_DATA_DIR", &data)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 1 + 12 * 14);
    assert_eq!(text.matches(",manual").count(), 4 * 14);
}

#[test]
fn eval_report_matches_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let (config, data) = setup(dir.path(), false);
    let run = dir.path().join("run");
    ok(&["--config", s(&config), "train", "--data", s(&data), "--out", s(&run)]);
    let ckpt = run.join("polishnet.ppck");
    let report = dir.path().join("report");
    ok(&[
        "--config",
        s(&config),
        "eval",
        "--data",
        s(&data),
        "--checkpoint",
        s(&ckpt),
        "--report",
        s(&report),
    ]);
    for f in [
        "summary.csv",
        "folds.csv",
        "report.md",
        "pck_curves.csv",
        "report.json",
        ECHO_FILE,
    ] {
        assert!(report.join(f).is_file(), "missing {f}");
    }

    let samples = load_samples(&data, &colormap_by_name("viridis").unwrap(), (32, 64)).unwrap();
    let plan = make_split_plan(&subjects(&samples), 2, 0).unwrap();
    let polish = load_polishnet(&ckpt).unwrap();
    let adapter = mock(&MockSpec::new(0)).unwrap();
    let want = evaluate_pipeline(Some(&polish as &dyn Polish), &adapter, &samples, &plan).unwrap();
    let got = parse_summary_csv(&std::fs::read_to_string(report.join("summary.csv")).unwrap()).unwrap();
    assert_eq!(got, parse_summary_csv(&summary_csv(&want)).unwrap());
    assert_eq!(got.len(), 2 * 15);
}

#[test]
fn echoed_config_reproduces_a_run() {
    let dir = tempfile::tempdir().unwrap();
    let (config, data) = setup(dir.path(), false);
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    ok(&[
        "--config",
        s(&config),
        "train",
        "--data",
        s(&data),
        "--out",
        s(&a),
        "--seed",
        "3",
        "--lambda-pixel",
        "0.001",
    ]);
    let echo = a.join(ECHO_FILE);
    let text = std::fs::read_to_string(&echo).unwrap();
    assert!(text.contains("lambda_pixel = 0.001"));
    ok(&["--config", s(&echo), "train", "--data", s(&data), "--out", s(&b)]);
    for f in ["polishnet.ppck", "loss_trace.csv", ECHO_FILE] {
        assert_eq!(
            std::fs::read(a.join(f)).unwrap(),
            std::fs::read(b.join(f)).unwrap(),
            "{f} differs"
        );
    }
}

#[test]
fn benchmark_and_polish_write_their_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let (config, data) = setup(dir.path(), false);
    let bench = dir.path().join("bench");
    ok(&[
        "--config",
        s(&config),
        "benchmark-colormaps",
        "--data",
        s(&data),
        "--maps",
        "viridis,jet,gray",
        "--out",
        s(&bench),
    ]);
    let csv = std::fs::read_to_string(bench.join("colormap_benchmark.csv")).unwrap();
    assert_eq!(csv.lines().count(), 4);

    let run = dir.path().join("run");
    ok(&[
        "--config",
        s(&config),
        "train",
        "--data",
        s(&data),
        "--out",
        s(&run),
        "--iterations",
        "1",
    ]);
    let pol = dir.path().join("polished");
    ok(&[
        "polish",
        "--checkpoint",
        s(&run.join("polishnet.ppck")),
        "--input",
        s(&data.join("s02_p01.txt")),
        "--out",
        s(&pol),
    ]);
    let img = image::open(pol.join("polished_0002.png")).unwrap();
    assert_eq!((img.width(), img.height()), (32, 64));
}
