//! Command-line entry point. Parse errors exit 2; runtime errors print one
//! JSON object `{"error": <kind>, "message": <text>}` to stderr and exit 1.

use std::net::SocketAddr;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::adapter::{load_adapter, AdapterKind, MultiStageNet};
use crate::annotation::{self, AnnotationStore, Provenance};
use crate::checkpoint::{load_polishnet, save_polishnet, DType};
use crate::colormap::{colormap_by_name, list_colormaps, Colormap};
use crate::config::RunConfig;
use crate::dataset::{self, discover_sequences, filter_subjects, load_samples, load_store, subjects, STORE_FILE};
use crate::error::{Error, Result};
use crate::evaluation::{
    adapter_swap_report, benchmark_csv, colormap_benchmark, emit_report, evaluate_pipeline, Polish, ReportFormat,
};
use crate::polishnet::{init_params, Mode};
use crate::pressure::{
    colorize, load_sequence, median_filter_3d, save_sequence, trim_transitions, PressureFrame, SequenceFormat,
};
use crate::service::{serve, AppState, ServiceConfig};
use crate::skeleton::PartName;
use crate::synthetic::synth_sequence;
use crate::training::{lambda_sweep, make_split_plan, sweep_csv, sweep_markdown, train, SweepSetup};

pub const POLISHNET_FILE: &str = "polishnet.ppck";
pub const TRACE_FILE: &str = "loss_trace.csv";

#[derive(Debug, Parser)]
#[command(
    name = "presspose",
    version,
    about = "Pose estimation from in-bed pressure maps with a learned polishing stage"
)]
pub struct Cli {
    /// TOML run configuration; flags override its values.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Clean, colorize or synthesize pressure recordings.
    #[command(subcommand)]
    Data(DataCommand),
    /// Propagate or export keypoint annotations.
    #[command(subcommand)]
    Annotate(AnnotateCommand),
    /// Train PolishNet against a frozen pose module.
    Train(TrainArgs),
    /// Train once per λ_pixel value and tabulate train/test AUC.
    SweepLambda(SweepArgs),
    /// Evaluate pose module alone and with a PolishNet checkpoint.
    Eval(EvalArgs),
    /// Rank colormaps by the pose module's detection rate.
    BenchmarkColormaps(BenchmarkArgs),
    /// Write polished images for every frame of a recording.
    Polish(PolishArgs),
    /// Serve the annotation and inference HTTP API.
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
pub struct DataDir {
    /// Directory of recordings (with JSON sidecars) and annotations.json.
    #[arg(long, env = "PRESSPOSE_DATA_DIR")]
    pub data: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum DataCommand {
    /// Median filter and transition trimming of one file or a directory.
    Clean {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        trim: Option<usize>,
    },
    /// One PNG per frame at working resolution.
    Colorize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        colormap: Option<String>,
    },
    /// Synthetic recordings with ground-truth labels.
    Synth {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
        subjects: Vec<u32>,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        postures: Vec<u32>,
        #[arg(long)]
        frames: Option<usize>,
        /// Label only the first frame of each recording.
        #[arg(long)]
        seed_only: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum AnnotateCommand {
    /// Fill unlabelled frames from the closest manual label in each recording.
    Propagate {
        #[command(flatten)]
        data: DataDir,
    },
    /// Write the annotation store as JSON, or CSV when `out` ends in `.csv`.
    Export {
        #[command(flatten)]
        data: DataDir,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    /// `mock`, `mock:<seed>` or `weights:<path>`.
    #[arg(long)]
    pub adapter: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct TrainArgs {
    #[command(flatten)]
    pub data: DataDir,
    #[arg(long)]
    pub out: PathBuf,
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub iterations: Option<usize>,
    #[arg(long)]
    pub lambda_pixel: Option<f64>,
    /// Train the leave-one-out fold that tests this subject.
    #[arg(long)]
    pub fold: Option<u32>,
    /// Store weights at 64-bit instead of 32-bit.
    #[arg(long)]
    pub f64: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub data: DataDir,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "1e-6,3.3e-5,1e-3")]
    pub values: Vec<f64>,
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub iterations: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Csv,
    Markdown,
    Plot,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub data: DataDir,
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    #[command(flatten)]
    pub model: ModelArgs,
    /// Second pose module; produces the four-row swap comparison.
    #[arg(long, requires = "checkpoint")]
    pub swap_adapter: Option<String>,
    #[arg(long)]
    pub report: PathBuf,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "csv,markdown,plot")]
    pub format: Vec<FormatArg>,
}

#[derive(Debug, Args)]
pub struct BenchmarkArgs {
    #[command(flatten)]
    pub data: DataDir,
    /// `all` or a comma-separated list of names.
    #[arg(long, default_value = "all")]
    pub maps: String,
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct PolishArgs {
    #[arg(long)]
    pub checkpoint: PathBuf,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub colormap: Option<String>,
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[command(flatten)]
    pub data: DataDir,
    #[arg(long, default_value = "127.0.0.1:8080")]
    pub addr: SocketAddr,
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    #[command(flatten)]
    pub model: ModelArgs,
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "parse",
        Error::EmptySequence => "empty_sequence",
        Error::SequenceTooShort { .. } => "sequence_too_short",
        Error::UnknownColormap(_) => "unknown_colormap",
        Error::Validation(_) => "validation",
        Error::NoSeedAnnotation { .. } => "no_seed_annotation",
        Error::Config(_) => "config",
        Error::Shape(_) => "shape",
        Error::WeightSchema(_) => "weight_schema",
        Error::Numerical(_) => "numerical",
        Error::TrainingDiverged { .. } => "training_diverged",
        Error::ReferenceUnavailable(_) => "reference_unavailable",
        Error::Io { .. } => "io",
        Error::Json(_) => "json",
    }
}

/// Runs the process: parses `std::env::args`, executes, returns the exit code.
pub fn main_entry() -> i32 {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            let body = serde_json::json!({ "error": error_kind(&e), "message": e.to_string() });
            eprintln!("{body}");
            1
        }
    }
}

fn apply_model(cfg: &mut RunConfig, m: &ModelArgs) {
    if let Some(a) = &m.adapter {
        cfg.adapter = a.clone();
    }
    if let Some(s) = m.seed {
        cfg.seed = s;
        cfg.train.seed = s;
    }
}

fn adapter_from(cfg: &RunConfig) -> Result<MultiStageNet> {
    load_adapter(&cfg.adapter_kind()?)
}

pub fn run(cli: Cli) -> Result<()> {
    let mut cfg = RunConfig::load_or_default(cli.config.as_deref())?;
    match cli.command {
        Command::Data(cmd) => run_data(cmd, cfg),
        Command::Annotate(cmd) => run_annotate(cmd, cfg),
        Command::Train(a) => {
            cfg.data_dir = Some(a.data.data.clone());
            apply_model(&mut cfg, &a.model);
            if let Some(n) = a.iterations {
                cfg.train.max_iterations = n;
            }
            if let Some(l) = a.lambda_pixel {
                cfg.loss.lambda_pixel = l;
            }
            run_train(&cfg, a.fold, &a.out, if a.f64 { DType::F64 } else { DType::F32 })
        }
        Command::SweepLambda(a) => {
            cfg.data_dir = Some(a.data.data.clone());
            apply_model(&mut cfg, &a.model);
            if let Some(n) = a.iterations {
                cfg.train.max_iterations = n;
            }
            run_sweep(&cfg, &a.values, &a.out)
        }
        Command::Eval(a) => {
            cfg.data_dir = Some(a.data.data.clone());
            apply_model(&mut cfg, &a.model);
            run_eval(&cfg, &a)
        }
        Command::BenchmarkColormaps(a) => {
            cfg.data_dir = Some(a.data.data.clone());
            apply_model(&mut cfg, &a.model);
            run_benchmark(&cfg, &a.maps, &a.out)
        }
        Command::Polish(a) => {
            if let Some(c) = &a.colormap {
                cfg.colormap = c.clone();
            }
            run_polish(&cfg, &a.checkpoint, &a.input, &a.out)
        }
        Command::Serve(a) => {
            cfg.data_dir = Some(a.data.data.clone());
            apply_model(&mut cfg, &a.model);
            cfg.validate()?;
            let sc = ServiceConfig {
                data_dir: a.data.data,
                working_size: cfg.working_size,
                checkpoint: a.checkpoint.clone(),
                adapter: a.model.adapter.is_some().then(|| cfg.adapter_kind()).transpose()?,
            };
            let state = AppState::load(&sc)?;
            let rt = tokio::runtime::Runtime::new().map_err(|e| Error::Config(format!("runtime: {e}")))?;
            rt.block_on(serve(state, a.addr))
        }
    }
}

fn sequence_files(input: &Path) -> Result<Vec<PathBuf>> {
    if input.is_dir() {
        dataset::sequence_paths(input)
    } else {
        Ok(vec![input.to_path_buf()])
    }
}

fn run_data(cmd: DataCommand, mut cfg: RunConfig) -> Result<()> {
    match cmd {
        DataCommand::Clean { input, out, trim } => {
            if let Some(t) = trim {
                cfg.trim = t;
            }
            let files = sequence_files(&input)?;
            let out_dir = if input.is_dir() {
                out.clone()
            } else {
                out.parent().map(Path::to_path_buf).unwrap_or_default()
            };
            std::fs::create_dir_all(&out_dir).map_err(|e| Error::io(&out_dir, e))?;
            for f in files {
                let seq = trim_transitions(&median_filter_3d(&load_sequence(&f)?), cfg.trim)?;
                let target = if input.is_dir() {
                    out.join(f.file_name().expect("listed files have names"))
                } else {
                    out.clone()
                };
                save_sequence(&seq, &target, SequenceFormat::from_path(&target))?;
                log::info!("{} -> {} ({} frames)", f.display(), target.display(), seq.len());
            }
            cfg.echo(&out_dir)?;
            Ok(())
        }
        DataCommand::Colorize { input, out, colormap } => {
            if let Some(c) = colormap {
                cfg.colormap = c;
            }
            let map = colormap_by_name(&cfg.colormap)?;
            let seq = load_sequence(&input)?;
            std::fs::create_dir_all(&out).map_err(|e| Error::io(&out, e))?;
            for f in seq.frames() {
                colorize(f, &map, cfg.working_size)
                    .save_png(&out.join(format!("frame_{:04}.png", f.timestamp_index())))?;
            }
            cfg.echo(&out)?;
            Ok(())
        }
        DataCommand::Synth {
            out,
            subjects,
            postures,
            frames,
            seed_only,
            seed,
        } => {
            if let Some(n) = frames {
                cfg.synthetic.frames_per_sequence = n;
            }
            if let Some(s) = seed {
                cfg.seed = s;
            }
            std::fs::create_dir_all(&out).map_err(|e| Error::io(&out, e))?;
            let mut store = AnnotationStore::new(cfg.working_size);
            for &s in &subjects {
                for &p in &postures {
                    let syn = synth_sequence(s, p, &cfg.synthetic, cfg.working_size, cfg.seed)?;
                    save_sequence(
                        &syn.sequence,
                        &out.join(format!("s{s:02}_p{p:02}.txt")),
                        SequenceFormat::Text,
                    )?;
                    let labelled = if seed_only { 1 } else { syn.keypoints.len() };
                    for ks in syn.keypoints.into_iter().take(labelled) {
                        store.put_annotation(ks)?;
                    }
                }
            }
            store.save(&out.join(STORE_FILE))?;
            cfg.data_dir = Some(out.clone());
            cfg.echo(&out)?;
            Ok(())
        }
    }
}

fn export_csv(store: &AnnotationStore) -> String {
    let mut out = String::from("subject_id,posture_id,timestamp_index,part,x,y,visible,provenance\n");
    for (f, rec) in store.records() {
        let prov = match rec.provenance {
            Provenance::Manual => "manual".to_string(),
            Provenance::Propagated(src) => format!("propagated:{}", src.timestamp_index),
        };
        for part in PartName::ALL {
            let k = rec.keypoints.get(part);
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                f.subject_id, f.posture_id, f.timestamp_index, part, k.x, k.y, k.visible, prov
            ));
        }
    }
    out
}

fn run_annotate(cmd: AnnotateCommand, cfg: RunConfig) -> Result<()> {
    match cmd {
        AnnotateCommand::Propagate { data } => {
            let mut store = load_store(&data.data, cfg.working_size)?;
            for (id, seq) in discover_sequences(&data.data)? {
                match annotation::propagate(&store, &seq) {
                    Ok(next) => {
                        store = next;
                        log::info!("propagated labels through sequence {id}");
                    }
                    Err(Error::NoSeedAnnotation { .. }) => log::warn!("sequence {id} has no manual label; skipped"),
                    Err(e) => return Err(e),
                }
            }
            store.save(&data.data.join(STORE_FILE))
        }
        AnnotateCommand::Export { data, out } => {
            let store = load_store(&data.data, cfg.working_size)?;
            let text = if out.extension().is_some_and(|e| e == "csv") {
                export_csv(&store)
            } else {
                store.to_json()?
            };
            std::fs::write(&out, text).map_err(|e| Error::io(&out, e))
        }
    }
}

fn load_all(cfg: &RunConfig) -> Result<Vec<dataset::Sample>> {
    let map = colormap_by_name(&cfg.colormap)?;
    let samples = load_samples(cfg.data_dir()?, &map, cfg.working_size)?;
    if samples.is_empty() {
        return Err(Error::Config(format!(
            "no annotated frames in {}",
            cfg.data_dir()?.display()
        )));
    }
    Ok(samples)
}

fn run_train(cfg: &RunConfig, fold: Option<u32>, out: &Path, dtype: DType) -> Result<()> {
    cfg.validate()?;
    let samples = load_all(cfg)?;
    let subj = subjects(&samples);
    let (train_ids, holdout_ids) = match make_split_plan(&subj, cfg.holdout_subjects, cfg.seed) {
        Ok(plan) => {
            let train_ids = match fold {
                Some(t) => plan
                    .folds
                    .iter()
                    .find(|f| f.test_subject == t)
                    .ok_or_else(|| Error::Config(format!("subject {t} is not a test subject of the split plan")))?
                    .train_subjects
                    .clone(),
                None => plan.folds.iter().map(|f| f.test_subject).collect(),
            };
            (train_ids, plan.holdout_validation_subjects)
        }
        Err(e) if fold.is_none() => {
            log::warn!("{e}; training on every subject without holdout");
            (subj.clone(), Vec::new())
        }
        Err(e) => return Err(e),
    };
    let train_set = filter_subjects(&samples, &train_ids);
    let holdout = filter_subjects(&samples, &holdout_ids);
    let adapter = adapter_from(cfg)?;
    let initial = init_params(&cfg.polishnet_config(), cfg.seed)?;
    log::info!(
        "training on {} frames of subjects {:?}; holdout {:?}",
        train_set.len(),
        train_ids,
        holdout_ids
    );
    let outcome = train(
        &initial,
        &adapter,
        &train_set,
        (!holdout.is_empty()).then_some(holdout.as_slice()),
        &cfg.train,
        &cfg.loss,
    );
    std::fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;
    cfg.echo(out)?;
    let outcome = match outcome {
        Ok(o) => o,
        Err(Error::TrainingDiverged {
            iteration,
            reason,
            last_good,
        }) => {
            let path = out.join("last_good.ppck");
            save_polishnet(&last_good, &path, dtype)?;
            return Err(Error::Numerical(format!(
                "training diverged at iteration {iteration}: {reason}; last good weights in {}",
                path.display()
            )));
        }
        Err(e) => return Err(e),
    };
    save_polishnet(&outcome.params, &out.join(POLISHNET_FILE), dtype)?;
    let trace = out.join(TRACE_FILE);
    std::fs::write(&trace, outcome.trace.to_csv()).map_err(|e| Error::io(&trace, e))?;
    log::info!("{} iterations, checkpoint in {}", outcome.iterations, out.display());
    Ok(())
}

fn run_sweep(cfg: &RunConfig, values: &[f64], out: &Path) -> Result<()> {
    cfg.validate()?;
    let samples = load_all(cfg)?;
    let plan = make_split_plan(&subjects(&samples), cfg.holdout_subjects, cfg.seed)?;
    let fold = &plan.folds[0];
    let train_set = filter_subjects(&samples, &fold.train_subjects);
    let test_set = filter_subjects(&samples, &[fold.test_subject]);
    let adapter = adapter_from(cfg)?;
    let initial = init_params(&cfg.polishnet_config(), cfg.seed)?;
    let rows = lambda_sweep(
        values,
        &SweepSetup {
            initial: &initial,
            adapter: &adapter,
            train: &train_set,
            test: &test_set,
            config: &cfg.train,
            weights: cfg.loss,
        },
    )?;
    std::fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;
    cfg.echo(out)?;
    for (name, text) in [("sweep.csv", sweep_csv(&rows)), ("sweep.md", sweep_markdown(&rows))] {
        let p = out.join(name);
        std::fs::write(&p, text).map_err(|e| Error::io(&p, e))?;
    }
    Ok(())
}

fn run_eval(cfg: &RunConfig, a: &EvalArgs) -> Result<()> {
    cfg.validate()?;
    let samples = load_all(cfg)?;
    let plan = make_split_plan(&subjects(&samples), cfg.holdout_subjects, cfg.seed)?;
    let adapter = adapter_from(cfg)?;
    let polish = a.checkpoint.as_deref().map(load_polishnet).transpose()?;
    let mut report = match (&polish, &a.swap_adapter) {
        (Some(p), Some(second)) => {
            let second = load_adapter(&second.parse::<AdapterKind>()?)?;
            adapter_swap_report(p, &adapter, &second, &samples, &plan)?
        }
        (p, _) => evaluate_pipeline(p.as_ref().map(|p| p as &dyn Polish), &adapter, &samples, &plan)?,
    };
    report.checkpoint = a.checkpoint.as_ref().map(|p| p.display().to_string());
    let formats: Vec<ReportFormat> = a
        .format
        .iter()
        .map(|f| match f {
            FormatArg::Csv => ReportFormat::Csv,
            FormatArg::Markdown => ReportFormat::Markdown,
            FormatArg::Plot => ReportFormat::PlotData,
        })
        .collect();
    emit_report(&report, &formats, &a.report)?;
    let json = a.report.join("report.json");
    std::fs::write(&json, serde_json::to_string_pretty(&report)?).map_err(|e| Error::io(&json, e))?;
    cfg.echo(&a.report)?;
    Ok(())
}

fn run_benchmark(cfg: &RunConfig, maps: &str, out: &Path) -> Result<()> {
    cfg.validate()?;
    let dir = cfg.data_dir()?;
    let maps: Vec<Colormap> = if maps == "all" {
        list_colormaps()
    } else {
        maps.split(',')
            .map(|m| colormap_by_name(m.trim()))
            .collect::<Result<_>>()?
    };
    let store = load_store(dir, cfg.working_size)?;
    let mut frames: Vec<(PressureFrame, annotation::KeypointSet)> = Vec::new();
    for seq in discover_sequences(dir)?.values() {
        let meta = seq.meta();
        for f in seq.frames() {
            let r = annotation::FrameRef::new(meta.subject_id, meta.posture_id, f.timestamp_index());
            if let Some(rec) = store.get(&r) {
                frames.push((f.clone(), rec.keypoints));
            }
        }
    }
    let adapter = adapter_from(cfg)?;
    let rows = colormap_benchmark(&adapter, &frames, &maps, cfg.working_size)?;
    std::fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;
    cfg.echo(out)?;
    let p = out.join("colormap_benchmark.csv");
    std::fs::write(&p, benchmark_csv(&rows)).map_err(|e| Error::io(&p, e))
}

fn run_polish(cfg: &RunConfig, checkpoint: &Path, input: &Path, out: &Path) -> Result<()> {
    let params = load_polishnet(checkpoint)?;
    let map = colormap_by_name(&cfg.colormap)?;
    let size = params.config().working_size;
    let seq = load_sequence(input)?;
    std::fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;
    for f in seq.frames() {
        let polished = params.forward(&colorize(f, &map, size), Mode::Eval)?;
        polished.save_png(&out.join(format!("polished_{:04}.png", f.timestamp_index())))?;
    }
    let mut echo = cfg.clone();
    echo.working_size = size;
    echo.echo(out)?;
    Ok(())
}
