//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails. Tolerances and runtime limits are fixed here.
//!
//! Oracles are written from the definitions, deliberately not reusing the
//! library's loops: explicit flat indexing, sorting instead of selection,
//! integer geometry where the fixture allows it.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use presspose::adapter::{channel_probe, mock, MockSpec, MultiStageNet, PoseModule};
use presspose::annotation::{propagate, AnnotationStore, FrameRef, Keypoint, KeypointSet, Provenance};
use presspose::checkpoint::{load_polishnet, save_polishnet, DType};
use presspose::colormap::{colormap_by_name, ColormapRegistry};
use presspose::dataset::Sample;
use presspose::evaluation::{
    adapter_swap_report, colormap_benchmark, emit_report, evaluate_pipeline, pck, threshold_grid, ReportFormat,
};
use presspose::losses::{heatmap_loss, paf_loss, pixel_loss_tensor, total_loss, LossParts, LossWeights};
use presspose::polishnet::{init_params, Mode, PolishNetConfig, PolishNetParams};
use presspose::pressure::{
    load_sequence, median_filter_3d, save_sequence, PressureFrame, PressureSequence, SequenceFormat, SequenceMeta,
    FRAME_LEN, GRID_HEIGHT, GRID_WIDTH,
};
use presspose::raster::ColorImage;
use presspose::skeleton::{PartName, SkeletonTopology, NUM_PAF_CHANNELS, NUM_PARTS};
use presspose::synthetic::{
    blue_heavy_colormap, discriminating_fixture, probe_red_colormap, synth_samples, SyntheticConfig,
};
use presspose::targets::{decode_keypoints, render_heatmaps, render_pafs};
use presspose::tensor::Tensor;
use presspose::training::{
    evaluate_objective, lambda_sweep, make_split_plan, objective_and_gradient, train, SweepSetup, TrainConfig,
    TrainOutcome,
};

const FLOAT_RTOL: f64 = 1e-10;
const GRAD_RTOL: f64 = 1e-3;
const CONVERGENCE_RATIO: f64 = 0.5;
const LR_AT_250: f64 = 9.025e-5;
const ORACLE_FIXTURES: usize = 100;
const GRAD_SEEDS: u64 = 5;
const ROUND_TRIP_SETS: usize = 200;
const TOY_ITERATIONS: usize = 200;
const TOY_SIZE: (usize, usize) = (32, 64);
const SWEEP: [f64; 3] = [1e-6, 1.0 / 30000.0, 1e-1];

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: presspose::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn close(a: f64, b: f64, rtol: f64) -> bool {
    a == b || (a - b).abs() <= rtol * a.abs().max(b.abs())
}

// ---------------------------------------------------------------- toy setup

fn toy_polish_config() -> PolishNetConfig {
    PolishNetConfig {
        channel_widths: vec![8, 8, 8],
        working_size: TOY_SIZE,
        ..PolishNetConfig::default()
    }
}

fn toy_train_config() -> TrainConfig {
    TrainConfig {
        max_iterations: TOY_ITERATIONS,
        ..TrainConfig::default()
    }
}

fn toy_samples(subjects: &[u32]) -> Vec<Sample> {
    let cfg = SyntheticConfig {
        frames_per_sequence: 5,
        ..SyntheticConfig::default()
    };
    let map = colormap_by_name("viridis").unwrap();
    synth_samples(subjects, &[1, 2], &cfg, &map, TOY_SIZE, 0).unwrap()
}

struct Toy {
    adapter: MultiStageNet,
    initial: PolishNetParams,
    data: Vec<Sample>,
    outcome: TrainOutcome,
    adapter_before: String,
    initial_checksum: String,
}

fn toy() -> &'static Toy {
    static TOY: OnceLock<Toy> = OnceLock::new();
    TOY.get_or_init(|| {
        let adapter = mock(&MockSpec::new(1)).unwrap();
        let initial = init_params(&toy_polish_config(), 0).unwrap();
        let data = toy_samples(&[1, 2]);
        assert_eq!(data.len(), 20);
        let adapter_before = adapter.checksum();
        let initial_checksum = initial.checksum();
        let outcome = train(
            &initial,
            &adapter,
            &data,
            None,
            &toy_train_config(),
            &LossWeights::default(),
        )
        .unwrap();
        Toy {
            adapter,
            initial,
            data,
            outcome,
            adapter_before,
            initial_checksum,
        }
    })
}

// ------------------------------------------------------------------ oracles

fn median_oracle(frames: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = frames.len() as i64;
    let (h, w) = (GRID_HEIGHT as i64, GRID_WIDTH as i64);
    let clamp = |v: i64, hi: i64| v.max(0).min(hi - 1);
    (0..n)
        .map(|t| {
            let mut out = vec![0.0; FRAME_LEN];
            for r in 0..h {
                for c in 0..w {
                    let mut window = Vec::with_capacity(27);
                    for dt in [-1, 0, 1] {
                        for dr in [-1, 0, 1] {
                            for dc in [-1, 0, 1] {
                                let f = &frames[clamp(t + dt, n) as usize];
                                window.push(f[(clamp(r + dr, h) * w + clamp(c + dc, w)) as usize]);
                            }
                        }
                    }
                    window.sort_by(f64::total_cmp);
                    out[(r * w + c) as usize] = window[13];
                }
            }
            out
        })
        .collect()
}

fn sse_oracle(a: &[f64], b: &[f64], mask: &[bool], shape: [usize; 4]) -> f64 {
    let [_, c, h, w] = shape;
    let mut total = 0.0;
    for i in 0..a.len() {
        let (n, ch) = (i / (c * h * w), (i / (h * w)) % c);
        if mask[n * c + ch] {
            total += (a[i] - b[i]).powi(2);
        }
    }
    total
}

/// Per-part true-positive counts on the grid and visible counts.
fn pck_oracle(pred: &[KeypointSet], gt: &[KeypointSet], grid: &[f64]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut tp = vec![vec![0; grid.len()]; NUM_PARTS];
    let mut vis = vec![0; NUM_PARTS];
    for (p, g) in pred.iter().zip(gt) {
        let (a, b) = (g.get(PartName::LShoulder), g.get(PartName::RHip));
        if !(a.visible && b.visible) {
            continue;
        }
        let torso = ((a.x - b.x).powi(2) + (a.y - b.y).powi(2)).sqrt();
        if torso == 0.0 {
            continue;
        }
        for k in 0..NUM_PARTS {
            let part = PartName::from_index(k).unwrap();
            let (gk, pk) = (g.get(part), p.get(part));
            if !gk.visible {
                continue;
            }
            vis[k] += 1;
            if !pk.visible {
                continue;
            }
            let d = ((pk.x - gk.x).powi(2) + (pk.y - gk.y).powi(2)).sqrt();
            for (i, t) in grid.iter().enumerate() {
                if d < t * torso {
                    tp[k][i] += 1;
                }
            }
        }
    }
    (tp, vis)
}

fn random_ks(rng: &mut ChaCha8Rng, frame: FrameRef, w: i64, h: i64, hidden_p: f64) -> KeypointSet {
    let mut ks = KeypointSet::all_hidden(frame);
    for part in PartName::ALL {
        if !rng.gen_bool(hidden_p) {
            ks.set(
                part,
                Keypoint::visible(rng.gen_range(0..w) as f64, rng.gen_range(0..h) as f64),
            );
        }
    }
    ks
}

fn random_tensor(rng: &mut ChaCha8Rng, shape: [usize; 4], integer: bool) -> Tensor {
    let len = shape.iter().product();
    let data = (0..len)
        .map(|_| {
            if integer {
                rng.gen_range(-5..=5) as f64
            } else {
                rng.gen_range(-2.0..2.0)
            }
        })
        .collect();
    Tensor::from_vec(shape, data).unwrap()
}

fn oracle_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    let mut note = |a: f64, b: f64| {
        if a != b {
            worst = worst.max((a - b).abs() / a.abs().max(b.abs()));
        }
    };

    // median filter: half integer, half float fixtures
    for fixture in 0..ORACLE_FIXTURES {
        let integer = fixture % 2 == 0;
        let n = rng.gen_range(1..=4);
        let frames: Vec<Vec<f64>> = (0..n)
            .map(|_| {
                (0..FRAME_LEN)
                    .map(|_| {
                        if integer {
                            rng.gen_range(0..=100) as f64
                        } else {
                            rng.gen_range(0.0..100.0)
                        }
                    })
                    .collect()
            })
            .collect();
        let seq = PressureSequence::new(
            frames
                .iter()
                .enumerate()
                .map(|(t, v)| PressureFrame::new(v.clone(), t as u32).unwrap())
                .collect(),
            SequenceMeta::new(1, 1),
        )
        .unwrap();
        let got = median_filter_3d(&seq);
        for (f, want) in got.frames().iter().zip(median_oracle(&frames)) {
            ensure(f.values() == want.as_slice(), || {
                format!("median filter fixture {fixture}")
            })?;
        }
    }

    // heatmap, PAF and pixel sums plus the weighted total
    for fixture in 0..ORACLE_FIXTURES {
        let integer = fixture % 2 == 0;
        let n = rng.gen_range(1..=3);
        let (h, w) = (rng.gen_range(2..=6), rng.gen_range(2..=6));
        let hs = [n, NUM_PARTS, h, w];
        let ps = [n, NUM_PAF_CHANNELS, h, w];
        let is = [n, 3, h, w];
        let (hp, hg) = (
            random_tensor(&mut rng, hs, integer),
            random_tensor(&mut rng, hs, integer),
        );
        let (pp, pg) = (
            random_tensor(&mut rng, ps, integer),
            random_tensor(&mut rng, ps, integer),
        );
        let (ip, ig) = (
            random_tensor(&mut rng, is, integer),
            random_tensor(&mut rng, is, integer),
        );
        let hm: Vec<bool> = (0..n * NUM_PARTS).map(|_| rng.gen_bool(0.7)).collect();
        let pm: Vec<bool> = (0..n * NUM_PAF_CHANNELS).map(|_| rng.gen_bool(0.7)).collect();
        let parts = LossParts {
            heatmap: lib(heatmap_loss(&hp, &hg, &hm))?,
            paf: lib(paf_loss(&pp, &pg, &pm))?,
            pixel: lib(pixel_loss_tensor(&ig, &ip))?,
        };
        let want = [
            sse_oracle(hp.data(), hg.data(), &hm, hs),
            sse_oracle(pp.data(), pg.data(), &pm, ps),
            sse_oracle(ip.data(), ig.data(), &vec![true; n * 3], is),
        ];
        let weights = LossWeights {
            lambda_heatmap: rng.gen_range(0.0..2.0),
            lambda_paf: rng.gen_range(0.0..2.0),
            lambda_pixel: rng.gen_range(0.0..1e-3),
        };
        let total = lib(total_loss(&parts, &weights))?;
        let want_total =
            weights.lambda_heatmap * want[0] + weights.lambda_paf * want[1] + weights.lambda_pixel * want[2];
        for (got, want) in [parts.heatmap, parts.paf, parts.pixel].into_iter().zip(want) {
            if integer {
                ensure(got == want, || format!("loss fixture {fixture}: {got} vs {want}"))?;
            }
            ensure(close(got, want, FLOAT_RTOL), || {
                format!("loss fixture {fixture}: {got} vs {want}")
            })?;
            note(got, want);
        }
        ensure(close(total, want_total, FLOAT_RTOL), || {
            format!("total fixture {fixture}")
        })?;
        note(total, want_total);
    }

    // PCK counts (integer coordinates) and AUC
    let grid = threshold_grid();
    for fixture in 0..ORACLE_FIXTURES {
        let frames = rng.gen_range(1..=6);
        let mut gt = Vec::new();
        let mut pred = Vec::new();
        for t in 0..frames {
            let f = FrameRef::new(1, 1, t);
            gt.push(random_ks(&mut rng, f, 16, 16, 0.15));
            pred.push(random_ks(&mut rng, f, 16, 16, 0.15));
        }
        let res = lib(pck(&pred, &gt, &grid))?;
        let (tp, vis) = pck_oracle(&pred, &gt, &grid);
        for (k, curve) in res.curves.iter().enumerate() {
            ensure(curve.true_positives == tp[k] && curve.visible_count == vis[k], || {
                format!("pck fixture {fixture} part {k}")
            })?;
            let want_auc = if vis[k] == 0 {
                0.0
            } else {
                100.0 * tp[k].iter().map(|&c| c as f64 / vis[k] as f64).sum::<f64>() / grid.len() as f64
            };
            ensure(close(curve.auc, want_auc, FLOAT_RTOL), || {
                format!("auc fixture {fixture} part {k}: {} vs {want_auc}", curve.auc)
            })?;
            note(curve.auc, want_auc);
        }
    }

    // SSE propagation; frames drawn from three patterns so ties occur
    for fixture in 0..ORACLE_FIXTURES {
        let patterns: Vec<Vec<f64>> = (0..3)
            .map(|_| (0..FRAME_LEN).map(|_| rng.gen_range(0..4) as f64).collect())
            .collect();
        let n = rng.gen_range(3..=8);
        let which: Vec<usize> = (0..n).map(|_| rng.gen_range(0..3)).collect();
        let seq = PressureSequence::new(
            which
                .iter()
                .enumerate()
                .map(|(t, &p)| PressureFrame::new(patterns[p].clone(), t as u32).unwrap())
                .collect(),
            SequenceMeta::new(2, 3),
        )
        .unwrap();
        let mut store = AnnotationStore::new(TOY_SIZE);
        let mut manual = BTreeMap::new();
        while manual.is_empty() {
            for t in 0..n as u32 {
                if rng.gen_bool(0.3) {
                    let ks = random_ks(&mut rng, FrameRef::new(2, 3, t), 32, 64, 0.1);
                    lib(store.put_annotation(ks))?;
                    manual.insert(t, ks);
                }
            }
        }
        let out = lib(propagate(&store, &seq))?;
        ensure(out.len() == n, || {
            format!("propagation fixture {fixture}: {} records", out.len())
        })?;
        for t in 0..n as u32 {
            let rec = out.get(&FrameRef::new(2, 3, t)).ok_or("missing record")?;
            if let Some(ks) = manual.get(&t) {
                ensure(rec.provenance == Provenance::Manual && rec.keypoints == *ks, || {
                    format!("propagation fixture {fixture}: manual frame {t} changed")
                })?;
                continue;
            }
            let here = &patterns[which[t as usize]];
            let (_, src) = manual
                .keys()
                .map(|&s| {
                    let there = &patterns[which[s as usize]];
                    let d: f64 = (0..FRAME_LEN).map(|i| (here[i] - there[i]).powi(2)).sum();
                    (d, s)
                })
                .min_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)))
                .unwrap();
            let want = manual[&src].with_frame(FrameRef::new(2, 3, t));
            ensure(
                rec.provenance == Provenance::Propagated(FrameRef::new(2, 3, src)) && rec.keypoints == want,
                || format!("propagation fixture {fixture}: frame {t} expected seed {src}"),
            )?;
        }
    }

    // target maps: float heatmaps, integer-geometry PAFs
    let topo = SkeletonTopology::default();
    for fixture in 0..ORACLE_FIXTURES {
        let (h, w) = (rng.gen_range(8..=24), rng.gen_range(6..=16));
        let mut ks = KeypointSet::all_hidden(FrameRef::new(1, 1, 0));
        for part in PartName::ALL {
            if rng.gen_bool(0.85) {
                ks.set(
                    part,
                    Keypoint::visible(rng.gen_range(0.0..w as f64), rng.gen_range(0.0..h as f64)),
                );
            }
        }
        let sigma = rng.gen_range(0.5..3.0);
        let hm = render_heatmaps(&ks, (h, w), sigma);
        for (i, &v) in hm.data().iter().enumerate() {
            let (k, y, x) = (i / (h * w), (i / w) % h, i % w);
            let kp = ks.get(PartName::from_index(k).unwrap());
            let want = if kp.visible {
                let d2 = (x as f64 - kp.x).powi(2) + (y as f64 - kp.y).powi(2);
                (-d2 / (2.0 * sigma * sigma)).exp()
            } else {
                0.0
            };
            ensure(close(v, want, FLOAT_RTOL), || {
                format!("heatmap fixture {fixture}: {v} vs {want}")
            })?;
            note(v, want);
        }

        let ki = random_ks(&mut rng, FrameRef::new(1, 1, 0), w as i64, h as i64, 0.15);
        let width = rng.gen_range(1..=3) as i64;
        let paf = render_pafs(&ki, &topo, (h, w), width as f64);
        let mut want = vec![0.0; NUM_PAF_CHANNELS * h * w];
        for (l, &(a, b)) in topo.limbs.iter().enumerate() {
            let (p, q) = (ki.get(a), ki.get(b));
            if !(p.visible && q.visible) {
                continue;
            }
            let (px, py, qx, qy) = (p.x as i64, p.y as i64, q.x as i64, q.y as i64);
            let (vx, vy) = (qx - px, qy - py);
            let len2 = vx * vx + vy * vy;
            if len2 == 0 {
                continue;
            }
            let len = (len2 as f64).sqrt();
            for y in 0..h as i64 {
                for x in 0..w as i64 {
                    let (dx, dy) = (x - px, y - py);
                    let dot = dx * vx + dy * vy;
                    let cross = dx * vy - dy * vx;
                    if (0..=len2).contains(&dot) && cross * cross <= width * width * len2 {
                        let at = (y as usize) * w + x as usize;
                        want[(2 * l) * h * w + at] = vx as f64 / len;
                        want[(2 * l + 1) * h * w + at] = vy as f64 / len;
                    }
                }
            }
        }
        ensure(paf.data() == want.as_slice(), || format!("PAF fixture {fixture}"))?;
    }
    Ok(format!(
        "6 oracles x {ORACLE_FIXTURES} fixtures, worst float rel err {worst:.1e}"
    ))
}

// ----------------------------------------------------------------- gradient

fn gradient_check() -> Check {
    let adapter = lib(mock(&MockSpec::new(1)))?;
    let all = toy_samples(&[1]);
    let cfg = toy_train_config();
    let w = LossWeights::default();
    let mut worst = 0.0f64;
    for seed in 0..GRAD_SEEDS {
        let mut rng = ChaCha8Rng::seed_from_u64(100 + seed);
        let params = lib(init_params(&toy_polish_config(), seed))?;
        let batch: Vec<Sample> = (0..2).map(|_| all[rng.gen_range(0..all.len())].clone()).collect();
        let analytic = lib(objective_and_gradient(&params, &adapter, &batch, &cfg, &w))?.grads;
        let objective = |p: &PolishNetParams| -> Result<f64, String> {
            let parts = lib(evaluate_objective(p, &adapter, &batch, &cfg, &w))?;
            lib(total_loss(&parts, &w))
        };
        let (mut num2, mut diff2, mut ana2) = (0.0, 0.0, 0.0);
        for _ in 0..24 {
            let a = rng.gen_range(0..analytic.len());
            let i = rng.gen_range(0..analytic[a].len());
            // small enough that no LeakyReLU input crosses zero on these fixtures
            let step = 1e-6;
            let mut plus = params.clone();
            plus.trainable_mut()[a][i] += step;
            let mut minus = params.clone();
            minus.trainable_mut()[a][i] -= step;
            let numeric = (objective(&plus)? - objective(&minus)?) / (2.0 * step);
            num2 += numeric * numeric;
            ana2 += analytic[a][i] * analytic[a][i];
            diff2 += (numeric - analytic[a][i]).powi(2);
        }
        let rel = diff2.sqrt() / num2.sqrt().max(ana2.sqrt()).max(1e-300);
        worst = worst.max(rel);
        ensure(rel <= GRAD_RTOL, || format!("seed {seed}: relative error {rel:.2e}"))?;
    }
    Ok(format!(
        "{GRAD_SEEDS} seeds x 24 coordinates, worst rel err {worst:.2e} (limit {GRAD_RTOL:.0e})"
    ))
}

// ---------------------------------------------------------------- training

fn frozen_backbone() -> Check {
    let t = toy();
    let after = t.adapter.checksum();
    ensure(after == t.adapter_before, || "adapter checksum changed".into())?;
    ensure(t.outcome.adapter_checksum == t.adapter_before, || {
        "reported checksum differs".into()
    })?;
    ensure(t.outcome.iterations == TOY_ITERATIONS, || {
        format!("{} iterations", t.outcome.iterations)
    })?;
    ensure(t.outcome.params.checksum() != t.initial_checksum, || {
        "PolishNet unchanged".into()
    })?;
    Ok(format!("adapter {}..., PolishNet checksum changed", &after[..12]))
}

fn toy_convergence() -> Check {
    let t = toy();
    let cfg = toy_train_config();
    let w = LossWeights::default();
    let e0 = lib(total_loss(
        &lib(evaluate_objective(&t.initial, &t.adapter, &t.data, &cfg, &w))?,
        &w,
    ))?;
    let e200 = lib(total_loss(
        &lib(evaluate_objective(&t.outcome.params, &t.adapter, &t.data, &cfg, &w))?,
        &w,
    ))?;
    let ratio = e200 / e0;
    let lr = cfg.learning_rate_at(250);
    ensure(lr == LR_AT_250, || format!("lr(250) = {lr:e}"))?;
    ensure(ratio <= CONVERGENCE_RATIO, || {
        format!("E_total {e0:.2} -> {e200:.2}, ratio {ratio:.4} > {CONVERGENCE_RATIO}")
    })?;
    Ok(format!(
        "E_total {e0:.2} -> {e200:.2}, ratio {ratio:.4}; lr(250) = {lr:e}"
    ))
}

fn lambda_monotonicity() -> Check {
    let t = toy();
    let test = toy_samples(&[3]);
    let cfg = toy_train_config();
    let setup = SweepSetup {
        initial: &t.initial,
        adapter: &t.adapter,
        train: &t.data,
        test: &test,
        config: &cfg,
        weights: LossWeights::default(),
    };
    let rows = lib(lambda_sweep(&SWEEP, &setup))?;
    let summary = rows
        .iter()
        .map(|r| {
            format!(
                "{:.1e}: E_pixel {:.2} AUC {:.2}",
                r.lambda_pixel, r.final_pixel, r.train_auc
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    ensure(rows.windows(2).all(|p| p[1].final_pixel < p[0].final_pixel), || {
        format!("E_pixel not strictly decreasing: {summary}")
    })?;
    let last = rows.last().unwrap().train_auc;
    ensure(rows[..rows.len() - 1].iter().all(|r| last < r.train_auc), || {
        format!("largest lambda not worst: {summary}")
    })?;
    Ok(summary)
}

// ------------------------------------------------------------- round trips

fn round_trips() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (h, w) = (64, 32);
    for i in 0..ROUND_TRIP_SETS {
        let frame = FrameRef::new(1, 1, i as u32);
        let ks = random_ks(&mut rng, frame, w as i64, h as i64, 0.2);
        let decoded = decode_keypoints(&render_heatmaps(&ks, (h, w), 0.02 * h as f64), frame);
        ensure(decoded == ks, || format!("render/decode set {i}"))?;
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for i in 0..20 {
        let n = rng.gen_range(1..=4);
        let frames = (0..n)
            .map(|t| {
                let v = (0..FRAME_LEN).map(|_| rng.gen_range(0.0..100.0f32) as f64).collect();
                PressureFrame::new(v, t).unwrap()
            })
            .collect();
        let seq = lib(PressureSequence::new(frames, SequenceMeta::new(1 + i % 13, 1 + i % 17)))?;
        for (ext, format) in [("txt", SequenceFormat::Text), ("pmat", SequenceFormat::Binary)] {
            let path = dir.path().join(format!("s{i}.{ext}"));
            lib(save_sequence(&seq, &path, format))?;
            ensure(lib(load_sequence(&path))? == seq, || format!("data file {i} ({ext})"))?;
        }
    }

    let image = ColorImage::new(
        TOY_SIZE.0,
        TOY_SIZE.1,
        (0..3 * TOY_SIZE.0 * TOY_SIZE.1)
            .map(|_| rng.gen_range(0.0..1.0))
            .collect(),
    )
    .unwrap();
    let params = lib(init_params(&toy_polish_config(), 3))?;
    let path = dir.path().join("p.ppck");
    for (dtype, p) in [(DType::F64, params.clone()), (DType::F32, params.to_f32_precision())] {
        lib(save_polishnet(&p, &path, dtype))?;
        let loaded = lib(load_polishnet(&path))?;
        let (a, b) = (
            lib(p.forward(&image, Mode::Eval))?,
            lib(loaded.forward(&image, Mode::Eval))?,
        );
        let bitwise = a.data().iter().zip(b.data()).all(|(x, y)| x.to_bits() == y.to_bits());
        ensure(bitwise, || format!("PolishNet checkpoint {dtype:?} forward differs"))?;
    }
    let adapter = lib(mock(&MockSpec::new(5)))?;
    let apath = dir.path().join("a.ppck");
    lib(adapter.save(&apath, DType::F64))?;
    let back = lib(MultiStageNet::load(&apath))?;
    ensure(lib(adapter.infer(&image))? == lib(back.infer(&image))?, || {
        "adapter checkpoint differs".into()
    })?;
    Ok(format!(
        "{ROUND_TRIP_SETS} keypoint sets, 40 data files, 3 checkpoints bitwise"
    ))
}

// ---------------------------------------------------------------- protocol

fn adapter_swap() -> Check {
    let t = toy();
    let secondary = lib(mock(&MockSpec::new(2)))?;
    let dataset = toy_samples(&[1, 2, 3, 4]);
    let split = lib(make_split_plan(&[1, 2, 3, 4], 2, 0))?;
    let report = lib(adapter_swap_report(
        &t.outcome.params,
        &t.adapter,
        &secondary,
        &dataset,
        &split,
    ))?;
    ensure(report.variants.len() == 4, || format!("{} rows", report.variants.len()))?;
    let pipeline = lib(evaluate_pipeline(Some(&t.outcome.params), &secondary, &dataset, &split))?;
    ensure(pipeline.variants.len() == 2, || "pipeline rows".into())?;
    for (a, b) in pipeline.variants.iter().zip(&report.variants[2..]) {
        ensure(a.folds == b.folds, || {
            format!("{} disagrees with evaluate_pipeline", b.label)
        })?;
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    lib(emit_report(
        &report,
        &[ReportFormat::Csv, ReportFormat::Markdown],
        dir.path(),
    ))?;
    let md = std::fs::read_to_string(dir.path().join("report.md")).map_err(|e| e.to_string())?;
    for v in &report.variants {
        ensure(md.contains(&v.label), || format!("report.md lacks {}", v.label))?;
    }
    let labels: Vec<String> = report
        .variants
        .iter()
        .map(|v| format!("{} {:.2}", v.label, v.average_mean.unwrap_or(f64::NAN)))
        .collect();
    Ok(labels.join(" | "))
}

fn colormap_harness() -> Check {
    let mut registry = ColormapRegistry::default();
    registry.register(probe_red_colormap());
    registry.register(blue_heavy_colormap());
    let fixture = lib(discriminating_fixture(20, TOY_SIZE, 0))?;
    let probe = lib(channel_probe(0))?;
    let rows = lib(colormap_benchmark(&probe, &fixture, registry.all(), TOY_SIZE))?;
    ensure(rows.len() == registry.all().len(), || format!("{} rows", rows.len()))?;
    let mut names: Vec<&str> = rows.iter().map(|r| r.colormap.as_str()).collect();
    names.sort_unstable();
    let mut want = registry.names();
    want.sort_unstable();
    ensure(names == want, || "rows do not match registry".into())?;
    ensure(rows[0].colormap == "probe_red", || {
        format!("{} ranked first", rows[0].colormap)
    })?;
    ensure(rows[0].average_detection_rate > rows[1].average_detection_rate, || {
        "tie for first".into()
    })?;
    Ok(format!(
        "{} rows; probe_red {:.2} > {} {:.2}",
        rows.len(),
        rows[0].average_detection_rate,
        rows[1].colormap,
        rows[1].average_detection_rate
    ))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Check); 8] = [
        ("oracle equivalence", 60, oracle_equivalence),
        ("gradient correctness", 120, gradient_check),
        ("toy training convergence", 300, toy_convergence),
        ("frozen-backbone contract", 120, frozen_backbone),
        ("lambda monotonicity", 600, lambda_monotonicity),
        ("round-trips", 60, round_trips),
        ("adapter-swap protocol", 120, adapter_swap),
        ("colormap benchmark harness", 60, colormap_harness),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let result = result.and_then(|detail| {
            if took > Duration::from_secs(limit) {
                Err(format!("{detail}; exceeded {limit} s"))
            } else {
                Ok(detail)
            }
        });
        match result {
            Ok(detail) => println!("PASS  {name} ({:.1} s): {detail}", took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name} ({:.1} s): {why}", took.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
