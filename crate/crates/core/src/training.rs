//! Optimizing PolishNet against a frozen pose module.
//!
//! One iteration: polish a batch (batch-statistics normalization), run the
//! adapter, score heatmaps, PAFs and pixels against the targets, push the
//! gradient back through the adapter into PolishNet, and take one Adam step.
//! Only PolishNet parameters change; the adapter checksum is verified at the
//! end of every run.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::adapter::PoseModule;
use crate::dataset::{stack_images, Sample};
use crate::error::{Error, Result};
use crate::evaluation::{mean_auc, pck, predict_keypoints, threshold_grid, Polish};
use crate::losses::{masked_sse, masked_sse_grad, pixel_loss_tensor, total_loss, LossParts, LossWeights};
use crate::polishnet::{Mode, PolishNetParams};
use crate::skeleton::SkeletonTopology;
use crate::targets::{TargetMaps, TargetSpec, DEFAULT_PEAK_THRESHOLD};
use crate::tensor::Tensor;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct TrainConfig {
    pub learning_rate: f64,
    pub decay_rate: f64,
    pub decay_every: usize,
    pub beta1: f64,
    pub beta2: f64,
    pub epsilon: f64,
    pub batch_size: usize,
    pub max_iterations: usize,
    pub seed: u64,
    /// Holdout evaluation period in iterations; 0 disables early stopping.
    pub eval_every: usize,
    /// Holdout evaluations without improvement before stopping.
    pub patience: usize,
    /// Heatmap σ and limb half-width as fractions of the map height.
    pub sigma_frac: f64,
    pub limb_width_frac: f64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            learning_rate: 1e-4,
            decay_rate: 0.95,
            decay_every: 100,
            beta1: 0.9,
            beta2: 0.999,
            epsilon: 1e-8,
            batch_size: 8,
            max_iterations: 1000,
            seed: 0,
            eval_every: 0,
            patience: 10,
            sigma_frac: crate::targets::DEFAULT_SIGMA_FRAC,
            limb_width_frac: crate::targets::DEFAULT_LIMB_WIDTH_FRAC,
        }
    }
}

impl TrainConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.learning_rate > 0.0 && self.learning_rate.is_finite()) {
            return Err(Error::Config("learning_rate must be positive".into()));
        }
        if !(self.decay_rate > 0.0 && self.decay_rate <= 1.0) {
            return Err(Error::Config("decay_rate must lie in (0, 1]".into()));
        }
        if self.decay_every == 0 || self.batch_size == 0 {
            return Err(Error::Config("decay_every and batch_size must be positive".into()));
        }
        if !(0.0..1.0).contains(&self.beta1) || !(0.0..1.0).contains(&self.beta2) || self.epsilon <= 0.0 {
            return Err(Error::Config(
                "Adam needs betas in [0, 1) and a positive epsilon".into(),
            ));
        }
        if !(self.sigma_frac > 0.0 && self.limb_width_frac > 0.0) {
            return Err(Error::Config("sigma_frac and limb_width_frac must be positive".into()));
        }
        Ok(())
    }

    /// `learning_rate * decay_rate^floor(t / decay_every)`.
    pub fn learning_rate_at(&self, iteration: usize) -> f64 {
        self.learning_rate * self.decay_rate.powi((iteration / self.decay_every) as i32)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    pub iteration: usize,
    pub lr: f64,
    pub heatmap: f64,
    pub paf: f64,
    pub pixel: f64,
    pub total: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct LossTrace {
    pub rows: Vec<TraceRow>,
}

pub const TRACE_HEADER: &str = "iteration,lr,E_heatmap,E_PAF,E_pixel,E_total";

impl LossTrace {
    pub fn to_csv(&self) -> String {
        let mut out = format!("{TRACE_HEADER}\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                r.iteration, r.lr, r.heatmap, r.paf, r.pixel, r.total
            );
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        if lines.next() != Some(TRACE_HEADER) {
            return Err(Error::Parse("loss trace: unexpected header".into()));
        }
        let rows = lines
            .map(|line| {
                let f: Vec<&str> = line.split(',').collect();
                let bad = || Error::Parse(format!("loss trace: bad row {line:?}"));
                if f.len() != 6 {
                    return Err(bad());
                }
                let n = |s: &str| s.parse::<f64>().map_err(|_| bad());
                Ok(TraceRow {
                    iteration: f[0].parse().map_err(|_| bad())?,
                    lr: n(f[1])?,
                    heatmap: n(f[2])?,
                    paf: n(f[3])?,
                    pixel: n(f[4])?,
                    total: n(f[5])?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LossTrace { rows })
    }
}

/// Targets for one sample at the adapter's map resolution.
struct Prepared {
    targets: TargetMaps,
}

fn prepare(samples: &[Sample], adapter: &dyn PoseModule, cfg: &TrainConfig) -> Result<Vec<Prepared>> {
    let topo = SkeletonTopology::default();
    let first = samples
        .first()
        .ok_or_else(|| Error::Config("training set is empty".into()))?;
    let (w, h) = first.image.size();
    let map_size = adapter.map_size(h, w);
    let scale = map_size.0 as f64 / h as f64;
    let spec = TargetSpec {
        map_size,
        scale,
        sigma: cfg.sigma_frac * map_size.0 as f64,
        limb_width: cfg.limb_width_frac * map_size.0 as f64,
    };
    samples
        .iter()
        .map(|s| {
            if s.image.size() != (w, h) {
                return Err(Error::Shape(format!(
                    "sample {:?} is {:?}, expected {:?}",
                    s.frame(),
                    s.image.size(),
                    (w, h)
                )));
            }
            Ok(Prepared {
                targets: TargetMaps::render(&s.keypoints, &topo, &spec),
            })
        })
        .collect()
}

struct BatchTargets {
    heatmaps: Tensor,
    pafs: Tensor,
    heat_mask: Vec<bool>,
    paf_mask: Vec<bool>,
}

fn batch_targets(prep: &[&Prepared]) -> Result<BatchTargets> {
    let heatmaps: Vec<Tensor> = prep.iter().map(|p| p.targets.heatmaps.clone()).collect();
    let pafs: Vec<Tensor> = prep.iter().map(|p| p.targets.pafs.clone()).collect();
    Ok(BatchTargets {
        heatmaps: Tensor::stack(&heatmaps)?,
        pafs: Tensor::stack(&pafs)?,
        heat_mask: prep.iter().flat_map(|p| p.targets.mask.parts).collect(),
        paf_mask: prep.iter().flat_map(|p| p.targets.mask.paf_channels()).collect(),
    })
}

/// Loss parts and the gradient of the weighted total with respect to every
/// trainable parameter, for one batch.
pub struct BatchEval {
    pub parts: LossParts,
    pub total: f64,
    pub grads: Vec<Vec<f64>>,
}

fn batch_objective(
    params: &PolishNetParams,
    adapter: &dyn PoseModule,
    images: &Tensor,
    t: &BatchTargets,
    w: &LossWeights,
    want_grads: bool,
) -> Result<(BatchEval, crate::polishnet::ForwardCache)> {
    let cache = params.forward_cached(images, Mode::Train)?;
    let out = cache.output();
    let maps = adapter.infer_batch(out)?;
    let parts = LossParts {
        heatmap: masked_sse(&maps.heatmaps, &t.heatmaps, &t.heat_mask)?,
        paf: masked_sse(&maps.pafs, &t.pafs, &t.paf_mask)?,
        pixel: pixel_loss_tensor(images, out)?,
    };
    let total = total_loss(&parts, w)?;
    let grads = if want_grads {
        let gh = masked_sse_grad(&maps.heatmaps, &t.heatmaps, &t.heat_mask)?.map(|v| v * w.lambda_heatmap);
        let gp = masked_sse_grad(&maps.pafs, &t.pafs, &t.paf_mask)?.map(|v| v * w.lambda_paf);
        let mut g_out = adapter.input_gradient(out, &gh, &gp)?;
        let mut g_pix = Tensor::zeros(out.shape());
        for ((g, o), i) in g_pix.data_mut().iter_mut().zip(out.data()).zip(images.data()) {
            *g = 2.0 * w.lambda_pixel * (o - i);
        }
        g_out.add_assign(&g_pix);
        params.backward(&cache, &g_out).0
    } else {
        Vec::new()
    };
    Ok((BatchEval { parts, total, grads }, cache))
}

/// The weighted objective and its parameter gradient on `samples` taken as
/// one batch.
pub fn objective_and_gradient(
    params: &PolishNetParams,
    adapter: &dyn PoseModule,
    samples: &[Sample],
    cfg: &TrainConfig,
    w: &LossWeights,
) -> Result<BatchEval> {
    let prep = prepare(samples, adapter, cfg)?;
    let refs: Vec<&Prepared> = prep.iter().collect();
    let t = batch_targets(&refs)?;
    let images = stack_images(samples)?;
    Ok(batch_objective(params, adapter, &images, &t, w, true)?.0)
}

/// Loss parts on `samples` taken as one batch (batch-statistics mode).
pub fn evaluate_objective(
    params: &PolishNetParams,
    adapter: &dyn PoseModule,
    samples: &[Sample],
    cfg: &TrainConfig,
    w: &LossWeights,
) -> Result<LossParts> {
    let prep = prepare(samples, adapter, cfg)?;
    let refs: Vec<&Prepared> = prep.iter().collect();
    let t = batch_targets(&refs)?;
    let images = stack_images(samples)?;
    Ok(batch_objective(params, adapter, &images, &t, w, false)?.0.parts)
}

struct Adam {
    m: Vec<Vec<f64>>,
    v: Vec<Vec<f64>>,
    step: i32,
}

impl Adam {
    fn new(params: &PolishNetParams) -> Self {
        let shapes: Vec<usize> = params.trainable().iter().map(|p| p.len()).collect();
        Adam {
            m: shapes.iter().map(|&n| vec![0.0; n]).collect(),
            v: shapes.iter().map(|&n| vec![0.0; n]).collect(),
            step: 0,
        }
    }

    fn update(&mut self, params: &mut PolishNetParams, grads: &[Vec<f64>], lr: f64, cfg: &TrainConfig) {
        self.step += 1;
        let bc1 = 1.0 - cfg.beta1.powi(self.step);
        let bc2 = 1.0 - cfg.beta2.powi(self.step);
        for (((p, g), m), v) in params
            .trainable_mut()
            .into_iter()
            .zip(grads)
            .zip(&mut self.m)
            .zip(&mut self.v)
        {
            for i in 0..p.len() {
                m[i] = cfg.beta1 * m[i] + (1.0 - cfg.beta1) * g[i];
                v[i] = cfg.beta2 * v[i] + (1.0 - cfg.beta2) * g[i] * g[i];
                let mhat = m[i] / bc1;
                let vhat = v[i] / bc2;
                p[i] -= lr * mhat / (vhat.sqrt() + cfg.epsilon);
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct TrainOutcome {
    /// Best holdout parameters when early stopping is active, else the last.
    pub params: PolishNetParams,
    pub trace: LossTrace,
    pub iterations: usize,
    pub stopped_early: bool,
    pub best_holdout_auc: Option<f64>,
    pub adapter_checksum: String,
}

/// Mean part AUC of polish + adapter on `samples`.
pub fn pipeline_auc(polish: Option<&dyn Polish>, adapter: &dyn PoseModule, samples: &[Sample]) -> Result<f64> {
    let pred = predict_keypoints(polish, adapter, samples, DEFAULT_PEAK_THRESHOLD)?;
    let gt: Vec<_> = samples.iter().map(|s| s.keypoints).collect();
    Ok(mean_auc(&pck(&pred, &gt, &threshold_grid())?.curves).unwrap_or(0.0))
}

/// Trains a copy of `params`. Deterministic for a given seed.
pub fn train(
    params: &PolishNetParams,
    adapter: &dyn PoseModule,
    data: &[Sample],
    holdout: Option<&[Sample]>,
    cfg: &TrainConfig,
    w: &LossWeights,
) -> Result<TrainOutcome> {
    cfg.validate()?;
    w.validate()?;
    if !adapter.differentiable() {
        return Err(Error::Config(format!(
            "adapter {} is not differentiable",
            adapter.name()
        )));
    }
    let prep = prepare(data, adapter, cfg)?;
    let checksum = adapter.checksum();
    let mut params = params.clone();
    let mut adam = Adam::new(&params);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut order: Vec<usize> = (0..data.len()).collect();
    let mut cursor = order.len();
    let mut trace = LossTrace::default();
    let early = cfg.eval_every > 0 && holdout.is_some_and(|h| !h.is_empty());
    let mut best: Option<(f64, PolishNetParams)> = None;
    let mut stale = 0;
    let mut stopped_early = false;
    let mut iterations = 0;

    for it in 0..cfg.max_iterations {
        if cursor >= order.len() {
            order.shuffle(&mut rng);
            cursor = 0;
        }
        let end = (cursor + cfg.batch_size).min(order.len());
        let idx = &order[cursor..end];
        cursor = end;
        let batch: Vec<&Sample> = idx.iter().map(|&i| &data[i]).collect();
        let images = stack_images(batch.iter().copied())?;
        let t = batch_targets(&idx.iter().map(|&i| &prep[i]).collect::<Vec<_>>())?;
        let lr = cfg.learning_rate_at(it);
        let diverged = |reason: String, last: &PolishNetParams| Error::TrainingDiverged {
            iteration: it,
            reason,
            last_good: Box::new(last.clone()),
        };
        let (eval, cache) = match batch_objective(&params, adapter, &images, &t, w, true) {
            Ok(r) => r,
            Err(Error::Numerical(m)) => return Err(diverged(m, &params)),
            Err(e) => return Err(e),
        };
        if !eval.grads.iter().flatten().all(|g| g.is_finite()) {
            return Err(diverged("non-finite gradient".into(), &params));
        }
        trace.rows.push(TraceRow {
            iteration: it,
            lr,
            heatmap: eval.parts.heatmap,
            paf: eval.parts.paf,
            pixel: eval.parts.pixel,
            total: eval.total,
        });
        let last_good = params.clone();
        adam.update(&mut params, &eval.grads, lr, cfg);
        params.update_running_stats(&cache);
        if !params.all_finite() {
            return Err(diverged("non-finite parameters after update".into(), &last_good));
        }
        iterations = it + 1;
        if early && iterations % cfg.eval_every == 0 {
            let auc = pipeline_auc(Some(&params), adapter, holdout.unwrap_or_default())?;
            log::info!("iteration {iterations}: holdout AUC {auc:.3}");
            if best.as_ref().map_or(true, |(b, _)| auc > *b) {
                best = Some((auc, params.clone()));
                stale = 0;
            } else {
                stale += 1;
                if stale >= cfg.patience {
                    stopped_early = true;
                    break;
                }
            }
        }
    }
    if adapter.checksum() != checksum {
        return Err(Error::Numerical("adapter parameters changed during training".into()));
    }
    let (best_holdout_auc, params) = match best {
        Some((auc, p)) => (Some(auc), p),
        None => (None, params),
    };
    Ok(TrainOutcome {
        params,
        trace,
        iterations,
        stopped_early,
        best_holdout_auc,
        adapter_checksum: checksum,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fold {
    pub train_subjects: Vec<u32>,
    pub test_subject: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPlan {
    pub folds: Vec<Fold>,
    pub holdout_validation_subjects: Vec<u32>,
}

/// Picks `holdout` validation subjects by seed and builds one
/// leave-one-subject-out fold per remaining subject.
pub fn make_split_plan(subjects: &[u32], holdout: usize, seed: u64) -> Result<SplitPlan> {
    let mut ids = subjects.to_vec();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() != subjects.len() {
        return Err(Error::Config("subject list has duplicates".into()));
    }
    if ids.len() < holdout + 2 || ids.len() < 4 {
        return Err(Error::Config(format!(
            "need at least {} subjects for {holdout} holdouts, got {}",
            (holdout + 2).max(4),
            ids.len()
        )));
    }
    let mut shuffled = ids.clone();
    shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut held: Vec<u32> = shuffled[..holdout].to_vec();
    held.sort_unstable();
    let rest: Vec<u32> = ids.iter().copied().filter(|s| !held.contains(s)).collect();
    let folds = rest
        .iter()
        .map(|&test| Fold {
            train_subjects: rest.iter().copied().filter(|&s| s != test).collect(),
            test_subject: test,
        })
        .collect();
    Ok(SplitPlan {
        folds,
        holdout_validation_subjects: held,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub lambda_pixel: f64,
    pub train_auc: f64,
    pub test_auc: f64,
    /// E_pixel on the training set after training, batch-statistics mode.
    pub final_pixel: f64,
}

/// Everything a sweep run needs besides λ_pixel.
pub struct SweepSetup<'a> {
    pub initial: &'a PolishNetParams,
    pub adapter: &'a dyn PoseModule,
    pub train: &'a [Sample],
    pub test: &'a [Sample],
    pub config: &'a TrainConfig,
    pub weights: LossWeights,
}

/// One full train + evaluate per value, in the given order.
pub fn lambda_sweep(values: &[f64], setup: &SweepSetup<'_>) -> Result<Vec<SweepRow>> {
    values
        .iter()
        .map(|&lambda| {
            if !(lambda > 0.0 && lambda.is_finite()) {
                return Err(Error::Config(format!("lambda_pixel must be positive, got {lambda}")));
            }
            let w = LossWeights {
                lambda_pixel: lambda,
                ..setup.weights
            };
            let out = train(setup.initial, setup.adapter, setup.train, None, setup.config, &w)?;
            let final_pixel = evaluate_objective(&out.params, setup.adapter, setup.train, setup.config, &w)?.pixel;
            Ok(SweepRow {
                lambda_pixel: lambda,
                train_auc: pipeline_auc(Some(&out.params), setup.adapter, setup.train)?,
                test_auc: pipeline_auc(Some(&out.params), setup.adapter, setup.test)?,
                final_pixel,
            })
        })
        .collect()
}

pub const SWEEP_HEADER: &str = "lambda_pixel,train_auc,test_auc,final_e_pixel";

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = format!("{SWEEP_HEADER}\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.lambda_pixel, r.train_auc, r.test_auc, r.final_pixel
        );
    }
    out
}

pub fn sweep_markdown(rows: &[SweepRow]) -> String {
    let mut out = String::from("| λ_pixel | train AUC | test AUC | final E_pixel |\n|---|---|---|---|\n");
    for r in rows {
        let _ = writeln!(
            out,
            "| {:e} | {:.2} | {:.2} | {:.4} |",
            r.lambda_pixel, r.train_auc, r.test_auc, r.final_pixel
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schedule() {
        let cfg = TrainConfig::default();
        assert_eq!(cfg.learning_rate_at(0), 1e-4);
        assert_eq!(cfg.learning_rate_at(99), 1e-4);
        assert_eq!(cfg.learning_rate_at(100), 1e-4 * 0.95);
        assert!((cfg.learning_rate_at(250) - 9.025e-5).abs() < 1e-20);
    }

    #[test]
    fn split_plan_partitions_subjects() {
        let subjects: Vec<u32> = (1..=13).collect();
        let plan = make_split_plan(&subjects, 2, 7).unwrap();
        assert_eq!(plan.folds.len(), 11);
        assert_eq!(plan.holdout_validation_subjects.len(), 2);
        for f in &plan.folds {
            assert!(!f.train_subjects.contains(&f.test_subject));
            for h in &plan.holdout_validation_subjects {
                assert!(!f.train_subjects.contains(h));
                assert_ne!(f.test_subject, *h);
            }
        }
        assert_eq!(plan, make_split_plan(&subjects, 2, 7).unwrap());
        assert!(make_split_plan(&[1, 2, 3], 2, 0).is_err());
    }

    #[test]
    fn trace_csv_round_trip() {
        let trace = LossTrace {
            rows: vec![TraceRow {
                iteration: 3,
                lr: 1e-4,
                heatmap: 0.1,
                paf: 2.0 / 3.0,
                pixel: 1e300,
                total: 5.5,
            }],
        };
        assert_eq!(LossTrace::from_csv(&trace.to_csv()).unwrap(), trace);
    }
}
