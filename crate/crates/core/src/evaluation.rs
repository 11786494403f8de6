//! PCK curves, AUC tables, pipeline comparisons and the colormap benchmark.
//!
//! Conventions shared by every number this module produces:
//! thresholds run over `0.00, 0.01, ..., 1.00` of the torso length
//! (left shoulder to right hip), a prediction counts when its distance is
//! strictly below `threshold * torso`, and AUC is the mean detection rate
//! over the grid times 100. Frames without a usable torso are excluded and
//! logged. Standard deviations are population deviations over folds.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::adapter::PoseModule;
use crate::annotation::{FrameRef, KeypointSet};
use crate::colormap::Colormap;
use crate::dataset::{stack_images, Sample};
use crate::error::{Error, Result};
use crate::polishnet::PolishNetParams;
use crate::pressure::{colorize, PressureFrame};
use crate::raster::ColorImage;
use crate::skeleton::{PartName, NUM_PARTS};
use crate::targets::{decode_keypoints_with, decode_peaks, from_map_coords, DEFAULT_PEAK_THRESHOLD};
use crate::tensor::Tensor;
use crate::training::SplitPlan;

pub const GRID_STEPS: usize = 100;
const BATCH: usize = 8;

pub const REPORT_NOTE: &str = "PCK thresholds 0.00..1.00 step 0.01 of torso length (l_shoulder to r_hip), \
strict inequality; AUC = mean detection rate x 100; std over folds (population); \
comparable only within this toolkit";

/// `[0, 0.01, ..., 1]`.
pub fn threshold_grid() -> Vec<f64> {
    (0..=GRID_STEPS).map(|i| i as f64 / GRID_STEPS as f64).collect()
}

/// Distance between the ground-truth left shoulder and right hip.
pub fn torso_length(gt: &KeypointSet) -> Result<f64> {
    let a = gt.get(PartName::LShoulder);
    let b = gt.get(PartName::RHip);
    if !a.visible || !b.visible {
        return Err(Error::ReferenceUnavailable(format!(
            "frame {:?}: l_shoulder or r_hip not visible",
            <[u32; 3]>::from(gt.frame)
        )));
    }
    Ok(a.distance(&b))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PckCurve {
    pub part: PartName,
    pub thresholds: Vec<f64>,
    pub true_positives: Vec<usize>,
    pub detection_rate: Vec<f64>,
    /// Frames where the ground-truth part is visible; 0 flags an empty curve.
    pub visible_count: usize,
    pub auc: f64,
}

impl PckCurve {
    pub fn is_empty(&self) -> bool {
        self.visible_count == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exclusion {
    pub frame: FrameRef,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PckResult {
    pub curves: Vec<PckCurve>,
    pub excluded: Vec<Exclusion>,
    pub frames_used: usize,
}

impl PckResult {
    /// Mean AUC over parts that have visible instances.
    pub fn mean_auc(&self) -> Option<f64> {
        mean_auc(&self.curves)
    }
}

pub fn mean_auc(curves: &[PckCurve]) -> Option<f64> {
    let aucs: Vec<f64> = curves.iter().filter(|c| !c.is_empty()).map(|c| c.auc).collect();
    (!aucs.is_empty()).then(|| aucs.iter().sum::<f64>() / aucs.len() as f64)
}

/// Mean of the rates times 100.
pub fn auc_of_rates(rates: &[f64]) -> f64 {
    if rates.is_empty() {
        return 0.0;
    }
    100.0 * rates.iter().sum::<f64>() / rates.len() as f64
}

pub fn auc(curve: &PckCurve) -> f64 {
    auc_of_rates(&curve.detection_rate)
}

pub fn pck(pred: &[KeypointSet], gt: &[KeypointSet], thresholds: &[f64]) -> Result<PckResult> {
    if pred.len() != gt.len() {
        return Err(Error::Validation(format!(
            "{} predictions for {} ground-truth frames",
            pred.len(),
            gt.len()
        )));
    }
    if thresholds.windows(2).any(|w| w[0] > w[1]) || thresholds.iter().any(|t| !t.is_finite()) {
        return Err(Error::Validation("thresholds must be finite and ascending".into()));
    }
    let mut tp = vec![vec![0usize; thresholds.len()]; NUM_PARTS];
    let mut visible = [0usize; NUM_PARTS];
    let mut excluded = Vec::new();
    let mut frames_used = 0;
    for (p, g) in pred.iter().zip(gt) {
        let torso = match torso_length(g) {
            Ok(t) if t > 0.0 => t,
            Ok(_) => {
                log::info!("excluding frame {:?}: degenerate torso", g.frame);
                excluded.push(Exclusion {
                    frame: g.frame,
                    reason: "degenerate torso (zero length)".into(),
                });
                continue;
            }
            Err(e) => {
                log::info!("excluding frame {:?}: {e}", g.frame);
                excluded.push(Exclusion {
                    frame: g.frame,
                    reason: "torso reference unavailable".into(),
                });
                continue;
            }
        };
        frames_used += 1;
        for part in PartName::ALL {
            let k = part.index();
            let gk = g.get(part);
            if !gk.visible {
                continue;
            }
            visible[k] += 1;
            let pk = p.get(part);
            if !pk.visible {
                continue;
            }
            let d = pk.distance(&gk);
            for (i, &t) in thresholds.iter().enumerate() {
                if d < t * torso {
                    tp[k][i] += 1;
                }
            }
        }
    }
    let curves = PartName::ALL
        .iter()
        .map(|&part| {
            let k = part.index();
            let rates: Vec<f64> = tp[k]
                .iter()
                .map(|&c| {
                    if visible[k] == 0 {
                        0.0
                    } else {
                        c as f64 / visible[k] as f64
                    }
                })
                .collect();
            PckCurve {
                part,
                thresholds: thresholds.to_vec(),
                true_positives: tp[k].clone(),
                auc: auc_of_rates(&rates),
                detection_rate: rates,
                visible_count: visible[k],
            }
        })
        .collect();
    Ok(PckResult {
        curves,
        excluded,
        frames_used,
    })
}

/// An image-to-image stage placed before the pose module.
pub trait Polish: Send + Sync {
    fn name(&self) -> &str;
    fn polish_batch(&self, images: &Tensor) -> Result<Tensor>;
}

pub struct IdentityPolish;

impl Polish for IdentityPolish {
    fn name(&self) -> &str {
        "identity"
    }

    fn polish_batch(&self, images: &Tensor) -> Result<Tensor> {
        Ok(images.clone())
    }
}

impl Polish for PolishNetParams {
    fn name(&self) -> &str {
        "polishnet"
    }

    fn polish_batch(&self, images: &Tensor) -> Result<Tensor> {
        self.forward_batch(images)
    }
}

/// Decoded keypoints in working-resolution pixels, one set per sample.
pub fn predict_keypoints(
    polish: Option<&dyn Polish>,
    adapter: &dyn PoseModule,
    samples: &[Sample],
    threshold: f64,
) -> Result<Vec<KeypointSet>> {
    let mut out = Vec::with_capacity(samples.len());
    for chunk in samples.chunks(BATCH) {
        let mut x = stack_images(chunk)?;
        if let Some(p) = polish {
            x = p.polish_batch(&x)?;
        }
        let maps = adapter.infer_batch(&x)?;
        let scale = maps.heatmaps.h() as f64 / x.h() as f64;
        for (n, s) in chunk.iter().enumerate() {
            let ks = decode_keypoints_with(&maps.heatmaps, n, s.frame(), threshold);
            out.push(from_map_coords(&ks, scale));
        }
    }
    Ok(out)
}

/// Decoded keypoints for one image plus each part's peak heatmap value.
#[derive(Clone, Debug, PartialEq)]
pub struct Suggestion {
    pub keypoints: KeypointSet,
    pub confidence: [f64; NUM_PARTS],
}

pub fn suggest(
    polish: Option<&dyn Polish>,
    adapter: &dyn PoseModule,
    image: &ColorImage,
    frame: FrameRef,
    threshold: f64,
) -> Result<Suggestion> {
    let mut x = image.to_tensor();
    if let Some(p) = polish {
        x = p.polish_batch(&x)?;
    }
    let maps = adapter.infer_batch(&x)?;
    let scale = maps.heatmaps.h() as f64 / x.h() as f64;
    let ks = decode_keypoints_with(&maps.heatmaps, 0, frame, threshold);
    let peaks = decode_peaks(&maps.heatmaps, 0);
    Ok(Suggestion {
        keypoints: from_map_coords(&ks, scale),
        confidence: peaks.map(|p| p.value),
    })
}

/// One row of a comparison: an optional polish stage followed by an adapter.
pub struct Variant<'a> {
    pub label: String,
    pub polish: Option<&'a dyn Polish>,
    pub adapter: &'a dyn PoseModule,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FoldResult {
    pub test_subject: u32,
    /// `None` where the part has no visible instance in the fold.
    pub part_auc: Vec<Option<f64>>,
    pub average: Option<f64>,
    pub frames: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VariantReport {
    pub label: String,
    pub adapter: String,
    pub polish: Option<String>,
    pub folds: Vec<FoldResult>,
    pub part_mean: Vec<Option<f64>>,
    pub part_std: Vec<Option<f64>>,
    pub average_mean: Option<f64>,
    pub average_std: Option<f64>,
    /// Curves over all test frames of all folds.
    pub pooled: Vec<PckCurve>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub note: String,
    pub checkpoint: Option<String>,
    pub split: SplitPlan,
    pub variants: Vec<VariantReport>,
    pub excluded: Vec<Exclusion>,
}

/// Population mean and standard deviation.
pub fn mean_std(values: &[f64]) -> Option<(f64, f64)> {
    if values.is_empty() {
        return None;
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    Some((mean, var.sqrt()))
}

fn summarize(
    label: String,
    adapter: String,
    polish: Option<String>,
    folds: Vec<FoldResult>,
    pooled: PckResult,
) -> VariantReport {
    let mut part_mean = Vec::with_capacity(NUM_PARTS);
    let mut part_std = Vec::with_capacity(NUM_PARTS);
    for k in 0..NUM_PARTS {
        let vals: Vec<f64> = folds.iter().filter_map(|f| f.part_auc[k]).collect();
        let ms = mean_std(&vals);
        part_mean.push(ms.map(|m| m.0));
        part_std.push(ms.map(|m| m.1));
    }
    let avgs: Vec<f64> = folds.iter().filter_map(|f| f.average).collect();
    let ms = mean_std(&avgs);
    VariantReport {
        label,
        adapter,
        polish,
        folds,
        part_mean,
        part_std,
        average_mean: ms.map(|m| m.0),
        average_std: ms.map(|m| m.1),
        pooled: pooled.curves,
    }
}

/// Runs every variant over every fold's test subject.
pub fn evaluate_variants(
    variants: &[Variant<'_>],
    dataset: &[Sample],
    split: &SplitPlan,
    checkpoint: Option<String>,
) -> Result<EvalReport> {
    let grid = threshold_grid();
    let mut reports = Vec::with_capacity(variants.len());
    let mut excluded = Vec::new();
    for (vi, v) in variants.iter().enumerate() {
        let mut folds = Vec::new();
        let mut all_pred = Vec::new();
        let mut all_gt = Vec::new();
        for fold in &split.folds {
            let test: Vec<Sample> = dataset
                .iter()
                .filter(|s| s.frame().subject_id == fold.test_subject)
                .cloned()
                .collect();
            let pred = predict_keypoints(v.polish, v.adapter, &test, DEFAULT_PEAK_THRESHOLD)?;
            let gt: Vec<KeypointSet> = test.iter().map(|s| s.keypoints).collect();
            let res = pck(&pred, &gt, &grid)?;
            if vi == 0 {
                excluded.extend(res.excluded.iter().cloned());
            }
            folds.push(FoldResult {
                test_subject: fold.test_subject,
                part_auc: res.curves.iter().map(|c| (!c.is_empty()).then_some(c.auc)).collect(),
                average: res.mean_auc(),
                frames: res.frames_used,
            });
            all_pred.extend(pred);
            all_gt.extend(gt);
        }
        let pooled = pck(&all_pred, &all_gt, &grid)?;
        reports.push(summarize(
            v.label.clone(),
            v.adapter.name().to_string(),
            v.polish.map(|p| p.name().to_string()),
            folds,
            pooled,
        ));
    }
    Ok(EvalReport {
        note: REPORT_NOTE.into(),
        checkpoint,
        split: split.clone(),
        variants: reports,
        excluded,
    })
}

/// Adapter alone, plus polish followed by the adapter when `polish` is given.
pub fn evaluate_pipeline(
    polish: Option<&dyn Polish>,
    adapter: &dyn PoseModule,
    dataset: &[Sample],
    split: &SplitPlan,
) -> Result<EvalReport> {
    let mut variants = vec![Variant {
        label: format!("{} only", adapter.name()),
        polish: None,
        adapter,
    }];
    if let Some(p) = polish {
        variants.push(Variant {
            label: format!("{} + {}", p.name(), adapter.name()),
            polish: Some(p),
            adapter,
        });
    }
    evaluate_variants(&variants, dataset, split, None)
}

/// The four-row swap comparison: `primary` alone, `polish` + `primary`,
/// `secondary` alone, and the same `polish` (trained against `primary`,
/// not retrained) + `secondary`.
pub fn adapter_swap_report(
    polish: &dyn Polish,
    primary: &dyn PoseModule,
    secondary: &dyn PoseModule,
    dataset: &[Sample],
    split: &SplitPlan,
) -> Result<EvalReport> {
    let variants = [
        Variant {
            label: format!("{} only", primary.name()),
            polish: None,
            adapter: primary,
        },
        Variant {
            label: format!("{} + {}", polish.name(), primary.name()),
            polish: Some(polish),
            adapter: primary,
        },
        Variant {
            label: format!("{} only", secondary.name()),
            polish: None,
            adapter: secondary,
        },
        Variant {
            label: format!("pre-trained {} + {}", polish.name(), secondary.name()),
            polish: Some(polish),
            adapter: secondary,
        },
    ];
    evaluate_variants(&variants, dataset, split, None)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkRow {
    pub colormap: String,
    pub average_detection_rate: f64,
}

/// Colorize, infer, decode and score each map; rows sorted by descending
/// score, ties kept in input order. No polish stage is involved.
pub fn colormap_benchmark(
    adapter: &dyn PoseModule,
    frames: &[(PressureFrame, KeypointSet)],
    maps: &[Colormap],
    working_size: (usize, usize),
) -> Result<Vec<BenchmarkRow>> {
    let grid = threshold_grid();
    let gt: Vec<KeypointSet> = frames.iter().map(|(_, k)| *k).collect();
    let mut rows = Vec::with_capacity(maps.len());
    for map in maps {
        let samples: Vec<Sample> = frames
            .iter()
            .map(|(f, k)| Sample {
                image: colorize(f, map, working_size),
                keypoints: *k,
            })
            .collect();
        let pred = predict_keypoints(None, adapter, &samples, DEFAULT_PEAK_THRESHOLD)?;
        let res = pck(&pred, &gt, &grid)?;
        rows.push(BenchmarkRow {
            colormap: map.name().to_string(),
            average_detection_rate: res.mean_auc().unwrap_or(0.0),
        });
    }
    rows.sort_by(|a, b| b.average_detection_rate.total_cmp(&a.average_detection_rate));
    Ok(rows)
}

pub fn benchmark_csv(rows: &[BenchmarkRow]) -> String {
    let mut out = String::from("rank,colormap,average_detection_rate\n");
    for (i, r) in rows.iter().enumerate() {
        let _ = writeln!(out, "{},{},{}", i + 1, r.colormap, r.average_detection_rate);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    /// `summary.csv` and `folds.csv`.
    Csv,
    /// `report.md`: per-part table in two row groups, then the averages.
    Markdown,
    /// `pck_curves.csv`: one (threshold, rate) row per part per variant.
    PlotData,
}

impl ReportFormat {
    pub const ALL: [ReportFormat; 3] = [ReportFormat::Csv, ReportFormat::Markdown, ReportFormat::PlotData];
}

pub const SUMMARY_HEADER: &str = "variant,part,auc_mean,auc_std,folds";
pub const FOLDS_HEADER: &str = "variant,test_subject,part,auc";
pub const CURVES_HEADER: &str = "variant,part,threshold,detection_rate";

fn opt(v: Option<f64>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

/// `summary.csv`: 14 part rows then an `average` row per variant. Empty
/// cells mean no visible instances.
pub fn summary_csv(report: &EvalReport) -> String {
    let mut out = format!("{SUMMARY_HEADER}\n");
    for v in &report.variants {
        for part in PartName::ALL {
            let k = part.index();
            let n = v.folds.iter().filter(|f| f.part_auc[k].is_some()).count();
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                v.label,
                part,
                opt(v.part_mean[k]),
                opt(v.part_std[k]),
                n
            );
        }
        let n = v.folds.iter().filter(|f| f.average.is_some()).count();
        let _ = writeln!(
            out,
            "{},average,{},{},{}",
            v.label,
            opt(v.average_mean),
            opt(v.average_std),
            n
        );
    }
    out
}

pub fn folds_csv(report: &EvalReport) -> String {
    let mut out = format!("{FOLDS_HEADER}\n");
    for v in &report.variants {
        for f in &v.folds {
            for part in PartName::ALL {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    v.label,
                    f.test_subject,
                    part,
                    opt(f.part_auc[part.index()])
                );
            }
            let _ = writeln!(out, "{},{},average,{}", v.label, f.test_subject, opt(f.average));
        }
    }
    out
}

pub fn curves_csv(report: &EvalReport) -> String {
    let mut out = format!("{CURVES_HEADER}\n");
    for v in &report.variants {
        for c in &v.pooled {
            for (t, r) in c.thresholds.iter().zip(&c.detection_rate) {
                let _ = writeln!(out, "{},{},{},{}", v.label, c.part, t, r);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct SummaryRow {
    pub variant: String,
    pub part: String,
    pub auc_mean: Option<f64>,
    pub auc_std: Option<f64>,
    pub folds: usize,
}

/// Parses [`summary_csv`] output.
pub fn parse_summary_csv(text: &str) -> Result<Vec<SummaryRow>> {
    let mut lines = text.lines();
    if lines.next() != Some(SUMMARY_HEADER) {
        return Err(Error::Parse("summary csv: unexpected header".into()));
    }
    let num = |s: &str| -> Result<Option<f64>> {
        if s.is_empty() {
            Ok(None)
        } else {
            s.parse()
                .map(Some)
                .map_err(|_| Error::Parse(format!("summary csv: bad number {s:?}")))
        }
    };
    lines
        .map(|line| {
            // variant labels may contain commas only if quoted; labels here never do
            let f: Vec<&str> = line.rsplitn(5, ',').collect();
            if f.len() != 5 {
                return Err(Error::Parse(format!("summary csv: bad row {line:?}")));
            }
            Ok(SummaryRow {
                variant: f[4].to_string(),
                part: f[3].to_string(),
                auc_mean: num(f[2])?,
                auc_std: num(f[1])?,
                folds: f[0]
                    .parse()
                    .map_err(|_| Error::Parse(format!("summary csv: bad count {:?}", f[0])))?,
            })
        })
        .collect()
}

fn cell(mean: Option<f64>, std: Option<f64>) -> String {
    match (mean, std) {
        (Some(m), Some(s)) => format!("{m:.1} ± {s:.1}"),
        _ => "n/a".into(),
    }
}

const ROW_GROUPS: [[PartName; 7]; 2] = [
    [
        PartName::Head,
        PartName::RShoulder,
        PartName::RElbow,
        PartName::RWrist,
        PartName::RHip,
        PartName::RKnee,
        PartName::RAnkle,
    ],
    [
        PartName::Neck,
        PartName::LShoulder,
        PartName::LElbow,
        PartName::LWrist,
        PartName::LHip,
        PartName::LKnee,
        PartName::LAnkle,
    ],
];

fn title(part: PartName) -> String {
    let s = part.as_str();
    let (side, rest) = match s.split_once('_') {
        Some((side, rest)) => (format!("{} ", side.to_uppercase()), rest),
        None => (String::new(), s),
    };
    let mut c = rest.chars();
    let first = c
        .next()
        .map(|f| f.to_uppercase().collect::<String>())
        .unwrap_or_default();
    format!("{side}{first}{}", c.as_str())
}

pub fn markdown_report(report: &EvalReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "<!-- {} -->\n", report.note);
    out.push_str("## Area under the PCK curve per part\n\n");
    for group in ROW_GROUPS {
        out.push('|');
        out.push_str(" |");
        for part in group {
            let _ = write!(out, " {} |", title(part));
        }
        out.push('\n');
        out.push_str(&"|---".repeat(group.len() + 1));
        out.push_str("|\n");
        for v in &report.variants {
            let _ = write!(out, "| {} |", v.label);
            for part in group {
                let k = part.index();
                let _ = write!(out, " {} |", cell(v.part_mean[k], v.part_std[k]));
            }
            out.push('\n');
        }
        out.push('\n');
    }
    out.push_str("## Average detection rate\n\n| Model | Average Detection Rate |\n|---|---|\n");
    for v in &report.variants {
        let _ = writeln!(out, "| {} | {} |", v.label, cell(v.average_mean, v.average_std));
    }
    if !report.excluded.is_empty() {
        let _ = writeln!(
            out,
            "\n{} frame(s) excluded for lack of a torso reference.",
            report.excluded.len()
        );
    }
    out
}

/// Writes the requested formats into `dir`; returns the paths written.
pub fn emit_report(report: &EvalReport, formats: &[ReportFormat], dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut written = Vec::new();
    let mut put = |name: &str, text: String| -> Result<()> {
        let path = dir.join(name);
        std::fs::write(&path, text).map_err(|e| Error::io(&path, e))?;
        written.push(path);
        Ok(())
    };
    for f in formats {
        match f {
            ReportFormat::Csv => {
                put("summary.csv", summary_csv(report))?;
                put("folds.csv", folds_csv(report))?;
            }
            ReportFormat::Markdown => put("report.md", markdown_report(report))?,
            ReportFormat::PlotData => put("pck_curves.csv", curves_csv(report))?,
        }
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annotation::Keypoint;

    fn frame() -> FrameRef {
        FrameRef::new(1, 1, 0)
    }

    fn gt_with_torso(len: f64) -> KeypointSet {
        let mut ks = KeypointSet::all_hidden(frame());
        ks.set(PartName::LShoulder, Keypoint::visible(0.0, 0.0));
        ks.set(PartName::RHip, Keypoint::visible(0.0, len));
        ks
    }

    #[test]
    fn torso_cases() {
        let mut ks = KeypointSet::all_hidden(frame());
        ks.set(PartName::LShoulder, Keypoint::visible(0.0, 0.0));
        ks.set(PartName::RHip, Keypoint::visible(3.0, 4.0));
        assert_eq!(torso_length(&ks).unwrap(), 5.0);
        ks.set(PartName::RHip, Keypoint::hidden());
        assert!(matches!(torso_length(&ks), Err(Error::ReferenceUnavailable(_))));
    }

    #[test]
    fn strict_threshold_boundary() {
        let mut gt = gt_with_torso(4.0);
        gt.set(PartName::Head, Keypoint::visible(10.0, 10.0));
        let mut pred = gt;
        pred.set(PartName::Head, Keypoint::visible(11.0, 10.0));
        let res = pck(&[pred], &[gt], &threshold_grid()).unwrap();
        let head = &res.curves[PartName::Head.index()];
        assert_eq!(head.detection_rate[25], 0.0);
        assert_eq!(head.detection_rate[26], 1.0);
    }

    #[test]
    fn perfect_prediction_and_auc() {
        let gt = gt_with_torso(10.0);
        let res = pck(&[gt], &[gt], &threshold_grid()).unwrap();
        let c = &res.curves[PartName::LShoulder.index()];
        assert_eq!(c.detection_rate[0], 0.0);
        assert!(c.detection_rate[1..].iter().all(|&r| r == 1.0));
        assert!(res.curves[PartName::Head.index()].is_empty());
        assert_eq!(auc_of_rates(&[1.0; 101]), 100.0);
        assert_eq!(auc_of_rates(&[0.5; 101]), 50.0);
    }

    #[test]
    fn unavailable_and_degenerate_frames_are_logged() {
        let ok = gt_with_torso(5.0);
        let zero = gt_with_torso(0.0);
        let none = KeypointSet::all_hidden(FrameRef::new(1, 1, 2));
        let res = pck(&[ok, zero, none], &[ok, zero, none], &threshold_grid()).unwrap();
        assert_eq!(res.frames_used, 1);
        assert_eq!(res.excluded.len(), 2);
    }

    #[test]
    fn population_std() {
        let (m, s) = mean_std(&[1.0, 3.0]).unwrap();
        assert_eq!((m, s), (2.0, 1.0));
        assert!(mean_std(&[]).is_none());
    }

    #[test]
    fn titles() {
        assert_eq!(title(PartName::Head), "Head");
        assert_eq!(title(PartName::RShoulder), "R Shoulder");
        assert_eq!(title(PartName::LAnkle), "L Ankle");
    }
}
