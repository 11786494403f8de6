//! Synthetic pressure recordings with known keypoints, for tests, demos and
//! desk-scale training runs.
//!
//! A recording is a stick figure lying on the 32x64 mat: each limb presses a
//! Gaussian ridge along its segment, the torso and head press wider blobs.
//! Body proportions and amplitudes depend on the subject, limb angles on
//! the posture, and each frame adds a small jitter, so frames of one
//! recording are nearly but not exactly identical.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::annotation::{FrameRef, Keypoint, KeypointSet};
use crate::colormap::Colormap;
use crate::dataset::Sample;
use crate::error::{Error, Result};
use crate::pressure::{
    colorize, grid_to_working, PressureFrame, PressureSequence, SequenceMeta, GRID_HEIGHT, GRID_WIDTH,
    MAX_PRESSURE_MMHG,
};
use crate::skeleton::{PartName, SkeletonTopology, NUM_PARTS};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SyntheticConfig {
    pub frames_per_sequence: usize,
    /// Per-frame keypoint jitter in sensor cells.
    pub jitter: f64,
    /// Chance per frame of one stuck sensor reading full scale.
    pub spike_probability: f64,
}

impl Default for SyntheticConfig {
    fn default() -> Self {
        SyntheticConfig {
            frames_per_sequence: 12,
            jitter: 0.25,
            spike_probability: 0.2,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SyntheticSequence {
    pub sequence: PressureSequence,
    /// Ground truth per frame in working-resolution pixels.
    pub keypoints: Vec<KeypointSet>,
}

/// Supine template in (column, row) sensor coordinates, in part order.
const TEMPLATE: [(f64, f64); NUM_PARTS] = [
    (16.0, 5.0),  // head
    (16.0, 11.0), // neck
    (11.0, 13.0), // r_shoulder
    (9.0, 21.0),  // r_elbow
    (8.0, 28.0),  // r_wrist
    (21.0, 13.0), // l_shoulder
    (23.0, 21.0), // l_elbow
    (24.0, 28.0), // l_wrist
    (13.0, 32.0), // r_hip
    (13.0, 45.0), // r_knee
    (13.0, 57.0), // r_ankle
    (19.0, 32.0), // l_hip
    (19.0, 45.0), // l_knee
    (19.0, 57.0), // l_ankle
];

fn seed_for(subject: u32, posture: u32, seed: u64) -> u64 {
    seed ^ (u64::from(subject) << 32) ^ (u64::from(posture) << 16) ^ 0x9e37_79b9_7f4a_7c15
}

fn rotate_about(p: (f64, f64), pivot: (f64, f64), angle: f64) -> (f64, f64) {
    let (s, c) = angle.sin_cos();
    let (dx, dy) = (p.0 - pivot.0, p.1 - pivot.1);
    (pivot.0 + c * dx - s * dy, pivot.1 + s * dx + c * dy)
}

/// Posture-specific pose in sensor coordinates.
fn posture_pose(rng: &mut ChaCha8Rng, scale: f64) -> [(f64, f64); NUM_PARTS] {
    let center = (16.0, 32.0);
    let mut p = TEMPLATE.map(|(c, r)| (center.0 + (c - center.0) * scale, center.1 + (r - center.1) * scale));
    use PartName::*;
    // arms swing at the shoulder, forearms at the elbow; legs likewise
    let chains = [
        (RShoulder, RElbow, RWrist),
        (LShoulder, LElbow, LWrist),
        (RHip, RKnee, RAnkle),
        (LHip, LKnee, LAnkle),
    ];
    for (root, mid, tip) in chains {
        let a = rng.gen_range(-0.6..0.6);
        let pivot = p[root.index()];
        p[mid.index()] = rotate_about(p[mid.index()], pivot, a);
        p[tip.index()] = rotate_about(p[tip.index()], pivot, a);
        let b = rng.gen_range(-0.5..0.5);
        p[tip.index()] = rotate_about(p[tip.index()], p[mid.index()], b);
    }
    let tilt = rng.gen_range(-0.12..0.12);
    let shift = (rng.gen_range(-2.0..2.0), rng.gen_range(-1.5..1.5));
    p.map(|q| {
        let r = rotate_about(q, center, tilt);
        (
            (r.0 + shift.0).clamp(1.0, GRID_WIDTH as f64 - 2.0),
            (r.1 + shift.1).clamp(1.0, GRID_HEIGHT as f64 - 2.0),
        )
    })
}

fn segment_distance(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (vx, vy) = (b.0 - a.0, b.1 - a.1);
    let len2 = vx * vx + vy * vy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p.0 - a.0) * vx + (p.1 - a.1) * vy) / len2).clamp(0.0, 1.0)
    };
    let (cx, cy) = (a.0 + t * vx, a.1 + t * vy);
    ((p.0 - cx).powi(2) + (p.1 - cy).powi(2)).sqrt()
}

struct Stroke {
    a: (f64, f64),
    b: (f64, f64),
    width: f64,
    amp: f64,
}

fn render_pressure(strokes: &[Stroke]) -> Vec<f64> {
    let mut v = vec![0.0; GRID_WIDTH * GRID_HEIGHT];
    for row in 0..GRID_HEIGHT {
        for col in 0..GRID_WIDTH {
            let p = (col as f64, row as f64);
            let mut best: f64 = 0.0;
            for s in strokes {
                let d = segment_distance(p, s.a, s.b);
                best = best.max(s.amp * (-d * d / (2.0 * s.width * s.width)).exp());
            }
            v[row * GRID_WIDTH + col] = best.min(MAX_PRESSURE_MMHG);
        }
    }
    v
}

fn body_strokes(p: &[(f64, f64); NUM_PARTS], amps: &[f64; NUM_PARTS]) -> Vec<Stroke> {
    let topo = SkeletonTopology::default();
    let mut strokes: Vec<Stroke> = topo
        .limbs
        .iter()
        .map(|&(a, b)| Stroke {
            a: p[a.index()],
            b: p[b.index()],
            width: 1.1,
            amp: 0.5 * (amps[a.index()] + amps[b.index()]),
        })
        .collect();
    use PartName::*;
    let mid = |x: PartName, y: PartName| {
        (
            (p[x.index()].0 + p[y.index()].0) / 2.0,
            (p[x.index()].1 + p[y.index()].1) / 2.0,
        )
    };
    strokes.push(Stroke {
        a: mid(RShoulder, LShoulder),
        b: mid(RHip, LHip),
        width: 3.0,
        amp: amps[Neck.index()],
    });
    strokes.push(Stroke {
        a: p[Head.index()],
        b: p[Head.index()],
        width: 2.2,
        amp: amps[Head.index()],
    });
    strokes
}

/// One recording of `subject` in `posture` with ground truth at working size `(width, height)`.
pub fn synth_sequence(
    subject_id: u32,
    posture_id: u32,
    cfg: &SyntheticConfig,
    working_size: (usize, usize),
    seed: u64,
) -> Result<SyntheticSequence> {
    if cfg.frames_per_sequence == 0 {
        return Err(Error::Config("frames_per_sequence must be positive".into()));
    }
    let meta = SequenceMeta::new(subject_id, posture_id);
    meta.validate()?;
    let mut subject_rng = ChaCha8Rng::seed_from_u64(seed_for(subject_id, 0, seed));
    let scale = subject_rng.gen_range(0.85..1.0);
    let mut amps = [0.0; NUM_PARTS];
    for a in amps.iter_mut() {
        *a = subject_rng.gen_range(25.0..70.0);
    }
    // wrists and ankles press weakly
    for part in [PartName::RWrist, PartName::LWrist, PartName::RAnkle, PartName::LAnkle] {
        amps[part.index()] *= 0.5;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(subject_id, posture_id, seed));
    let pose = posture_pose(&mut rng, scale);
    let mut frames = Vec::with_capacity(cfg.frames_per_sequence);
    let mut keypoints = Vec::with_capacity(cfg.frames_per_sequence);
    for t in 0..cfg.frames_per_sequence {
        let jittered = pose.map(|(c, r)| {
            (
                c + rng.gen_range(-cfg.jitter..=cfg.jitter),
                r + rng.gen_range(-cfg.jitter..=cfg.jitter),
            )
        });
        let mut values = render_pressure(&body_strokes(&jittered, &amps));
        if rng.gen_bool(cfg.spike_probability.clamp(0.0, 1.0)) {
            let i = rng.gen_range(0..values.len());
            values[i] = MAX_PRESSURE_MMHG;
        }
        frames.push(PressureFrame::new(values, t as u32)?);
        let frame = FrameRef::new(subject_id, posture_id, t as u32);
        let mut ks = KeypointSet::all_hidden(frame);
        for part in PartName::ALL {
            let (c, r) = jittered[part.index()];
            let (x, y) = grid_to_working(c, r, working_size);
            let x = x.clamp(0.0, working_size.0 as f64 - 1.0);
            let y = y.clamp(0.0, working_size.1 as f64 - 1.0);
            ks.set(part, Keypoint::visible(x, y));
        }
        keypoints.push(ks);
    }
    Ok(SyntheticSequence {
        sequence: PressureSequence::new(frames, meta)?,
        keypoints,
    })
}

/// Colorized samples for every (subject, posture) pair, frames in order.
pub fn synth_samples(
    subjects: &[u32],
    postures: &[u32],
    cfg: &SyntheticConfig,
    map: &Colormap,
    working_size: (usize, usize),
    seed: u64,
) -> Result<Vec<Sample>> {
    let mut out = Vec::new();
    for &s in subjects {
        for &p in postures {
            let seq = synth_sequence(s, p, cfg, working_size, seed)?;
            for (f, ks) in seq.sequence.frames().iter().zip(seq.keypoints) {
                out.push(Sample {
                    image: colorize(f, map, working_size),
                    keypoints: ks,
                });
            }
        }
    }
    Ok(out)
}

/// Red peaks at 30% of full scale; green and blue ramps stay dim.
pub fn probe_red_colormap() -> Colormap {
    Colormap::from_fn("probe_red", |t| {
        [(-((t - 0.3) / 0.1).powi(2)).exp(), 0.2 * t, 0.2 * (1.0 - t)]
    })
    .expect("probe_red lies in [0, 1]")
}

/// No red at all.
pub fn blue_heavy_colormap() -> Colormap {
    Colormap::from_fn("blue_heavy", |t| [0.0, 0.1 * t, t]).expect("blue_heavy lies in [0, 1]")
}

pub const FIXTURE_TRUE_MMHG: f64 = 30.0;
pub const FIXTURE_DECOY_MMHG: f64 = 90.0;

/// Frames with a moderate-pressure blob at the labeled location and a
/// high-pressure decoy elsewhere. Every part is labeled at the true blob
/// except `r_hip`, placed 12 rows below it so the torso is non-degenerate.
/// Only a colormap whose first channel peaks near 30% scale lets a
/// first-channel detector find the labeled blob.
pub fn discriminating_fixture(
    n: usize,
    working_size: (usize, usize),
    seed: u64,
) -> Result<Vec<(PressureFrame, KeypointSet)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    for t in 0..n {
        let (tc, tr) = (rng.gen_range(6..26) as f64, rng.gen_range(6..30) as f64);
        let (dc, dr) = (rng.gen_range(4..28) as f64, rng.gen_range(44..60) as f64);
        let strokes = [
            Stroke {
                a: (tc, tr),
                b: (tc, tr),
                width: 1.5,
                amp: FIXTURE_TRUE_MMHG,
            },
            Stroke {
                a: (dc, dr),
                b: (dc, dr),
                width: 2.0,
                amp: FIXTURE_DECOY_MMHG,
            },
        ];
        let frame = PressureFrame::new(render_pressure(&strokes), t as u32)?;
        let (x, y) = grid_to_working(tc, tr, working_size);
        let (_, hy) = grid_to_working(tc, tr + 12.0, working_size);
        let mut ks = KeypointSet::all_hidden(FrameRef::new(1, 1, t as u32));
        for part in PartName::ALL {
            ks.set(part, Keypoint::visible(x, y));
        }
        ks.set(PartName::RHip, Keypoint::visible(x, hy));
        out.push((frame, ks));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colormap::colormap_by_name;

    #[test]
    fn sequences_are_deterministic_and_valid() {
        let cfg = SyntheticConfig::default();
        let a = synth_sequence(3, 5, &cfg, (128, 256), 1).unwrap();
        let b = synth_sequence(3, 5, &cfg, (128, 256), 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.sequence.len(), cfg.frames_per_sequence);
        for ks in &a.keypoints {
            ks.validate((128, 256)).unwrap();
        }
        assert_ne!(a, synth_sequence(3, 6, &cfg, (128, 256), 1).unwrap());
    }

    #[test]
    fn frames_of_one_recording_are_similar() {
        let cfg = SyntheticConfig {
            spike_probability: 0.0,
            ..SyntheticConfig::default()
        };
        let s = synth_sequence(1, 1, &cfg, (128, 256), 0).unwrap();
        let other = synth_sequence(2, 9, &cfg, (128, 256), 0).unwrap();
        let f = s.sequence.frames();
        assert!(f[0].sse(&f[1]) < f[0].sse(&other.sequence.frames()[0]));
    }

    #[test]
    fn samples_cover_all_pairs() {
        let map = colormap_by_name("viridis").unwrap();
        let cfg = SyntheticConfig {
            frames_per_sequence: 2,
            ..SyntheticConfig::default()
        };
        let s = synth_samples(&[1, 2], &[1, 3], &cfg, &map, (32, 64), 0).unwrap();
        assert_eq!(s.len(), 8);
        assert_eq!(s[0].image.size(), (32, 64));
    }

    #[test]
    fn fixture_blob_values() {
        let fx = discriminating_fixture(3, (32, 64), 2).unwrap();
        for (f, _) in &fx {
            let max = f.values().iter().cloned().fold(0.0, f64::max);
            assert!((max - FIXTURE_DECOY_MMHG).abs() < 1e-9);
        }
        let probe = probe_red_colormap();
        assert!(probe.sample(0.3)[0] > 0.99);
        assert!(probe.sample(0.9)[0] < 1e-6);
    }
}
