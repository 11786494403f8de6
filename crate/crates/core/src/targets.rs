//! Ground-truth heatmaps and part affinity fields, and peak decoding.
//!
//! Renderers work in map pixel coordinates. Use [`to_map_coords`] to bring
//! working-resolution keypoints onto an adapter's (possibly coarser) grid.

use std::path::Path;

use crate::annotation::{visibility_mask_with, FrameRef, Keypoint, KeypointSet, VisibilityMask};
use crate::error::Result;
use crate::raster::save_gray_png;
use crate::skeleton::{PartName, SkeletonTopology, NUM_LIMBS, NUM_PAF_CHANNELS, NUM_PARTS};
use crate::tensor::Tensor;

pub const DEFAULT_PEAK_THRESHOLD: f64 = 0.10;
pub const DEFAULT_SIGMA_FRAC: f64 = 0.02;
pub const DEFAULT_LIMB_WIDTH_FRAC: f64 = 0.02;

/// Map a working-resolution coordinate onto a grid `scale` times as dense,
/// keeping pixel centers aligned.
pub fn to_map_coord(v: f64, scale: f64) -> f64 {
    (v + 0.5) * scale - 0.5
}

pub fn from_map_coord(v: f64, scale: f64) -> f64 {
    (v + 0.5) / scale - 0.5
}

pub fn to_map_coords(ks: &KeypointSet, scale: f64) -> KeypointSet {
    map_points(ks, |v| to_map_coord(v, scale))
}

pub fn from_map_coords(ks: &KeypointSet, scale: f64) -> KeypointSet {
    map_points(ks, |v| from_map_coord(v, scale))
}

fn map_points(ks: &KeypointSet, f: impl Fn(f64) -> f64) -> KeypointSet {
    let mut out = ks.clone();
    for p in PartName::ALL {
        let k = ks.get(p);
        out.set(
            p,
            Keypoint {
                x: f(k.x),
                y: f(k.y),
                ..k
            },
        );
    }
    out
}

/// `exp(−d²/(2σ²))` around every visible part; hidden parts stay zero.
/// Returns a `[1, 14, H, W]` tensor. `size` is (height, width).
pub fn render_heatmaps(ks: &KeypointSet, size: (usize, usize), sigma: f64) -> Tensor {
    assert!(sigma > 0.0, "sigma must be positive");
    let (h, w) = size;
    let mut out = Tensor::zeros([1, NUM_PARTS, h, w]);
    let denom = 2.0 * sigma * sigma;
    for part in PartName::ALL {
        let kp = ks.get(part);
        if !kp.visible {
            continue;
        }
        let plane = out.plane_mut(0, part.index());
        for y in 0..h {
            let dy = y as f64 - kp.y;
            for x in 0..w {
                let dx = x as f64 - kp.x;
                plane[y * w + x] = (-(dx * dx + dy * dy) / denom).exp();
            }
        }
    }
    out
}

/// Unit limb direction on every pixel within `limb_width` of the segment
/// (perpendicular distance, projection inside the segment). Returns a
/// `[1, 28, H, W]` tensor; limbs with a hidden or coincident endpoint stay
/// zero.
pub fn render_pafs(ks: &KeypointSet, topo: &SkeletonTopology, size: (usize, usize), limb_width: f64) -> Tensor {
    assert!(limb_width > 0.0, "limb width must be positive");
    let (h, w) = size;
    let mut out = Tensor::zeros([1, NUM_PAF_CHANNELS, h, w]);
    for (l, &(a, b)) in topo.limbs.iter().enumerate() {
        let (p1, p2) = (ks.get(a), ks.get(b));
        if !(p1.visible && p2.visible) {
            continue;
        }
        let (vx, vy) = (p2.x - p1.x, p2.y - p1.y);
        let len = (vx * vx + vy * vy).sqrt();
        if len == 0.0 {
            continue;
        }
        let (ux, uy) = (vx / len, vy / len);
        // both tests scaled by len so integer geometry compares exactly
        let (along_max, across_max) = (vx * vx + vy * vy, limb_width * len);
        for y in 0..h {
            for x in 0..w {
                let (dx, dy) = (x as f64 - p1.x, y as f64 - p1.y);
                let along = dx * vx + dy * vy;
                let across = (dx * vy - dy * vx).abs();
                if (0.0..=along_max).contains(&along) && across <= across_max {
                    out.set(0, 2 * l, y, x, ux);
                    out.set(0, 2 * l + 1, y, x, uy);
                }
            }
        }
    }
    out
}

/// Which limbs produce a defined PAF: both endpoints visible and distinct.
pub fn paf_limb_mask(ks: &KeypointSet, topo: &SkeletonTopology) -> [bool; NUM_LIMBS] {
    let vis = visibility_mask_with(ks, topo);
    std::array::from_fn(|l| {
        let (a, b) = topo.limbs[l];
        let (p, q) = (ks.get(a), ks.get(b));
        vis.limbs[l] && (p.x != q.x || p.y != q.y)
    })
}

/// Ground truth for one frame at one map resolution.
#[derive(Clone, Debug, PartialEq)]
pub struct TargetMaps {
    pub heatmaps: Tensor,
    pub pafs: Tensor,
    pub mask: VisibilityMask,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TargetSpec {
    /// (height, width) of the map grid.
    pub map_size: (usize, usize),
    /// Map resolution divided by working resolution.
    pub scale: f64,
    pub sigma: f64,
    pub limb_width: f64,
}

impl TargetSpec {
    /// Defaults σ and limb width to 2% of the map height.
    pub fn with_defaults(map_size: (usize, usize), scale: f64) -> Self {
        TargetSpec {
            map_size,
            scale,
            sigma: DEFAULT_SIGMA_FRAC * map_size.0 as f64,
            limb_width: DEFAULT_LIMB_WIDTH_FRAC * map_size.0 as f64,
        }
    }
}

impl TargetMaps {
    /// Renders from working-resolution keypoints.
    pub fn render(ks: &KeypointSet, topo: &SkeletonTopology, spec: &TargetSpec) -> Self {
        let mapped = to_map_coords(ks, spec.scale);
        let mut mask = visibility_mask_with(ks, topo);
        mask.limbs = paf_limb_mask(&mapped, topo);
        TargetMaps {
            heatmaps: render_heatmaps(&mapped, spec.map_size, spec.sigma),
            pafs: render_pafs(&mapped, topo, spec.map_size, spec.limb_width),
            mask,
        }
    }

    /// Writes every channel as an 8-bit grayscale PNG. PAF components are
    /// shifted from [−1, 1] into [0, 1] first.
    pub fn dump_debug(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir).map_err(|e| crate::error::Error::io(dir, e))?;
        let (h, w) = (self.heatmaps.h(), self.heatmaps.w());
        for part in PartName::ALL {
            let path = dir.join(format!("heatmap_{:02}_{part}.png", part.index()));
            save_gray_png(self.heatmaps.plane(0, part.index()), w, h, &path)?;
        }
        for c in 0..NUM_PAF_CHANNELS {
            let shifted: Vec<f64> = self.pafs.plane(0, c).iter().map(|v| 0.5 * (v + 1.0)).collect();
            let axis = if c % 2 == 0 { "x" } else { "y" };
            save_gray_png(&shifted, w, h, &dir.join(format!("paf_{:02}_{axis}.png", c / 2)))?;
        }
        Ok(())
    }
}

/// A decoded part: map-pixel location plus peak value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Peak {
    pub row: usize,
    pub col: usize,
    pub value: f64,
}

/// Argmax of one plane; ties resolve to the lowest row, then lowest column.
pub fn find_peak(plane: &[f64], width: usize) -> Peak {
    let mut best = Peak {
        row: 0,
        col: 0,
        value: f64::NEG_INFINITY,
    };
    for (i, &v) in plane.iter().enumerate() {
        if v > best.value {
            best = Peak {
                row: i / width,
                col: i % width,
                value: v,
            };
        }
    }
    best
}

/// Per-part argmax of sample `n` of a `[N, 14, H, W]` heatmap tensor, in map
/// pixels.
pub fn decode_peaks(heatmaps: &Tensor, n: usize) -> [Peak; NUM_PARTS] {
    std::array::from_fn(|k| find_peak(heatmaps.plane(n, k), heatmaps.w()))
}

pub fn decode_keypoints(heatmaps: &Tensor, frame: FrameRef) -> KeypointSet {
    decode_keypoints_with(heatmaps, 0, frame, DEFAULT_PEAK_THRESHOLD)
}

/// Parts whose peak falls below `threshold` are hidden.
pub fn decode_keypoints_with(heatmaps: &Tensor, n: usize, frame: FrameRef, threshold: f64) -> KeypointSet {
    let peaks = decode_peaks(heatmaps, n);
    let mut ks = KeypointSet::all_hidden(frame);
    for part in PartName::ALL {
        let p = peaks[part.index()];
        ks.set(
            part,
            Keypoint {
                x: p.col as f64,
                y: p.row as f64,
                visible: p.value >= threshold,
            },
        );
    }
    ks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame() -> FrameRef {
        FrameRef::new(1, 1, 0)
    }

    fn ks_with(points: &[(PartName, f64, f64)]) -> KeypointSet {
        let mut ks = KeypointSet::all_hidden(frame());
        for &(p, x, y) in points {
            ks.set(p, Keypoint::visible(x, y));
        }
        ks
    }

    #[test]
    fn heatmap_peak_and_sigma_value() {
        let ks = ks_with(&[(PartName::Head, 10.0, 10.0)]);
        let hm = render_heatmaps(&ks, (30, 30), 3.0);
        assert_eq!(hm.at(0, 0, 10, 10), 1.0);
        assert!((hm.at(0, 0, 10, 13) - (-0.5f64).exp()).abs() < 1e-15);
        assert!((hm.at(0, 0, 10, 13) - 0.6065).abs() < 1e-4);
        // hidden parts are all zero
        assert!(hm.plane(0, 1).iter().all(|&v| v == 0.0));
    }

    #[test]
    fn vertical_limb_band() {
        let ks = ks_with(&[(PartName::Head, 5.0, 0.0), (PartName::Neck, 5.0, 10.0)]);
        let topo = SkeletonTopology::default();
        let paf = render_pafs(&ks, &topo, (12, 12), 1.0);
        assert_eq!((paf.at(0, 0, 4, 5), paf.at(0, 1, 4, 5)), (0.0, 1.0));
        assert_eq!((paf.at(0, 0, 4, 6), paf.at(0, 1, 4, 6)), (0.0, 1.0));
        // two columns away exceeds the band
        assert_eq!((paf.at(0, 0, 4, 7), paf.at(0, 1, 4, 7)), (0.0, 0.0));
        // beyond the segment end
        assert_eq!(paf.at(0, 1, 11, 5), 0.0);
    }

    #[test]
    fn degenerate_limb_is_zero_and_masked() {
        let ks = ks_with(&[(PartName::Head, 5.0, 5.0), (PartName::Neck, 5.0, 5.0)]);
        let topo = SkeletonTopology::default();
        let paf = render_pafs(&ks, &topo, (12, 12), 2.0);
        assert!(paf.data().iter().all(|&v| v == 0.0));
        assert!(!paf_limb_mask(&ks, &topo)[0]);
    }

    #[test]
    fn decode_thresholds_and_ties() {
        let mut hm = Tensor::zeros([1, NUM_PARTS, 10, 10]);
        hm.set(0, 0, 3, 7, 0.8);
        hm.set(0, 0, 5, 2, 0.8);
        hm.set(0, 1, 4, 4, 0.05);
        let ks = decode_keypoints(&hm, frame());
        let head = ks.get(PartName::Head);
        assert!(head.visible);
        assert_eq!((head.y, head.x), (3.0, 7.0));
        assert!(!ks.get(PartName::Neck).visible);
        assert!(!ks.get(PartName::LAnkle).visible);
    }

    #[test]
    fn render_then_decode_round_trips() {
        let mut ks = KeypointSet::all_hidden(frame());
        for (i, p) in PartName::ALL.iter().enumerate() {
            ks.set(*p, Keypoint::visible((i * 2) as f64, (i + 3) as f64));
        }
        ks.set(PartName::LKnee, Keypoint::hidden());
        let back = decode_keypoints(&render_heatmaps(&ks, (20, 30), 2.0), frame());
        assert_eq!(back, ks);
    }

    #[test]
    fn coordinate_scaling_inverts() {
        for v in [0.0, 3.5, 127.0] {
            assert!((from_map_coord(to_map_coord(v, 0.25), 0.25) - v).abs() < 1e-12);
        }
        assert_eq!(to_map_coord(1.5, 0.5), 0.5);
    }

    #[test]
    fn debug_dump_writes_all_channels() {
        let dir = tempfile::tempdir().unwrap();
        let ks = ks_with(&[(PartName::Head, 4.0, 4.0), (PartName::Neck, 4.0, 10.0)]);
        let spec = TargetSpec::with_defaults((16, 8), 1.0);
        let t = TargetMaps::render(&ks, &SkeletonTopology::default(), &spec);
        t.dump_debug(dir.path()).unwrap();
        let count = std::fs::read_dir(dir.path()).unwrap().count();
        assert_eq!(count, NUM_PARTS + NUM_PAF_CHANNELS);
    }
}
