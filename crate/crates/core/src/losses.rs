//! The compound objective: heatmap, PAF and pixel sums of squares, unnormalized.
//!
//! Masks are per sample and per channel, laid out `keep[n * C + c]`.
//! A masked channel contributes nothing to the loss or its gradient.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::raster::ColorImage;
use crate::skeleton::{NUM_PAF_CHANNELS, NUM_PARTS};
use crate::tensor::Tensor;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct LossWeights {
    pub lambda_heatmap: f64,
    pub lambda_paf: f64,
    pub lambda_pixel: f64,
}

impl Default for LossWeights {
    fn default() -> Self {
        LossWeights {
            lambda_heatmap: 1.0,
            lambda_paf: 1.0,
            lambda_pixel: 1.0 / 30000.0,
        }
    }
}

impl LossWeights {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("lambda_heatmap", self.lambda_heatmap),
            ("lambda_paf", self.lambda_paf),
            ("lambda_pixel", self.lambda_pixel),
        ] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::Config(format!(
                    "{name} must be finite and non-negative, got {v}"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct LossParts {
    pub heatmap: f64,
    pub paf: f64,
    pub pixel: f64,
}

fn check_pair(pred: &Tensor, gt: &Tensor, channels: Option<usize>, what: &str) -> Result<()> {
    if pred.shape() != gt.shape() {
        return Err(Error::Shape(format!("{what}: {:?} vs {:?}", pred.shape(), gt.shape())));
    }
    if let Some(c) = channels {
        if pred.c() != c {
            return Err(Error::Shape(format!("{what}: expected {c} channels, got {}", pred.c())));
        }
    }
    Ok(())
}

fn check_mask(t: &Tensor, mask: &[bool], what: &str) -> Result<()> {
    if mask.len() != t.n() * t.c() {
        return Err(Error::Shape(format!(
            "{what}: mask has {} entries for {} samples x {} channels",
            mask.len(),
            t.n(),
            t.c()
        )));
    }
    Ok(())
}

/// Σ over unmasked channels of Σ_pixels (a − b)².
pub fn masked_sse(pred: &Tensor, gt: &Tensor, mask: &[bool]) -> Result<f64> {
    check_pair(pred, gt, None, "masked sse")?;
    check_mask(pred, mask, "masked sse")?;
    let c = pred.c();
    let mut total = 0.0;
    for s in 0..pred.n() {
        for ch in 0..c {
            if mask[s * c + ch] {
                total += pred
                    .plane(s, ch)
                    .iter()
                    .zip(gt.plane(s, ch))
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>();
            }
        }
    }
    Ok(total)
}

/// Gradient of [`masked_sse`] with respect to `pred`.
pub fn masked_sse_grad(pred: &Tensor, gt: &Tensor, mask: &[bool]) -> Result<Tensor> {
    check_pair(pred, gt, None, "masked sse")?;
    check_mask(pred, mask, "masked sse")?;
    let c = pred.c();
    let mut g = Tensor::zeros(pred.shape());
    for s in 0..pred.n() {
        for ch in 0..c {
            if mask[s * c + ch] {
                let out = g.plane_mut(s, ch);
                for ((o, a), b) in out.iter_mut().zip(pred.plane(s, ch)).zip(gt.plane(s, ch)) {
                    *o = 2.0 * (a - b);
                }
            }
        }
    }
    Ok(g)
}

pub fn heatmap_loss(pred: &Tensor, gt: &Tensor, mask: &[bool]) -> Result<f64> {
    check_pair(pred, gt, Some(NUM_PARTS), "heatmap loss")?;
    masked_sse(pred, gt, mask)
}

pub fn paf_loss(pred: &Tensor, gt: &Tensor, mask: &[bool]) -> Result<f64> {
    check_pair(pred, gt, Some(NUM_PAF_CHANNELS), "PAF loss")?;
    masked_sse(pred, gt, mask)
}

/// Σ (I − I')² over every pixel and channel.
pub fn pixel_loss_tensor(input: &Tensor, polished: &Tensor) -> Result<f64> {
    check_pair(input, polished, None, "pixel loss")?;
    Ok(input
        .data()
        .iter()
        .zip(polished.data())
        .map(|(a, b)| (a - b) * (a - b))
        .sum())
}

pub fn pixel_loss(input: &ColorImage, polished: &ColorImage) -> Result<f64> {
    if input.size() != polished.size() {
        return Err(Error::Shape(format!(
            "pixel loss: {:?} vs {:?}",
            input.size(),
            polished.size()
        )));
    }
    pixel_loss_tensor(&input.to_tensor(), &polished.to_tensor())
}

pub fn total_loss(parts: &LossParts, w: &LossWeights) -> Result<f64> {
    for (name, v) in [
        ("E_heatmap", parts.heatmap),
        ("E_PAF", parts.paf),
        ("E_pixel", parts.pixel),
    ] {
        if !v.is_finite() {
            return Err(Error::Numerical(format!("{name} is {v}")));
        }
    }
    Ok(w.lambda_heatmap * parts.heatmap + w.lambda_paf * parts.paf + w.lambda_pixel * parts.pixel)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        let gt = Tensor::zeros([1, 14, 3, 5]);
        let mut pred = gt.clone();
        assert_eq!(heatmap_loss(&pred, &gt, &[true; 14]).unwrap(), 0.0);
        pred.plane_mut(0, 4).iter_mut().for_each(|v| *v = 1.0);
        assert_eq!(heatmap_loss(&pred, &gt, &[true; 14]).unwrap(), 15.0);
        let mut mask = [true; 14];
        mask[4] = false;
        assert_eq!(heatmap_loss(&pred, &gt, &mask).unwrap(), 0.0);

        let gt = Tensor::zeros([1, 28, 2, 2]);
        let mut pred = gt.clone();
        pred.set(0, 17, 1, 0, 1.0);
        assert_eq!(paf_loss(&pred, &gt, &[true; 28]).unwrap(), 1.0);

        let a = ColorImage::filled(2, 2, [0.0; 3]);
        let b = ColorImage::filled(2, 2, [1.0; 3]);
        assert_eq!(pixel_loss(&a, &b).unwrap(), 12.0);
    }

    #[test]
    fn weighted_total() {
        let parts = LossParts {
            heatmap: 2.0,
            paf: 3.0,
            pixel: 30000.0,
        };
        assert!((total_loss(&parts, &LossWeights::default()).unwrap() - 6.0).abs() < 1e-12);
        let no_pixel = LossWeights {
            lambda_pixel: 0.0,
            ..LossWeights::default()
        };
        assert_eq!(total_loss(&parts, &no_pixel).unwrap(), 5.0);
        assert_eq!(total_loss(&LossParts::default(), &LossWeights::default()).unwrap(), 0.0);
        let nan = LossParts { paf: f64::NAN, ..parts };
        assert!(matches!(
            total_loss(&nan, &LossWeights::default()),
            Err(Error::Numerical(_))
        ));
    }

    #[test]
    fn shape_errors() {
        let a = Tensor::zeros([1, 14, 2, 2]);
        let b = Tensor::zeros([1, 14, 2, 3]);
        assert!(matches!(heatmap_loss(&a, &b, &[true; 14]), Err(Error::Shape(_))));
        let c = Tensor::zeros([1, 13, 2, 2]);
        assert!(matches!(heatmap_loss(&c, &c, &[true; 13]), Err(Error::Shape(_))));
        assert!(matches!(paf_loss(&a, &a, &[true; 14]), Err(Error::Shape(_))));
    }

    #[test]
    fn gradient_is_zero_on_masked_channels() {
        let pred = Tensor::filled([2, 14, 2, 2], 0.5);
        let gt = Tensor::zeros([2, 14, 2, 2]);
        let mut mask = vec![true; 28];
        mask[14 + 3] = false;
        let g = masked_sse_grad(&pred, &gt, &mask).unwrap();
        assert!(g.plane(1, 3).iter().all(|&v| v == 0.0));
        assert!(g.plane(0, 3).iter().all(|&v| v == 1.0));
    }
}
