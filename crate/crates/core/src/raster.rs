//! Three-channel floating-point images and resampling.

use std::path::Path;

use crate::error::{Error, Result};
use crate::tensor::Tensor;

/// RGB image with channel values in [0, 1], stored channel-major (`3×H×W`).
#[derive(Clone, Debug, PartialEq)]
pub struct ColorImage {
    width: usize,
    height: usize,
    data: Vec<f64>,
}

impl ColorImage {
    pub fn new(width: usize, height: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != 3 * width * height {
            return Err(Error::Shape(format!(
                "{width}x{height} image needs {} values, got {}",
                3 * width * height,
                data.len()
            )));
        }
        if data.iter().any(|v| !(0.0..=1.0).contains(v)) {
            return Err(Error::Validation("image channel values must lie in [0, 1]".into()));
        }
        Ok(ColorImage { width, height, data })
    }

    pub fn filled(width: usize, height: usize, rgb: [f64; 3]) -> Self {
        let mut data = Vec::with_capacity(3 * width * height);
        for c in rgb {
            data.extend(std::iter::repeat(c.clamp(0.0, 1.0)).take(width * height));
        }
        ColorImage { width, height, data }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn size(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, c: usize, y: usize, x: usize) -> f64 {
        self.data[(c * self.height + y) * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, c: usize, y: usize, x: usize, v: f64) {
        self.data[(c * self.height + y) * self.width + x] = v.clamp(0.0, 1.0);
    }

    pub fn pixel(&self, y: usize, x: usize) -> [f64; 3] {
        [self.get(0, y, x), self.get(1, y, x), self.get(2, y, x)]
    }

    pub fn to_tensor(&self) -> Tensor {
        Tensor::from_vec([1, 3, self.height, self.width], self.data.clone())
            .expect("image buffer length matches its shape")
    }

    /// Takes sample `n` of a 3-channel tensor, clamping into [0, 1].
    pub fn from_tensor(t: &Tensor, n: usize) -> Result<Self> {
        if t.c() != 3 {
            return Err(Error::Shape(format!("expected 3 channels, got {}", t.c())));
        }
        let data = t.sample(n).into_vec().into_iter().map(|v| v.clamp(0.0, 1.0)).collect();
        Ok(ColorImage {
            width: t.w(),
            height: t.h(),
            data,
        })
    }

    pub fn to_rgb8(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(3 * self.width * self.height);
        for y in 0..self.height {
            for x in 0..self.width {
                for c in 0..3 {
                    out.push(to_u8(self.get(c, y, x)));
                }
            }
        }
        out
    }

    pub fn encode_png(&self) -> Result<Vec<u8>> {
        let img = image::RgbImage::from_raw(self.width as u32, self.height as u32, self.to_rgb8())
            .ok_or_else(|| Error::Shape("rgb buffer size".into()))?;
        let mut buf = std::io::Cursor::new(Vec::new());
        img.write_to(&mut buf, image::ImageFormat::Png)
            .map_err(|e| Error::Parse(format!("png encode: {e}")))?;
        Ok(buf.into_inner())
    }

    pub fn save_png(&self, path: &Path) -> Result<()> {
        let bytes = self.encode_png()?;
        std::fs::write(path, bytes).map_err(|e| Error::io(path, e))
    }

    pub fn load_png(path: &Path) -> Result<Self> {
        let img = image::open(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
            .to_rgb8();
        let (w, h) = (img.width() as usize, img.height() as usize);
        let mut out = ColorImage::filled(w, h, [0.0; 3]);
        for (x, y, p) in img.enumerate_pixels() {
            for c in 0..3 {
                out.set(c, y as usize, x as usize, p[c] as f64 / 255.0);
            }
        }
        Ok(out)
    }
}

pub(crate) fn to_u8(v: f64) -> u8 {
    (v.clamp(0.0, 1.0) * 255.0).round() as u8
}

/// Writes a single-channel plane as an 8-bit grayscale PNG (values ×255).
pub fn save_gray_png(plane: &[f64], width: usize, height: usize, path: &Path) -> Result<()> {
    let bytes: Vec<u8> = plane.iter().map(|&v| to_u8(v)).collect();
    let img = image::GrayImage::from_raw(width as u32, height as u32, bytes)
        .ok_or_else(|| Error::Shape("gray buffer size".into()))?;
    img.save(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn cubic_weight(d: f64) -> f64 {
    const A: f64 = -0.5;
    let d = d.abs();
    if d <= 1.0 {
        ((A + 2.0) * d - (A + 3.0)) * d * d + 1.0
    } else if d < 2.0 {
        ((A * d - 5.0 * A) * d + 8.0 * A) * d - 4.0 * A
    } else {
        0.0
    }
}

/// Taps and weights for resampling one axis with pixel-center alignment.
fn cubic_taps(src_len: usize, dst_len: usize) -> Vec<[(usize, f64); 4]> {
    let scale = src_len as f64 / dst_len as f64;
    (0..dst_len)
        .map(|d| {
            let s = (d as f64 + 0.5) * scale - 0.5;
            let base = s.floor() as isize;
            let mut taps = [(0usize, 0.0); 4];
            for (k, tap) in taps.iter_mut().enumerate() {
                let idx = base - 1 + k as isize;
                let w = cubic_weight(s - idx as f64);
                *tap = (idx.clamp(0, src_len as isize - 1) as usize, w);
            }
            taps
        })
        .collect()
}

/// Separable bicubic resampling of a single plane with replicated borders.
pub fn resize_plane_bicubic(src: &[f64], sw: usize, sh: usize, dw: usize, dh: usize) -> Vec<f64> {
    let xt = cubic_taps(sw, dw);
    let yt = cubic_taps(sh, dh);
    let mut tmp = vec![0.0; sh * dw];
    for y in 0..sh {
        for (x, taps) in xt.iter().enumerate() {
            tmp[y * dw + x] = taps.iter().map(|&(i, w)| w * src[y * sw + i]).sum();
        }
    }
    let mut out = vec![0.0; dh * dw];
    for (y, taps) in yt.iter().enumerate() {
        for x in 0..dw {
            out[y * dw + x] = taps.iter().map(|&(i, w)| w * tmp[i * dw + x]).sum();
        }
    }
    out
}

/// Bicubic resize; results are clamped back into [0, 1].
pub fn resize_bicubic(img: &ColorImage, width: usize, height: usize) -> ColorImage {
    if img.size() == (width, height) {
        return img.clone();
    }
    let plane = img.width * img.height;
    let mut data = Vec::with_capacity(3 * width * height);
    for c in 0..3 {
        let src = &img.data[c * plane..(c + 1) * plane];
        data.extend(
            resize_plane_bicubic(src, img.width, img.height, width, height)
                .into_iter()
                .map(|v| v.clamp(0.0, 1.0)),
        );
    }
    ColorImage { width, height, data }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_weights_partition_unity() {
        for t in [0.0, 0.1, 0.25, 0.5, 0.9] {
            let s: f64 = (-1..=2).map(|k| cubic_weight(t - k as f64)).sum();
            assert!((s - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn constant_image_survives_resize() {
        let img = ColorImage::filled(32, 64, [0.2, 0.4, 0.6]);
        let big = resize_bicubic(&img, 128, 256);
        assert_eq!(big.size(), (128, 256));
        for y in [0, 100, 255] {
            let p = big.pixel(y, 7);
            assert!((p[0] - 0.2).abs() < 1e-12 && (p[2] - 0.6).abs() < 1e-12);
        }
    }

    #[test]
    fn new_rejects_out_of_range() {
        assert!(ColorImage::new(1, 1, vec![0.0, 0.5, 1.2]).is_err());
        assert!(ColorImage::new(1, 1, vec![0.0, 0.5]).is_err());
    }

    #[test]
    fn png_round_trip_is_quantized() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.png");
        let img = ColorImage::filled(4, 3, [0.0, 0.5, 1.0]);
        img.save_png(&path).unwrap();
        let back = ColorImage::load_png(&path).unwrap();
        assert_eq!(back.size(), (4, 3));
        assert!((back.get(1, 2, 3) - 128.0 / 255.0).abs() < 1e-12);
    }
}
