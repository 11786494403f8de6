//! Differentiable building blocks shared by the polishing network and the
//! pose adapters. Every forward has a matching backward that takes the
//! upstream gradient and returns gradients for inputs and parameters.

use crate::tensor::Tensor;

/// Convolution weights `[out, in, k, k]` plus bias `[out]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvWeights {
    pub out_channels: usize,
    pub in_channels: usize,
    pub kernel: usize,
    pub weight: Vec<f64>,
    pub bias: Vec<f64>,
}

impl ConvWeights {
    pub fn zeros(out_channels: usize, in_channels: usize, kernel: usize) -> Self {
        ConvWeights {
            out_channels,
            in_channels,
            kernel,
            weight: vec![0.0; out_channels * in_channels * kernel * kernel],
            bias: vec![0.0; out_channels],
        }
    }

    #[inline]
    fn widx(&self, o: usize, i: usize, ky: usize, kx: usize) -> usize {
        ((o * self.in_channels + i) * self.kernel + ky) * self.kernel + kx
    }
}

/// Transposed-convolution weights `[in, out, k, k]` plus bias `[out]`.
#[derive(Clone, Debug, PartialEq)]
pub struct DeconvWeights {
    pub in_channels: usize,
    pub out_channels: usize,
    pub kernel: usize,
    pub weight: Vec<f64>,
    pub bias: Vec<f64>,
}

impl DeconvWeights {
    pub fn zeros(in_channels: usize, out_channels: usize, kernel: usize) -> Self {
        DeconvWeights {
            in_channels,
            out_channels,
            kernel,
            weight: vec![0.0; in_channels * out_channels * kernel * kernel],
            bias: vec![0.0; out_channels],
        }
    }

    #[inline]
    fn widx(&self, i: usize, o: usize, ky: usize, kx: usize) -> usize {
        ((i * self.out_channels + o) * self.kernel + ky) * self.kernel + kx
    }
}

/// Stride-1 cross-correlation with symmetric zero padding `pad`.
/// Output spatial size is `in + 2·pad − k + 1`.
pub fn conv2d(input: &Tensor, cw: &ConvWeights, pad: usize) -> Tensor {
    let [n, cin, h, w] = input.shape();
    assert_eq!(cin, cw.in_channels, "conv2d channel mismatch");
    let k = cw.kernel;
    let oh = h + 2 * pad + 1 - k;
    let ow = w + 2 * pad + 1 - k;
    let mut out = Tensor::zeros([n, cw.out_channels, oh, ow]);
    for s in 0..n {
        for o in 0..cw.out_channels {
            let bias = cw.bias[o];
            let plane = out.plane_mut(s, o);
            plane.iter_mut().for_each(|v| *v = bias);
            for i in 0..cin {
                let src = input.plane(s, i);
                for ky in 0..k {
                    for kx in 0..k {
                        let wv = cw.weight[cw.widx(o, i, ky, kx)];
                        if wv == 0.0 {
                            continue;
                        }
                        for y in 0..oh {
                            let sy = y + ky;
                            if sy < pad || sy >= h + pad {
                                continue;
                            }
                            let sy = sy - pad;
                            let row = &src[sy * w..(sy + 1) * w];
                            let orow = &mut plane[y * ow..(y + 1) * ow];
                            // source column = x + kx − pad
                            let x_lo = pad.saturating_sub(kx);
                            let x_hi = (w + pad).saturating_sub(kx).min(ow);
                            for x in x_lo..x_hi {
                                orow[x] += wv * row[x + kx - pad];
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

pub struct ConvGrads {
    pub input: Tensor,
    pub weight: Vec<f64>,
    pub bias: Vec<f64>,
}

pub fn conv2d_backward(input: &Tensor, cw: &ConvWeights, pad: usize, grad_out: &Tensor) -> ConvGrads {
    let [n, cin, h, w] = input.shape();
    let k = cw.kernel;
    let [_, _, oh, ow] = grad_out.shape();
    let mut g_in = Tensor::zeros(input.shape());
    let mut g_w = vec![0.0; cw.weight.len()];
    let mut g_b = vec![0.0; cw.bias.len()];
    for s in 0..n {
        for o in 0..cw.out_channels {
            let go = grad_out.plane(s, o);
            g_b[o] += go.iter().sum::<f64>();
            for i in 0..cin {
                let src = input.plane(s, i);
                for ky in 0..k {
                    for kx in 0..k {
                        let wi = cw.widx(o, i, ky, kx);
                        let wv = cw.weight[wi];
                        let mut acc = 0.0;
                        let x_lo = pad.saturating_sub(kx);
                        let x_hi = (w + pad).saturating_sub(kx).min(ow);
                        for y in 0..oh {
                            let sy = y + ky;
                            if sy < pad || sy >= h + pad {
                                continue;
                            }
                            let sy = sy - pad;
                            let grow = &go[y * ow..(y + 1) * ow];
                            let srow = &src[sy * w..(sy + 1) * w];
                            let gin_start = g_in.index(s, i, sy, 0);
                            let girow = &mut g_in.data_mut()[gin_start..gin_start + w];
                            for x in x_lo..x_hi {
                                let sx = x + kx - pad;
                                acc += grow[x] * srow[sx];
                                girow[sx] += grow[x] * wv;
                            }
                        }
                        g_w[wi] += acc;
                    }
                }
            }
        }
    }
    ConvGrads {
        input: g_in,
        weight: g_w,
        bias: g_b,
    }
}

/// Stride-1 transposed convolution with "full" output sizing,
/// `out = in + k − 1`; exactly undoes the shrink of a valid convolution.
pub fn deconv2d(input: &Tensor, dw: &DeconvWeights) -> Tensor {
    let [n, cin, h, w] = input.shape();
    assert_eq!(cin, dw.in_channels, "deconv2d channel mismatch");
    let k = dw.kernel;
    let oh = h + k - 1;
    let ow = w + k - 1;
    let mut out = Tensor::zeros([n, dw.out_channels, oh, ow]);
    for s in 0..n {
        for o in 0..dw.out_channels {
            let bias = dw.bias[o];
            out.plane_mut(s, o).iter_mut().for_each(|v| *v = bias);
        }
        for i in 0..cin {
            let src = input.plane(s, i).to_vec();
            for o in 0..dw.out_channels {
                let plane = out.plane_mut(s, o);
                for ky in 0..k {
                    for kx in 0..k {
                        let wv = dw.weight[dw.widx(i, o, ky, kx)];
                        if wv == 0.0 {
                            continue;
                        }
                        for y in 0..h {
                            let row = &src[y * w..(y + 1) * w];
                            let ostart = (y + ky) * ow + kx;
                            let orow = &mut plane[ostart..ostart + w];
                            for x in 0..w {
                                orow[x] += wv * row[x];
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn deconv2d_backward(input: &Tensor, dw: &DeconvWeights, grad_out: &Tensor) -> ConvGrads {
    let [n, cin, h, w] = input.shape();
    let k = dw.kernel;
    let ow = w + k - 1;
    let mut g_in = Tensor::zeros(input.shape());
    let mut g_w = vec![0.0; dw.weight.len()];
    let mut g_b = vec![0.0; dw.bias.len()];
    for s in 0..n {
        for o in 0..dw.out_channels {
            g_b[o] += grad_out.plane(s, o).iter().sum::<f64>();
        }
        for i in 0..cin {
            let src = input.plane(s, i).to_vec();
            for o in 0..dw.out_channels {
                let go = grad_out.plane(s, o);
                for ky in 0..k {
                    for kx in 0..k {
                        let wi = dw.widx(i, o, ky, kx);
                        let wv = dw.weight[wi];
                        let mut acc = 0.0;
                        let gi = g_in.plane_mut(s, i);
                        for y in 0..h {
                            let gstart = (y + ky) * ow + kx;
                            let grow = &go[gstart..gstart + w];
                            let srow = &src[y * w..(y + 1) * w];
                            let girow = &mut gi[y * w..(y + 1) * w];
                            for x in 0..w {
                                acc += grow[x] * srow[x];
                                girow[x] += grow[x] * wv;
                            }
                        }
                        g_w[wi] += acc;
                    }
                }
            }
        }
    }
    ConvGrads {
        input: g_in,
        weight: g_w,
        bias: g_b,
    }
}

pub const BN_EPS: f64 = 1e-5;

/// Per-channel normalization state.
#[derive(Clone, Debug, PartialEq)]
pub struct BatchNorm {
    pub scale: Vec<f64>,
    pub shift: Vec<f64>,
    pub running_mean: Vec<f64>,
    pub running_var: Vec<f64>,
}

impl BatchNorm {
    pub fn new(channels: usize) -> Self {
        BatchNorm {
            scale: vec![1.0; channels],
            shift: vec![0.0; channels],
            running_mean: vec![0.0; channels],
            running_var: vec![1.0; channels],
        }
    }

    pub fn channels(&self) -> usize {
        self.scale.len()
    }
}

/// Cached values needed by [`batchnorm_backward`].
pub struct BatchNormCache {
    pub normalized: Tensor,
    pub inv_std: Vec<f64>,
    pub batch_mean: Vec<f64>,
    pub batch_var: Vec<f64>,
    pub used_batch_stats: bool,
}

/// Normalizes over `N·H·W` per channel using batch statistics when
/// `use_batch_stats`, running statistics otherwise.
pub fn batchnorm(input: &Tensor, bn: &BatchNorm, use_batch_stats: bool) -> (Tensor, BatchNormCache) {
    let [n, c, h, w] = input.shape();
    let count = (n * h * w) as f64;
    let mut mean = vec![0.0; c];
    let mut var = vec![0.0; c];
    if use_batch_stats {
        for ch in 0..c {
            let mut sum = 0.0;
            for s in 0..n {
                sum += input.plane(s, ch).iter().sum::<f64>();
            }
            let m = sum / count;
            let mut sq = 0.0;
            for s in 0..n {
                sq += input.plane(s, ch).iter().map(|v| (v - m) * (v - m)).sum::<f64>();
            }
            mean[ch] = m;
            var[ch] = sq / count;
        }
    } else {
        mean.copy_from_slice(&bn.running_mean);
        var.copy_from_slice(&bn.running_var);
    }
    let inv_std: Vec<f64> = var.iter().map(|v| 1.0 / (v + BN_EPS).sqrt()).collect();
    let mut normalized = Tensor::zeros(input.shape());
    let mut out = Tensor::zeros(input.shape());
    for s in 0..n {
        for ch in 0..c {
            let src = input.plane(s, ch);
            let (m, is, g, b) = (mean[ch], inv_std[ch], bn.scale[ch], bn.shift[ch]);
            let xn: Vec<f64> = src.iter().map(|v| (v - m) * is).collect();
            out.plane_mut(s, ch)
                .iter_mut()
                .zip(&xn)
                .for_each(|(o, x)| *o = g * x + b);
            normalized.plane_mut(s, ch).copy_from_slice(&xn);
        }
    }
    (
        out,
        BatchNormCache {
            normalized,
            inv_std,
            batch_mean: mean,
            batch_var: var,
            used_batch_stats: use_batch_stats,
        },
    )
}

pub struct BatchNormGrads {
    pub input: Tensor,
    pub scale: Vec<f64>,
    pub shift: Vec<f64>,
}

pub fn batchnorm_backward(bn: &BatchNorm, cache: &BatchNormCache, grad_out: &Tensor) -> BatchNormGrads {
    let [n, c, h, w] = grad_out.shape();
    let count = (n * h * w) as f64;
    let mut g_in = Tensor::zeros(grad_out.shape());
    let mut g_scale = vec![0.0; c];
    let mut g_shift = vec![0.0; c];
    for ch in 0..c {
        let mut sum_g = 0.0;
        let mut sum_gx = 0.0;
        for s in 0..n {
            for (g, x) in grad_out.plane(s, ch).iter().zip(cache.normalized.plane(s, ch)) {
                sum_g += g;
                sum_gx += g * x;
            }
        }
        g_shift[ch] = sum_g;
        g_scale[ch] = sum_gx;
        let k = bn.scale[ch] * cache.inv_std[ch];
        for s in 0..n {
            let go = grad_out.plane(s, ch).to_vec();
            let xn = cache.normalized.plane(s, ch).to_vec();
            let gi = g_in.plane_mut(s, ch);
            if cache.used_batch_stats {
                let mg = sum_g / count;
                let mgx = sum_gx / count;
                for j in 0..go.len() {
                    gi[j] = k * (go[j] - mg - xn[j] * mgx);
                }
            } else {
                for j in 0..go.len() {
                    gi[j] = k * go[j];
                }
            }
        }
    }
    BatchNormGrads {
        input: g_in,
        scale: g_scale,
        shift: g_shift,
    }
}

pub fn leaky_relu(input: &Tensor, slope: f64) -> Tensor {
    input.map(|v| if v >= 0.0 { v } else { slope * v })
}

pub fn leaky_relu_backward(input: &Tensor, slope: f64, grad_out: &Tensor) -> Tensor {
    let mut g = grad_out.clone();
    for (gv, &x) in g.data_mut().iter_mut().zip(input.data()) {
        if x < 0.0 {
            *gv *= slope;
        }
    }
    g
}

#[inline]
pub fn sigmoid_scalar(v: f64) -> f64 {
    if v >= 0.0 {
        1.0 / (1.0 + (-v).exp())
    } else {
        let e = v.exp();
        e / (1.0 + e)
    }
}

pub fn sigmoid(input: &Tensor) -> Tensor {
    input.map(sigmoid_scalar)
}

/// Backward through a sigmoid given its output.
pub fn sigmoid_backward(output: &Tensor, grad_out: &Tensor) -> Tensor {
    let mut g = grad_out.clone();
    for (gv, &y) in g.data_mut().iter_mut().zip(output.data()) {
        *gv *= y * (1.0 - y);
    }
    g
}

/// 2×2 average pooling, stride 2; odd trailing rows/columns are dropped.
pub fn avg_pool2(input: &Tensor) -> Tensor {
    let [n, c, h, w] = input.shape();
    let (oh, ow) = (h / 2, w / 2);
    let mut out = Tensor::zeros([n, c, oh, ow]);
    for s in 0..n {
        for ch in 0..c {
            let src = input.plane(s, ch);
            let dst = out.plane_mut(s, ch);
            for y in 0..oh {
                for x in 0..ow {
                    let a = src[2 * y * w + 2 * x];
                    let b = src[2 * y * w + 2 * x + 1];
                    let cc = src[(2 * y + 1) * w + 2 * x];
                    let d = src[(2 * y + 1) * w + 2 * x + 1];
                    dst[y * ow + x] = 0.25 * (a + b + cc + d);
                }
            }
        }
    }
    out
}

pub fn avg_pool2_backward(input_shape: [usize; 4], grad_out: &Tensor) -> Tensor {
    let [n, c, _, w] = input_shape;
    let [_, _, oh, ow] = grad_out.shape();
    let mut g = Tensor::zeros(input_shape);
    for s in 0..n {
        for ch in 0..c {
            let go = grad_out.plane(s, ch).to_vec();
            let gi = g.plane_mut(s, ch);
            for y in 0..oh {
                for x in 0..ow {
                    let v = 0.25 * go[y * ow + x];
                    gi[2 * y * w + 2 * x] += v;
                    gi[2 * y * w + 2 * x + 1] += v;
                    gi[(2 * y + 1) * w + 2 * x] += v;
                    gi[(2 * y + 1) * w + 2 * x + 1] += v;
                }
            }
        }
    }
    g
}

/// 2×2 max pooling, stride 2. Ties resolve to the first element in
/// row-major order inside the window.
pub fn max_pool2(input: &Tensor) -> Tensor {
    let [n, c, h, w] = input.shape();
    let (oh, ow) = (h / 2, w / 2);
    let mut out = Tensor::zeros([n, c, oh, ow]);
    for s in 0..n {
        for ch in 0..c {
            let src = input.plane(s, ch);
            let dst = out.plane_mut(s, ch);
            for y in 0..oh {
                for x in 0..ow {
                    dst[y * ow + x] = max_window(src, w, y, x).1;
                }
            }
        }
    }
    out
}

fn max_window(src: &[f64], w: usize, y: usize, x: usize) -> (usize, f64) {
    let cands = [
        2 * y * w + 2 * x,
        2 * y * w + 2 * x + 1,
        (2 * y + 1) * w + 2 * x,
        (2 * y + 1) * w + 2 * x + 1,
    ];
    let mut best = (cands[0], src[cands[0]]);
    for &i in &cands[1..] {
        if src[i] > best.1 {
            best = (i, src[i]);
        }
    }
    best
}

pub fn max_pool2_backward(input: &Tensor, grad_out: &Tensor) -> Tensor {
    let [n, c, _, w] = input.shape();
    let [_, _, oh, ow] = grad_out.shape();
    let mut g = Tensor::zeros(input.shape());
    for s in 0..n {
        for ch in 0..c {
            let src = input.plane(s, ch).to_vec();
            let go = grad_out.plane(s, ch).to_vec();
            let gi = g.plane_mut(s, ch);
            for y in 0..oh {
                for x in 0..ow {
                    let (i, _) = max_window(&src, w, y, x);
                    gi[i] += go[y * ow + x];
                }
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_tensor(rng: &mut ChaCha8Rng, shape: [usize; 4]) -> Tensor {
        let n = shape.iter().product();
        Tensor::from_vec(shape, (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap()
    }

    fn dot(a: &Tensor, b: &Tensor) -> f64 {
        a.data().iter().zip(b.data()).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn conv_shrinks_and_deconv_restores() {
        let x = Tensor::zeros([1, 2, 10, 7]);
        let y = conv2d(&x, &ConvWeights::zeros(3, 2, 3), 0);
        assert_eq!(y.shape(), [1, 3, 8, 5]);
        let z = deconv2d(&y, &DeconvWeights::zeros(3, 2, 3));
        assert_eq!(z.shape(), [1, 2, 10, 7]);
        let p = conv2d(&x, &ConvWeights::zeros(3, 2, 3), 1);
        assert_eq!(p.shape(), [1, 3, 10, 7]);
    }

    #[test]
    fn conv_matches_direct_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x = random_tensor(&mut rng, [2, 2, 5, 6]);
        let mut cw = ConvWeights::zeros(3, 2, 3);
        cw.weight.iter_mut().for_each(|v| *v = rng.gen_range(-1.0..1.0));
        cw.bias.iter_mut().for_each(|v| *v = rng.gen_range(-1.0..1.0));
        for pad in [0usize, 1] {
            let y = conv2d(&x, &cw, pad);
            for s in 0..2 {
                for o in 0..3 {
                    for oy in 0..y.h() {
                        for ox in 0..y.w() {
                            let mut acc = cw.bias[o];
                            for i in 0..2 {
                                for ky in 0..3 {
                                    for kx in 0..3 {
                                        let sy = (oy + ky) as isize - pad as isize;
                                        let sx = (ox + kx) as isize - pad as isize;
                                        if sy < 0 || sx < 0 || sy >= 5 || sx >= 6 {
                                            continue;
                                        }
                                        acc += cw.weight[((o * 2 + i) * 3 + ky) * 3 + kx]
                                            * x.at(s, i, sy as usize, sx as usize);
                                    }
                                }
                            }
                            assert!((acc - y.at(s, o, oy, ox)).abs() < 1e-12);
                        }
                    }
                }
            }
        }
    }

    // The transposed convolution is the adjoint of the valid convolution:
    // <conv(x), y> = <x, deconv(y)> when both share the same kernel.
    #[test]
    fn deconv_is_adjoint_of_conv() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let x = random_tensor(&mut rng, [1, 2, 6, 5]);
        let y = random_tensor(&mut rng, [1, 3, 4, 3]);
        let mut cw = ConvWeights::zeros(3, 2, 3);
        cw.weight.iter_mut().for_each(|v| *v = rng.gen_range(-1.0..1.0));
        let mut dw = DeconvWeights::zeros(3, 2, 3);
        for o in 0..3 {
            for i in 0..2 {
                for k in 0..9 {
                    dw.weight[(o * 2 + i) * 9 + k] = cw.weight[(o * 2 + i) * 9 + k];
                }
            }
        }
        let lhs = dot(&conv2d(&x, &cw, 0), &y);
        let rhs = dot(&x, &deconv2d(&y, &dw));
        assert!((lhs - rhs).abs() < 1e-10, "{lhs} vs {rhs}");
    }

    fn check_grad(f: impl Fn(&Tensor) -> f64, x: &Tensor, analytic: &Tensor) {
        let h = 1e-6;
        for i in 0..x.data().len() {
            let mut xp = x.clone();
            xp.data_mut()[i] += h;
            let mut xm = x.clone();
            xm.data_mut()[i] -= h;
            let num = (f(&xp) - f(&xm)) / (2.0 * h);
            let a = analytic.data()[i];
            assert!((num - a).abs() <= 1e-6 * (1.0 + num.abs()), "index {i}: {a} vs {num}");
        }
    }

    #[test]
    fn batchnorm_input_gradient_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = random_tensor(&mut rng, [2, 2, 3, 3]);
        let proj = random_tensor(&mut rng, [2, 2, 3, 3]);
        let mut bn = BatchNorm::new(2);
        bn.scale = vec![1.3, 0.7];
        bn.shift = vec![0.1, -0.2];
        let f = |t: &Tensor| dot(&batchnorm(t, &bn, true).0, &proj);
        let (_, cache) = batchnorm(&x, &bn, true);
        let g = batchnorm_backward(&bn, &cache, &proj);
        check_grad(f, &x, &g.input);
    }

    #[test]
    fn pooling_gradients_match_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let x = random_tensor(&mut rng, [1, 2, 5, 4]);
        let proj = random_tensor(&mut rng, [1, 2, 2, 2]);
        let g = avg_pool2_backward(x.shape(), &proj);
        check_grad(|t| dot(&avg_pool2(t), &proj), &x, &g);
        let g = max_pool2_backward(&x, &proj);
        check_grad(|t| dot(&max_pool2(t), &proj), &x, &g);
    }

    #[test]
    fn conv_and_deconv_input_gradients_match_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let x = random_tensor(&mut rng, [1, 2, 5, 5]);
        let mut cw = ConvWeights::zeros(2, 2, 3);
        cw.weight.iter_mut().for_each(|v| *v = rng.gen_range(-1.0..1.0));
        let proj = random_tensor(&mut rng, [1, 2, 5, 5]);
        let g = conv2d_backward(&x, &cw, 1, &proj);
        check_grad(|t| dot(&conv2d(t, &cw, 1), &proj), &x, &g.input);

        let mut dw = DeconvWeights::zeros(2, 3, 3);
        dw.weight.iter_mut().for_each(|v| *v = rng.gen_range(-1.0..1.0));
        let proj = random_tensor(&mut rng, [1, 3, 7, 7]);
        let g = deconv2d_backward(&x, &dw, &proj);
        check_grad(|t| dot(&deconv2d(t, &dw), &proj), &x, &g.input);
    }
}
