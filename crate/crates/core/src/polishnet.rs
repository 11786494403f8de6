//! The learnable image-to-image polishing network.
//!
//! Encoder blocks are Conv-Conv-BatchNorm-LeakyReLU with valid (unpadded)
//! stride-1 convolutions; decoder blocks are DeConv-DeConv-BatchNorm-LeakyReLU
//! with "full" transposed convolutions, so every pixel the encoder trims is
//! grown back and the output has the input's size. A final logistic squashes
//! the three output channels into [0, 1].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::layers::{
    batchnorm, batchnorm_backward, conv2d, conv2d_backward, deconv2d, deconv2d_backward, leaky_relu,
    leaky_relu_backward, sigmoid, sigmoid_backward, BatchNorm, BatchNormCache, ConvWeights, DeconvWeights,
};
use crate::raster::ColorImage;
use crate::tensor::Tensor;

pub const IMAGE_CHANNELS: usize = 3;
pub const BN_MOMENTUM: f64 = 0.99;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PolishNetConfig {
    pub encoder_blocks: usize,
    pub decoder_blocks: usize,
    pub convs_per_block: usize,
    pub kernel: usize,
    pub leaky_slope: f64,
    /// Output width of each encoder block; the decoder mirrors it.
    pub channel_widths: Vec<usize>,
    /// (width, height) of the images the network is built for.
    pub working_size: (usize, usize),
}

impl Default for PolishNetConfig {
    fn default() -> Self {
        PolishNetConfig {
            encoder_blocks: 3,
            decoder_blocks: 3,
            convs_per_block: 2,
            kernel: 3,
            leaky_slope: 0.1,
            channel_widths: vec![64, 128, 256],
            working_size: crate::pressure::DEFAULT_WORKING_SIZE,
        }
    }
}

impl PolishNetConfig {
    /// Pixels removed per spatial axis by the whole encoder.
    pub fn encoder_shrink(&self) -> usize {
        self.encoder_blocks * self.convs_per_block * (self.kernel - 1)
    }

    /// Smallest accepted working dimension: twice the encoder shrink.
    pub fn min_dimension(&self) -> usize {
        2 * self.encoder_shrink() + 1
    }

    pub fn validate(&self) -> Result<()> {
        if self.encoder_blocks == 0 || self.convs_per_block == 0 {
            return Err(Error::Config("need at least one block and one conv per block".into()));
        }
        if self.kernel < 1 || self.kernel % 2 == 0 {
            return Err(Error::Config(format!("kernel {} must be odd", self.kernel)));
        }
        if self.decoder_blocks != self.encoder_blocks {
            return Err(Error::Config(format!(
                "decoder blocks ({}) must mirror encoder blocks ({}) for the output to match the input size",
                self.decoder_blocks, self.encoder_blocks
            )));
        }
        if self.channel_widths.len() != self.encoder_blocks || self.channel_widths.contains(&0) {
            return Err(Error::Config(format!(
                "expected {} non-zero channel widths, got {:?}",
                self.encoder_blocks, self.channel_widths
            )));
        }
        if !(self.leaky_slope.is_finite() && self.leaky_slope >= 0.0) {
            return Err(Error::Config("leaky slope must be finite and non-negative".into()));
        }
        let (w, h) = self.working_size;
        let min = self.min_dimension();
        if w < min || h < min {
            return Err(Error::Config(format!(
                "working size {w}x{h} too small: each dimension must be at least {min}"
            )));
        }
        Ok(())
    }

    /// Output channels of each decoder block.
    fn decoder_widths(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.channel_widths.iter().rev().skip(1).copied().collect();
        out.push(IMAGE_CHANNELS);
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EncoderBlock {
    pub convs: Vec<ConvWeights>,
    pub bn: BatchNorm,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecoderBlock {
    pub deconvs: Vec<DeconvWeights>,
    pub bn: BatchNorm,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolishNetParams {
    config: PolishNetConfig,
    pub encoder: Vec<EncoderBlock>,
    pub decoder: Vec<DecoderBlock>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Normalize with batch statistics.
    Train,
    /// Normalize with running statistics.
    Eval,
}

/// Gradients in the canonical trainable-parameter order, see
/// [`PolishNetParams::trainable`].
pub type ParamGrads = Vec<Vec<f64>>;

pub fn init_params(config: &PolishNetConfig, seed: u64) -> Result<PolishNetParams> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = config.kernel;
    let gain = (6.0 / (1.0 + config.leaky_slope * config.leaky_slope)).sqrt();
    let mut fill = |w: &mut [f64], b: &mut [f64], fan_in: usize| {
        let bound = gain / (fan_in as f64).sqrt();
        w.iter_mut().for_each(|v| *v = rng.gen_range(-bound..bound));
        let bb = 1.0 / (fan_in as f64).sqrt();
        b.iter_mut().for_each(|v| *v = rng.gen_range(-bb..bb));
    };

    let mut encoder = Vec::with_capacity(config.encoder_blocks);
    let mut c_in = IMAGE_CHANNELS;
    for &width in &config.channel_widths {
        let mut convs = Vec::with_capacity(config.convs_per_block);
        for i in 0..config.convs_per_block {
            let cin = if i == 0 { c_in } else { width };
            let mut cw = ConvWeights::zeros(width, cin, k);
            fill(&mut cw.weight, &mut cw.bias, cin * k * k);
            convs.push(cw);
        }
        encoder.push(EncoderBlock {
            convs,
            bn: BatchNorm::new(width),
        });
        c_in = width;
    }

    let mut decoder = Vec::with_capacity(config.decoder_blocks);
    for width in config.decoder_widths() {
        let mut deconvs = Vec::with_capacity(config.convs_per_block);
        for i in 0..config.convs_per_block {
            let cin = if i == 0 { c_in } else { width };
            let mut dw = DeconvWeights::zeros(cin, width, k);
            fill(&mut dw.weight, &mut dw.bias, cin * k * k);
            deconvs.push(dw);
        }
        decoder.push(DecoderBlock {
            deconvs,
            bn: BatchNorm::new(width),
        });
        c_in = width;
    }

    Ok(PolishNetParams {
        config: config.clone(),
        encoder,
        decoder,
    })
}

struct BlockCache {
    /// Input to each convolution of the block.
    conv_inputs: Vec<Tensor>,
    bn_input: Tensor,
    bn: BatchNormCache,
    /// LeakyReLU input (the normalized, affine-transformed activations).
    act_input: Tensor,
}

/// Activations kept from a forward pass for [`PolishNetParams::backward`].
pub struct ForwardCache {
    encoder: Vec<BlockCache>,
    decoder: Vec<BlockCache>,
    output: Tensor,
    mode: Mode,
}

impl ForwardCache {
    pub fn output(&self) -> &Tensor {
        &self.output
    }
}

impl PolishNetParams {
    pub fn config(&self) -> &PolishNetConfig {
        &self.config
    }

    pub(crate) fn from_parts(config: PolishNetConfig, encoder: Vec<EncoderBlock>, decoder: Vec<DecoderBlock>) -> Self {
        PolishNetParams {
            config,
            encoder,
            decoder,
        }
    }

    /// Forward on a `[N, 3, H, W]` batch.
    pub fn forward_batch(&self, input: &Tensor) -> Result<Tensor> {
        Ok(self.forward_cached(input, Mode::Eval)?.output)
    }

    pub fn forward_cached(&self, input: &Tensor, mode: Mode) -> Result<ForwardCache> {
        let (w, h) = self.config.working_size;
        if input.c() != IMAGE_CHANNELS || input.h() != h || input.w() != w {
            return Err(Error::Shape(format!(
                "polishnet expects [N, 3, {h}, {w}], got {:?}",
                input.shape()
            )));
        }
        let slope = self.config.leaky_slope;
        let use_batch = mode == Mode::Train;
        let mut x = input.clone();
        let mut encoder = Vec::with_capacity(self.encoder.len());
        for block in &self.encoder {
            let mut conv_inputs = Vec::with_capacity(block.convs.len());
            for cw in &block.convs {
                let y = conv2d(&x, cw, 0);
                conv_inputs.push(std::mem::replace(&mut x, y));
            }
            let (y, bn) = batchnorm(&x, &block.bn, use_batch);
            let bn_input = std::mem::replace(&mut x, leaky_relu(&y, slope));
            encoder.push(BlockCache {
                conv_inputs,
                bn_input,
                bn,
                act_input: y,
            });
        }
        let mut decoder = Vec::with_capacity(self.decoder.len());
        for block in &self.decoder {
            let mut conv_inputs = Vec::with_capacity(block.deconvs.len());
            for dw in &block.deconvs {
                let y = deconv2d(&x, dw);
                conv_inputs.push(std::mem::replace(&mut x, y));
            }
            let (y, bn) = batchnorm(&x, &block.bn, use_batch);
            let bn_input = std::mem::replace(&mut x, leaky_relu(&y, slope));
            decoder.push(BlockCache {
                conv_inputs,
                bn_input,
                bn,
                act_input: y,
            });
        }
        let output = sigmoid(&x);
        Ok(ForwardCache {
            encoder,
            decoder,
            output,
            mode,
        })
    }

    /// Polishes a single image.
    pub fn forward(&self, image: &ColorImage, mode: Mode) -> Result<ColorImage> {
        let cache = self.forward_cached(&image.to_tensor(), mode)?;
        ColorImage::from_tensor(&cache.output, 0)
    }

    /// Backpropagates `grad_output` (same shape as the output). Returns the
    /// parameter gradients and the gradient with respect to the input.
    pub fn backward(&self, cache: &ForwardCache, grad_output: &Tensor) -> (ParamGrads, Tensor) {
        let slope = self.config.leaky_slope;
        let mut g = sigmoid_backward(&cache.output, grad_output);
        let mut dec_grads: Vec<Vec<Vec<f64>>> = Vec::with_capacity(self.decoder.len());
        for (block, bc) in self.decoder.iter().zip(&cache.decoder).rev() {
            let mut grads = Vec::new();
            g = leaky_relu_backward(&bc.act_input, slope, &g);
            let bg = batchnorm_backward(&block.bn, &bc.bn, &g);
            g = bg.input;
            let mut conv_grads = Vec::new();
            for (dw, inp) in block.deconvs.iter().zip(&bc.conv_inputs).rev() {
                let cg = deconv2d_backward(inp, dw, &g);
                g = cg.input;
                conv_grads.push((cg.weight, cg.bias));
            }
            conv_grads.reverse();
            for (w, b) in conv_grads {
                grads.push(w);
                grads.push(b);
            }
            grads.push(bg.scale);
            grads.push(bg.shift);
            dec_grads.push(grads);
        }
        dec_grads.reverse();
        let mut enc_grads: Vec<Vec<Vec<f64>>> = Vec::with_capacity(self.encoder.len());
        for (block, bc) in self.encoder.iter().zip(&cache.encoder).rev() {
            let mut grads = Vec::new();
            g = leaky_relu_backward(&bc.act_input, slope, &g);
            let bg = batchnorm_backward(&block.bn, &bc.bn, &g);
            g = bg.input;
            let mut conv_grads = Vec::new();
            for (cw, inp) in block.convs.iter().zip(&bc.conv_inputs).rev() {
                let cg = conv2d_backward(inp, cw, 0, &g);
                g = cg.input;
                conv_grads.push((cg.weight, cg.bias));
            }
            conv_grads.reverse();
            for (w, b) in conv_grads {
                grads.push(w);
                grads.push(b);
            }
            grads.push(bg.scale);
            grads.push(bg.shift);
            enc_grads.push(grads);
        }
        enc_grads.reverse();
        let grads = enc_grads.into_iter().chain(dec_grads).flatten().collect();
        (grads, g)
    }

    /// Folds the batch statistics of a training-mode pass into the running
    /// statistics: `running = m·running + (1 − m)·batch`, unbiased variance.
    pub fn update_running_stats(&mut self, cache: &ForwardCache) {
        if cache.mode != Mode::Train {
            return;
        }
        let blocks = self
            .encoder
            .iter_mut()
            .map(|b| &mut b.bn)
            .chain(self.decoder.iter_mut().map(|b| &mut b.bn));
        let caches = cache.encoder.iter().chain(&cache.decoder);
        for (bn, bc) in blocks.zip(caches) {
            let [n, _, h, w] = bc.bn_input.shape();
            let count = (n * h * w) as f64;
            let unbias = if count > 1.0 { count / (count - 1.0) } else { 1.0 };
            for c in 0..bn.channels() {
                bn.running_mean[c] = BN_MOMENTUM * bn.running_mean[c] + (1.0 - BN_MOMENTUM) * bc.bn.batch_mean[c];
                bn.running_var[c] = BN_MOMENTUM * bn.running_var[c] + (1.0 - BN_MOMENTUM) * bc.bn.batch_var[c] * unbias;
            }
        }
    }

    /// Trainable tensors in canonical order: per block, each convolution's
    /// weight then bias, then normalization scale and shift.
    pub fn trainable(&self) -> Vec<&[f64]> {
        let mut out: Vec<&[f64]> = Vec::new();
        for b in &self.encoder {
            for cw in &b.convs {
                out.push(&cw.weight);
                out.push(&cw.bias);
            }
            out.push(&b.bn.scale);
            out.push(&b.bn.shift);
        }
        for b in &self.decoder {
            for dw in &b.deconvs {
                out.push(&dw.weight);
                out.push(&dw.bias);
            }
            out.push(&b.bn.scale);
            out.push(&b.bn.shift);
        }
        out
    }

    pub fn trainable_mut(&mut self) -> Vec<&mut Vec<f64>> {
        let mut out: Vec<&mut Vec<f64>> = Vec::new();
        for b in &mut self.encoder {
            for cw in &mut b.convs {
                out.push(&mut cw.weight);
                out.push(&mut cw.bias);
            }
            out.push(&mut b.bn.scale);
            out.push(&mut b.bn.shift);
        }
        for b in &mut self.decoder {
            for dw in &mut b.deconvs {
                out.push(&mut dw.weight);
                out.push(&mut dw.bias);
            }
            out.push(&mut b.bn.scale);
            out.push(&mut b.bn.shift);
        }
        out
    }

    pub fn num_trainable(&self) -> usize {
        self.trainable().iter().map(|t| t.len()).sum()
    }

    /// Every stored array (trainable plus running statistics) with its
    /// checkpoint name and shape.
    pub fn named_arrays(&self) -> Vec<(String, Vec<usize>, &[f64])> {
        let mut out = Vec::new();
        for (b, block) in self.encoder.iter().enumerate() {
            for (i, cw) in block.convs.iter().enumerate() {
                let shape = vec![cw.out_channels, cw.in_channels, cw.kernel, cw.kernel];
                out.push((format!("enc{b}.conv{i}.weight"), shape, cw.weight.as_slice()));
                out.push((
                    format!("enc{b}.conv{i}.bias"),
                    vec![cw.out_channels],
                    cw.bias.as_slice(),
                ));
            }
            push_bn(&mut out, &format!("enc{b}.bn"), &block.bn);
        }
        for (b, block) in self.decoder.iter().enumerate() {
            for (i, dw) in block.deconvs.iter().enumerate() {
                let shape = vec![dw.in_channels, dw.out_channels, dw.kernel, dw.kernel];
                out.push((format!("dec{b}.deconv{i}.weight"), shape, dw.weight.as_slice()));
                out.push((
                    format!("dec{b}.deconv{i}.bias"),
                    vec![dw.out_channels],
                    dw.bias.as_slice(),
                ));
            }
            push_bn(&mut out, &format!("dec{b}.bn"), &block.bn);
        }
        out
    }

    pub fn all_finite(&self) -> bool {
        self.named_arrays()
            .iter()
            .all(|(_, _, v)| v.iter().all(|x| x.is_finite()))
    }

    /// SHA-256 over every stored value, in checkpoint order.
    pub fn checksum(&self) -> String {
        let mut h = Sha256::new();
        for (name, _, values) in self.named_arrays() {
            h.update(name.as_bytes());
            for v in values {
                h.update(v.to_le_bytes());
            }
        }
        hex(&h.finalize())
    }

    /// Rounds every value to the nearest `f32`.
    pub fn to_f32_precision(&self) -> PolishNetParams {
        let mut out = self.clone();
        let round = |v: &mut Vec<f64>| v.iter_mut().for_each(|x| *x = *x as f32 as f64);
        for b in &mut out.encoder {
            b.convs.iter_mut().for_each(|c| {
                round(&mut c.weight);
                round(&mut c.bias)
            });
            round_bn(&mut b.bn, round);
        }
        for b in &mut out.decoder {
            b.deconvs.iter_mut().for_each(|c| {
                round(&mut c.weight);
                round(&mut c.bias)
            });
            round_bn(&mut b.bn, round);
        }
        out
    }
}

fn round_bn(bn: &mut BatchNorm, round: impl Fn(&mut Vec<f64>)) {
    round(&mut bn.scale);
    round(&mut bn.shift);
    round(&mut bn.running_mean);
    round(&mut bn.running_var);
}

fn push_bn<'a>(out: &mut Vec<(String, Vec<usize>, &'a [f64])>, prefix: &str, bn: &'a BatchNorm) {
    let c = vec![bn.channels()];
    out.push((format!("{prefix}.scale"), c.clone(), bn.scale.as_slice()));
    out.push((format!("{prefix}.shift"), c.clone(), bn.shift.as_slice()));
    out.push((format!("{prefix}.running_mean"), c.clone(), bn.running_mean.as_slice()));
    out.push((format!("{prefix}.running_var"), c, bn.running_var.as_slice()));
}

pub(crate) fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn toy_config(size: (usize, usize), widths: Vec<usize>) -> PolishNetConfig {
        PolishNetConfig {
            channel_widths: widths,
            working_size: size,
            ..PolishNetConfig::default()
        }
    }

    fn random_image(w: usize, h: usize, seed: u64) -> ColorImage {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        ColorImage::new(w, h, (0..3 * w * h).map(|_| rng.gen_range(0.0..1.0)).collect()).unwrap()
    }

    #[test]
    fn same_seed_same_params() {
        let cfg = toy_config((28, 28), vec![2, 3, 4]);
        let a = init_params(&cfg, 42).unwrap();
        let b = init_params(&cfg, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.checksum(), b.checksum());
        assert_ne!(a.checksum(), init_params(&cfg, 43).unwrap().checksum());
    }

    #[test]
    fn too_small_input_is_a_config_error() {
        let cfg = toy_config((20, 20), vec![1, 1, 1]);
        assert!(matches!(init_params(&cfg, 0), Err(Error::Config(_))));
        let cfg = toy_config((25, 25), vec![1, 1, 1]);
        assert!(init_params(&cfg, 0).is_ok());
    }

    #[test]
    fn mismatched_blocks_rejected() {
        let mut cfg = PolishNetConfig::default();
        cfg.decoder_blocks = 2;
        assert!(cfg.validate().is_err());
        let mut cfg = PolishNetConfig::default();
        cfg.channel_widths = vec![8, 8];
        assert!(cfg.validate().is_err());
    }

    // Parameter count walked directly from the block layout.
    #[test]
    fn default_parameter_count_matches_shape_walk() {
        let params = init_params(&PolishNetConfig::default(), 0).unwrap();
        let conv = |cin: usize, cout: usize| cin * cout * 9 + cout;
        let bn = |c: usize| 2 * c;
        let expected = conv(3, 64)
            + conv(64, 64)
            + bn(64)
            + conv(64, 128)
            + conv(128, 128)
            + bn(128)
            + conv(128, 256)
            + conv(256, 256)
            + bn(256)
            + conv(256, 128)
            + conv(128, 128)
            + bn(128)
            + conv(128, 64)
            + conv(64, 64)
            + bn(64)
            + conv(64, 3)
            + conv(3, 3)
            + bn(3);
        assert_eq!(params.num_trainable(), expected);
        assert_eq!(expected, 1_701_853);
    }

    #[test]
    fn output_keeps_size_and_range() {
        let cfg = toy_config((30, 27), vec![2, 3, 2]);
        let params = init_params(&cfg, 1).unwrap();
        let img = random_image(30, 27, 5);
        for mode in [Mode::Train, Mode::Eval] {
            let out = params.forward(&img, mode).unwrap();
            assert_eq!(out.size(), (30, 27));
            assert!(out.data().iter().all(|v| (0.0..=1.0).contains(v)));
        }
        let a = params.forward(&img, Mode::Eval).unwrap();
        assert_eq!(a, params.forward(&img, Mode::Eval).unwrap());
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let params = init_params(&toy_config((28, 28), vec![1, 1, 1]), 0).unwrap();
        let img = random_image(29, 28, 0);
        assert!(matches!(params.forward(&img, Mode::Eval), Err(Error::Shape(_))));
    }

    #[test]
    fn running_stats_move_toward_batch_stats() {
        let mut params = init_params(&toy_config((28, 28), vec![1, 1, 1]), 0).unwrap();
        let x = random_image(28, 28, 1).to_tensor();
        let cache = params.forward_cached(&x, Mode::Train).unwrap();
        params.update_running_stats(&cache);
        let bn = &params.encoder[0].bn;
        assert!(bn.running_mean[0] != 0.0);
        assert!(bn.running_var[0] != 1.0);
    }
}
