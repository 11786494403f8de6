//! Frozen pose-identification modules.
//!
//! Everything downstream talks to a [`PoseModule`]: image batch in,
//! 14 heatmaps and 28 PAF channels out, at `output_scale` of the input
//! resolution. The one concrete network is [`MultiStageNet`], a multi-stage
//! two-branch CNN: a shared backbone followed by stages that each predict
//! heatmaps and PAFs, where every stage after the first sees the backbone
//! features concatenated with the previous stage's maps. The final stage's
//! maps are the output.
//!
//! Weight files use the [`Checkpoint`] container with kind `"pose_adapter"`
//! and an [`AdapterManifest`] under `metadata.manifest`. Output channels are
//! matched by name, so checkpoints carrying extra channels (eyes, ears,
//! background) load with those channels dropped.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::checkpoint::{Checkpoint, DType, NamedArray};
use crate::error::{Error, Result};
use crate::layers::{
    avg_pool2, avg_pool2_backward, conv2d, conv2d_backward, leaky_relu, leaky_relu_backward, max_pool2,
    max_pool2_backward, ConvWeights,
};
use crate::raster::ColorImage;
use crate::skeleton::{PartName, SkeletonTopology, NUM_LIMBS, NUM_PAF_CHANNELS, NUM_PARTS};
use crate::tensor::Tensor;

pub const ADAPTER_KIND: &str = "pose_adapter";
pub const LEAKY_SLOPE: f64 = 0.1;

/// Heatmaps `[N, 14, h, w]` and PAFs `[N, 28, h, w]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PoseMaps {
    pub heatmaps: Tensor,
    pub pafs: Tensor,
}

pub trait PoseModule: Send + Sync {
    fn name(&self) -> &str;

    /// Map resolution divided by input resolution.
    fn output_scale(&self) -> f64;

    fn differentiable(&self) -> bool;

    /// Runs on a `[N, 3, H, W]` batch.
    fn infer_batch(&self, images: &Tensor) -> Result<PoseMaps>;

    /// Gradient of a scalar with respect to the input batch, given its
    /// gradients with respect to both outputs.
    fn input_gradient(&self, images: &Tensor, grad_heatmaps: &Tensor, grad_pafs: &Tensor) -> Result<Tensor>;

    /// Digest of every parameter; unchanged for the adapter's lifetime.
    fn checksum(&self) -> String;

    fn infer(&self, image: &ColorImage) -> Result<PoseMaps> {
        self.infer_batch(&image.to_tensor())
    }

    /// (height, width) of the maps produced for a `height x width` input.
    fn map_size(&self, height: usize, width: usize) -> (usize, usize) {
        let s = self.output_scale();
        (
            (height as f64 * s).round() as usize,
            (width as f64 * s).round() as usize,
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Activation {
    Linear,
    Relu,
    Leaky,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pool {
    Avg,
    Max,
}

/// One same-padded stride-1 convolution, activation, optional 2x2 pooling.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LayerSpec {
    pub in_channels: usize,
    pub out_channels: usize,
    pub kernel: usize,
    pub activation: Activation,
    #[serde(default)]
    pub pool: Option<Pool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StageSpec {
    pub heatmap: Vec<LayerSpec>,
    pub paf: Vec<LayerSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AdapterManifest {
    pub name: String,
    pub output_scale: f64,
    pub backbone: Vec<LayerSpec>,
    pub stages: Vec<StageSpec>,
    /// Names of the final heatmap branch's output channels, in order.
    pub heatmap_channels: Vec<String>,
    /// Names of the final PAF branch's output channels, e.g. `"neck-r_hip.x"`.
    pub paf_channels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
struct Layer {
    spec: LayerSpec,
    conv: ConvWeights,
}

struct LayerCache {
    input: Tensor,
    pre_act: Tensor,
    post_act: Tensor,
}

impl Layer {
    fn pad(&self) -> usize {
        self.spec.kernel / 2
    }

    fn forward(&self, x: &Tensor, label: &str) -> Result<(Tensor, LayerCache)> {
        let pre_act = conv2d(x, &self.conv, self.pad());
        let post_act = match self.spec.activation {
            Activation::Linear => pre_act.clone(),
            Activation::Relu => leaky_relu(&pre_act, 0.0),
            Activation::Leaky => leaky_relu(&pre_act, LEAKY_SLOPE),
        };
        let out = match self.spec.pool {
            None => post_act.clone(),
            Some(Pool::Avg) => avg_pool2(&post_act),
            Some(Pool::Max) => max_pool2(&post_act),
        };
        if !out.all_finite() {
            return Err(Error::Numerical(format!("non-finite activation in layer {label}")));
        }
        Ok((
            out,
            LayerCache {
                input: x.clone(),
                pre_act,
                post_act,
            },
        ))
    }

    fn backward(&self, cache: &LayerCache, grad: &Tensor) -> Tensor {
        let g = match self.spec.pool {
            None => grad.clone(),
            Some(Pool::Avg) => avg_pool2_backward(cache.post_act.shape(), grad),
            Some(Pool::Max) => max_pool2_backward(&cache.post_act, grad),
        };
        let g = match self.spec.activation {
            Activation::Linear => g,
            Activation::Relu => leaky_relu_backward(&cache.pre_act, 0.0, &g),
            Activation::Leaky => leaky_relu_backward(&cache.pre_act, LEAKY_SLOPE, &g),
        };
        conv2d_backward(&cache.input, &self.conv, self.pad(), &g).input
    }
}

fn run_chain(layers: &[Layer], x: &Tensor, prefix: &str) -> Result<(Tensor, Vec<LayerCache>)> {
    let mut caches = Vec::with_capacity(layers.len());
    let mut x = x.clone();
    for (i, layer) in layers.iter().enumerate() {
        let (y, c) = layer.forward(&x, &format!("{prefix}.{i}"))?;
        caches.push(c);
        x = y;
    }
    Ok((x, caches))
}

fn back_chain(layers: &[Layer], caches: &[LayerCache], grad: &Tensor) -> Tensor {
    let mut g = grad.clone();
    for (layer, cache) in layers.iter().zip(caches).rev() {
        g = layer.backward(cache, &g);
    }
    g
}

struct Stage {
    heatmap: Vec<Layer>,
    paf: Vec<Layer>,
}

struct StageCache {
    heatmap: Vec<LayerCache>,
    paf: Vec<LayerCache>,
}

struct NetCache {
    backbone: Vec<LayerCache>,
    stages: Vec<StageCache>,
    feature_channels: usize,
}

/// Frozen multi-stage two-branch CNN.
pub struct MultiStageNet {
    manifest: AdapterManifest,
    backbone: Vec<Layer>,
    stages: Vec<Stage>,
    /// Raw output channel feeding each canonical heatmap / PAF channel.
    heatmap_select: Vec<usize>,
    paf_select: Vec<usize>,
    checksum: String,
}

impl std::fmt::Debug for MultiStageNet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MultiStageNet")
            .field("name", &self.manifest.name)
            .field("checksum", &self.checksum)
            .finish()
    }
}

fn layer_names(manifest: &AdapterManifest) -> Vec<(String, LayerSpec)> {
    let mut out = Vec::new();
    for (i, l) in manifest.backbone.iter().enumerate() {
        out.push((format!("backbone.{i}"), l.clone()));
    }
    for (s, st) in manifest.stages.iter().enumerate() {
        for (i, l) in st.heatmap.iter().enumerate() {
            out.push((format!("stage{s}.heatmap.{i}"), l.clone()));
        }
        for (i, l) in st.paf.iter().enumerate() {
            out.push((format!("stage{s}.paf.{i}"), l.clone()));
        }
    }
    out
}

/// Canonical PAF channel names for a topology: `"{a}-{b}.x"`, `"{a}-{b}.y"`.
pub fn paf_channel_names(topo: &SkeletonTopology) -> Vec<String> {
    topo.limbs
        .iter()
        .flat_map(|(a, b)| [format!("{a}-{b}.x"), format!("{a}-{b}.y")])
        .collect()
}

fn check_chain(chain: &[LayerSpec], mut channels: usize, what: &str) -> Result<(usize, usize)> {
    let mut pools = 0;
    for (i, l) in chain.iter().enumerate() {
        if l.in_channels != channels {
            return Err(Error::WeightSchema(format!(
                "{what}.{i}: expects {} input channels, receives {channels}",
                l.in_channels
            )));
        }
        if l.kernel % 2 == 0 || l.out_channels == 0 {
            return Err(Error::WeightSchema(format!(
                "{what}.{i}: kernel must be odd and outputs non-empty"
            )));
        }
        pools += l.pool.is_some() as usize;
        channels = l.out_channels;
    }
    Ok((channels, pools))
}

impl MultiStageNet {
    /// Builds a network from a manifest and its named weight arrays.
    pub fn from_checkpoint(ck: &Checkpoint) -> Result<Self> {
        if ck.kind != ADAPTER_KIND {
            return Err(Error::WeightSchema(format!(
                "expected a pose_adapter checkpoint, found {:?}",
                ck.kind
            )));
        }
        let manifest: AdapterManifest = serde_json::from_value(
            ck.metadata
                .get("manifest")
                .cloned()
                .ok_or_else(|| Error::WeightSchema("missing manifest".into()))?,
        )
        .map_err(|e| Error::WeightSchema(format!("bad manifest: {e}")))?;
        let mut weights = Vec::new();
        for (name, spec) in layer_names(&manifest) {
            let k = spec.kernel;
            let weight = ck.expect(&format!("{name}.weight"), &[spec.out_channels, spec.in_channels, k, k])?;
            let bias = ck.expect(&format!("{name}.bias"), &[spec.out_channels])?;
            weights.push(ConvWeights {
                out_channels: spec.out_channels,
                in_channels: spec.in_channels,
                kernel: k,
                weight: weight.to_vec(),
                bias: bias.to_vec(),
            });
        }
        MultiStageNet::new(manifest, weights)
    }

    /// `weights` holds one entry per layer in manifest order: backbone,
    /// then per stage the heatmap branch followed by the PAF branch.
    pub fn new(manifest: AdapterManifest, weights: Vec<ConvWeights>) -> Result<Self> {
        let input_channels = manifest.backbone.first().map_or(3, |l| l.in_channels);
        if input_channels != 3 {
            return Err(Error::WeightSchema(format!(
                "backbone takes {input_channels} channels, images have 3"
            )));
        }
        let (features, pools) = check_chain(&manifest.backbone, 3, "backbone")?;
        if manifest.stages.is_empty() {
            return Err(Error::WeightSchema("at least one stage is required".into()));
        }
        let mut prev = (0, 0);
        for (s, st) in manifest.stages.iter().enumerate() {
            let input = if s == 0 { features } else { features + prev.0 + prev.1 };
            let (h, hp) = check_chain(&st.heatmap, input, &format!("stage{s}.heatmap"))?;
            let (p, pp) = check_chain(&st.paf, input, &format!("stage{s}.paf"))?;
            if hp + pp > 0 {
                return Err(Error::WeightSchema(format!(
                    "stage{s}: pooling is only allowed in the backbone"
                )));
            }
            prev = (h, p);
        }
        let expected_scale = 0.5f64.powi(pools as i32);
        if (manifest.output_scale - expected_scale).abs() > 1e-12 {
            return Err(Error::WeightSchema(format!(
                "manifest output_scale {} disagrees with {pools} pooling layers ({expected_scale})",
                manifest.output_scale
            )));
        }
        if manifest.heatmap_channels.len() != prev.0 || manifest.paf_channels.len() != prev.1 {
            return Err(Error::WeightSchema(format!(
                "final stage emits {}+{} channels but the manifest names {}+{}",
                prev.0,
                prev.1,
                manifest.heatmap_channels.len(),
                manifest.paf_channels.len()
            )));
        }
        let heatmap_select = PartName::ALL
            .iter()
            .map(|p| {
                manifest
                    .heatmap_channels
                    .iter()
                    .position(|c| c == p.as_str())
                    .ok_or_else(|| Error::WeightSchema(format!("no heatmap channel for {p}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let paf_select = paf_channel_names(&SkeletonTopology::default())
            .iter()
            .map(|name| {
                manifest
                    .paf_channels
                    .iter()
                    .position(|c| c == name)
                    .ok_or_else(|| Error::WeightSchema(format!("no PAF channel for {name}")))
            })
            .collect::<Result<Vec<_>>>()?;
        debug_assert_eq!(heatmap_select.len(), NUM_PARTS);
        debug_assert_eq!(paf_select.len(), NUM_PAF_CHANNELS);

        let names = layer_names(&manifest);
        if weights.len() != names.len() {
            return Err(Error::WeightSchema(format!(
                "{} layers declared, {} weight sets supplied",
                names.len(),
                weights.len()
            )));
        }
        let mut layers = Vec::with_capacity(names.len());
        for ((name, spec), conv) in names.into_iter().zip(weights) {
            let k = spec.kernel;
            if conv.out_channels != spec.out_channels
                || conv.in_channels != spec.in_channels
                || conv.kernel != k
                || conv.weight.len() != spec.out_channels * spec.in_channels * k * k
                || conv.bias.len() != spec.out_channels
            {
                return Err(Error::WeightSchema(format!(
                    "{name}: weights do not match the declared shape"
                )));
            }
            if !conv.weight.iter().chain(&conv.bias).all(|v| v.is_finite()) {
                return Err(Error::WeightSchema(format!("{name}: non-finite weights")));
            }
            layers.push(Layer { spec, conv });
        }
        let mut it = layers.into_iter();
        let backbone: Vec<Layer> = it.by_ref().take(manifest.backbone.len()).collect();
        let stages = manifest
            .stages
            .iter()
            .map(|st| Stage {
                heatmap: it.by_ref().take(st.heatmap.len()).collect(),
                paf: it.by_ref().take(st.paf.len()).collect(),
            })
            .collect();
        let mut net = MultiStageNet {
            manifest,
            backbone,
            stages,
            heatmap_select,
            paf_select,
            checksum: String::new(),
        };
        net.checksum = net.compute_checksum();
        Ok(net)
    }

    pub fn load(path: &Path) -> Result<Self> {
        MultiStageNet::from_checkpoint(&Checkpoint::load(path)?)
    }

    pub fn manifest(&self) -> &AdapterManifest {
        &self.manifest
    }

    fn layers(&self) -> impl Iterator<Item = &Layer> {
        self.backbone
            .iter()
            .chain(self.stages.iter().flat_map(|s| s.heatmap.iter().chain(&s.paf)))
    }

    pub fn to_checkpoint(&self, dtype: DType) -> Checkpoint {
        let mut arrays = Vec::new();
        for ((name, spec), layer) in layer_names(&self.manifest).into_iter().zip(self.layers()) {
            let k = spec.kernel;
            arrays.push(NamedArray {
                name: format!("{name}.weight"),
                shape: vec![spec.out_channels, spec.in_channels, k, k],
                data: layer.conv.weight.clone(),
            });
            arrays.push(NamedArray {
                name: format!("{name}.bias"),
                shape: vec![spec.out_channels],
                data: layer.conv.bias.clone(),
            });
        }
        Checkpoint {
            kind: ADAPTER_KIND.into(),
            dtype,
            metadata: serde_json::json!({ "manifest": self.manifest }),
            arrays,
        }
    }

    pub fn save(&self, path: &Path, dtype: DType) -> Result<()> {
        self.to_checkpoint(dtype).save(path)
    }

    fn compute_checksum(&self) -> String {
        let mut h = Sha256::new();
        h.update(serde_json::to_vec(&self.manifest).unwrap_or_default());
        for layer in self.layers() {
            for v in layer.conv.weight.iter().chain(&layer.conv.bias) {
                h.update(v.to_le_bytes());
            }
        }
        crate::polishnet::hex(&h.finalize())
    }

    fn forward_cached(&self, images: &Tensor) -> Result<(Tensor, Tensor, NetCache)> {
        if images.c() != 3 {
            return Err(Error::Shape(format!(
                "adapter expects 3-channel images, got {:?}",
                images.shape()
            )));
        }
        let pools = self.backbone.iter().filter(|l| l.spec.pool.is_some()).count();
        let div = 1usize << pools;
        if images.h() % div != 0 || images.w() % div != 0 {
            return Err(Error::Shape(format!(
                "adapter input {}x{} must be divisible by {div}",
                images.w(),
                images.h()
            )));
        }
        let (features, backbone) = run_chain(&self.backbone, images, "backbone")?;
        let mut stage_caches = Vec::with_capacity(self.stages.len());
        let mut prev: Option<(Tensor, Tensor)> = None;
        for (s, stage) in self.stages.iter().enumerate() {
            let input = match &prev {
                None => features.clone(),
                Some((h, p)) => Tensor::concat_channels(&[&features, h, p])?,
            };
            let (h, hc) = run_chain(&stage.heatmap, &input, &format!("stage{s}.heatmap"))?;
            let (p, pc) = run_chain(&stage.paf, &input, &format!("stage{s}.paf"))?;
            stage_caches.push(StageCache { heatmap: hc, paf: pc });
            prev = Some((h, p));
        }
        let (h, p) = prev.expect("at least one stage");
        let cache = NetCache {
            backbone,
            stages: stage_caches,
            feature_channels: features.c(),
        };
        Ok((h, p, cache))
    }
}

fn select_channels(t: &Tensor, select: &[usize]) -> Tensor {
    let [n, _, h, w] = t.shape();
    let mut out = Tensor::zeros([n, select.len(), h, w]);
    for s in 0..n {
        for (c, &src) in select.iter().enumerate() {
            out.plane_mut(s, c).copy_from_slice(t.plane(s, src));
        }
    }
    out
}

fn scatter_channels(g: &Tensor, select: &[usize], channels: usize) -> Tensor {
    let [n, _, h, w] = g.shape();
    let mut out = Tensor::zeros([n, channels, h, w]);
    for s in 0..n {
        for (c, &dst) in select.iter().enumerate() {
            out.plane_mut(s, dst).copy_from_slice(g.plane(s, c));
        }
    }
    out
}

impl PoseModule for MultiStageNet {
    fn name(&self) -> &str {
        &self.manifest.name
    }

    fn output_scale(&self) -> f64 {
        self.manifest.output_scale
    }

    fn differentiable(&self) -> bool {
        true
    }

    fn infer_batch(&self, images: &Tensor) -> Result<PoseMaps> {
        let (h, p, _) = self.forward_cached(images)?;
        Ok(PoseMaps {
            heatmaps: select_channels(&h, &self.heatmap_select),
            pafs: select_channels(&p, &self.paf_select),
        })
    }

    fn input_gradient(&self, images: &Tensor, grad_heatmaps: &Tensor, grad_pafs: &Tensor) -> Result<Tensor> {
        let (h, p, cache) = self.forward_cached(images)?;
        let expect_h = [h.n(), NUM_PARTS, h.h(), h.w()];
        let expect_p = [p.n(), NUM_PAF_CHANNELS, p.h(), p.w()];
        if grad_heatmaps.shape() != expect_h || grad_pafs.shape() != expect_p {
            return Err(Error::Shape(format!(
                "output gradients {:?}/{:?} do not match maps {expect_h:?}/{expect_p:?}",
                grad_heatmaps.shape(),
                grad_pafs.shape()
            )));
        }
        let mut g_h = scatter_channels(grad_heatmaps, &self.heatmap_select, h.c());
        let mut g_p = scatter_channels(grad_pafs, &self.paf_select, p.c());
        let fc = cache.feature_channels;
        let [n, _, fh, fw] = h.shape();
        let mut g_feat = Tensor::zeros([n, fc, fh, fw]);
        for (s, (stage, sc)) in self.stages.iter().zip(&cache.stages).enumerate().rev() {
            let mut g_in = back_chain(&stage.heatmap, &sc.heatmap, &g_h);
            g_in.add_assign(&back_chain(&stage.paf, &sc.paf, &g_p));
            if s == 0 {
                g_feat.add_assign(&g_in);
            } else {
                let hc = stage_output_channels(&self.stages[s - 1].heatmap);
                let pc = stage_output_channels(&self.stages[s - 1].paf);
                g_feat.add_assign(&g_in.channels(0, fc));
                g_h = g_in.channels(fc, hc);
                g_p = g_in.channels(fc + hc, pc);
            }
        }
        Ok(back_chain(&self.backbone, &cache.backbone, &g_feat))
    }

    fn checksum(&self) -> String {
        self.checksum.clone()
    }
}

fn stage_output_channels(chain: &[Layer]) -> usize {
    chain.last().map_or(0, |l| l.spec.out_channels)
}

fn default_channel_names() -> (Vec<String>, Vec<String>) {
    (
        PartName::ALL.iter().map(|p| p.as_str().to_string()).collect(),
        paf_channel_names(&SkeletonTopology::default()),
    )
}

/// Options for the desk-scale stand-in backbone.
#[derive(Clone, Debug, PartialEq)]
pub struct MockSpec {
    pub seed: u64,
    pub hidden: usize,
    pub kernel: usize,
    /// Number of 2x2 average pools; `output_scale = 2^-pools`.
    pub pools: usize,
}

impl MockSpec {
    pub fn new(seed: u64) -> Self {
        MockSpec {
            seed,
            hidden: 8,
            kernel: 3,
            pools: 1,
        }
    }
}

/// Small fixed random network: two backbone convolutions with average
/// pooling and one head per branch, all without non-linear activations.
/// First-layer kernels have zero mean over their spatial taps and there are
/// no biases, so uniform images map to zero away from the zero-padded borders.
pub fn mock(spec: &MockSpec) -> Result<MultiStageNet> {
    if spec.pools > 2 || spec.hidden == 0 {
        return Err(Error::Config(
            "mock adapter supports at most 2 pools and needs hidden channels".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let k = spec.kernel;
    let hid = spec.hidden;
    let layer = |i: usize, o: usize, act, pool| LayerSpec {
        in_channels: i,
        out_channels: o,
        kernel: k,
        activation: act,
        pool,
    };
    let pool_at = |i: usize| (i < spec.pools).then_some(Pool::Avg);
    let (heat_names, paf_names) = default_channel_names();
    let manifest = AdapterManifest {
        name: format!("mock-{}", spec.seed),
        output_scale: 0.5f64.powi(spec.pools as i32),
        backbone: vec![
            layer(3, hid, Activation::Linear, pool_at(0)),
            layer(hid, hid, Activation::Linear, pool_at(1)),
        ],
        stages: vec![StageSpec {
            heatmap: vec![layer(hid, NUM_PARTS, Activation::Linear, None)],
            paf: vec![layer(hid, 2 * NUM_LIMBS, Activation::Linear, None)],
        }],
        heatmap_channels: heat_names,
        paf_channels: paf_names,
    };
    let mut weights = Vec::new();
    for (li, (_, spec_l)) in layer_names(&manifest).iter().enumerate() {
        let mut cw = ConvWeights::zeros(spec_l.out_channels, spec_l.in_channels, k);
        let bound = (6.0 / (spec_l.in_channels * k * k) as f64).sqrt();
        for v in cw.weight.iter_mut() {
            *v = rng.gen_range(-bound..bound);
        }
        if li == 0 {
            for tap in cw.weight.chunks_mut(k * k) {
                let mean = tap.iter().sum::<f64>() / tap.len() as f64;
                tap.iter_mut().for_each(|v| *v -= mean);
            }
        }
        weights.push(cw);
    }
    MultiStageNet::new(manifest, weights)
}

/// Full-resolution probe whose every heatmap channel is the given input
/// channel's intensity and whose PAFs are zero.
pub fn channel_probe(channel: usize) -> Result<MultiStageNet> {
    if channel >= 3 {
        return Err(Error::Config(format!("image channel {channel} out of range")));
    }
    let (heat_names, paf_names) = default_channel_names();
    let manifest = AdapterManifest {
        name: format!("probe-channel{channel}"),
        output_scale: 1.0,
        backbone: vec![LayerSpec {
            in_channels: 3,
            out_channels: 1,
            kernel: 1,
            activation: Activation::Linear,
            pool: None,
        }],
        stages: vec![StageSpec {
            heatmap: vec![LayerSpec {
                in_channels: 1,
                out_channels: NUM_PARTS,
                kernel: 1,
                activation: Activation::Linear,
                pool: None,
            }],
            paf: vec![LayerSpec {
                in_channels: 1,
                out_channels: NUM_PAF_CHANNELS,
                kernel: 1,
                activation: Activation::Linear,
                pool: None,
            }],
        }],
        heatmap_channels: heat_names,
        paf_channels: paf_names,
    };
    let mut pick = ConvWeights::zeros(1, 3, 1);
    pick.weight[channel] = 1.0;
    let mut fan = ConvWeights::zeros(NUM_PARTS, 1, 1);
    fan.weight.iter_mut().for_each(|v| *v = 1.0);
    MultiStageNet::new(manifest, vec![pick, fan, ConvWeights::zeros(NUM_PAF_CHANNELS, 1, 1)])
}

/// How to obtain an adapter, as written on the command line:
/// `mock`, `mock:<seed>` or `weights:<path>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdapterKind {
    Mock { seed: u64 },
    WeightsFile(std::path::PathBuf),
}

impl std::str::FromStr for AdapterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "mock" {
            return Ok(AdapterKind::Mock { seed: 0 });
        }
        if let Some(seed) = s.strip_prefix("mock:") {
            let seed = seed
                .parse()
                .map_err(|_| Error::Config(format!("bad mock seed {seed:?}")))?;
            return Ok(AdapterKind::Mock { seed });
        }
        if let Some(path) = s.strip_prefix("weights:") {
            return Ok(AdapterKind::WeightsFile(path.into()));
        }
        Err(Error::Config(format!(
            "adapter must be mock, mock:<seed> or weights:<path>, got {s:?}"
        )))
    }
}

impl std::fmt::Display for AdapterKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AdapterKind::Mock { seed } => write!(f, "mock:{seed}"),
            AdapterKind::WeightsFile(p) => write!(f, "weights:{}", p.display()),
        }
    }
}

pub fn load_adapter(kind: &AdapterKind) -> Result<MultiStageNet> {
    match kind {
        AdapterKind::Mock { seed } => mock(&MockSpec::new(*seed)),
        AdapterKind::WeightsFile(path) => MultiStageNet::load(path),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn image(w: usize, h: usize, seed: u64) -> Tensor {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Tensor::from_vec([1, 3, h, w], (0..3 * w * h).map(|_| rng.gen_range(0.0..1.0)).collect()).unwrap()
    }

    #[test]
    fn mock_is_deterministic_and_shaped() {
        let a = mock(&MockSpec::new(7)).unwrap();
        let b = mock(&MockSpec::new(7)).unwrap();
        let x = image(128, 256, 1);
        let ma = a.infer_batch(&x).unwrap();
        assert_eq!(ma, b.infer_batch(&x).unwrap());
        assert_eq!(ma.heatmaps.shape(), [1, 14, 128, 64]);
        assert_eq!(ma.pafs.shape(), [1, 28, 128, 64]);
        assert_eq!(128.0 / 256.0, a.output_scale());
        assert_eq!(a.checksum(), b.checksum());
        assert_ne!(a.checksum(), mock(&MockSpec::new(8)).unwrap().checksum());
    }

    #[test]
    fn mock_distinguishes_zero_and_one_images() {
        let a = mock(&MockSpec::new(3)).unwrap();
        let zero = a.infer_batch(&Tensor::zeros([1, 3, 16, 16])).unwrap();
        let x = Tensor::filled([1, 3, 16, 16], 1.0);
        assert_ne!(zero, a.infer_batch(&x).unwrap());
    }

    #[test]
    fn weights_file_round_trip_and_channel_dropping() {
        let net = mock(&MockSpec::new(5)).unwrap();
        let ck = net.to_checkpoint(DType::F64);
        let back = MultiStageNet::from_checkpoint(&ck).unwrap();
        assert_eq!(back.checksum(), net.checksum());

        // prepend eye/ear channels to the heatmap head, as stock checkpoints carry them
        let mut manifest = net.manifest().clone();
        let extra = ["r_eye", "l_eye", "r_ear", "l_ear", "background"];
        let mut names: Vec<String> = extra.iter().map(|s| s.to_string()).collect();
        names.extend(manifest.heatmap_channels.iter().cloned());
        manifest.heatmap_channels = names;
        manifest.stages[0].heatmap[0].out_channels += extra.len();
        let mut weights: Vec<ConvWeights> = net.layers().map(|l| l.conv.clone()).collect();
        let head = &mut weights[2];
        let per = head.in_channels * head.kernel * head.kernel;
        let mut w = vec![0.5; extra.len() * per];
        w.extend_from_slice(&head.weight);
        head.weight = w;
        head.bias = vec![0.0; head.out_channels + extra.len()];
        head.out_channels += extra.len();
        let wide = MultiStageNet::new(manifest, weights).unwrap();
        let x = image(16, 16, 2);
        assert_eq!(wide.infer_batch(&x).unwrap(), net.infer_batch(&x).unwrap());
    }

    #[test]
    fn thirteen_heatmap_channels_is_a_schema_error() {
        let net = mock(&MockSpec::new(5)).unwrap();
        let mut ck = net.to_checkpoint(DType::F32);
        let mut manifest = net.manifest().clone();
        manifest.heatmap_channels.pop();
        manifest.stages[0].heatmap[0].out_channels = 13;
        ck.metadata = serde_json::json!({ "manifest": manifest });
        for a in ck.arrays.iter_mut() {
            if a.name == "stage0.heatmap.0.weight" {
                a.shape[0] = 13;
                a.data.truncate(13 * a.shape[1] * 9);
            }
            if a.name == "stage0.heatmap.0.bias" {
                a.shape[0] = 13;
                a.data.truncate(13);
            }
        }
        let err = MultiStageNet::from_checkpoint(&ck).unwrap_err();
        assert!(matches!(err, Error::WeightSchema(_)), "{err}");
    }

    #[test]
    fn input_gradient_matches_finite_differences() {
        let spec = MockSpec {
            hidden: 3,
            ..MockSpec::new(11)
        };
        let net = mock(&spec).unwrap();
        let x = image(8, 8, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let maps = net.infer_batch(&x).unwrap();
        let gh = maps.heatmaps.map(|_| rng.gen_range(-1.0..1.0));
        let gp = maps.pafs.map(|_| rng.gen_range(-1.0..1.0));
        let objective = |t: &Tensor| {
            let m = net.infer_batch(t).unwrap();
            m.heatmaps.data().iter().zip(gh.data()).map(|(a, b)| a * b).sum::<f64>()
                + m.pafs.data().iter().zip(gp.data()).map(|(a, b)| a * b).sum::<f64>()
        };
        let g = net.input_gradient(&x, &gh, &gp).unwrap();
        let eps = 1e-6;
        for i in (0..x.data().len()).step_by(7) {
            let mut xp = x.clone();
            xp.data_mut()[i] += eps;
            let mut xm = x.clone();
            xm.data_mut()[i] -= eps;
            let fd = (objective(&xp) - objective(&xm)) / (2.0 * eps);
            assert!(
                (fd - g.data()[i]).abs() <= 1e-6 + 1e-4 * fd.abs(),
                "{i}: {fd} vs {}",
                g.data()[i]
            );
        }
    }

    #[test]
    fn multi_stage_gradient_matches_finite_differences() {
        let (heat, paf) = default_channel_names();
        let l = |i, o, act| LayerSpec {
            in_channels: i,
            out_channels: o,
            kernel: 3,
            activation: act,
            pool: None,
        };
        let manifest = AdapterManifest {
            name: "two-stage".into(),
            output_scale: 0.5,
            backbone: vec![LayerSpec {
                pool: Some(Pool::Max),
                ..l(3, 2, Activation::Relu)
            }],
            stages: vec![
                StageSpec {
                    heatmap: vec![l(2, 14, Activation::Linear)],
                    paf: vec![l(2, 28, Activation::Linear)],
                },
                StageSpec {
                    heatmap: vec![l(44, 3, Activation::Leaky), l(3, 14, Activation::Linear)],
                    paf: vec![l(44, 28, Activation::Linear)],
                },
            ],
            heatmap_channels: heat,
            paf_channels: paf,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let weights = layer_names(&manifest)
            .iter()
            .map(|(_, s)| {
                let mut cw = ConvWeights::zeros(s.out_channels, s.in_channels, s.kernel);
                cw.weight.iter_mut().for_each(|v| *v = rng.gen_range(-0.3..0.3));
                cw.bias.iter_mut().for_each(|v| *v = rng.gen_range(-0.1..0.1));
                cw
            })
            .collect();
        let net = MultiStageNet::new(manifest, weights).unwrap();
        let x = image(6, 6, 3);
        let maps = net.infer_batch(&x).unwrap();
        let gh = maps.heatmaps.map(|_| rng.gen_range(-1.0..1.0));
        let gp = maps.pafs.map(|_| rng.gen_range(-1.0..1.0));
        let objective = |t: &Tensor| {
            let m = net.infer_batch(t).unwrap();
            m.heatmaps.data().iter().zip(gh.data()).map(|(a, b)| a * b).sum::<f64>()
                + m.pafs.data().iter().zip(gp.data()).map(|(a, b)| a * b).sum::<f64>()
        };
        let g = net.input_gradient(&x, &gh, &gp).unwrap();
        let eps = 1e-6;
        for i in 0..x.data().len() {
            let mut xp = x.clone();
            xp.data_mut()[i] += eps;
            let mut xm = x.clone();
            xm.data_mut()[i] -= eps;
            let fd = (objective(&xp) - objective(&xm)) / (2.0 * eps);
            assert!(
                (fd - g.data()[i]).abs() <= 1e-6 + 1e-4 * fd.abs(),
                "{i}: {fd} vs {}",
                g.data()[i]
            );
        }
    }

    #[test]
    fn channel_probe_copies_the_channel() {
        let probe = channel_probe(0).unwrap();
        let x = image(5, 4, 6);
        let m = probe.infer_batch(&x).unwrap();
        for k in 0..14 {
            assert_eq!(m.heatmaps.plane(0, k), x.plane(0, 0));
        }
        assert!(m.pafs.data().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn adapter_kind_parses() {
        assert_eq!("mock".parse::<AdapterKind>().unwrap(), AdapterKind::Mock { seed: 0 });
        assert_eq!("mock:4".parse::<AdapterKind>().unwrap(), AdapterKind::Mock { seed: 4 });
        assert_eq!(
            "weights:/a/b.ppck".parse::<AdapterKind>().unwrap(),
            AdapterKind::WeightsFile("/a/b.ppck".into())
        );
        assert!("openpose".parse::<AdapterKind>().is_err());
    }
}
