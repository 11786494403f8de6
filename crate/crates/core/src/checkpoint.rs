//! Named-array checkpoint container.
//!
//! Layout (all integers little-endian):
//!
//! ```text
//! b"PPCK"            magic
//! u32                format version (1)
//! u32                header length in bytes
//! [u8; len]          UTF-8 JSON header
//! ...                array payloads, in header order
//! ```
//!
//! The header is `{"kind", "dtype", "metadata", "arrays": [{"name", "shape"}]}`.
//! `dtype` is `"f32"` (default) or `"f64"`; each payload holds
//! `product(shape)` values of that type.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::layers::{BatchNorm, ConvWeights, DeconvWeights};
use crate::polishnet::{DecoderBlock, EncoderBlock, PolishNetConfig, PolishNetParams};

pub const MAGIC: &[u8; 4] = b"PPCK";
pub const VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DType {
    #[default]
    F32,
    F64,
}

impl DType {
    fn width(self) -> usize {
        match self {
            DType::F32 => 4,
            DType::F64 => 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NamedArray {
    pub name: String,
    pub shape: Vec<usize>,
    pub data: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Checkpoint {
    pub kind: String,
    pub dtype: DType,
    pub metadata: serde_json::Value,
    pub arrays: Vec<NamedArray>,
}

#[derive(Serialize, Deserialize)]
struct Header {
    kind: String,
    #[serde(default)]
    dtype: DType,
    #[serde(default)]
    metadata: serde_json::Value,
    arrays: Vec<ArrayHeader>,
}

#[derive(Serialize, Deserialize)]
struct ArrayHeader {
    name: String,
    shape: Vec<usize>,
}

impl Checkpoint {
    pub fn get(&self, name: &str) -> Result<&NamedArray> {
        self.arrays
            .iter()
            .find(|a| a.name == name)
            .ok_or_else(|| Error::WeightSchema(format!("missing array {name}")))
    }

    /// Fetches an array and checks its shape.
    pub fn expect(&self, name: &str, shape: &[usize]) -> Result<&[f64]> {
        let a = self.get(name)?;
        if a.shape != shape {
            return Err(Error::WeightSchema(format!(
                "{name}: expected shape {shape:?}, found {:?}",
                a.shape
            )));
        }
        Ok(&a.data)
    }

    pub fn to_bytes(&self) -> Result<Vec<u8>> {
        let header = Header {
            kind: self.kind.clone(),
            dtype: self.dtype,
            metadata: self.metadata.clone(),
            arrays: self
                .arrays
                .iter()
                .map(|a| ArrayHeader {
                    name: a.name.clone(),
                    shape: a.shape.clone(),
                })
                .collect(),
        };
        let header = serde_json::to_vec(&header)?;
        let mut out = Vec::new();
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.extend_from_slice(&(header.len() as u32).to_le_bytes());
        out.extend_from_slice(&header);
        for a in &self.arrays {
            if a.data.len() != a.shape.iter().product::<usize>() {
                return Err(Error::Shape(format!(
                    "{}: data does not fill shape {:?}",
                    a.name, a.shape
                )));
            }
            for &v in &a.data {
                match self.dtype {
                    DType::F32 => out.extend_from_slice(&(v as f32).to_le_bytes()),
                    DType::F64 => out.extend_from_slice(&v.to_le_bytes()),
                }
            }
        }
        Ok(out)
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let bad = |m: &str| Error::WeightSchema(m.to_string());
        if bytes.len() < 12 || &bytes[..4] != MAGIC {
            return Err(bad("not a checkpoint (bad magic)"));
        }
        let version = u32::from_le_bytes(bytes[4..8].try_into().unwrap());
        if version != VERSION {
            return Err(Error::WeightSchema(format!("unsupported checkpoint version {version}")));
        }
        let hlen = u32::from_le_bytes(bytes[8..12].try_into().unwrap()) as usize;
        let hend = 12 + hlen;
        let header: Header = serde_json::from_slice(bytes.get(12..hend).ok_or_else(|| bad("truncated header"))?)?;
        let width = header.dtype.width();
        let mut pos = hend;
        let mut arrays = Vec::with_capacity(header.arrays.len());
        for ah in header.arrays {
            let count: usize = ah.shape.iter().product();
            let end = pos + count * width;
            let raw = bytes
                .get(pos..end)
                .ok_or_else(|| Error::WeightSchema(format!("{}: truncated payload", ah.name)))?;
            let data = match header.dtype {
                DType::F32 => raw
                    .chunks_exact(4)
                    .map(|b| f32::from_le_bytes(b.try_into().unwrap()) as f64)
                    .collect(),
                DType::F64 => raw
                    .chunks_exact(8)
                    .map(|b| f64::from_le_bytes(b.try_into().unwrap()))
                    .collect(),
            };
            arrays.push(NamedArray {
                name: ah.name,
                shape: ah.shape,
                data,
            });
            pos = end;
        }
        if pos != bytes.len() {
            return Err(bad("trailing bytes after last array"));
        }
        Ok(Checkpoint {
            kind: header.kind,
            dtype: header.dtype,
            metadata: header.metadata,
            arrays,
        })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_bytes()?).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
        Checkpoint::from_bytes(&bytes)
    }
}

pub const POLISHNET_KIND: &str = "polishnet";

pub fn polishnet_checkpoint(params: &PolishNetParams, dtype: DType) -> Checkpoint {
    Checkpoint {
        kind: POLISHNET_KIND.into(),
        dtype,
        metadata: serde_json::json!({ "config": params.config() }),
        arrays: params
            .named_arrays()
            .into_iter()
            .map(|(name, shape, data)| NamedArray {
                name,
                shape,
                data: data.to_vec(),
            })
            .collect(),
    }
}

pub fn save_polishnet(params: &PolishNetParams, path: &Path, dtype: DType) -> Result<()> {
    polishnet_checkpoint(params, dtype).save(path)
}

pub fn load_polishnet(path: &Path) -> Result<PolishNetParams> {
    polishnet_from_checkpoint(&Checkpoint::load(path)?)
}

pub fn polishnet_from_checkpoint(ck: &Checkpoint) -> Result<PolishNetParams> {
    if ck.kind != POLISHNET_KIND {
        return Err(Error::WeightSchema(format!(
            "expected a polishnet checkpoint, found {:?}",
            ck.kind
        )));
    }
    let config: PolishNetConfig = serde_json::from_value(
        ck.metadata
            .get("config")
            .cloned()
            .ok_or_else(|| Error::WeightSchema("missing config".into()))?,
    )?;
    // shapes come from a freshly initialized network of the same config
    let template = crate::polishnet::init_params(&config, 0)?;
    let bn = |prefix: &str, c: usize| -> Result<BatchNorm> {
        Ok(BatchNorm {
            scale: ck.expect(&format!("{prefix}.scale"), &[c])?.to_vec(),
            shift: ck.expect(&format!("{prefix}.shift"), &[c])?.to_vec(),
            running_mean: ck.expect(&format!("{prefix}.running_mean"), &[c])?.to_vec(),
            running_var: ck.expect(&format!("{prefix}.running_var"), &[c])?.to_vec(),
        })
    };
    let mut encoder = Vec::new();
    for (b, tb) in template.encoder.iter().enumerate() {
        let mut convs = Vec::new();
        for (i, t) in tb.convs.iter().enumerate() {
            let shape = [t.out_channels, t.in_channels, t.kernel, t.kernel];
            convs.push(ConvWeights {
                weight: ck.expect(&format!("enc{b}.conv{i}.weight"), &shape)?.to_vec(),
                bias: ck.expect(&format!("enc{b}.conv{i}.bias"), &[t.out_channels])?.to_vec(),
                ..t.clone()
            });
        }
        encoder.push(EncoderBlock {
            convs,
            bn: bn(&format!("enc{b}.bn"), tb.bn.channels())?,
        });
    }
    let mut decoder = Vec::new();
    for (b, tb) in template.decoder.iter().enumerate() {
        let mut deconvs = Vec::new();
        for (i, t) in tb.deconvs.iter().enumerate() {
            let shape = [t.in_channels, t.out_channels, t.kernel, t.kernel];
            deconvs.push(DeconvWeights {
                weight: ck.expect(&format!("dec{b}.deconv{i}.weight"), &shape)?.to_vec(),
                bias: ck
                    .expect(&format!("dec{b}.deconv{i}.bias"), &[t.out_channels])?
                    .to_vec(),
                ..t.clone()
            });
        }
        decoder.push(DecoderBlock {
            deconvs,
            bn: bn(&format!("dec{b}.bn"), tb.bn.channels())?,
        });
    }
    let params = PolishNetParams::from_parts(config, encoder, decoder);
    if !params.all_finite() {
        return Err(Error::WeightSchema("checkpoint holds non-finite values".into()));
    }
    Ok(params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polishnet::init_params;

    fn toy() -> PolishNetParams {
        let cfg = PolishNetConfig {
            channel_widths: vec![2, 2, 3],
            working_size: (26, 30),
            ..PolishNetConfig::default()
        };
        init_params(&cfg, 9).unwrap()
    }

    #[test]
    fn f64_round_trip_is_exact() {
        let p = toy();
        let ck = polishnet_checkpoint(&p, DType::F64);
        let back = polishnet_from_checkpoint(&Checkpoint::from_bytes(&ck.to_bytes().unwrap()).unwrap()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn f32_round_trip_equals_rounded_params() {
        let p = toy();
        let ck = polishnet_checkpoint(&p, DType::F32);
        let back = polishnet_from_checkpoint(&Checkpoint::from_bytes(&ck.to_bytes().unwrap()).unwrap()).unwrap();
        assert_eq!(back, p.to_f32_precision());
    }

    #[test]
    fn names_follow_scheme() {
        let ck = polishnet_checkpoint(&toy(), DType::F32);
        let names: Vec<&str> = ck.arrays.iter().map(|a| a.name.as_str()).collect();
        assert_eq!(names[0], "enc0.conv0.weight");
        assert!(names.contains(&"dec2.deconv1.bias"));
        assert!(names.contains(&"enc1.bn.running_var"));
    }

    #[test]
    fn corrupt_inputs_are_rejected() {
        assert!(Checkpoint::from_bytes(b"nope").is_err());
        let mut bytes = polishnet_checkpoint(&toy(), DType::F32).to_bytes().unwrap();
        bytes.truncate(bytes.len() - 3);
        assert!(Checkpoint::from_bytes(&bytes).is_err());
        let mut ck = polishnet_checkpoint(&toy(), DType::F32);
        ck.arrays[0].shape = vec![1, 1, 1, 1];
        ck.arrays[0].data = vec![0.0];
        let bytes = ck.to_bytes().unwrap();
        let err = polishnet_from_checkpoint(&Checkpoint::from_bytes(&bytes).unwrap()).unwrap_err();
        assert!(matches!(err, Error::WeightSchema(_)));
    }
}
