//! Run configuration: a TOML file whose values command-line flags override.
//! Every command that writes outputs echoes the effective configuration as
//! [`ECHO_FILE`] next to them.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::adapter::AdapterKind;
use crate::error::{Error, Result};
use crate::losses::LossWeights;
use crate::polishnet::PolishNetConfig;
use crate::pressure::DEFAULT_WORKING_SIZE;
use crate::synthetic::SyntheticConfig;
use crate::targets::DEFAULT_PEAK_THRESHOLD;
use crate::training::TrainConfig;

pub const ECHO_FILE: &str = "effective_config.toml";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub data_dir: Option<PathBuf>,
    /// (width, height) of colorized frames; also the PolishNet working size.
    pub working_size: (usize, usize),
    pub colormap: String,
    /// Frames dropped from each end of a recording by `data clean`.
    pub trim: usize,
    /// `mock`, `mock:<seed>` or `weights:<path>`.
    pub adapter: String,
    pub seed: u64,
    pub holdout_subjects: usize,
    pub peak_threshold: f64,
    pub train: TrainConfig,
    pub loss: LossWeights,
    /// `working_size` here is ignored in favor of the top-level value.
    pub polishnet: PolishNetConfig,
    pub synthetic: SyntheticConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            data_dir: None,
            working_size: DEFAULT_WORKING_SIZE,
            colormap: crate::colormap::DEFAULT_COLORMAP.to_string(),
            trim: 3,
            adapter: "mock".to_string(),
            seed: 0,
            holdout_subjects: 2,
            peak_threshold: DEFAULT_PEAK_THRESHOLD,
            train: TrainConfig::default(),
            loss: LossWeights::default(),
            polishnet: PolishNetConfig::default(),
            synthetic: SyntheticConfig::default(),
        }
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        RunConfig::from_toml(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    /// The file at `path` if given, defaults otherwise.
    pub fn load_or_default(path: Option<&Path>) -> Result<Self> {
        path.map_or_else(|| Ok(RunConfig::default()), RunConfig::load)
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string_pretty(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn polishnet_config(&self) -> PolishNetConfig {
        PolishNetConfig {
            working_size: self.working_size,
            ..self.polishnet.clone()
        }
    }

    pub fn adapter_kind(&self) -> Result<AdapterKind> {
        self.adapter.parse()
    }

    pub fn data_dir(&self) -> Result<&Path> {
        self.data_dir
            .as_deref()
            .ok_or_else(|| Error::Config("no data directory: pass --data or set PRESSPOSE_DATA_DIR".into()))
    }

    pub fn validate(&self) -> Result<()> {
        self.train.validate()?;
        self.loss.validate()?;
        self.polishnet_config().validate()?;
        self.adapter_kind()?;
        crate::colormap::colormap_by_name(&self.colormap)?;
        if !(0.0..=1.0).contains(&self.peak_threshold) {
            return Err(Error::Config(format!(
                "peak_threshold {} outside [0, 1]",
                self.peak_threshold
            )));
        }
        Ok(())
    }

    /// Writes the echo into `dir`, creating it if needed.
    pub fn echo(&self, dir: &Path) -> Result<PathBuf> {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let path = dir.join(ECHO_FILE);
        std::fs::write(&path, self.to_toml()?).map_err(|e| Error::io(&path, e))?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_round_trip_through_toml() {
        let c = RunConfig::default();
        let text = c.to_toml().unwrap();
        assert_eq!(RunConfig::from_toml(&text).unwrap(), c);
        c.validate().unwrap();
    }

    #[test]
    fn partial_file_keeps_other_defaults() {
        let c = RunConfig::from_toml("seed = 4\n[loss]\nlambda_pixel = 0.001\n[train]\nmax_iterations = 5\n").unwrap();
        assert_eq!(c.seed, 4);
        assert_eq!(c.loss.lambda_pixel, 0.001);
        assert_eq!(c.loss.lambda_heatmap, 1.0);
        assert_eq!(c.train.max_iterations, 5);
        assert_eq!(c.train.learning_rate, 1e-4);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(matches!(RunConfig::from_toml("sigma = 3\n"), Err(Error::Config(_))));
    }
}
