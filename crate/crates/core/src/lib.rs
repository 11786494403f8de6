//! Pressure-map pose estimation with a learned image-polishing stage.
//!
//! Data flows `pressure` → `colormap` → `polishnet` → `adapter` → `targets`,
//! with `annotation` supplying labels, `training` fitting PolishNet against a
//! frozen adapter and `evaluation` scoring the result.

pub mod adapter;
pub mod annotation;
pub mod checkpoint;
pub mod cli;
pub mod colormap;
pub mod config;
pub mod dataset;
pub mod error;
pub mod evaluation;
pub mod layers;
pub mod losses;
pub mod polishnet;
pub mod pressure;
pub mod raster;
pub mod service;
pub mod skeleton;
pub mod synthetic;
pub mod targets;
pub mod tensor;
pub mod training;

pub use error::{Error, Result};
