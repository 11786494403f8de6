//! Annotated, colorized frames ready for training and evaluation.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::annotation::{AnnotationStore, FrameRef, KeypointSet};
use crate::colormap::Colormap;
use crate::error::{Error, Result};
use crate::pressure::{colorize, load_sequence, sidecar_path, PressureSequence};
use crate::raster::ColorImage;
use crate::tensor::Tensor;

/// Annotation store file inside a data directory.
pub const STORE_FILE: &str = "annotations.json";
const SEQUENCE_EXTENSIONS: [&str; 4] = ["txt", "csv", "pmat", "bin"];

pub fn sequence_id(subject_id: u32, posture_id: u32) -> String {
    format!("{subject_id}-{posture_id}")
}

/// Recordings in `dir` keyed by [`sequence_id`]: every file with a sequence
/// extension and a sidecar.
pub fn discover_sequences(dir: &Path) -> Result<BTreeMap<String, PressureSequence>> {
    let mut out = BTreeMap::new();
    for path in sequence_paths(dir)? {
        let seq = load_sequence(&path)?;
        let meta = seq.meta();
        let id = sequence_id(meta.subject_id, meta.posture_id);
        if out.insert(id.clone(), seq).is_some() {
            return Err(Error::Validation(format!("two files hold sequence {id}")));
        }
    }
    Ok(out)
}

/// Recording files in `dir`, sorted by path.
pub fn sequence_paths(dir: &Path) -> Result<Vec<PathBuf>> {
    let entries = std::fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            let ext = p.extension().and_then(|e| e.to_str()).unwrap_or("");
            SEQUENCE_EXTENSIONS.contains(&ext) && sidecar_path(p).is_file()
        })
        .collect();
    paths.sort();
    Ok(paths)
}

/// The directory's store, or an empty one when it has none yet.
pub fn load_store(dir: &Path, image_size: (usize, usize)) -> Result<AnnotationStore> {
    let path = dir.join(STORE_FILE);
    if path.is_file() {
        AnnotationStore::load(&path, image_size)
    } else {
        Ok(AnnotationStore::new(image_size))
    }
}

/// Every annotated frame of every recording in `dir`, recordings in id order.
pub fn load_samples(dir: &Path, map: &Colormap, size: (usize, usize)) -> Result<Vec<Sample>> {
    let store = load_store(dir, size)?;
    let seqs = discover_sequences(dir)?;
    Ok(seqs
        .values()
        .flat_map(|seq| samples_from_sequence(seq, &store, map, size))
        .collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sample {
    /// Colorized frame at working resolution.
    pub image: ColorImage,
    /// Ground truth in working-resolution pixels.
    pub keypoints: KeypointSet,
}

impl Sample {
    pub fn frame(&self) -> FrameRef {
        self.keypoints.frame
    }
}

/// One sample per frame of `seq` that has a record in `store`, in frame order.
pub fn samples_from_sequence(
    seq: &PressureSequence,
    store: &AnnotationStore,
    map: &Colormap,
    size: (usize, usize),
) -> Vec<Sample> {
    let meta = seq.meta();
    seq.frames()
        .iter()
        .filter_map(|f| {
            let frame = FrameRef::new(meta.subject_id, meta.posture_id, f.timestamp_index());
            store.get(&frame).map(|rec| Sample {
                image: colorize(f, map, size),
                keypoints: rec.keypoints,
            })
        })
        .collect()
}

/// Distinct subject ids, ascending.
pub fn subjects(samples: &[Sample]) -> Vec<u32> {
    let mut ids: Vec<u32> = samples.iter().map(|s| s.frame().subject_id).collect();
    ids.sort_unstable();
    ids.dedup();
    ids
}

pub fn filter_subjects(samples: &[Sample], keep: &[u32]) -> Vec<Sample> {
    samples
        .iter()
        .filter(|s| keep.contains(&s.frame().subject_id))
        .cloned()
        .collect()
}

/// `[N, 3, H, W]` batch of the given samples' images.
pub fn stack_images<'a>(samples: impl IntoIterator<Item = &'a Sample>) -> Result<Tensor> {
    let parts: Vec<Tensor> = samples.into_iter().map(|s| s.image.to_tensor()).collect();
    Tensor::stack(&parts)
}
