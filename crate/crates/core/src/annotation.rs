//! Keypoint labels, label propagation across near-identical frames, and
//! visibility masks.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pressure::PressureSequence;
use crate::skeleton::{PartName, SkeletonTopology, NUM_LIMBS, NUM_PARTS};

/// Identifies one frame of one recording: (subject, posture, timestamp).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u32; 3]", into = "[u32; 3]")]
pub struct FrameRef {
    pub subject_id: u32,
    pub posture_id: u32,
    pub timestamp_index: u32,
}

impl FrameRef {
    pub fn new(subject_id: u32, posture_id: u32, timestamp_index: u32) -> Self {
        FrameRef {
            subject_id,
            posture_id,
            timestamp_index,
        }
    }

    pub fn same_sequence(&self, other: &FrameRef) -> bool {
        self.subject_id == other.subject_id && self.posture_id == other.posture_id
    }
}

impl From<[u32; 3]> for FrameRef {
    fn from(v: [u32; 3]) -> Self {
        FrameRef::new(v[0], v[1], v[2])
    }
}

impl From<FrameRef> for [u32; 3] {
    fn from(f: FrameRef) -> Self {
        [f.subject_id, f.posture_id, f.timestamp_index]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Keypoint {
    pub x: f64,
    pub y: f64,
    pub visible: bool,
}

impl Keypoint {
    pub fn visible(x: f64, y: f64) -> Self {
        Keypoint { x, y, visible: true }
    }

    pub fn hidden() -> Self {
        Keypoint::default()
    }

    pub fn distance(&self, other: &Keypoint) -> f64 {
        let (dx, dy) = (self.x - other.x, self.y - other.y);
        (dx * dx + dy * dy).sqrt()
    }
}

/// The 14 labelled body parts of one frame, in working-resolution pixels.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KeypointSet {
    pub frame: FrameRef,
    points: [Keypoint; NUM_PARTS],
}

impl KeypointSet {
    pub fn new(frame: FrameRef, points: [Keypoint; NUM_PARTS]) -> Self {
        KeypointSet { frame, points }
    }

    pub fn all_hidden(frame: FrameRef) -> Self {
        KeypointSet {
            frame,
            points: [Keypoint::hidden(); NUM_PARTS],
        }
    }

    pub fn get(&self, part: PartName) -> Keypoint {
        self.points[part.index()]
    }

    pub fn set(&mut self, part: PartName, kp: Keypoint) {
        self.points[part.index()] = kp;
    }

    pub fn points(&self) -> &[Keypoint; NUM_PARTS] {
        &self.points
    }

    pub fn with_frame(&self, frame: FrameRef) -> Self {
        KeypointSet {
            frame,
            points: self.points,
        }
    }

    /// First visible part outside `[0, width) × [0, height)`, in part order.
    pub fn out_of_bounds_part(&self, size: (usize, usize)) -> Option<PartName> {
        PartName::ALL.into_iter().find(|&part| {
            let p = self.get(part);
            p.visible
                && !(p.x.is_finite()
                    && p.y.is_finite()
                    && p.x >= 0.0
                    && p.y >= 0.0
                    && p.x < size.0 as f64
                    && p.y < size.1 as f64)
        })
    }

    /// Every visible point must lie inside `[0, width) × [0, height)`.
    pub fn validate(&self, size: (usize, usize)) -> Result<()> {
        match self.out_of_bounds_part(size) {
            Some(part) => Err(Error::Validation(format!("{part} out of bounds"))),
            None => Ok(()),
        }
    }
}

/// Per-part and per-limb visibility. A limb is visible iff both endpoints are.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VisibilityMask {
    pub parts: [bool; NUM_PARTS],
    pub limbs: [bool; NUM_LIMBS],
}

impl VisibilityMask {
    pub fn all_visible() -> Self {
        VisibilityMask {
            parts: [true; NUM_PARTS],
            limbs: [true; NUM_LIMBS],
        }
    }

    /// Flags for the 28 PAF channels (two per limb).
    pub fn paf_channels(&self) -> [bool; 2 * NUM_LIMBS] {
        let mut out = [false; 2 * NUM_LIMBS];
        for (l, &v) in self.limbs.iter().enumerate() {
            out[2 * l] = v;
            out[2 * l + 1] = v;
        }
        out
    }
}

pub fn visibility_mask(ks: &KeypointSet) -> VisibilityMask {
    visibility_mask_with(ks, &SkeletonTopology::default())
}

pub fn visibility_mask_with(ks: &KeypointSet, topo: &SkeletonTopology) -> VisibilityMask {
    let parts = std::array::from_fn(|i| ks.points[i].visible);
    let limbs = std::array::from_fn(|l| {
        let (a, b) = topo.limbs[l];
        parts[a.index()] && parts[b.index()]
    });
    VisibilityMask { parts, limbs }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Manual,
    Propagated(FrameRef),
}

#[derive(Clone, Debug, PartialEq)]
pub struct AnnotationRecord {
    pub keypoints: KeypointSet,
    pub provenance: Provenance,
}

/// Labels keyed by frame, with their provenance.
#[derive(Clone, Debug, PartialEq)]
pub struct AnnotationStore {
    image_size: (usize, usize),
    records: BTreeMap<FrameRef, AnnotationRecord>,
}

impl AnnotationStore {
    pub fn new(image_size: (usize, usize)) -> Self {
        AnnotationStore {
            image_size,
            records: BTreeMap::new(),
        }
    }

    pub fn image_size(&self) -> (usize, usize) {
        self.image_size
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, frame: &FrameRef) -> Option<&AnnotationRecord> {
        self.records.get(frame)
    }

    pub fn records(&self) -> impl Iterator<Item = (&FrameRef, &AnnotationRecord)> {
        self.records.iter()
    }

    /// Records belonging to one (subject, posture) recording.
    pub fn sequence_records(&self, subject_id: u32, posture_id: u32) -> impl Iterator<Item = &AnnotationRecord> {
        let lo = FrameRef::new(subject_id, posture_id, 0);
        let hi = FrameRef::new(subject_id, posture_id, u32::MAX);
        self.records.range(lo..=hi).map(|(_, r)| r)
    }

    /// Stores a manual label, replacing any record for the same frame.
    pub fn put_annotation(&mut self, ks: KeypointSet) -> Result<()> {
        ks.validate(self.image_size)?;
        self.records.insert(
            ks.frame,
            AnnotationRecord {
                keypoints: ks,
                provenance: Provenance::Manual,
            },
        );
        Ok(())
    }

    pub fn remove(&mut self, frame: &FrameRef) -> Option<AnnotationRecord> {
        self.records.remove(frame)
    }

    pub fn insert_record(&mut self, record: AnnotationRecord) -> Result<()> {
        record.keypoints.validate(self.image_size)?;
        if let Provenance::Propagated(src) = record.provenance {
            if !src.same_sequence(&record.keypoints.frame) {
                return Err(Error::Validation(format!(
                    "propagation source {src:?} is outside the record's sequence"
                )));
            }
        }
        self.records.insert(record.keypoints.frame, record);
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        let records: Vec<RecordJson> = self.records.values().map(RecordJson::from).collect();
        Ok(serde_json::to_string_pretty(&records)?)
    }

    pub fn from_json(text: &str, image_size: (usize, usize)) -> Result<Self> {
        let records: Vec<RecordJson> = serde_json::from_str(text)?;
        let mut store = AnnotationStore::new(image_size);
        for r in records {
            store.insert_record(r.try_into()?)?;
        }
        Ok(store)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = self.to_json()?;
        let tmp = path.with_extension("json.tmp");
        std::fs::write(&tmp, text).map_err(|e| Error::io(&tmp, e))?;
        std::fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: &Path, image_size: (usize, usize)) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        AnnotationStore::from_json(&text, image_size)
    }
}

/// Functional form of [`AnnotationStore::put_annotation`].
pub fn put_annotation(store: &AnnotationStore, ks: KeypointSet) -> Result<AnnotationStore> {
    let mut next = store.clone();
    next.put_annotation(ks)?;
    Ok(next)
}

/// Copies each manual label of the recording onto every other frame whose raw
/// pressure is closest in sum of squared errors. Ties go to the seed with the
/// lower timestamp. Manual records are left untouched; earlier propagated
/// records are recomputed, so repeated calls are idempotent.
pub fn propagate(store: &AnnotationStore, seq: &PressureSequence) -> Result<AnnotationStore> {
    let meta = seq.meta();
    let seeds: Vec<(&AnnotationRecord, &crate::pressure::PressureFrame)> = store
        .sequence_records(meta.subject_id, meta.posture_id)
        .filter(|r| r.provenance == Provenance::Manual)
        .filter_map(|r| {
            seq.frame_by_timestamp(r.keypoints.frame.timestamp_index)
                .map(|f| (r, f))
        })
        .collect();
    if seeds.is_empty() {
        return Err(Error::NoSeedAnnotation {
            subject_id: meta.subject_id,
            posture_id: meta.posture_id,
        });
    }
    let mut next = store.clone();
    for frame in seq.frames() {
        let target = FrameRef::new(meta.subject_id, meta.posture_id, frame.timestamp_index());
        if matches!(next.get(&target), Some(r) if r.provenance == Provenance::Manual) {
            continue;
        }
        // seeds are in ascending timestamp order; strict `<` keeps the lowest on ties
        let mut best: Option<(f64, &AnnotationRecord)> = None;
        for (rec, seed_frame) in &seeds {
            let d = frame.sse(seed_frame);
            if best.map_or(true, |(bd, _)| d < bd) {
                best = Some((d, rec));
            }
        }
        let (_, src) = best.expect("at least one seed");
        next.records.insert(
            target,
            AnnotationRecord {
                keypoints: src.keypoints.with_frame(target),
                provenance: Provenance::Propagated(src.keypoints.frame),
            },
        );
    }
    Ok(next)
}

/// On-disk form of one record.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RecordJson {
    pub frame: FrameRef,
    pub points: BTreeMap<String, [f64; 2]>,
    pub visible: BTreeMap<String, bool>,
    #[serde(default = "manual")]
    pub provenance: Provenance,
}

fn manual() -> Provenance {
    Provenance::Manual
}

impl From<&AnnotationRecord> for RecordJson {
    fn from(r: &AnnotationRecord) -> Self {
        let ks = &r.keypoints;
        RecordJson {
            frame: ks.frame,
            points: PartName::ALL
                .iter()
                .map(|&p| (p.to_string(), [ks.get(p).x, ks.get(p).y]))
                .collect(),
            visible: PartName::ALL
                .iter()
                .map(|&p| (p.to_string(), ks.get(p).visible))
                .collect(),
            provenance: r.provenance,
        }
    }
}

impl RecordJson {
    /// Builds a keypoint set; parts missing from `visible` count as hidden,
    /// and a visible part must carry coordinates.
    pub fn keypoints(&self) -> Result<KeypointSet> {
        for name in self.points.keys().chain(self.visible.keys()) {
            name.parse::<PartName>()?;
        }
        let mut ks = KeypointSet::all_hidden(self.frame);
        for part in PartName::ALL {
            let visible = self.visible.get(part.as_str()).copied().unwrap_or(false);
            let kp = match self.points.get(part.as_str()) {
                Some(&[x, y]) => Keypoint { x, y, visible },
                None if visible => return Err(Error::Validation(format!("{part} is visible but has no point"))),
                None => Keypoint::hidden(),
            };
            ks.set(part, kp);
        }
        Ok(ks)
    }
}

impl TryFrom<RecordJson> for AnnotationRecord {
    type Error = Error;

    fn try_from(r: RecordJson) -> Result<Self> {
        Ok(AnnotationRecord {
            keypoints: r.keypoints()?,
            provenance: r.provenance,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pressure::{PressureFrame, SequenceMeta, FRAME_LEN};

    fn full_set(frame: FrameRef, offset: f64) -> KeypointSet {
        let mut ks = KeypointSet::all_hidden(frame);
        for (i, p) in PartName::ALL.iter().enumerate() {
            ks.set(*p, Keypoint::visible(10.0 + offset + i as f64, 20.0 + 5.0 * i as f64));
        }
        ks
    }

    fn seq_from(values: Vec<Vec<f64>>) -> PressureSequence {
        let frames = values
            .into_iter()
            .enumerate()
            .map(|(t, v)| PressureFrame::new(v, t as u32).unwrap())
            .collect();
        PressureSequence::new(frames, SequenceMeta::new(2, 5)).unwrap()
    }

    #[test]
    fn put_inserts_and_overwrites() {
        let mut store = AnnotationStore::new((128, 256));
        let f = FrameRef::new(1, 1, 0);
        let mut ks = KeypointSet::all_hidden(f);
        ks.set(PartName::Head, Keypoint::visible(64.0, 20.0));
        store.put_annotation(ks.clone()).unwrap();
        assert_eq!(store.len(), 1);
        assert_eq!(store.get(&f).unwrap().provenance, Provenance::Manual);
        ks.set(PartName::Head, Keypoint::visible(30.0, 20.0));
        store.put_annotation(ks.clone()).unwrap();
        assert_eq!(store.len(), 1);
        assert_eq!(store.get(&f).unwrap().keypoints, ks);
    }

    #[test]
    fn out_of_bounds_names_part() {
        let mut ks = KeypointSet::all_hidden(FrameRef::new(1, 1, 0));
        ks.set(PartName::Head, Keypoint::visible(-3.0, 10.0));
        let err = put_annotation(&AnnotationStore::new((128, 256)), ks).unwrap_err();
        assert_eq!(err.to_string(), "validation error: head out of bounds");
    }

    #[test]
    fn hidden_points_are_not_bounds_checked() {
        let mut ks = KeypointSet::all_hidden(FrameRef::new(1, 1, 0));
        ks.set(
            PartName::Head,
            Keypoint {
                x: -3.0,
                y: 1e9,
                visible: false,
            },
        );
        assert!(put_annotation(&AnnotationStore::new((128, 256)), ks).is_ok());
    }

    #[test]
    fn identical_frames_all_receive_seed() {
        let seq = seq_from(vec![vec![5.0; FRAME_LEN]; 6]);
        let mut store = AnnotationStore::new((128, 256));
        let seed = full_set(FrameRef::new(2, 5, 2), 0.0);
        store.put_annotation(seed.clone()).unwrap();
        let out = propagate(&store, &seq).unwrap();
        assert_eq!(out.len(), 6);
        for (f, r) in out.records() {
            assert_eq!(r.keypoints.points(), seed.points());
            if f.timestamp_index != 2 {
                assert_eq!(r.provenance, Provenance::Propagated(seed.frame));
            }
        }
    }

    #[test]
    fn nearest_seed_wins_and_ties_go_low() {
        // frame 0 = A (all 0), frame 10 = B (all 10); frame 11 equals B;
        // frame 5 is all 5, equidistant from both
        let mut frames = vec![vec![0.0; FRAME_LEN]; 12];
        frames[10] = vec![10.0; FRAME_LEN];
        frames[11] = vec![10.0; FRAME_LEN];
        frames[5] = vec![5.0; FRAME_LEN];
        let seq = seq_from(frames);
        let a = full_set(FrameRef::new(2, 5, 0), 0.0);
        let b = full_set(FrameRef::new(2, 5, 10), 40.0);
        let mut store = AnnotationStore::new((128, 256));
        store.put_annotation(a.clone()).unwrap();
        store.put_annotation(b.clone()).unwrap();
        let out = propagate(&store, &seq).unwrap();
        let got = |t| out.get(&FrameRef::new(2, 5, t)).unwrap();
        assert_eq!(got(11).keypoints.points(), b.points());
        assert_eq!(got(11).provenance, Provenance::Propagated(b.frame));
        assert_eq!(got(5).provenance, Provenance::Propagated(a.frame));
        assert_eq!(got(5).keypoints.points(), a.points());
    }

    #[test]
    fn propagation_needs_a_seed() {
        let seq = seq_from(vec![vec![1.0; FRAME_LEN]; 3]);
        let mut store = AnnotationStore::new((128, 256));
        // a label in a different recording does not count
        store.put_annotation(full_set(FrameRef::new(3, 5, 0), 0.0)).unwrap();
        assert!(matches!(
            propagate(&store, &seq),
            Err(Error::NoSeedAnnotation {
                subject_id: 2,
                posture_id: 5
            })
        ));
    }

    #[test]
    fn propagation_is_idempotent_and_keeps_manual() {
        let frames: Vec<Vec<f64>> = (0..8).map(|t| vec![t as f64; FRAME_LEN]).collect();
        let seq = seq_from(frames);
        let mut store = AnnotationStore::new((128, 256));
        store.put_annotation(full_set(FrameRef::new(2, 5, 1), 0.0)).unwrap();
        store.put_annotation(full_set(FrameRef::new(2, 5, 6), 3.0)).unwrap();
        let once = propagate(&store, &seq).unwrap();
        let twice = propagate(&once, &seq).unwrap();
        assert_eq!(once, twice);
        for t in [1, 6] {
            let f = FrameRef::new(2, 5, t);
            assert_eq!(once.get(&f), store.get(&f));
        }
    }

    #[test]
    fn limb_visibility_follows_endpoints() {
        let topo = SkeletonTopology::default();
        let mut ks = full_set(FrameRef::new(1, 1, 0), 0.0);
        let m = visibility_mask(&ks);
        assert!(m.parts.iter().all(|&v| v) && m.limbs.iter().all(|&v| v));

        ks.set(PartName::RWrist, Keypoint::hidden());
        let m = visibility_mask(&ks);
        assert_eq!(m.limbs.iter().filter(|&&v| v).count(), 13);
        let idx = topo
            .limbs
            .iter()
            .position(|&l| l == (PartName::RElbow, PartName::RWrist))
            .unwrap();
        assert!(!m.limbs[idx]);

        let mut ks = full_set(FrameRef::new(1, 1, 0), 0.0);
        ks.set(PartName::Head, Keypoint::hidden());
        ks.set(PartName::Neck, Keypoint::hidden());
        let m = visibility_mask(&ks);
        for (l, &(a, b)) in topo.limbs.iter().enumerate() {
            let touches = [a, b].iter().any(|p| matches!(p, PartName::Head | PartName::Neck));
            assert_eq!(m.limbs[l], !touches, "limb {a}-{b}");
        }
    }

    #[test]
    fn json_round_trip_and_schema() {
        let mut store = AnnotationStore::new((128, 256));
        let mut ks = full_set(FrameRef::new(1, 2, 3), 0.0);
        ks.set(
            PartName::LAnkle,
            Keypoint {
                x: 4.0,
                y: 5.0,
                visible: false,
            },
        );
        store.put_annotation(ks).unwrap();
        store
            .insert_record(AnnotationRecord {
                keypoints: full_set(FrameRef::new(1, 2, 4), 0.0),
                provenance: Provenance::Propagated(FrameRef::new(1, 2, 3)),
            })
            .unwrap();
        let text = store.to_json().unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v[0]["frame"], serde_json::json!([1, 2, 3]));
        assert_eq!(v[0]["provenance"], "manual");
        assert_eq!(v[1]["provenance"], serde_json::json!({"propagated": [1, 2, 3]}));
        assert_eq!(v[0]["points"]["head"], serde_json::json!([10.0, 20.0]));
        assert_eq!(v[0]["visible"]["l_ankle"], false);
        assert_eq!(AnnotationStore::from_json(&text, (128, 256)).unwrap(), store);
    }

    #[test]
    fn json_rejects_unknown_parts() {
        let text = r#"[{"frame":[1,1,0],"points":{"left_eye":[1,1]},"visible":{}}]"#;
        assert!(AnnotationStore::from_json(text, (128, 256)).is_err());
    }
}
