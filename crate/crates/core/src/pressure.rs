//! Pressure-mat recordings: ingestion, cleaning and colorization.
//!
//! A frame is a 32-column × 64-row grid (portrait, person vertical) stored
//! row-major: the value at row `r`, column `c` lives at index `r * 32 + c`.
//! Text files hold one frame per line; binary files use the `PMAT1`
//! container. Either carries a JSON sidecar with the recording metadata.

use std::io::{BufRead, Read, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::colormap::Colormap;
use crate::error::{Error, Result};
use crate::raster::{resize_bicubic, ColorImage};

pub const GRID_WIDTH: usize = 32;
pub const GRID_HEIGHT: usize = 64;
pub const FRAME_LEN: usize = GRID_WIDTH * GRID_HEIGHT;
pub const MAX_PRESSURE_MMHG: f64 = 100.0;
pub const NUM_SUBJECTS: u32 = 13;
pub const NUM_POSTURES: u32 = 17;
pub const BINARY_MAGIC: &[u8; 5] = b"PMAT1";

/// Default working resolution (width, height): 4× the sensor grid per axis.
pub const DEFAULT_WORKING_SIZE: (usize, usize) = (128, 256);

#[derive(Clone, Debug, PartialEq)]
pub struct PressureFrame {
    values: Vec<f64>,
    timestamp_index: u32,
}

impl PressureFrame {
    /// Values are clamped into the calibrated [0, 100] mmHg range.
    pub fn new(values: Vec<f64>, timestamp_index: u32) -> Result<Self> {
        if values.len() != FRAME_LEN {
            return Err(Error::Parse(format!(
                "frame {timestamp_index}: expected {FRAME_LEN} values, got {}",
                values.len()
            )));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Parse(format!(
                "frame {timestamp_index}: non-finite value at position {i}"
            )));
        }
        let values = values.into_iter().map(clamp_pressure).collect();
        Ok(PressureFrame {
            values,
            timestamp_index,
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn timestamp_index(&self) -> u32 {
        self.timestamp_index
    }

    #[inline]
    pub fn at(&self, row: usize, col: usize) -> f64 {
        self.values[row * GRID_WIDTH + col]
    }

    /// Sum of squared differences over all sensors.
    pub fn sse(&self, other: &PressureFrame) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    }
}

pub fn clamp_pressure(v: f64) -> f64 {
    v.clamp(0.0, MAX_PRESSURE_MMHG)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceMeta {
    pub subject_id: u32,
    pub posture_id: u32,
    #[serde(default = "default_rate")]
    pub sample_rate_hz: u32,
}

fn default_rate() -> u32 {
    1
}

impl SequenceMeta {
    pub fn new(subject_id: u32, posture_id: u32) -> Self {
        SequenceMeta {
            subject_id,
            posture_id,
            sample_rate_hz: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=NUM_SUBJECTS).contains(&self.subject_id) {
            return Err(Error::Validation(format!(
                "subject_id {} outside 1..={NUM_SUBJECTS}",
                self.subject_id
            )));
        }
        if !(1..=NUM_POSTURES).contains(&self.posture_id) {
            return Err(Error::Validation(format!(
                "posture_id {} outside 1..={NUM_POSTURES}",
                self.posture_id
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PressureSequence {
    frames: Vec<PressureFrame>,
    meta: SequenceMeta,
}

impl PressureSequence {
    pub fn new(frames: Vec<PressureFrame>, meta: SequenceMeta) -> Result<Self> {
        meta.validate()?;
        if frames.is_empty() {
            return Err(Error::EmptySequence);
        }
        if frames.windows(2).any(|w| w[1].timestamp_index <= w[0].timestamp_index) {
            return Err(Error::Validation("frame timestamps must be strictly increasing".into()));
        }
        Ok(PressureSequence { frames, meta })
    }

    pub fn frames(&self) -> &[PressureFrame] {
        &self.frames
    }

    pub fn meta(&self) -> SequenceMeta {
        self.meta
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    pub fn frame_by_timestamp(&self, t: u32) -> Option<&PressureFrame> {
        self.frames.iter().find(|f| f.timestamp_index == t)
    }

    /// Parses the text format: one frame per line, 2048 whitespace- or
    /// comma-separated numbers. Blank lines are ignored; frames are indexed
    /// by their order of appearance.
    pub fn read_text(reader: impl BufRead, meta: SequenceMeta) -> Result<Self> {
        let mut frames = Vec::new();
        for line in reader.lines() {
            let line = line.map_err(|e| Error::Parse(e.to_string()))?;
            if line.trim().is_empty() {
                continue;
            }
            let t = frames.len() as u32;
            let values = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<f64>()
                        .map_err(|_| Error::Parse(format!("frame {t}: invalid number {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            frames.push(PressureFrame::new(values, t)?);
        }
        PressureSequence::new(frames, meta)
    }

    pub fn write_text(&self, mut writer: impl Write) -> std::io::Result<()> {
        for f in &self.frames {
            let line: Vec<String> = f.values.iter().map(|v| v.to_string()).collect();
            writeln!(writer, "{}", line.join(" "))?;
        }
        Ok(())
    }

    /// Reads the `PMAT1` container: magic, then little-endian u32
    /// frame_count, width, height, then `frame_count × 2048` f32 values.
    pub fn read_binary(mut reader: impl Read, meta: SequenceMeta) -> Result<Self> {
        let mut magic = [0u8; 5];
        reader
            .read_exact(&mut magic)
            .map_err(|_| Error::Parse("truncated header".into()))?;
        if &magic != BINARY_MAGIC {
            return Err(Error::Parse("bad magic, expected PMAT1".into()));
        }
        let mut word = [0u8; 4];
        let mut next_u32 = |r: &mut dyn Read| -> Result<u32> {
            r.read_exact(&mut word)
                .map_err(|_| Error::Parse("truncated header".into()))?;
            Ok(u32::from_le_bytes(word))
        };
        let count = next_u32(&mut reader)? as usize;
        let width = next_u32(&mut reader)? as usize;
        let height = next_u32(&mut reader)? as usize;
        if (width, height) != (GRID_WIDTH, GRID_HEIGHT) {
            return Err(Error::Parse(format!(
                "grid {width}x{height} is not {GRID_WIDTH}x{GRID_HEIGHT}"
            )));
        }
        if count == 0 {
            return Err(Error::EmptySequence);
        }
        let mut buf = vec![0u8; FRAME_LEN * 4];
        let mut frames = Vec::with_capacity(count);
        for t in 0..count {
            reader
                .read_exact(&mut buf)
                .map_err(|_| Error::Parse(format!("frame {t}: expected {FRAME_LEN} values")))?;
            let values = buf
                .chunks_exact(4)
                .map(|b| f32::from_le_bytes([b[0], b[1], b[2], b[3]]) as f64)
                .collect();
            frames.push(PressureFrame::new(values, t as u32)?);
        }
        PressureSequence::new(frames, meta)
    }

    pub fn write_binary(&self, mut writer: impl Write) -> std::io::Result<()> {
        writer.write_all(BINARY_MAGIC)?;
        for v in [self.frames.len(), GRID_WIDTH, GRID_HEIGHT] {
            writer.write_all(&(v as u32).to_le_bytes())?;
        }
        for f in &self.frames {
            for &v in &f.values {
                writer.write_all(&(v as f32).to_le_bytes())?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceFormat {
    Text,
    Binary,
}

impl SequenceFormat {
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("pmat") | Some("bin") => SequenceFormat::Binary,
            _ => SequenceFormat::Text,
        }
    }
}

/// Metadata sidecar for a recording: same stem, `.json` extension.
pub fn sidecar_path(path: &Path) -> PathBuf {
    path.with_extension("json")
}

/// Sidecar contents. `timestamps` is present only when the frames are not
/// indexed `0..n`, e.g. after trimming.
#[derive(Serialize, Deserialize)]
struct Sidecar {
    #[serde(flatten)]
    meta: SequenceMeta,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    timestamps: Option<Vec<u32>>,
}

/// Loads a recording and its sidecar. Binary files are recognised by their
/// magic bytes, everything else is parsed as text.
pub fn load_sequence(path: &Path) -> Result<PressureSequence> {
    let meta_path = sidecar_path(path);
    let meta_bytes = std::fs::read(&meta_path).map_err(|e| Error::io(&meta_path, e))?;
    let sidecar: Sidecar = serde_json::from_slice(&meta_bytes)?;
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    if bytes.is_empty() {
        return Err(Error::EmptySequence);
    }
    let seq = if bytes.starts_with(BINARY_MAGIC) {
        PressureSequence::read_binary(bytes.as_slice(), sidecar.meta)?
    } else {
        PressureSequence::read_text(bytes.as_slice(), sidecar.meta)?
    };
    match sidecar.timestamps {
        None => Ok(seq),
        Some(ts) if ts.len() == seq.len() => {
            let frames = seq
                .frames
                .into_iter()
                .zip(ts)
                .map(|(f, t)| PressureFrame {
                    timestamp_index: t,
                    ..f
                })
                .collect();
            PressureSequence::new(frames, seq.meta)
        }
        Some(ts) => Err(Error::Parse(format!(
            "{}: {} timestamps for {} frames",
            meta_path.display(),
            ts.len(),
            seq.len()
        ))),
    }
}

pub fn save_sequence(seq: &PressureSequence, path: &Path, format: SequenceFormat) -> Result<()> {
    let mut buf = Vec::new();
    match format {
        SequenceFormat::Text => seq.write_text(&mut buf),
        SequenceFormat::Binary => seq.write_binary(&mut buf),
    }
    .map_err(|e| Error::io(path, e))?;
    std::fs::write(path, buf).map_err(|e| Error::io(path, e))?;
    let meta_path = sidecar_path(path);
    let contiguous = seq
        .frames
        .iter()
        .enumerate()
        .all(|(i, f)| f.timestamp_index as usize == i);
    let sidecar = Sidecar {
        meta: seq.meta,
        timestamps: (!contiguous).then(|| seq.frames.iter().map(|f| f.timestamp_index).collect()),
    };
    let meta = serde_json::to_vec_pretty(&sidecar)?;
    std::fs::write(&meta_path, meta).map_err(|e| Error::io(&meta_path, e))
}

/// 3×3×3 spatiotemporal median with replicate padding in space and time.
pub fn median_filter_3d(seq: &PressureSequence) -> PressureSequence {
    let n = seq.frames.len();
    let clampi = |v: isize, hi: usize| v.clamp(0, hi as isize - 1) as usize;
    let mut window = [0.0f64; 27];
    let frames = (0..n)
        .map(|t| {
            let mut values = vec![0.0; FRAME_LEN];
            for r in 0..GRID_HEIGHT {
                for c in 0..GRID_WIDTH {
                    let mut k = 0;
                    for dt in -1isize..=1 {
                        let f = &seq.frames[clampi(t as isize + dt, n)];
                        for dr in -1isize..=1 {
                            let rr = clampi(r as isize + dr, GRID_HEIGHT);
                            for dc in -1isize..=1 {
                                let cc = clampi(c as isize + dc, GRID_WIDTH);
                                window[k] = f.values[rr * GRID_WIDTH + cc];
                                k += 1;
                            }
                        }
                    }
                    let (_, median, _) = window.select_nth_unstable_by(13, f64::total_cmp);
                    values[r * GRID_WIDTH + c] = *median;
                }
            }
            PressureFrame {
                values,
                timestamp_index: seq.frames[t].timestamp_index,
            }
        })
        .collect();
    PressureSequence { frames, meta: seq.meta }
}

/// Drops the first and last `n` frames.
pub fn trim_transitions(seq: &PressureSequence, n: usize) -> Result<PressureSequence> {
    let len = seq.frames.len();
    if len <= 2 * n {
        return Err(Error::SequenceTooShort { len, trim: n });
    }
    Ok(PressureSequence {
        frames: seq.frames[n..len - n].to_vec(),
        meta: seq.meta,
    })
}

/// Colorizes at the native 32×64 grid resolution: each value is normalized
/// over the fixed [0, 100] mmHg range and looked up in the map.
pub fn colorize_native(frame: &PressureFrame, map: &Colormap) -> ColorImage {
    let plane = FRAME_LEN;
    let mut data = vec![0.0; 3 * plane];
    for (i, &v) in frame.values.iter().enumerate() {
        let rgb = map.sample(v / MAX_PRESSURE_MMHG);
        for c in 0..3 {
            data[c * plane + i] = rgb[c];
        }
    }
    ColorImage::new(GRID_WIDTH, GRID_HEIGHT, data).expect("lut colors lie in [0, 1]")
}

/// Colorizes and bicubically resizes to `(width, height)`.
pub fn colorize(frame: &PressureFrame, map: &Colormap, size: (usize, usize)) -> ColorImage {
    resize_bicubic(&colorize_native(frame, map), size.0, size.1)
}

/// Maps sensor-grid coordinates (column, row) to working-resolution pixels
/// using the same pixel-center convention as the resize.
pub fn grid_to_working(col: f64, row: f64, size: (usize, usize)) -> (f64, f64) {
    let sx = size.0 as f64 / GRID_WIDTH as f64;
    let sy = size.1 as f64 / GRID_HEIGHT as f64;
    ((col + 0.5) * sx - 0.5, (row + 0.5) * sy - 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colormap::{colormap_by_name, luminance};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn meta() -> SequenceMeta {
        SequenceMeta::new(1, 1)
    }

    fn constant_seq(len: usize, c: f64) -> PressureSequence {
        let frames = (0..len)
            .map(|t| PressureFrame::new(vec![c; FRAME_LEN], t as u32).unwrap())
            .collect();
        PressureSequence::new(frames, meta()).unwrap()
    }

    fn text_of(rows: &[Vec<f64>]) -> String {
        rows.iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }

    #[test]
    fn text_load_preserves_count_and_clamps() {
        let mut rows = vec![vec![10.0; FRAME_LEN]; 60];
        rows[4][17] = 250.0;
        rows[5][3] = -4.0;
        let seq = PressureSequence::read_text(text_of(&rows).as_bytes(), meta()).unwrap();
        assert_eq!(seq.len(), 60);
        assert_eq!(seq.frames()[4].values()[17], 100.0);
        assert_eq!(seq.frames()[5].values()[3], 0.0);
    }

    #[test]
    fn short_row_names_frame() {
        let mut rows = vec![vec![1.0; FRAME_LEN]; 20];
        rows[12].pop();
        let err = PressureSequence::read_text(text_of(&rows).as_bytes(), meta()).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("frame 12: expected 2048 values"), "{msg}");
    }

    #[test]
    fn empty_source_is_rejected() {
        assert!(matches!(
            PressureSequence::read_text("\n\n".as_bytes(), meta()),
            Err(Error::EmptySequence)
        ));
    }

    #[test]
    fn metadata_ranges_enforced() {
        let frames = vec![PressureFrame::new(vec![0.0; FRAME_LEN], 0).unwrap()];
        assert!(PressureSequence::new(frames.clone(), SequenceMeta::new(14, 1)).is_err());
        assert!(PressureSequence::new(frames, SequenceMeta::new(1, 18)).is_err());
    }

    #[test]
    fn binary_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let frames = (0..4)
            .map(|t| {
                // f32-representable values survive the container exactly
                let v = (0..FRAME_LEN).map(|_| rng.gen_range(0.0f32..100.0) as f64).collect();
                PressureFrame::new(v, t).unwrap()
            })
            .collect();
        let seq = PressureSequence::new(frames, SequenceMeta::new(3, 9)).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.pmat");
        save_sequence(&seq, &path, SequenceFormat::Binary).unwrap();
        assert_eq!(load_sequence(&path).unwrap(), seq);
        let tpath = dir.path().join("s.txt");
        save_sequence(&seq, &tpath, SequenceFormat::Text).unwrap();
        assert_eq!(load_sequence(&tpath).unwrap(), seq);
    }

    #[test]
    fn median_of_constant_is_constant() {
        let seq = constant_seq(4, 37.5);
        assert_eq!(median_filter_3d(&seq), seq);
    }

    #[test]
    fn median_removes_single_spike() {
        let mut seq = constant_seq(5, 20.0);
        seq.frames[2].values[10 * GRID_WIDTH + 7] = 100.0;
        let out = median_filter_3d(&seq);
        assert!(out.frames().iter().all(|f| f.values().iter().all(|&v| v == 20.0)));
    }

    #[test]
    fn trim_boundaries() {
        let seq = constant_seq(60, 1.0);
        assert_eq!(trim_transitions(&seq, 3).unwrap().len(), 54);
        let seq7 = constant_seq(7, 1.0);
        let one = trim_transitions(&seq7, 3).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one.frames()[0].timestamp_index(), 3);
        assert!(matches!(
            trim_transitions(&constant_seq(6, 1.0), 3),
            Err(Error::SequenceTooShort { len: 6, trim: 3 })
        ));
    }

    #[test]
    fn colorize_extremes_hit_lut_ends() {
        let map = colormap_by_name("viridis").unwrap();
        let lo = PressureFrame::new(vec![0.0; FRAME_LEN], 0).unwrap();
        let hi = PressureFrame::new(vec![100.0; FRAME_LEN], 0).unwrap();
        let img = colorize(&lo, &map, DEFAULT_WORKING_SIZE);
        assert_eq!(img.size(), DEFAULT_WORKING_SIZE);
        for c in 0..3 {
            assert!((img.get(c, 40, 40) - map.lut()[0][c]).abs() < 1e-12);
        }
        let img = colorize(&hi, &map, DEFAULT_WORKING_SIZE);
        for c in 0..3 {
            assert!((img.get(c, 0, 127) - map.lut()[255][c]).abs() < 1e-12);
        }
    }

    #[test]
    fn colorize_interpolates_between_entries() {
        // a LUT whose entries differ everywhere, so 50 mmHg (position 127.5)
        // falls between two distinct colors
        let map = Colormap::from_fn("ramp", |t| [t, 1.0 - t, t * t]).unwrap();
        let frame = PressureFrame::new(vec![50.0; FRAME_LEN], 0).unwrap();
        let img = colorize_native(&frame, &map);
        let pos: f64 = 0.5 * 255.0;
        let i = pos.floor() as usize;
        let frac = pos - i as f64;
        for c in 0..3 {
            let oracle = map.lut()[i][c] + frac * (map.lut()[i + 1][c] - map.lut()[i][c]);
            assert!((img.get(c, 3, 3) - oracle).abs() < 1e-15);
        }
    }

    #[test]
    fn viridis_colorize_is_luminance_monotone() {
        let map = colormap_by_name("viridis").unwrap();
        let mut values = vec![0.0; FRAME_LEN];
        for (i, v) in values.iter_mut().enumerate() {
            *v = i as f64 * 100.0 / FRAME_LEN as f64;
        }
        let img = colorize_native(&PressureFrame::new(values, 0).unwrap(), &map);
        let lum: Vec<f64> = (0..GRID_HEIGHT)
            .flat_map(|r| (0..GRID_WIDTH).map(move |c| (r, c)))
            .map(|(r, c)| luminance(img.pixel(r, c)))
            .collect();
        assert!(lum.windows(2).all(|w| w[1] >= w[0] - 1e-12));
    }
}
