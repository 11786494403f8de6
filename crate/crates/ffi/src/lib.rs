//! C ABI over the presspose toolkit.
//!
//! Objects cross the boundary as opaque handles created by `pp_*_load` /
//! `pp_*_new` and released by the matching `pp_*_free`. Every fallible call
//! returns a [`PpStatus`]; on failure the message is retrievable with
//! [`pp_last_error_message`] from the same thread. Images are planar RGB
//! (`3 x height x width`, values in [0, 1]); keypoints are working-resolution
//! pixels. No function panics across the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use presspose::adapter::{load_adapter, AdapterKind, MultiStageNet};
use presspose::annotation::FrameRef;
use presspose::checkpoint::load_polishnet;
use presspose::colormap::colormap_by_name;
use presspose::evaluation::{suggest, Polish};
use presspose::polishnet::{Mode, PolishNetParams};
use presspose::pressure::{
    colorize, load_sequence, median_filter_3d, trim_transitions, PressureFrame, PressureSequence, FRAME_LEN,
};
use presspose::raster::ColorImage;
use presspose::skeleton::{PartName, NUM_PARTS};
use presspose::targets::DEFAULT_PEAK_THRESHOLD;
use presspose::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Validation = 4,
    Config = 5,
    Shape = 6,
    WeightSchema = 7,
    Numerical = 8,
    Io = 9,
    UnknownColormap = 10,
    EmptySequence = 11,
    Internal = 12,
}

/// A loaded pressure recording.
pub struct PpSequence(PressureSequence);

/// A PolishNet with its weights.
pub struct PpPolishNet(PolishNetParams);

/// A frozen pose module.
pub struct PpAdapter(MultiStageNet);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> PpStatus {
    match e {
        Error::Parse(_) | Error::Json(_) => PpStatus::Parse,
        Error::EmptySequence => PpStatus::EmptySequence,
        Error::UnknownColormap(_) => PpStatus::UnknownColormap,
        Error::Validation(_) | Error::NoSeedAnnotation { .. } | Error::SequenceTooShort { .. } => PpStatus::Validation,
        Error::Config(_) | Error::ReferenceUnavailable(_) => PpStatus::Config,
        Error::Shape(_) => PpStatus::Shape,
        Error::WeightSchema(_) => PpStatus::WeightSchema,
        Error::Numerical(_) | Error::TrainingDiverged { .. } => PpStatus::Numerical,
        Error::Io { .. } => PpStatus::Io,
    }
}

enum Fail {
    Status(PpStatus, String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn invalid(msg: impl Into<String>) -> Fail {
    Fail::Status(PpStatus::InvalidArgument, msg.into())
}

fn null(what: &str) -> Fail {
    Fail::Status(PpStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(String::new());
            PpStatus::Ok
        }
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            PpStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(format!("{what} is not UTF-8")))
}

unsafe fn slice_arg<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn slice_out<'a, T>(p: *mut T, len: usize, what: &str) -> Result<&'a mut [T], Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts_mut(p, len))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// Copies the calling thread's last error message into `buf` as a
/// NUL-terminated string, truncating to `len - 1` bytes. Returns the full
/// message length in bytes, excluding the terminator.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn pp_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            std::ptr::copy_nonoverlapping(msg.as_ptr(), buf.cast::<u8>(), n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

#[no_mangle]
pub extern "C" fn pp_num_parts() -> usize {
    NUM_PARTS
}

/// Static NUL-terminated name of part `index`, or null when out of range.
#[no_mangle]
pub extern "C" fn pp_part_name(index: usize) -> *const c_char {
    const NAMES: [&CStr; NUM_PARTS] = [
        c"head",
        c"neck",
        c"r_shoulder",
        c"r_elbow",
        c"r_wrist",
        c"l_shoulder",
        c"l_elbow",
        c"l_wrist",
        c"r_hip",
        c"r_knee",
        c"r_ankle",
        c"l_hip",
        c"l_knee",
        c"l_ankle",
    ];
    NAMES.get(index).map_or(std::ptr::null(), |n| n.as_ptr())
}

/// Values per frame (32 x 64, row-major).
#[no_mangle]
pub extern "C" fn pp_frame_len() -> usize {
    FRAME_LEN
}

/// Loads a recording and its JSON sidecar.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pp_sequence_load(path: *const c_char, out: *mut *mut PpSequence) -> PpStatus {
    guard(|| {
        let path = PathBuf::from(str_arg(path, "path")?);
        put(out, PpSequence(load_sequence(&path)?))
    })
}

/// Median-filters `seq` and drops `trim` frames from each end into a new handle.
///
/// # Safety
/// `seq` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pp_sequence_clean(seq: *const PpSequence, trim: usize, out: *mut *mut PpSequence) -> PpStatus {
    guard(|| {
        let seq = handle(seq, "seq")?;
        put(out, PpSequence(trim_transitions(&median_filter_3d(&seq.0), trim)?))
    })
}

/// Frame count; 0 for a null handle.
///
/// # Safety
/// `seq` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pp_sequence_len(seq: *const PpSequence) -> usize {
    seq.as_ref().map_or(0, |s| s.0.len())
}

/// # Safety
/// `seq` must be a live handle; the out pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pp_sequence_meta(
    seq: *const PpSequence,
    subject_id: *mut u32,
    posture_id: *mut u32,
) -> PpStatus {
    guard(|| {
        let meta = handle(seq, "seq")?.0.meta();
        *slice_out(subject_id, 1, "subject_id")?.first_mut().expect("len 1") = meta.subject_id;
        *slice_out(posture_id, 1, "posture_id")?.first_mut().expect("len 1") = meta.posture_id;
        Ok(())
    })
}

/// Copies frame `index` (by position) into `out`, which holds `len` values;
/// `len` must equal [`pp_frame_len`]. Writes the frame's timestamp index to
/// `timestamp` when it is not null.
///
/// # Safety
/// `seq` must be a live handle; `out` must be valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn pp_sequence_frame(
    seq: *const PpSequence,
    index: usize,
    out: *mut f64,
    len: usize,
    timestamp: *mut u32,
) -> PpStatus {
    guard(|| {
        let seq = handle(seq, "seq")?;
        let frame = seq
            .0
            .frames()
            .get(index)
            .ok_or_else(|| invalid(format!("frame {index} out of range")))?;
        if len != FRAME_LEN {
            return Err(invalid(format!("out holds {len} values, need {FRAME_LEN}")));
        }
        slice_out(out, len, "out")?.copy_from_slice(frame.values());
        if !timestamp.is_null() {
            *timestamp = frame.timestamp_index();
        }
        Ok(())
    })
}

/// # Safety
/// `seq` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pp_sequence_free(seq: *mut PpSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// Colorizes one frame of [`pp_frame_len`] mmHg values with the named map at
/// `width x height`, writing `3 * width * height` planar values to `out`.
///
/// # Safety
/// `values` must hold `len` readable values, `colormap` must be a
/// NUL-terminated string and `out` must be valid for `out_len` writes.
#[no_mangle]
pub unsafe extern "C" fn pp_colorize(
    values: *const f64,
    len: usize,
    colormap: *const c_char,
    width: usize,
    height: usize,
    out: *mut f64,
    out_len: usize,
) -> PpStatus {
    guard(|| {
        if len != FRAME_LEN {
            return Err(invalid(format!("values holds {len} entries, need {FRAME_LEN}")));
        }
        let values = slice_arg(values, len, "values")?;
        let map = colormap_by_name(str_arg(colormap, "colormap")?)?;
        if width == 0 || height == 0 || out_len != 3 * width * height {
            return Err(invalid(format!(
                "out holds {out_len} values, need 3 x {width} x {height}"
            )));
        }
        let frame = PressureFrame::new(values.to_vec(), 0)?;
        slice_out(out, out_len, "out")?.copy_from_slice(colorize(&frame, &map, (width, height)).data());
        Ok(())
    })
}

/// Loads a PolishNet checkpoint.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pp_polishnet_load(path: *const c_char, out: *mut *mut PpPolishNet) -> PpStatus {
    guard(|| {
        let path = PathBuf::from(str_arg(path, "path")?);
        put(out, PpPolishNet(load_polishnet(&path)?))
    })
}

/// (width, height) the network accepts.
///
/// # Safety
/// `net` must be a live handle; the out pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pp_polishnet_working_size(
    net: *const PpPolishNet,
    width: *mut usize,
    height: *mut usize,
) -> PpStatus {
    guard(|| {
        let (w, h) = handle(net, "net")?.0.config().working_size;
        *slice_out(width, 1, "width")?.first_mut().expect("len 1") = w;
        *slice_out(height, 1, "height")?.first_mut().expect("len 1") = h;
        Ok(())
    })
}

/// Inference-mode forward pass of one planar image of the working size.
///
/// # Safety
/// `net` must be a live handle; `input` must hold `len` values and `out`
/// be valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn pp_polishnet_forward(
    net: *const PpPolishNet,
    input: *const f64,
    out: *mut f64,
    len: usize,
) -> PpStatus {
    guard(|| {
        let net = &handle(net, "net")?.0;
        let (w, h) = net.config().working_size;
        if len != 3 * w * h {
            return Err(invalid(format!("image holds {len} values, need 3 x {w} x {h}")));
        }
        let image = ColorImage::new(w, h, slice_arg(input, len, "input")?.to_vec())?;
        slice_out(out, len, "out")?.copy_from_slice(net.forward(&image, Mode::Eval)?.data());
        Ok(())
    })
}

/// # Safety
/// `net` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pp_polishnet_free(net: *mut PpPolishNet) {
    if !net.is_null() {
        drop(Box::from_raw(net));
    }
}

/// Builds the deterministic mock pose module for `seed`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pp_adapter_mock(seed: u64, out: *mut *mut PpAdapter) -> PpStatus {
    guard(|| put(out, PpAdapter(load_adapter(&AdapterKind::Mock { seed })?)))
}

/// Loads a pose-module weights file.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pp_adapter_load(path: *const c_char, out: *mut *mut PpAdapter) -> PpStatus {
    guard(|| {
        let path = PathBuf::from(str_arg(path, "path")?);
        put(out, PpAdapter(load_adapter(&AdapterKind::WeightsFile(path))?))
    })
}

/// Decodes keypoints from one planar `width x height` image, optionally
/// polished by `polish` first (may be null). Writes 14 `(x, y)` pairs to
/// `xy`, 14 visibility flags to `visible` and 14 peak values to
/// `confidence`, all in part order.
///
/// # Safety
/// `adapter` must be a live handle and `polish` null or a live handle;
/// `image` must hold `3 * width * height` values; `xy` must be valid for 28
/// writes, `visible` and `confidence` for 14 each.
#[no_mangle]
pub unsafe extern "C" fn pp_adapter_keypoints(
    adapter: *const PpAdapter,
    polish: *const PpPolishNet,
    image: *const f64,
    width: usize,
    height: usize,
    xy: *mut f64,
    visible: *mut u8,
    confidence: *mut f64,
) -> PpStatus {
    guard(|| {
        let adapter = &handle(adapter, "adapter")?.0;
        let polish = polish.as_ref().map(|p| &p.0 as &dyn Polish);
        let image = ColorImage::new(width, height, slice_arg(image, 3 * width * height, "image")?.to_vec())?;
        let s = suggest(polish, adapter, &image, FrameRef::new(0, 0, 0), DEFAULT_PEAK_THRESHOLD)?;
        let xy = slice_out(xy, 2 * NUM_PARTS, "xy")?;
        let visible = slice_out(visible, NUM_PARTS, "visible")?;
        let confidence = slice_out(confidence, NUM_PARTS, "confidence")?;
        for part in PartName::ALL {
            let (i, k) = (part.index(), s.keypoints.get(part));
            xy[2 * i] = k.x;
            xy[2 * i + 1] = k.y;
            visible[i] = u8::from(k.visible);
            confidence[i] = s.confidence[i];
        }
        Ok(())
    })
}

/// # Safety
/// `adapter` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pp_adapter_free(adapter: *mut PpAdapter) {
    if !adapter.is_null() {
        drop(Box::from_raw(adapter));
    }
}
