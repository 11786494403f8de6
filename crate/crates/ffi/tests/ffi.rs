use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;

use presspose::adapter::{load_adapter, AdapterKind};
use presspose::checkpoint::{save_polishnet, DType};
use presspose::colormap::colormap_by_name;
use presspose::evaluation::suggest;
use presspose::polishnet::{init_params, Mode, PolishNetConfig};
use presspose::pressure::{colorize, median_filter_3d, save_sequence, trim_transitions, SequenceFormat};
use presspose::skeleton::PartName;
use presspose::synthetic::{synth_sequence, SyntheticConfig};
use presspose::targets::DEFAULT_PEAK_THRESHOLD;
use presspose_ffi::*;

fn last_error() -> String {
    let mut buf = vec![0 as std::ffi::c_char; 512];
    unsafe {
        pp_last_error_message(buf.as_mut_ptr(), buf.len());
        CStr::from_ptr(buf.as_ptr()).to_string_lossy().into_owned()
    }
}

fn cstr(p: &Path) -> CString {
    CString::new(p.to_str().unwrap()).unwrap()
}

fn write_sequence(dir: &Path) -> (PathBuf, presspose::pressure::PressureSequence) {
    let cfg = SyntheticConfig {
        frames_per_sequence: 9,
        ..SyntheticConfig::default()
    };
    let seq = synth_sequence(2, 3, &cfg, (32, 64), 5).unwrap().sequence;
    let path = dir.join("s02_p03.pmat");
    save_sequence(&seq, &path, SequenceFormat::Binary).unwrap();
    (path, seq)
}

#[test]
fn part_names_match_the_library() {
    assert_eq!(pp_num_parts(), 14);
    for part in PartName::ALL {
        let name = unsafe { CStr::from_ptr(pp_part_name(part.index())) };
        assert_eq!(name.to_str().unwrap(), part.as_str());
    }
    assert!(pp_part_name(14).is_null());
    assert_eq!(pp_frame_len(), 2048);
}

#[test]
fn null_and_bad_arguments_report_status_and_message() {
    let mut seq: *mut PpSequence = std::ptr::null_mut();
    let st = unsafe { pp_sequence_load(std::ptr::null(), &mut seq) };
    assert_eq!(st, PpStatus::NullPointer);
    assert!(last_error().contains("path"));
    assert!(seq.is_null());

    let missing = CString::new("/nonexistent/recording.txt").unwrap();
    assert_eq!(unsafe { pp_sequence_load(missing.as_ptr(), &mut seq) }, PpStatus::Io);

    let values = vec![10.0; 2048];
    let mut out = vec![0.0; 3 * 32 * 64];
    let bogus = CString::new("no-such-map").unwrap();
    let st = unsafe {
        pp_colorize(
            values.as_ptr(),
            values.len(),
            bogus.as_ptr(),
            32,
            64,
            out.as_mut_ptr(),
            out.len(),
        )
    };
    assert_eq!(st, PpStatus::UnknownColormap);
    assert!(last_error().contains("no-such-map"));

    let viridis = CString::new("viridis").unwrap();
    let st = unsafe {
        pp_colorize(
            values.as_ptr(),
            values.len(),
            viridis.as_ptr(),
            32,
            64,
            out.as_mut_ptr(),
            10,
        )
    };
    assert_eq!(st, PpStatus::InvalidArgument);
    let st = unsafe {
        pp_colorize(
            values.as_ptr(),
            7,
            viridis.as_ptr(),
            32,
            64,
            out.as_mut_ptr(),
            out.len(),
        )
    };
    assert_eq!(st, PpStatus::InvalidArgument);

    // a success clears the message
    let st = unsafe {
        pp_colorize(
            values.as_ptr(),
            values.len(),
            viridis.as_ptr(),
            32,
            64,
            out.as_mut_ptr(),
            out.len(),
        )
    };
    assert_eq!(st, PpStatus::Ok);
    assert_eq!(last_error(), "");
}

#[test]
fn sequences_load_clean_and_expose_frames() {
    let dir = tempfile::tempdir().unwrap();
    let (path, _) = write_sequence(dir.path());
    let lib_seq = presspose::pressure::load_sequence(&path).unwrap();
    let p = cstr(&path);
    let mut seq: *mut PpSequence = std::ptr::null_mut();
    assert_eq!(unsafe { pp_sequence_load(p.as_ptr(), &mut seq) }, PpStatus::Ok);
    assert_eq!(unsafe { pp_sequence_len(seq) }, 9);
    let (mut s, mut q) = (0u32, 0u32);
    assert_eq!(unsafe { pp_sequence_meta(seq, &mut s, &mut q) }, PpStatus::Ok);
    assert_eq!((s, q), (2, 3));

    let mut cleaned: *mut PpSequence = std::ptr::null_mut();
    assert_eq!(unsafe { pp_sequence_clean(seq, 3, &mut cleaned) }, PpStatus::Ok);
    let expected = trim_transitions(&median_filter_3d(&lib_seq), 3).unwrap();
    assert_eq!(unsafe { pp_sequence_len(cleaned) }, expected.len());
    let mut buf = vec![0.0; 2048];
    let mut ts = 0u32;
    for (i, f) in expected.frames().iter().enumerate() {
        assert_eq!(
            unsafe { pp_sequence_frame(cleaned, i, buf.as_mut_ptr(), buf.len(), &mut ts) },
            PpStatus::Ok
        );
        assert_eq!(buf.as_slice(), f.values());
        assert_eq!(ts, f.timestamp_index());
    }
    let st = unsafe { pp_sequence_frame(cleaned, 99, buf.as_mut_ptr(), buf.len(), std::ptr::null_mut()) };
    assert_eq!(st, PpStatus::InvalidArgument);

    let mut too_short: *mut PpSequence = std::ptr::null_mut();
    assert_eq!(
        unsafe { pp_sequence_clean(seq, 5, &mut too_short) },
        PpStatus::Validation
    );
    unsafe {
        pp_sequence_free(cleaned);
        pp_sequence_free(seq);
        pp_sequence_free(std::ptr::null_mut());
    }
    assert_eq!(unsafe { pp_sequence_len(std::ptr::null()) }, 0);
}

#[test]
fn colorize_polish_and_keypoints_match_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let (_, seq) = write_sequence(dir.path());
    let frame = &seq.frames()[0];
    let map = colormap_by_name("viridis").unwrap();
    let lib_image = colorize(frame, &map, (32, 64));

    let name = CString::new("viridis").unwrap();
    let mut image = vec![0.0; 3 * 32 * 64];
    let st = unsafe {
        pp_colorize(
            frame.values().as_ptr(),
            2048,
            name.as_ptr(),
            32,
            64,
            image.as_mut_ptr(),
            image.len(),
        )
    };
    assert_eq!(st, PpStatus::Ok);
    assert_eq!(image.as_slice(), lib_image.data());

    let cfg = PolishNetConfig {
        channel_widths: vec![2, 3, 4],
        working_size: (32, 64),
        ..PolishNetConfig::default()
    };
    let params = init_params(&cfg, 3).unwrap();
    let ckpt = dir.path().join("net.ppck");
    save_polishnet(&params, &ckpt, DType::F64).unwrap();
    let mut net: *mut PpPolishNet = std::ptr::null_mut();
    assert_eq!(
        unsafe { pp_polishnet_load(cstr(&ckpt).as_ptr(), &mut net) },
        PpStatus::Ok
    );
    let (mut w, mut h) = (0usize, 0usize);
    assert_eq!(unsafe { pp_polishnet_working_size(net, &mut w, &mut h) }, PpStatus::Ok);
    assert_eq!((w, h), (32, 64));
    let mut polished = vec![0.0; image.len()];
    let st = unsafe { pp_polishnet_forward(net, image.as_ptr(), polished.as_mut_ptr(), image.len()) };
    assert_eq!(st, PpStatus::Ok);
    assert_eq!(
        polished.as_slice(),
        params.forward(&lib_image, Mode::Eval).unwrap().data()
    );

    let mut adapter: *mut PpAdapter = std::ptr::null_mut();
    assert_eq!(unsafe { pp_adapter_mock(4, &mut adapter) }, PpStatus::Ok);
    let lib_adapter = load_adapter(&AdapterKind::Mock { seed: 4 }).unwrap();
    for polish in [std::ptr::null(), net as *const PpPolishNet] {
        let (mut xy, mut vis, mut conf) = ([0.0; 28], [0u8; 14], [0.0; 14]);
        let st = unsafe {
            pp_adapter_keypoints(
                adapter,
                polish,
                image.as_ptr(),
                32,
                64,
                xy.as_mut_ptr(),
                vis.as_mut_ptr(),
                conf.as_mut_ptr(),
            )
        };
        assert_eq!(st, PpStatus::Ok);
        let lib_polish = (!polish.is_null()).then_some(&params as &dyn presspose::evaluation::Polish);
        let s = suggest(
            lib_polish,
            &lib_adapter,
            &lib_image,
            presspose::annotation::FrameRef::new(0, 0, 0),
            DEFAULT_PEAK_THRESHOLD,
        )
        .unwrap();
        for part in PartName::ALL {
            let i = part.index();
            let k = s.keypoints.get(part);
            assert_eq!((xy[2 * i], xy[2 * i + 1]), (k.x, k.y));
            assert_eq!(vis[i] == 1, k.visible);
            assert_eq!(conf[i], s.confidence[i]);
        }
    }
    unsafe {
        pp_adapter_free(adapter);
        pp_polishnet_free(net);
    }
}

#[test]
fn weights_file_adapter_loads_through_the_abi() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("adapter.ppck");
    load_adapter(&AdapterKind::Mock { seed: 9 })
        .unwrap()
        .save(&path, DType::F64)
        .unwrap();
    let mut adapter: *mut PpAdapter = std::ptr::null_mut();
    assert_eq!(
        unsafe { pp_adapter_load(cstr(&path).as_ptr(), &mut adapter) },
        PpStatus::Ok
    );
    unsafe { pp_adapter_free(adapter) };

    std::fs::write(&path, b"not a checkpoint").unwrap();
    assert_eq!(
        unsafe { pp_adapter_load(cstr(&path).as_ptr(), &mut adapter) },
        PpStatus::WeightSchema
    );
}

fn header_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include")
}

fn have_cc() -> bool {
    Command::new("cc")
        .arg("--version")
        .output()
        .is_ok_and(|o| o.status.success())
}

#[test]
fn header_declares_every_export_and_parses_as_c() {
    let text = std::fs::read_to_string(header_dir().join("presspose.h")).unwrap();
    for f in [
        "pp_last_error_message",
        "pp_num_parts",
        "pp_part_name",
        "pp_frame_len",
        "pp_sequence_load",
        "pp_sequence_clean",
        "pp_sequence_len",
        "pp_sequence_meta",
        "pp_sequence_frame",
        "pp_sequence_free",
        "pp_colorize",
        "pp_polishnet_load",
        "pp_polishnet_working_size",
        "pp_polishnet_forward",
        "pp_polishnet_free",
        "pp_adapter_mock",
        "pp_adapter_load",
        "pp_adapter_keypoints",
        "pp_adapter_free",
    ] {
        assert!(text.contains(&format!("{f}(")), "{f} missing from header");
    }
    assert!(text.contains("typedef struct PpSequence PpSequence;"));
    if !have_cc() {
        eprintln!("cc not found; skipping C syntax check");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("check.c");
    std::fs::write(
        &src,
        "#include \"presspose.h\"\nint main(void) { return pp_num_parts() == 14 ? 0 : 1; }\n",
    )
    .unwrap();
    let out = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(header_dir())
        .arg(&src)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

/// Directory holding the cdylib built alongside this test binary.
fn cdylib_dir() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let deps = exe.parent()?.to_path_buf();
    let up = deps.parent()?.to_path_buf();
    [deps, up].into_iter().find(|d| d.join("libpresspose_ffi.so").is_file())
}

#[test]
fn c_program_links_and_runs_against_the_shared_library() {
    let Some(lib) = cdylib_dir() else {
        eprintln!("shared library not found next to the test binary; skipping");
        return;
    };
    if !have_cc() {
        eprintln!("cc not found; skipping");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include <string.h>
#include "presspose.h"
int main(void) {
    PpAdapter *a = NULL;
    if (pp_adapter_mock(1, &a) != PP_STATUS_OK) return 1;
    double img[3 * 32 * 64];
    for (size_t i = 0; i < sizeof img / sizeof img[0]; i++) img[i] = (i % 7) / 7.0;
    double xy[28], conf[14];
    uint8_t vis[14];
    if (pp_adapter_keypoints(a, NULL, img, 32, 64, xy, vis, conf) != PP_STATUS_OK) return 2;
    pp_adapter_free(a);
    if (pp_sequence_load(NULL, NULL) != PP_STATUS_NULL_POINTER) return 3;
    char msg[64];
    pp_last_error_message(msg, sizeof msg);
    if (strstr(msg, "null") == NULL) return 4;
    printf("%s %.3f\n", pp_part_name(0), xy[0]);
    return 0;
}
"#,
    )
    .unwrap();
    let bin = dir.path().join("main");
    let out = Command::new("cc")
        .arg("-std=c99")
        .arg("-I")
        .arg(header_dir())
        .arg(&src)
        .arg("-L")
        .arg(&lib)
        .arg("-lpresspose_ffi")
        .arg("-o")
        .arg(&bin)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let run = Command::new(&bin).env("LD_LIBRARY_PATH", &lib).output().unwrap();
    assert!(
        run.status.success(),
        "exit {:?}: {}",
        run.status.code(),
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("head "));
}
