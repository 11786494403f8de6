#ifndef PRESSPOSE_H
#define PRESSPOSE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum PpStatus {
  PP_STATUS_OK = 0,
  PP_STATUS_NULL_POINTER = 1,
  PP_STATUS_INVALID_ARGUMENT = 2,
  PP_STATUS_PARSE = 3,
  PP_STATUS_VALIDATION = 4,
  PP_STATUS_CONFIG = 5,
  PP_STATUS_SHAPE = 6,
  PP_STATUS_WEIGHT_SCHEMA = 7,
  PP_STATUS_NUMERICAL = 8,
  PP_STATUS_IO = 9,
  PP_STATUS_UNKNOWN_COLORMAP = 10,
  PP_STATUS_EMPTY_SEQUENCE = 11,
  PP_STATUS_INTERNAL = 12,
} PpStatus;

// A frozen pose module.
typedef struct PpAdapter PpAdapter;

// A PolishNet with its weights.
typedef struct PpPolishNet PpPolishNet;

// A loaded pressure recording.
typedef struct PpSequence PpSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copies the calling thread's last error message into `buf` as a
// NUL-terminated string, truncating to `len - 1` bytes. Returns the full
// message length in bytes, excluding the terminator.
//
// # Safety
// `buf` must be null or valid for `len` bytes.
size_t pp_last_error_message(char *buf, size_t len);

size_t pp_num_parts(void);

// Static NUL-terminated name of part `index`, or null when out of range.
const char *pp_part_name(size_t index);

// Values per frame (32 x 64, row-major).
size_t pp_frame_len(void);

// Loads a recording and its JSON sidecar.
//
// # Safety
// `path` must be a NUL-terminated string; `out` must be valid for writes.
enum PpStatus pp_sequence_load(const char *path, struct PpSequence **out);

// Median-filters `seq` and drops `trim` frames from each end into a new handle.
//
// # Safety
// `seq` must be a live handle; `out` must be valid for writes.
enum PpStatus pp_sequence_clean(const struct PpSequence *seq, size_t trim, struct PpSequence **out);

// Frame count; 0 for a null handle.
//
// # Safety
// `seq` must be null or a live handle.
size_t pp_sequence_len(const struct PpSequence *seq);

// # Safety
// `seq` must be a live handle; the out pointers must be valid for writes.
enum PpStatus pp_sequence_meta(const struct PpSequence *seq,
                               uint32_t *subject_id,
                               uint32_t *posture_id);

// Copies frame `index` (by position) into `out`, which holds `len` values;
// `len` must equal [`pp_frame_len`]. Writes the frame's timestamp index to
// `timestamp` when it is not null.
//
// # Safety
// `seq` must be a live handle; `out` must be valid for `len` writes.
enum PpStatus pp_sequence_frame(const struct PpSequence *seq,
                                size_t index,
                                double *out,
                                size_t len,
                                uint32_t *timestamp);

// # Safety
// `seq` must be null or a handle not yet freed.
void pp_sequence_free(struct PpSequence *seq);

// Colorizes one frame of [`pp_frame_len`] mmHg values with the named map at
// `width x height`, writing `3 * width * height` planar values to `out`.
//
// # Safety
// `values` must hold `len` readable values, `colormap` must be a
// NUL-terminated string and `out` must be valid for `out_len` writes.
enum PpStatus pp_colorize(const double *values,
                          size_t len,
                          const char *colormap,
                          size_t width,
                          size_t height,
                          double *out,
                          size_t out_len);

// Loads a PolishNet checkpoint.
//
// # Safety
// `path` must be a NUL-terminated string; `out` must be valid for writes.
enum PpStatus pp_polishnet_load(const char *path, struct PpPolishNet **out);

// (width, height) the network accepts.
//
// # Safety
// `net` must be a live handle; the out pointers must be valid for writes.
enum PpStatus pp_polishnet_working_size(const struct PpPolishNet *net,
                                        size_t *width,
                                        size_t *height);

// Inference-mode forward pass of one planar image of the working size.
//
// # Safety
// `net` must be a live handle; `input` must hold `len` values and `out`
// be valid for `len` writes.
enum PpStatus pp_polishnet_forward(const struct PpPolishNet *net,
                                   const double *input,
                                   double *out,
                                   size_t len);

// # Safety
// `net` must be null or a handle not yet freed.
void pp_polishnet_free(struct PpPolishNet *net);

// Builds the deterministic mock pose module for `seed`.
//
// # Safety
// `out` must be valid for writes.
enum PpStatus pp_adapter_mock(uint64_t seed, struct PpAdapter **out);

// Loads a pose-module weights file.
//
// # Safety
// `path` must be a NUL-terminated string; `out` must be valid for writes.
enum PpStatus pp_adapter_load(const char *path, struct PpAdapter **out);

// Decodes keypoints from one planar `width x height` image, optionally
// polished by `polish` first (may be null). Writes 14 `(x, y)` pairs to
// `xy`, 14 visibility flags to `visible` and 14 peak values to
// `confidence`, all in part order.
//
// # Safety
// `adapter` must be a live handle and `polish` null or a live handle;
// `image` must hold `3 * width * height` values; `xy` must be valid for 28
// writes, `visible` and `confidence` for 14 each.
enum PpStatus pp_adapter_keypoints(const struct PpAdapter *adapter,
                                   const struct PpPolishNet *polish,
                                   const double *image,
                                   size_t width,
                                   size_t height,
                                   double *xy,
                                   uint8_t *visible,
                                   double *confidence);

// # Safety
// `adapter` must be null or a handle not yet freed.
void pp_adapter_free(struct PpAdapter *adapter);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PRESSPOSE_H */
