/*
 * modlap -- modular Laplacian dynamics on 2D square lattices.
 *
 * C interface to the simulation and analysis core. All heap objects are
 * opaque handles released with their matching *_free function; every fallible
 * call returns a modlap_status, with modlap_last_error() describing the most
 * recent failure on the calling thread. Lattice coordinates are absolute:
 * (0,0) is the seed anchor cell, x grows rightward and y downward.
 */

#ifndef MODLAP_H
#define MODLAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MODLAP_API __declspec(dllexport)
#else
#define MODLAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum modlap_status {
    MODLAP_OK = 0,
    MODLAP_ERR_INVALID = 1,    /* bad argument or violated precondition */
    MODLAP_ERR_PARSE = 2,      /* malformed pattern, spec string or file */
    MODLAP_ERR_IO = 3,         /* file system failure */
    MODLAP_ERR_RANGE = 4,      /* index out of range (e.g. explicit schedule) */
    MODLAP_ERR_DEGENERATE = 5  /* result undefined for this input */
} modlap_status;

typedef struct modlap_grid modlap_grid;
typedef struct modlap_stencil modlap_stencil;
typedef struct modlap_schedule modlap_schedule;
typedef struct modlap_sim modlap_sim;
typedef struct modlap_copy_report modlap_copy_report;

MODLAP_API const char* modlap_version(void);

/* Message for the last failing call on this thread; empty string if none. */
MODLAP_API const char* modlap_last_error(void);

/* Frees buffers handed out by the *_alloc style calls below. */
MODLAP_API void modlap_buffer_free(void* buffer);
MODLAP_API void modlap_string_free(char* text);

/* ---------------- grids ---------------- */

/* Builds an iteration-0 seed from digit rows separated by '/': "101/010/101". */
MODLAP_API modlap_status modlap_grid_from_pattern(const char* pattern, modlap_grid** out);
MODLAP_API modlap_grid* modlap_grid_clone(const modlap_grid* grid);
MODLAP_API void modlap_grid_free(modlap_grid* grid);

MODLAP_API int64_t modlap_grid_width(const modlap_grid* grid);
MODLAP_API int64_t modlap_grid_height(const modlap_grid* grid);
MODLAP_API int64_t modlap_grid_iteration(const modlap_grid* grid);
MODLAP_API int32_t modlap_grid_max_state(const modlap_grid* grid);
MODLAP_API int64_t modlap_grid_occupied(const modlap_grid* grid);

/* Lattice extent of the backing array (zero margins included). */
MODLAP_API void modlap_grid_bounds(const modlap_grid* grid, int64_t* min_x, int64_t* min_y,
                                   int64_t* max_x, int64_t* max_y);

/* Cell state at a lattice coordinate; 0 outside the stored array. */
MODLAP_API int32_t modlap_grid_cell(const modlap_grid* grid, int64_t x, int64_t y);

/* Tight bounding box of nonzero cells. Returns 1 and fills the corners, or
 * returns 0 for an all-zero grid. */
MODLAP_API int modlap_grid_support(const modlap_grid* grid, int64_t* min_x, int64_t* min_y,
                                   int64_t* max_x, int64_t* max_y);

/* ---------------- snapshots and rendering ---------------- */

MODLAP_API modlap_status modlap_grid_write_snapshot(const modlap_grid* grid, const char* path);
MODLAP_API modlap_status modlap_grid_read_snapshot(const char* path, modlap_grid** out);

/* format is "ascii", "pgm" or "ppm"; scale >= 1 scales cells to pixel blocks. */
MODLAP_API modlap_status modlap_grid_render(const modlap_grid* grid, const char* format,
                                            int32_t scale, uint8_t** data, size_t* size);
MODLAP_API modlap_status modlap_grid_render_to_file(const modlap_grid* grid, const char* format,
                                                    int32_t scale, const char* path);

/* ---------------- stencils and schedules ---------------- */

/* name is "von-neumann", "diag" or "moore". */
MODLAP_API modlap_status modlap_stencil_builtin(const char* name, modlap_stencil** out);
/* Odd-sized 0/1 mask rows in a text file, '#' comment lines allowed. */
MODLAP_API modlap_status modlap_stencil_from_file(const char* path, modlap_stencil** out);
MODLAP_API void modlap_stencil_free(modlap_stencil* stencil);
MODLAP_API int64_t modlap_stencil_radius(const modlap_stencil* stencil);
MODLAP_API size_t modlap_stencil_size(const modlap_stencil* stencil);

/* Spec strings: "2222", "2322", ... "2922", "2n22:N", "const:N",
 * "explicit:a,b,c". */
MODLAP_API modlap_status modlap_schedule_parse(const char* spec, modlap_schedule** out);
MODLAP_API void modlap_schedule_free(modlap_schedule* schedule);
/* Modulus applied by the step that produces state i (i >= 1). */
MODLAP_API modlap_status modlap_schedule_modulus_at(const modlap_schedule* schedule, int64_t i,
                                                    int32_t* out);

/* ---------------- evolution ---------------- */

/* Stepper owning the current state; the grid returned by modlap_sim_grid is
 * borrowed and valid until the next step or free. */
MODLAP_API modlap_status modlap_sim_new(const modlap_grid* seed, const modlap_stencil* stencil,
                                        const modlap_schedule* schedule, modlap_sim** out);
MODLAP_API void modlap_sim_free(modlap_sim* sim);
MODLAP_API modlap_status modlap_sim_step(modlap_sim* sim);
MODLAP_API const modlap_grid* modlap_sim_grid(const modlap_sim* sim);
MODLAP_API int64_t modlap_sim_iteration(const modlap_sim* sim);

/* Runs `steps` evolution steps and returns the final state. */
MODLAP_API modlap_status modlap_evolve(const modlap_grid* seed, const modlap_stencil* stencil,
                                       const modlap_schedule* schedule, int64_t steps,
                                       modlap_grid** out);

/* ---------------- spatial analysis ---------------- */

/* frame3_mode != 0 uses the (3 + 2i)^2 reachable-area denominator; otherwise
 * (seed_side + 2 * radius * i)^2. */
MODLAP_API modlap_status modlap_grid_density(const modlap_grid* grid, int frame3_mode,
                                             int32_t seed_side, int32_t radius, double* out);

/* adjacency is 4 or 8. */
MODLAP_API modlap_status modlap_grid_components(const modlap_grid* grid, int adjacency,
                                                int64_t* out);
MODLAP_API modlap_status modlap_grid_connectivity_distance(const modlap_grid* grid, int adjacency,
                                                           int64_t* out);

typedef struct modlap_box_fit {
    int valid;          /* 0 when the figure is too degenerate to fit */
    double slope;       /* box-counting dimension estimate */
    double intercept;
    double r_squared;
} modlap_box_fit;

MODLAP_API modlap_status modlap_grid_box_dimension(const modlap_grid* grid, modlap_box_fit* out);

/* Canonical metrics CSV row for one grid (matches modlap_metrics_csv_header). */
MODLAP_API const char* modlap_metrics_csv_header(void);
MODLAP_API modlap_status modlap_grid_metrics_csv_row(const modlap_grid* grid, int adjacency,
                                                     int frame3_mode, int32_t seed_side,
                                                     int32_t radius, char** row);

/* ---------------- fixed-cell series ---------------- */

MODLAP_API modlap_status modlap_series_mean(const int32_t* values, size_t count, double* out);
MODLAP_API modlap_status modlap_series_variance(const int32_t* values, size_t count, double* out);
/* Shannon entropy in bits over empirical state frequencies. */
MODLAP_API modlap_status modlap_series_entropy(const int32_t* values, size_t count, double* out);

typedef struct modlap_spectrum_summary {
    int64_t dominant_bin;    /* argmax over bins >= 1 */
    double peak_to_median;   /* +inf when the median amplitude is 0 */
    double flatness;         /* geometric over arithmetic mean, in (0, 1] */
} modlap_spectrum_summary;

/* Amplitude spectrum of the mean-removed series (bins 0..count/2); the
 * amplitude buffer is allocated and owned by the caller via modlap_buffer_free.
 * Either output pointer pair may be NULL if only the other is wanted. */
MODLAP_API modlap_status modlap_series_spectrum(const int32_t* values, size_t count,
                                                double** amplitudes, size_t* bins,
                                                modlap_spectrum_summary* summary);

/* Biased lag-0-normalized autocorrelation for lags 0..max_lag
 * (max_lag <= count/2). Fails with MODLAP_ERR_DEGENERATE on constant series. */
MODLAP_API modlap_status modlap_series_autocorrelation(const int32_t* values, size_t count,
                                                       size_t max_lag, double** r,
                                                       size_t* lags);

/* ---------------- structural verification ---------------- */

/* Decomposes a grid into translated copies of the seed pattern. */
MODLAP_API modlap_status modlap_detect_copies(const modlap_grid* grid, const modlap_grid* seed,
                                              modlap_copy_report** out);
MODLAP_API void modlap_copy_report_free(modlap_copy_report* report);
MODLAP_API int modlap_copy_report_matched(const modlap_copy_report* report);
MODLAP_API size_t modlap_copy_report_count(const modlap_copy_report* report);
MODLAP_API modlap_status modlap_copy_report_offset(const modlap_copy_report* report, size_t index,
                                                   int64_t* dx, int64_t* dy);
MODLAP_API int64_t modlap_copy_report_residue(const modlap_copy_report* report);
/* Returns 1 and writes the gap, or 0 when fewer than two copies were found. */
MODLAP_API int modlap_copy_report_gap(const modlap_copy_report* report, int64_t* gap);

typedef struct modlap_sierpinski_checkpoint {
    int32_t k;
    int64_t iteration;       /* 2^(k+1) - 1 */
    int has_dimension;
    double dimension;
    int d4_symmetric;
} modlap_sierpinski_checkpoint;

/* Binary-evolution checkpoints for k = 0..k_max (k_max <= 6); the checkpoint
 * array is released with modlap_buffer_free. */
MODLAP_API modlap_status modlap_sierpinski_report(const modlap_grid* seed,
                                                  const modlap_stencil* stencil, int32_t k_max,
                                                  modlap_sierpinski_checkpoint** checkpoints,
                                                  size_t* count);

/* Exhaustive dissociation check over all 511 nonzero 3x3 binary seeds under
 * the diag neighborhood and constant-2 schedule, to iteration 8*k_max.
 * failures receives the number of failing seeds; report (optional) receives a
 * human-readable summary. threads = 0 picks the hardware default. */
MODLAP_API modlap_status modlap_verify_proposition(int32_t k_max, int32_t threads,
                                                   int32_t* failures, char** report);

/* Block-structure trace of the first four binary iterations of a 3x3 seed;
 * failures receives the number of failing checks. */
MODLAP_API modlap_status modlap_verify_blocks(const modlap_grid* seed, int32_t* failures,
                                                char** report);

/* ---------------- schedule comparison ---------------- */

typedef struct modlap_style_summary {
    double mean;
    double variance;
    double entropy_bits;
    int64_t dominant_bin;
    double peak_to_median;
    double flatness;
    int has_box_dimension;
    double box_dimension;    /* of the final figure */
    int64_t final_iteration;
} modlap_style_summary;

/* Runs one schedule for `steps` iterations and summarizes the series at the
 * given lattice cell plus the final figure. */
MODLAP_API modlap_status modlap_style_report(const modlap_grid* seed,
                                             const modlap_stencil* stencil,
                                             const char* schedule_spec, int64_t steps,
                                             int64_t cell_x, int64_t cell_y,
                                             modlap_style_summary* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MODLAP_H */
