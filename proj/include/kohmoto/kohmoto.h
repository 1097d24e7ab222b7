/*
 * kohmoto.h -- public C interface of the kohmoto spectral toolkit.
 *
 * Copyright 2026 the kohmoto authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * The library computes spectra of periodic Kohmoto Hamiltonians, builds the
 * spectral tree of a continued fraction, assigns every spectral gap its
 * integer index, verifies the index conservation laws, and renders the
 * colored Kohmoto butterfly.
 *
 * Conventions:
 *   - Every function returns a kohmoto_status; outputs go through pointers.
 *   - On failure, kohmoto_last_error() returns a thread-local message
 *     describing the most recent failing call on this thread.
 *   - Objects returned through kohmoto_*_create/build are opaque and must be
 *     released with the matching *_free.
 *   - Strings returned through `char **` are heap-allocated and must be
 *     released with kohmoto_string_free.
 *   - Digit sequences are comma-separated ("0,3,2,1,2"); rationals are "p/q"
 *     in lowest terms.
 */

#ifndef KOHMOTO_H
#define KOHMOTO_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kohmoto_status {
  KOHMOTO_OK = 0,
  KOHMOTO_ERROR_INVALID_ARGUMENT = 1, /* a precondition on the input failed   */
  KOHMOTO_ERROR_COMPUTE = 2,          /* numerical or resource failure        */
  KOHMOTO_ERROR_OVERFLOW = 3,         /* exact arithmetic exceeded 128 bits   */
  KOHMOTO_ERROR_INTERNAL = 4
} kohmoto_status;

/* Thread-local message for the last failing call on this thread; never NULL. */
const char* kohmoto_last_error(void);

void kohmoto_string_free(char* s);

/* ---- continued fractions and exact arithmetic -------------------------- */

/* Canonical continued-fraction digits of a rational in [0, 1). */
kohmoto_status kohmoto_cf_expand(const char* rational, char** digits_out);

/* Convergent p_k/q_k of a digit sequence. */
kohmoto_status kohmoto_convergent(const char* digits, int32_t level, int64_t* p_out,
                                  int64_t* q_out);

/* Centered modulo: the representative of x (mod q) in [-q/2, q/2). */
kohmoto_status kohmoto_centered_mod(int64_t x, int64_t q, int64_t* out);

/* The unique index c in [-q/2, q/2) with c*p = n (mod q); 1 <= n <= q-1. */
kohmoto_status kohmoto_solve_diophantine(int64_t n, int64_t p, int64_t q, int64_t* out);

/* ---- spectral tree ------------------------------------------------------ */

typedef struct kohmoto_tree kohmoto_tree;

/* Builds the spectral tree of `digits` down to `depth` (needs depth+1
 * digits). Pass "1s" as digits for the all-ones golden-mean sequence. */
kohmoto_status kohmoto_tree_build(const char* digits, int32_t depth, kohmoto_tree** out);
void kohmoto_tree_free(kohmoto_tree* tree);

int32_t kohmoto_tree_depth(const kohmoto_tree* tree);
kohmoto_status kohmoto_tree_level_size(const kohmoto_tree* tree, int32_t level,
                                       int64_t* size_out);
/* Label of a vertex: 'A', 'B' (bands) or 'G' (gap). */
kohmoto_status kohmoto_tree_label(const kohmoto_tree* tree, int32_t level, int64_t position,
                                  char* label_out);
/* Gap index of a G-vertex: raw representative in [0, q_k) and centered value. */
kohmoto_status kohmoto_tree_gap_index(const kohmoto_tree* tree, int32_t level,
                                      int64_t position, int64_t* raw_out, int64_t* value_out);
/* Tree as a JSON document; annotate != 0 adds per-gap index records.
 * `config` is an optional block of key=value lines echoed into the output
 * (may be NULL). */
kohmoto_status kohmoto_tree_to_json(const kohmoto_tree* tree, int32_t annotate,
                                    const char* config, char** json_out);

/* ---- spectra ------------------------------------------------------------ */

typedef struct kohmoto_spectrum kohmoto_spectrum;

/* Spectrum of the q-periodic Hamiltonian at frequency alpha = "p/q" in (0,1)
 * and coupling lambda: q bands, q+1 gaps (two unbounded), every bounded gap
 * annotated with its index. */
kohmoto_status kohmoto_spectrum_compute(const char* alpha, double lambda,
                                        kohmoto_spectrum** out);
void kohmoto_spectrum_free(kohmoto_spectrum* spectrum);

int64_t kohmoto_spectrum_band_count(const kohmoto_spectrum* spectrum);
kohmoto_status kohmoto_spectrum_band(const kohmoto_spectrum* spectrum, int64_t ordinal,
                                     double* lo_out, double* hi_out);
/* Bounded gap n in 1..q-1; lo/hi are the gap edges, index its integer index. */
kohmoto_status kohmoto_spectrum_gap(const kohmoto_spectrum* spectrum, int64_t number,
                                    double* lo_out, double* hi_out, int64_t* index_out);
kohmoto_status kohmoto_spectrum_to_json(const kohmoto_spectrum* spectrum, const char* config,
                                        char** json_out);

/* ---- verification ------------------------------------------------------- */

typedef struct kohmoto_verify_options {
  const char* suite;  /* recursion|conservation|range|oracle|nesting|convergence|all */
  const char* digits; /* explicit digit sequence, or NULL to fuzz */
  int32_t depth;
  int32_t fuzz;       /* number of random digit sequences when digits == NULL */
  int32_t max_digit;  /* fuzz digits drawn uniformly from [1, max_digit] */
  uint64_t seed;
  double lambda;      /* nesting / convergence */
  double tolerance;   /* nesting slack; <= 0 selects the default 1e-8 */
  int32_t origin_level;     /* convergence origin; -1 = first bounded gap */
  int64_t origin_position;
} kohmoto_verify_options;

/* Runs a verification suite. The report is JSON lines, one record per checked
 * vertex; failures_out receives the number of failed checks (the call itself
 * succeeds when the scan completes, even with counterexamples). */
kohmoto_status kohmoto_verify(const kohmoto_verify_options* options, char** report_out,
                              int64_t* checks_out, int64_t* failures_out);

/* ---- butterfly ----------------------------------------------------------- */

typedef struct kohmoto_dataset kohmoto_dataset;

/* Spectra of all coprime p/q with q <= q_max, each bounded gap indexed. */
kohmoto_status kohmoto_butterfly_build(int64_t q_max, double lambda, kohmoto_dataset** out);
void kohmoto_dataset_free(kohmoto_dataset* dataset);

int64_t kohmoto_dataset_row_count(const kohmoto_dataset* dataset);
int64_t kohmoto_dataset_failed_row_count(const kohmoto_dataset* dataset);

kohmoto_status kohmoto_dataset_to_json(const kohmoto_dataset* dataset, const char* config,
                                       char** json_out);
kohmoto_status kohmoto_dataset_to_csv(const kohmoto_dataset* dataset, const char* config,
                                      char** csv_out);
/* Gap-width-versus-index diagnostic report (JSON). */
kohmoto_status kohmoto_dataset_width_report(const kohmoto_dataset* dataset, const char* config,
                                            char** json_out);

typedef enum kohmoto_svg_mode {
  KOHMOTO_SVG_GAPS = 0, /* bounded gaps filled by the index palette */
  KOHMOTO_SVG_BANDS = 1 /* bands in a neutral color; palette unused */
} kohmoto_svg_mode;

typedef struct kohmoto_svg_options {
  int32_t mode;      /* kohmoto_svg_mode */
  int32_t width;     /* <= 0 selects the default 960 */
  int32_t height;    /* <= 0 selects the default 720 */
  int32_t margin;    /* <= 0 selects the default 56 */
  double row_scale;  /* <= 0 selects the default 1.0 */
} kohmoto_svg_options;

/* Standalone SVG 1.1 document; byte-identical for identical inputs. */
kohmoto_status kohmoto_dataset_render_svg(const kohmoto_dataset* dataset,
                                          const kohmoto_svg_options* options,
                                          const char* config, char** svg_out);

/* Palette lookup used by the SVG legend: hex color, or "none" for index 0. */
kohmoto_status kohmoto_palette_color(int64_t index, char** color_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KOHMOTO_H */
