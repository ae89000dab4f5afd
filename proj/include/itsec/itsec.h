#ifndef ITSEC_H
#define ITSEC_H

/*
 * C interface to the secrecy-analysis library. All analysis objects live
 * behind opaque handles; inputs and results cross the boundary as JSON (or
 * CSV/text renderings). Every function that can fail returns an
 * itsec_status; the most recent failure message for the calling thread is
 * available from itsec_last_error(). Strings returned through out-parameters
 * are heap-allocated and must be released with itsec_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum itsec_status {
  ITSEC_OK = 0,
  /* a property the library promises (or is asked to verify) failed */
  ITSEC_ERR_PROPERTY = 1,
  /* malformed input, impossible request, or failed validation */
  ITSEC_ERR_VALIDATION = 2,
  /* an exhaustive enumeration was refused because it exceeds a cap */
  ITSEC_ERR_CAP = 3,
  /* null pointer or otherwise unusable argument */
  ITSEC_ERR_ARGUMENT = 4
} itsec_status;

typedef enum itsec_format {
  ITSEC_FORMAT_JSON = 0,
  ITSEC_FORMAT_CSV = 1,
  ITSEC_FORMAT_TEXT = 2
} itsec_format;

/* Parsed input document: a channel matrix or a full cryptosystem. */
typedef struct itsec_input itsec_input;
/* Result of itsec_analyze. */
typedef struct itsec_report itsec_report;

typedef struct itsec_analyze_options {
  /* simplex grid resolution for the distribution sweeps; >= 1 */
  int grid_resolution;
  /* alphabet-size cap on the semantic-security enumerations; >= 2 */
  int ss_cap;
} itsec_analyze_options;

typedef struct itsec_verify_options {
  uint64_t seed;
  size_t count;
  size_t min_size;
  size_t max_size;
  int grid_resolution;
  int ss_cap;
} itsec_verify_options;

typedef struct itsec_gap_options {
  int grid_resolution;
  int ss_cap;
  /* grid sweeps are skipped when the grid would exceed this many points */
  size_t grid_point_limit;
} itsec_gap_options;

void itsec_analyze_options_init(itsec_analyze_options* options);
void itsec_verify_options_init(itsec_verify_options* options);
void itsec_gap_options_init(itsec_gap_options* options);

/* --- inputs ------------------------------------------------------------- */

itsec_status itsec_input_parse(const char* json_text, itsec_input** out_input);
/* 1 when the input held a cryptosystem, 0 for a bare channel. */
int itsec_input_is_cryptosystem(const itsec_input* input);
void itsec_input_free(itsec_input* input);

/* --- analysis ----------------------------------------------------------- */

itsec_status itsec_analyze(const itsec_input* input,
                           const itsec_analyze_options* options,
                           itsec_report** out_report);
itsec_status itsec_report_render(const itsec_report* report, itsec_format format,
                                 char** out_text);
void itsec_report_free(itsec_report* report);

/* Decomposes a doubly stochastic channel into a cipher achieving it and
 * renders the cipher. */
itsec_status itsec_synthesize(const itsec_input* input, itsec_format format,
                              char** out_text);

/* Separation demonstration for the wobble family of the given even degree;
 * delta is a rational string with 0 < delta <= 1/degree. */
itsec_status itsec_gap_demo(size_t degree, const char* delta,
                            const itsec_gap_options* options, itsec_format format,
                            char** out_text);

/* Randomized sweep over the library's asserted theorems. Returns
 * ITSEC_ERR_PROPERTY when a check fails; the transcript is produced either
 * way. */
itsec_status itsec_verify_theorems(const itsec_verify_options* options,
                                   itsec_format format, char** out_transcript);

/* Two-bit correlation lemma: arguments are the four joint probabilities as
 * rational strings. */
itsec_status itsec_lemma_check(const char* p00, const char* p01, const char* p10,
                               const char* p11, itsec_format format, char** out_text);

/* --- plumbing ----------------------------------------------------------- */

const char* itsec_last_error(void);
void itsec_string_free(char* text);
const char* itsec_version(void);

#ifdef __cplusplus
}
#endif

#endif /* ITSEC_H */
