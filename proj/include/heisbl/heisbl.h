#ifndef HEISBL_H
#define HEISBL_H

/* C interface to libheisbl. Every call returns an hbl_status; on failure the
 * thread's last error message is available from hbl_last_error(). Strings
 * returned through `out` are owned by the caller and released with
 * hbl_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(HBL_BUILDING_LIBRARY)
#define HBL_API __attribute__((visibility("default")))
#else
#define HBL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hbl_status {
  HBL_OK = 0,
  HBL_ERR_USER = 2,       /* bad input: malformed config, unknown option, ... */
  HBL_ERR_INFEASIBLE = 3, /* the requested polytope is empty (report still produced) */
  HBL_ERR_BUDGET = 4,     /* a compute budget ran out (partial report produced) */
  HBL_ERR_INTERNAL = 5
} hbl_status;

typedef struct hbl_config hbl_config;

typedef enum hbl_mode { HBL_MODE_DEFAULT = 0, HBL_MODE_SUFFICIENT = 1, HBL_MODE_NECESSARY = 2 } hbl_mode;

typedef struct hbl_options {
  hbl_mode mode;
  const char* family; /* NULL, "coords", "heuristic" or "file:PATH" */
  int all_pairs;      /* necessary mode: every pair W <= V^perp instead of (V, V^perp) */
  int depth;

  double ladder_r0;
  double ladder_factor;
  int ladder_count;
  double grid_h;
  uint64_t budget; /* 0: command default */
  uint64_t seed;
  unsigned workers; /* 0: hardware concurrency */
  const char* format; /* NULL or "json", "csv", "svg" */

  const char* q; /* comma-separated reciprocals, or NULL */
  const char* p; /* comma-separated exponents, or NULL */
  const char* condition; /* A1, A2, B1, B2, C1, C2 */
  const char* v;         /* subspace specs such as "coords:1" */
  const char* w;
  int dilations;
  int slice_i, slice_k; /* 1-based; 0 plots q_1 against q_{m+1} */
} hbl_options;

/* Fills in the defaults used by the command-line tool. */
HBL_API void hbl_options_init(hbl_options* options);

HBL_API const char* hbl_version(void);
HBL_API const char* hbl_last_error(void);

HBL_API hbl_status hbl_config_parse(const char* json_text, hbl_config** out);
HBL_API hbl_status hbl_config_load(const char* path, hbl_config** out);
HBL_API void hbl_config_free(hbl_config* config);

HBL_API hbl_status hbl_run_polytope(const hbl_config* config, const hbl_options* options, char** out);
HBL_API hbl_status hbl_run_check(const hbl_config* config, const hbl_options* options, char** out);
HBL_API hbl_status hbl_run_witness(const hbl_config* config, const hbl_options* options, char** out);
HBL_API hbl_status hbl_run_frames(const hbl_config* config, const hbl_options* options, char** out);
HBL_API hbl_status hbl_run_montecarlo(const hbl_config* config, const hbl_options* options, char** out);
/* `inputs` are texts of polytope reports or config files. */
HBL_API hbl_status hbl_plot(const char* const* inputs, size_t count, const hbl_options* options, char** out);

/* Returns HBL_OK when the text is a valid report, HBL_ERR_USER with the
 * problems in hbl_last_error() otherwise. */
HBL_API hbl_status hbl_validate_report(const char* json_text);

HBL_API void hbl_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
