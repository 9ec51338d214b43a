/* C interface to the dual-expert landing simulator.
 *
 * Objects are opaque handles created by *_create/*_load/*_run functions and
 * released with the matching *_free. Every fallible call returns a
 * dsim_status; on failure dsim_last_error() describes the problem for the
 * calling thread until its next API call. Strings returned through char**
 * are heap-allocated and must be released with dsim_string_free.
 */
#ifndef DUALSIM_DUALSIM_H
#define DUALSIM_DUALSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DSIM_BUILDING_LIBRARY)
#    define DSIM_API __declspec(dllexport)
#  else
#    define DSIM_API __declspec(dllimport)
#  endif
#else
#  define DSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dsim_status {
  DSIM_OK = 0,
  DSIM_ERR_INVALID_ARGUMENT = 1,
  DSIM_ERR_CONFIG = 2,
  DSIM_ERR_IO = 3,
  DSIM_ERR_PARSE = 4,
  DSIM_ERR_OUT_OF_RANGE = 5,
  DSIM_ERR_INTERNAL = 6
} dsim_status;

/* Controller modes; combine as a bit mask where a mask is expected. */
typedef enum dsim_mode {
  DSIM_MODE_NEAR_ONLY = 1,
  DSIM_MODE_FAR_ONLY = 2,
  DSIM_MODE_DUAL = 4
} dsim_mode;

typedef enum dsim_expert { DSIM_EXPERT_NONE = -1, DSIM_EXPERT_FAR = 0, DSIM_EXPERT_NEAR = 1 } dsim_expert;

typedef enum dsim_termination {
  DSIM_LANDED = 0,
  DSIM_TRACKING_LOST = 1,
  DSIM_TIMEOUT = 2
} dsim_termination;

typedef struct dsim_config dsim_config;
typedef struct dsim_campaign dsim_campaign;
typedef struct dsim_gate dsim_gate;

typedef struct dsim_box {
  double u, v, w, h;
} dsim_box;

typedef struct dsim_detection {
  int present;
  dsim_box box;
  double confidence;
} dsim_detection;

typedef struct dsim_gate_output {
  int has_smoothed_box;
  dsim_box smoothed_box;
  dsim_expert selected;
  double raw_distance; /* 0 when nothing was selected */
  int tracking_lost;
} dsim_gate_output;

typedef struct dsim_trial_result {
  int trial_id;
  double initial_position[3];
  double touchdown_xy[2];
  double touchdown_error;
  int success;
  dsim_termination termination;
  int steps;
  int far_selections;
  int near_selections;
} dsim_trial_result;

typedef struct dsim_wilcoxon_result {
  size_t n_effective;
  double w_plus;
  double w_minus;
  double statistic;
  double p_two_sided;
  int degenerate;
} dsim_wilcoxon_result;

DSIM_API const char* dsim_version(void);
DSIM_API const char* dsim_last_error(void);
/* Dotted key of the last configuration error (e.g. "gains.k_xy"), or "". */
DSIM_API const char* dsim_last_error_key(void);
DSIM_API void dsim_string_free(char* s);

/* Configuration */
DSIM_API dsim_status dsim_config_default(dsim_config** out);
DSIM_API dsim_status dsim_config_load(const char* path, dsim_config** out);
DSIM_API dsim_status dsim_config_parse(const char* json_text, dsim_config** out);
DSIM_API void dsim_config_free(dsim_config* config);
DSIM_API dsim_status dsim_config_validate(const dsim_config* config);
DSIM_API dsim_status dsim_config_set_seed(dsim_config* config, uint64_t seed);
DSIM_API dsim_status dsim_config_set_trials(dsim_config* config, int trials);
DSIM_API dsim_status dsim_config_set_modes(dsim_config* config, unsigned mode_mask);
DSIM_API dsim_status dsim_config_to_json(const dsim_config* config, char** out_json);

/* Campaigns. jobs = 0 or 1 runs serially; output is identical either way. */
DSIM_API dsim_status dsim_campaign_run(const dsim_config* config, unsigned jobs, int record_frames,
                                       dsim_campaign** out);
DSIM_API void dsim_campaign_free(dsim_campaign* campaign);
DSIM_API dsim_status dsim_campaign_write(const dsim_campaign* campaign, const char* out_dir);
DSIM_API dsim_status dsim_campaign_summary_json(const dsim_campaign* campaign, char** out_json);
DSIM_API dsim_status dsim_campaign_report_text(const dsim_campaign* campaign, char** out_text);
DSIM_API size_t dsim_campaign_trial_count(const dsim_campaign* campaign, dsim_mode mode);
DSIM_API dsim_status dsim_campaign_trial(const dsim_campaign* campaign, dsim_mode mode, size_t index,
                                         dsim_trial_result* out);

/* Gate: hard-gated selection with moving-average smoothing. */
DSIM_API dsim_status dsim_gate_create(const dsim_config* config, dsim_gate** out);
DSIM_API void dsim_gate_free(dsim_gate* gate);
DSIM_API dsim_status dsim_gate_update(dsim_gate* gate, const dsim_detection* far,
                                      const dsim_detection* near, dsim_gate_output* out);

/* Replays a DetectionLog file through gate + servo errors into a CSV file. */
DSIM_API dsim_status dsim_replay(const dsim_config* config, const char* log_path,
                                 const char* out_csv_path);

/* Renders the plain-text comparison table stored in a summary JSON file. */
DSIM_API dsim_status dsim_report_from_summary(const char* summary_path, char** out_text);

/* Exact paired two-sided signed-rank test on a[i] - b[i]. */
DSIM_API dsim_status dsim_wilcoxon(const double* a, const double* b, size_t n,
                                   dsim_wilcoxon_result* out);

#ifdef __cplusplus
}
#endif

#endif /* DUALSIM_DUALSIM_H */
