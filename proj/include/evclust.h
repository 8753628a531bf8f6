/*
 * evclust C API.
 *
 * Opaque handles own all returned memory; strings returned by accessors stay
 * valid until the owning handle is freed. Every fallible call returns an
 * evc_status and records a message retrievable with evc_last_error() on the
 * calling thread.
 */
#ifndef EVCLUST_H
#define EVCLUST_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EVCLUST_BUILDING)
#    define EVC_API __declspec(dllexport)
#  else
#    define EVC_API __declspec(dllimport)
#  endif
#else
#  define EVC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum evc_status {
  EVC_OK = 0,
  EVC_ERR_SCHEMA = 1,
  EVC_ERR_MASS = 2,
  EVC_ERR_UNKNOWN_ATOM = 3,
  EVC_ERR_NO_FEASIBLE_R = 4,
  EVC_ERR_TOTAL_CONFLICT = 5,
  EVC_ERR_DOMAIN = 6,
  EVC_ERR_TOO_LARGE = 7,
  EVC_ERR_INVALID_ARGUMENT = 8,
  EVC_ERR_IO = 9,
  EVC_ERR_INTERNAL = 10
} evc_status;

typedef enum evc_stage {
  EVC_STAGE_PARTITION = 0,
  EVC_STAGE_SPECIFY = 1,
  EVC_STAGE_POSTERIOR = 2,
  EVC_STAGE_PIPELINE = 3
} evc_stage;

typedef enum evc_singleton_support {
  EVC_SINGLETON_PRINTED = 0,
  EVC_SINGLETON_COMPLEMENT = 1
} evc_singleton_support;

typedef struct evc_run_config {
  uint32_t restarts;
  uint64_t seed;
  evc_singleton_support singleton_support;
} evc_run_config;

typedef struct evc_scenario_spec {
  uint32_t targets;
  uint32_t reports_per_target;
  double nonspecificity;
  double noise;
} evc_scenario_spec;

typedef struct evc_document evc_document;
typedef struct evc_report evc_report;
typedef struct evc_scenario evc_scenario;

EVC_API const char* evc_version(void);
EVC_API const char* evc_status_name(evc_status status);
/* Message of the last failed call on this thread; "" if none. */
EVC_API const char* evc_last_error(void);

/* Defaults: 20 restarts, seed 0, printed singleton support. */
EVC_API void evc_run_config_init(evc_run_config* config);

EVC_API evc_status evc_document_load(const char* path, evc_document** out);
EVC_API evc_status evc_document_parse(const char* text, size_t length, evc_document** out);
EVC_API size_t evc_document_evidence_count(const evc_document* doc);
/* Canonical JSON form of the document. */
EVC_API const char* evc_document_canonical(evc_document* doc);
EVC_API void evc_document_free(evc_document* doc);

EVC_API evc_status evc_run(const evc_document* doc, evc_stage stage, const evc_run_config* config,
                           evc_report** out);
EVC_API const char* evc_report_json(const evc_report* report);
EVC_API const char* evc_report_summary(const evc_report* report);
EVC_API size_t evc_report_cluster_count(const evc_report* report);
EVC_API double evc_report_metaconflict(const evc_report* report);
/* Writes the 0-based cluster of each evidence; capacity must cover every evidence. */
EVC_API evc_status evc_report_assignment(const evc_report* report, size_t* clusters, size_t capacity);
/* Membership plausibility of an evidence in a cluster (specify stage or later). */
EVC_API evc_status evc_report_plausibility(const evc_report* report, size_t evidence, size_t cluster, double* out);
/* Posterior probability of a cluster count (posterior stage or later). */
EVC_API evc_status evc_report_posterior(const evc_report* report, size_t count, double* out);
EVC_API size_t evc_report_table_count(const evc_report* report);
EVC_API const char* evc_report_table_name(const evc_report* report, size_t index);
EVC_API const char* evc_report_table_csv(const evc_report* report, size_t index);
EVC_API void evc_report_free(evc_report* report);

EVC_API evc_status evc_generate(const evc_scenario_spec* spec, uint64_t seed, evc_scenario** out);
EVC_API const char* evc_scenario_document(const evc_scenario* scenario);
/* Ground-truth sidecar JSON. */
EVC_API const char* evc_scenario_truth(const evc_scenario* scenario);
EVC_API void evc_scenario_free(evc_scenario* scenario);

#ifdef __cplusplus
}
#endif

#endif /* EVCLUST_H */
