#include "evclust.h"

#include "evclust/error.hpp"
#include "evclust/pipeline.hpp"
#include "evclust/scenario.hpp"

#include <new>
#include <optional>
#include <string>

struct evc_document {
  evclust::Document<double> doc;
  std::string canonical;
};

struct evc_report {
  evclust::PipelineResult<double> result;
  std::string json;
  std::string summary;
  std::vector<std::pair<std::string, std::string>> tables;
};

struct evc_scenario {
  std::string document;
  std::string truth;
};

namespace {

thread_local std::string last_error;

evc_status to_status(evclust::Errc code) {
  using evclust::Errc;
  switch (code) {
    case Errc::schema: return EVC_ERR_SCHEMA;
    case Errc::mass: return EVC_ERR_MASS;
    case Errc::unknown_atom: return EVC_ERR_UNKNOWN_ATOM;
    case Errc::total_conflict: return EVC_ERR_TOTAL_CONFLICT;
    case Errc::no_feasible_r: return EVC_ERR_NO_FEASIBLE_R;
    case Errc::domain: return EVC_ERR_DOMAIN;
    case Errc::too_large: return EVC_ERR_TOO_LARGE;
    case Errc::invalid_argument: return EVC_ERR_INVALID_ARGUMENT;
    case Errc::io: return EVC_ERR_IO;
  }
  return EVC_ERR_INTERNAL;
}

template <class F>
evc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return EVC_OK;
  } catch (const evclust::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return EVC_ERR_INTERNAL;
}

evc_status null_argument() {
  last_error = "null argument";
  return EVC_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* evc_version(void) { return evclust::version_string; }

const char* evc_status_name(evc_status status) {
  switch (status) {
    case EVC_OK: return "ok";
    case EVC_ERR_SCHEMA: return "schema";
    case EVC_ERR_MASS: return "mass";
    case EVC_ERR_UNKNOWN_ATOM: return "unknown-atom";
    case EVC_ERR_NO_FEASIBLE_R: return "no-feasible-r";
    case EVC_ERR_TOTAL_CONFLICT: return "total-conflict";
    case EVC_ERR_DOMAIN: return "domain";
    case EVC_ERR_TOO_LARGE: return "too-large";
    case EVC_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case EVC_ERR_IO: return "io";
    case EVC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* evc_last_error(void) { return last_error.c_str(); }

void evc_run_config_init(evc_run_config* config) {
  if (!config) return;
  config->restarts = 20;
  config->seed = 0;
  config->singleton_support = EVC_SINGLETON_PRINTED;
}

evc_status evc_document_load(const char* path, evc_document** out) {
  if (!path || !out) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new evc_document{evclust::load_document<double>(path), {}}; });
}

evc_status evc_document_parse(const char* text, size_t length, evc_document** out) {
  if (!text || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    *out = new evc_document{evclust::parse_document<double>(std::string_view(text, length)), {}};
  });
}

size_t evc_document_evidence_count(const evc_document* doc) { return doc ? doc->doc.evidences.size() : 0; }

const char* evc_document_canonical(evc_document* doc) {
  if (!doc) return nullptr;
  if (doc->canonical.empty()) doc->canonical = evclust::serialize_document(doc->doc);
  return doc->canonical.c_str();
}

void evc_document_free(evc_document* doc) { delete doc; }

evc_status evc_run(const evc_document* doc, evc_stage stage, const evc_run_config* config, evc_report** out) {
  if (!doc || !out) return null_argument();
  *out = nullptr;
  evc_run_config defaults;
  evc_run_config_init(&defaults);
  const evc_run_config& c = config ? *config : defaults;
  if (stage < EVC_STAGE_PARTITION || stage > EVC_STAGE_PIPELINE) {
    last_error = "unknown stage";
    return EVC_ERR_INVALID_ARGUMENT;
  }
  if (c.singleton_support != EVC_SINGLETON_PRINTED && c.singleton_support != EVC_SINGLETON_COMPLEMENT) {
    last_error = "unknown singleton support mode";
    return EVC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    evclust::RunConfig rc;
    rc.restarts = c.restarts;
    rc.seed = c.seed;
    rc.singleton_support = c.singleton_support == EVC_SINGLETON_COMPLEMENT ? evclust::SingletonSupport::complement
                                                                           : evclust::SingletonSupport::as_printed;
    auto result = evclust::run_pipeline(doc->doc, static_cast<evclust::Stage>(stage), rc);
    auto* report = new evc_report{std::move(result), {}, {}, {}};
    report->json = evclust::render_report(doc->doc, report->result);
    report->summary = evclust::render_summary(doc->doc, report->result);
    report->tables = evclust::render_tables(doc->doc, report->result);
    *out = report;
  });
}

const char* evc_report_json(const evc_report* report) { return report ? report->json.c_str() : nullptr; }

const char* evc_report_summary(const evc_report* report) { return report ? report->summary.c_str() : nullptr; }

size_t evc_report_cluster_count(const evc_report* report) {
  return report ? report->result.search.partition.clusters() : 0;
}

double evc_report_metaconflict(const evc_report* report) { return report ? report->result.search.report.mcf : 1.0; }

evc_status evc_report_assignment(const evc_report* report, size_t* clusters, size_t capacity) {
  if (!report || !clusters) return null_argument();
  const auto& p = report->result.search.partition;
  if (capacity < p.size()) {
    last_error = "assignment buffer too small";
    return EVC_ERR_INVALID_ARGUMENT;
  }
  for (size_t i = 0; i < p.size(); ++i) clusters[i] = p.cluster_of(i);
  return EVC_OK;
}

evc_status evc_report_plausibility(const evc_report* report, size_t evidence, size_t cluster, double* out) {
  if (!report || !out) return null_argument();
  const auto& as = report->result.assessments;
  if (evidence >= as.size() || cluster >= as[evidence].pls.size()) {
    last_error = as.empty() ? "report has no specification" : "index out of range";
    return EVC_ERR_INVALID_ARGUMENT;
  }
  *out = as[evidence].pls[cluster];
  return EVC_OK;
}

evc_status evc_report_posterior(const evc_report* report, size_t count, double* out) {
  if (!report || !out) return null_argument();
  if (!report->result.posterior) {
    last_error = "report has no posterior";
    return EVC_ERR_INVALID_ARGUMENT;
  }
  const auto& probs = report->result.posterior->probabilities;
  auto it = probs.find(count);
  *out = it == probs.end() ? 0.0 : it->second;
  return EVC_OK;
}

size_t evc_report_table_count(const evc_report* report) { return report ? report->tables.size() : 0; }

const char* evc_report_table_name(const evc_report* report, size_t index) {
  return report && index < report->tables.size() ? report->tables[index].first.c_str() : nullptr;
}

const char* evc_report_table_csv(const evc_report* report, size_t index) {
  return report && index < report->tables.size() ? report->tables[index].second.c_str() : nullptr;
}

void evc_report_free(evc_report* report) { delete report; }

evc_status evc_generate(const evc_scenario_spec* spec, uint64_t seed, evc_scenario** out) {
  if (!spec || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    evclust::ScenarioSpec s{spec->targets, spec->reports_per_target, spec->nonspecificity, spec->noise};
    evclust::Scenario scenario = evclust::generate_scenario(s, seed);
    *out = new evc_scenario{evclust::serialize_document(scenario.document), evclust::serialize_truth(scenario)};
  });
}

const char* evc_scenario_document(const evc_scenario* scenario) {
  return scenario ? scenario->document.c_str() : nullptr;
}

const char* evc_scenario_truth(const evc_scenario* scenario) { return scenario ? scenario->truth.c_str() : nullptr; }

void evc_scenario_free(evc_scenario* scenario) { delete scenario; }

}  // extern "C"
