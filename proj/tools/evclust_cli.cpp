// evclust command-line driver. Links only the C API.

#include "evclust.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kInputError = 2, kInfeasible = 3, kTotalConflict = 4 };

int exit_code(evc_status status) {
  switch (status) {
    case EVC_OK: return kOk;
    case EVC_ERR_SCHEMA:
    case EVC_ERR_MASS:
    case EVC_ERR_UNKNOWN_ATOM:
    case EVC_ERR_INVALID_ARGUMENT:
    case EVC_ERR_TOO_LARGE:
    case EVC_ERR_IO: return kInputError;
    case EVC_ERR_NO_FEASIBLE_R: return kInfeasible;
    case EVC_ERR_TOTAL_CONFLICT: return kTotalConflict;
    default: return kFailure;
  }
}

int report_failure(evc_status status) {
  std::cerr << "evclust: " << evc_status_name(status) << ": " << evc_last_error() << '\n';
  return exit_code(status);
}

bool write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "evclust: cannot write '" << path << "'\n";
    return false;
  }
  out << contents;
  return static_cast<bool>(out);
}

struct AnalysisOptions {
  std::string input;
  std::string out;
  uint64_t seed = 0;
  uint32_t restarts = 20;
  std::string singleton = "printed";
  bool tables = false;
  bool summary = false;
};

int run_analysis(const AnalysisOptions& opt, evc_stage stage) {
  evc_document* doc = nullptr;
  if (evc_status s = evc_document_load(opt.input.c_str(), &doc); s != EVC_OK) return report_failure(s);

  evc_run_config config;
  evc_run_config_init(&config);
  config.seed = opt.seed;
  config.restarts = opt.restarts;
  config.singleton_support = opt.singleton == "complement" ? EVC_SINGLETON_COMPLEMENT : EVC_SINGLETON_PRINTED;

  evc_report* report = nullptr;
  evc_status s = evc_run(doc, stage, &config, &report);
  evc_document_free(doc);
  if (s != EVC_OK) return report_failure(s);

  int code = kOk;
  if (opt.out.empty()) {
    std::cout << evc_report_json(report);
  } else if (!write_file(opt.out, evc_report_json(report))) {
    code = kInputError;
  }
  if (code == kOk && opt.tables) {
    const std::string prefix = opt.out.empty() ? std::string("evclust") : opt.out;
    for (size_t i = 0; i < evc_report_table_count(report); ++i) {
      std::string path = prefix + "." + evc_report_table_name(report, i) + ".csv";
      if (!write_file(path, evc_report_table_csv(report, i))) {
        code = kInputError;
        break;
      }
    }
  }
  if (opt.summary) std::cerr << evc_report_summary(report);
  evc_report_free(report);
  return code;
}

struct GenerateOptions {
  evc_scenario_spec spec{2, 1, 0.0, 0.0};
  uint64_t seed = 0;
  std::string out;
  std::string truth;
};

int run_generate(const GenerateOptions& opt) {
  evc_scenario* scenario = nullptr;
  if (evc_status s = evc_generate(&opt.spec, opt.seed, &scenario); s != EVC_OK) return report_failure(s);
  int code = kOk;
  std::string truth_path = !opt.truth.empty() ? opt.truth : opt.out.empty() ? std::string() : opt.out + ".truth.json";
  if (opt.out.empty()) {
    std::cout << evc_scenario_document(scenario);
  } else if (!write_file(opt.out, evc_scenario_document(scenario))) {
    code = kInputError;
  }
  if (code == kOk && !truth_path.empty() && !write_file(truth_path, evc_scenario_truth(scenario))) code = kInputError;
  evc_scenario_free(scenario);
  return code;
}

void add_analysis_options(CLI::App* cmd, AnalysisOptions& opt) {
  cmd->add_option("-i,--input", opt.input, "Evidence document (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("-o,--out", opt.out, "Report path (default: stdout)");
  cmd->add_option("--seed", opt.seed, "Seed for the random restarts");
  cmd->add_option("--restarts", opt.restarts, "Local-search restarts per cluster count")->check(CLI::Range(1u, 1000000u));
  cmd->add_option("--singleton-support", opt.singleton, "Support read from a lone evidence's domain-conflict increase")
      ->check(CLI::IsMember({"printed", "complement"}));
  cmd->add_flag("--tables", opt.tables, "Write plot-ready CSV tables next to the report");
  cmd->add_flag("--summary", opt.summary, "Print an aligned text summary to stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition, specify and count nonspecific Dempster-Shafer evidence", "evclust"};
  app.set_version_flag("--version", std::string("evclust ") + evc_version());
  app.require_subcommand(1);

  const std::map<std::string, evc_stage> stages = {{"partition", EVC_STAGE_PARTITION},
                                                    {"specify", EVC_STAGE_SPECIFY},
                                                    {"posterior", EVC_STAGE_POSTERIOR},
                                                    {"pipeline", EVC_STAGE_PIPELINE}};
  const std::map<std::string, std::string> descriptions = {
      {"partition", "Cluster evidences by minimizing the metaconflict"},
      {"specify", "Partition, then assess each evidence's cluster membership"},
      {"posterior", "Partition, specify, and derive the posterior over the number of clusters"},
      {"pipeline", "Full analysis including the cluster-to-event assignment"}};

  std::map<std::string, AnalysisOptions> analysis;
  for (const auto& [name, stage] : stages) add_analysis_options(app.add_subcommand(name, descriptions.at(name)), analysis[name]);

  GenerateOptions gen;
  CLI::App* generate = app.add_subcommand("generate", "Write a synthetic evidence document and its ground truth");
  generate->add_option("--targets", gen.spec.targets, "Number of targets (events)")->check(CLI::Range(1u, 8u));
  generate->add_option("--reports", gen.spec.reports_per_target, "Reports per target")->check(CLI::Range(1u, 1000u));
  generate->add_option("--nonspecificity", gen.spec.nonspecificity, "Chance a report names several events")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--noise", gen.spec.noise, "Chance a report names a wrong action")->check(CLI::Range(0.0, 1.0));
  generate->add_option("--seed", gen.seed, "Generator seed");
  generate->add_option("-o,--out", gen.out, "Document path (default: stdout)");
  generate->add_option("--truth", gen.truth, "Ground-truth sidecar path (default: <out>.truth.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  for (const auto& [name, stage] : stages) {
    if (app.got_subcommand(name)) return run_analysis(analysis[name], stage);
  }
  return run_generate(gen);
}
