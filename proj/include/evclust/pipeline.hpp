#pragma once

// End-to-end driver: partition -> specification -> posterior -> event
// assignment, and the report renderings (JSON, CSV tables, text summary).

#include "evclust/document.hpp"
#include "evclust/error.hpp"
#include "evclust/events.hpp"
#include "evclust/posterior.hpp"
#include "evclust/search.hpp"
#include "evclust/specifier.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace evclust {

inline constexpr const char* version_string = "0.1.0";

enum class Stage { partition, specify, posterior, pipeline };

const char* stage_name(Stage stage);

struct RunConfig {
  std::size_t restarts = 20;
  std::uint64_t seed = 0;
  SingletonSupport singleton_support = SingletonSupport::as_printed;
  bool tables = false;
};

template <class T>
struct ClusterExistence {
  ExistenceEvidence<T> raw;         // before the falsity discount
  T falsity_factor{1};
  ExistenceEvidence<T> discounted;
};

template <class T>
struct PipelineResult {
  Stage stage = Stage::partition;
  RunConfig config;
  SearchResult<T> search;
  std::vector<MembershipAssessment<T>> assessments;      // specify and later
  std::vector<std::vector<T>> discount;                  // [evidence][cluster]
  std::vector<ClusterExistence<T>> existence;            // posterior and later
  std::optional<CountsBpa<T>> counts;
  std::optional<PosteriorDistribution<T>> posterior;
  std::optional<Assignment<T>> assignment;               // pipeline only
  std::optional<std::pair<Errc, std::string>> assignment_error;
};

template <class T>
PipelineResult<T> run_pipeline(const Document<T>& doc, Stage stage, const RunConfig& config);

/// Report JSON; numbers rounded to 12 significant digits.
template <class T>
std::string render_report(const Document<T>& doc, const PipelineResult<T>& result);

/// Plot-ready CSV tables as (name, contents): "mcf_by_r", and when computed
/// "membership" and "posterior".
template <class T>
std::vector<std::pair<std::string, std::string>> render_tables(const Document<T>& doc, const PipelineResult<T>& result);

/// Aligned-column text summary.
template <class T>
std::string render_summary(const Document<T>& doc, const PipelineResult<T>& result);

}  // namespace evclust
