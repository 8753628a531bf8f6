#pragma once

// Synthetic report streams: each target t reports the action "A<t>" about
// event "E<t>"; nonspecific reports widen the event part, noisy reports name
// another target's action. Ground truth is returned separately and never
// enters the evidence document.

#include "evclust/document.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace evclust {

struct ScenarioSpec {
  std::size_t targets = 2;
  std::size_t reports_per_target = 1;
  double nonspecificity = 0.0;  // chance that a report's event part covers > 1 event
  double noise = 0.0;           // chance that a report names a wrong action
};

struct Scenario {
  Document<Rational> document;
  /// Ground-truth target (0-based) of each evidence, in document order.
  std::vector<std::size_t> truth;
  /// Event index each target refers to.
  std::vector<std::size_t> target_event;
};

/// Errc::invalid_argument for 0 targets, 0 reports, rates outside [0,1], or
/// more than 8 targets (joint frame limit).
Scenario generate_scenario(const ScenarioSpec& spec, std::uint64_t seed);

/// Sidecar JSON: {"targets": k, "labels": {id: target}, "target_events": [...]}.
std::string serialize_truth(const Scenario& scenario);

}  // namespace evclust
