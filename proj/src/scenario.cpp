#include "evclust/scenario.hpp"

#include "evclust/error.hpp"
#include "evclust/random.hpp"

#include <json.hpp>

#include <numeric>

namespace evclust {

namespace {

struct Report {
  std::size_t target;
  std::size_t action;
  Subset events;
  Rational mass;
};

}  // namespace

Scenario generate_scenario(const ScenarioSpec& spec, std::uint64_t seed) {
  if (spec.targets == 0) fail(Errc::invalid_argument, "scenario needs at least one target");
  if (spec.targets > 8) fail(Errc::invalid_argument, "scenario supports at most 8 targets");
  if (spec.reports_per_target == 0) fail(Errc::invalid_argument, "scenario needs at least one report per target");
  if (!(spec.nonspecificity >= 0.0 && spec.nonspecificity <= 1.0) || !(spec.noise >= 0.0 && spec.noise <= 1.0)) {
    fail(Errc::invalid_argument, "scenario rates must lie in [0,1]");
  }
  const std::size_t k = spec.targets;
  Rng rng(seed);

  std::vector<Report> reports;
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t j = 0; j < spec.reports_per_target; ++j) {
      Report r{t, t, Subset(std::uint64_t{1} << t), Rational(0)};
      // The first report of every target is specific; it anchors the event.
      if (j > 0 && k > 1 && rng.chance(spec.nonspecificity)) {
        std::uint64_t extra = 0;
        while (extra == 0) {
          for (std::size_t e = 0; e < k; ++e) {
            if (e != t && rng.chance(0.5)) extra |= std::uint64_t{1} << e;
          }
        }
        r.events = Subset(r.events.bits() | extra);
      }
      if (k > 1 && rng.chance(spec.noise)) {
        std::size_t other = rng.below(k - 1);
        r.action = other >= t ? other + 1 : other;
      }
      r.mass = Rational(50 + static_cast<long>(rng.below(41)), 100);
      reports.push_back(r);
    }
  }
  for (std::size_t i = reports.size(); i > 1; --i) std::swap(reports[i - 1], reports[rng.below(i)]);

  auto frame = std::make_shared<const JointFrame>(numbered_frame("A", k), numbered_frame("E", k));
  std::vector<Evidence<Rational>> evidences;
  std::vector<std::size_t> truth;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const Report& r = reports[i];
    Subset joint = frame->rectangle(frame->actions().atom(r.action), r.events);
    MassFunction<Rational> m(frame->product(), {{joint, r.mass}, {frame->product()->full(), Rational(1) - r.mass}});
    evidences.push_back(Evidence<Rational>{"e" + std::to_string(i + 1), std::move(m), {{"time", std::to_string(i + 1)}}});
    truth.push_back(r.target);
  }
  std::vector<std::size_t> target_event(k);
  std::iota(target_event.begin(), target_event.end(), std::size_t{0});
  return Scenario{Document<Rational>{EvidenceSet<Rational>(frame, std::move(evidences)),
                                     DomainDistribution<Rational>::certain(k)},
                  std::move(truth), std::move(target_event)};
}

std::string serialize_truth(const Scenario& scenario) {
  nlohmann::ordered_json out;
  out["targets"] = scenario.target_event.size();
  nlohmann::ordered_json labels = nlohmann::ordered_json::object();
  const auto& set = scenario.document.evidences;
  for (std::size_t i = 0; i < set.size(); ++i) labels[set[i].id] = scenario.truth[i] + 1;
  out["labels"] = std::move(labels);
  nlohmann::ordered_json events = nlohmann::ordered_json::array();
  for (std::size_t e : scenario.target_event) events.push_back(set.frame().events().label(e));
  out["target_events"] = std::move(events);
  return out.dump(2) + "\n";
}

}  // namespace evclust
