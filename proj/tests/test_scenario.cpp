#include "evclust/error.hpp"
#include "evclust/scenario.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

using namespace evclust;

TEST(Scenario, ShapeAndTruth) {
  ScenarioSpec spec{3, 4, 0.5, 0.0};
  Scenario s = generate_scenario(spec, 42);
  const auto& set = s.document.evidences;
  ASSERT_EQ(set.size(), 12u);
  ASSERT_EQ(s.truth.size(), 12u);
  EXPECT_EQ(s.document.prior.mass(3), Rational(1));
  std::vector<int> per_target(3, 0);
  for (std::size_t i = 0; i < set.size(); ++i) {
    std::size_t t = s.truth[i];
    ++per_target[t];
    const auto& focal = set[i].mass.focal();
    ASSERT_EQ(focal.size(), 2u);
    Subset joint = focal.front().first;
    // noise-free: the action is always the target's own
    EXPECT_EQ(set.frame().action_part(joint), set.frame().actions().atom(t));
    EXPECT_TRUE(set.frame().event_part(joint).contains(s.target_event[t]));
    Rational m = focal.front().second;
    EXPECT_GE(m, Rational(1, 2));
    EXPECT_LE(m, Rational(9, 10));
  }
  for (int c : per_target) EXPECT_EQ(c, 4);
}

TEST(Scenario, Deterministic) {
  ScenarioSpec spec{4, 3, 0.4, 0.2};
  EXPECT_EQ(serialize_document(generate_scenario(spec, 7).document),
            serialize_document(generate_scenario(spec, 7).document));
  EXPECT_NE(serialize_document(generate_scenario(spec, 7).document),
            serialize_document(generate_scenario(spec, 8).document));
}

TEST(Scenario, TruthSidecar) {
  Scenario s = generate_scenario({2, 2, 0.0, 0.0}, 1);
  auto j = nlohmann::json::parse(serialize_truth(s));
  EXPECT_EQ(j["targets"], 2);
  EXPECT_EQ(j["labels"].size(), 4u);
  EXPECT_EQ(j["target_events"][1], "E2");
  // the document itself carries no label
  EXPECT_EQ(serialize_document(s.document).find("target"), std::string::npos);
}

TEST(Scenario, RejectsBadSpecs) {
  EXPECT_THROW(generate_scenario({0, 1, 0, 0}, 0), Error);
  EXPECT_THROW(generate_scenario({9, 1, 0, 0}, 0), Error);
  EXPECT_THROW(generate_scenario({2, 0, 0, 0}, 0), Error);
  EXPECT_THROW(generate_scenario({2, 1, 1.5, 0}, 0), Error);
  EXPECT_THROW(generate_scenario({2, 1, 0, -0.1}, 0), Error);
}
