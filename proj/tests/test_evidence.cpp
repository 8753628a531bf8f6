#include "evclust/error.hpp"
#include "evclust/evidence.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace evclust;

TEST(JointFrame, RectanglesAndProjections) {
  JointFrame jf(make_frame({"B", "R"}), make_frame({"E1", "E2", "E3"}));
  EXPECT_EQ(jf.product()->size(), 6u);
  EXPECT_EQ(jf.product()->labels()[4], "R|E2");
  Subset r = jf.rectangle(Subset(0b10), Subset(0b011));
  EXPECT_EQ(r.bits(), 0b011000u);
  EXPECT_EQ(jf.event_part(r), Subset(0b011));
  EXPECT_EQ(jf.action_part(r), Subset(0b10));
  EXPECT_TRUE(jf.is_rectangle(r));
  EXPECT_FALSE(jf.is_rectangle(Subset(0b100001)));
  // disjoint in one coordinate is enough for an empty intersection
  Subset other = jf.rectangle(Subset(0b11), Subset(0b100));
  EXPECT_FALSE(r.intersects(other));
}

TEST(JointFrame, SizeLimit) {
  EXPECT_THROW(JointFrame(numbered_frame("a", 9), numbered_frame("E", 8)), Error);
  EXPECT_NO_THROW(JointFrame(numbered_frame("a", 8), numbered_frame("E", 8)));
}

TEST(EvidenceSet, RejectsDuplicatesAndEmpty) {
  auto jf = std::make_shared<const JointFrame>(make_frame({"B"}), make_frame({"E1"}));
  auto v = MassFunction<Rational>::vacuous(jf->product());
  EXPECT_THROW(EvidenceSet<Rational>(jf, {}), Error);
  EXPECT_THROW(EvidenceSet<Rational>(jf, {{"x", v, {}}, {"x", v, {}}}), Error);
  EvidenceSet<Rational> ok(jf, {{"x", v, {}}, {"y", v, {}}});
  EXPECT_EQ(ok.index_of("y"), 1u);
  EXPECT_FALSE(ok.index_of("z").has_value());
}

TEST(EvidenceSet, SameEventConflictMatchesOracle) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    auto set = oracle::random_evidence_set<Rational>(5, rng);
    std::vector<std::size_t> members;
    std::vector<oracle::FocalList<Rational>> lists;
    for (std::size_t q = 0; q < set.size(); ++q) {
      if (rng.chance(0.6)) {
        members.push_back(q);
        lists.push_back(oracle::focal_list(set[q].mass));
      }
    }
    EXPECT_EQ(same_event_conflict<Rational>(set, members), oracle::tuple_conflict(lists));
  }
}
