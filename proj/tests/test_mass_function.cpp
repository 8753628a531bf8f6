#include "evclust/error.hpp"
#include "evclust/mass_function.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace evclust;

namespace {

FramePtr abc() { return make_frame({"a", "b", "c"}); }

template <class T>
T num(const char* s) {
  return Numeric<T>::parse(s);
}

}  // namespace

TEST(MassFunction, ValidatesInput) {
  auto f = abc();
  EXPECT_THROW(MassFunction<Rational>(f, {{Subset(1), Rational(1, 2)}}), Error);
  EXPECT_THROW(MassFunction<Rational>(f, {{Subset(0), Rational(1)}}), Error);
  EXPECT_THROW(MassFunction<Rational>(f, {{Subset(8), Rational(1)}}), Error);
  EXPECT_THROW(MassFunction<Rational>(f, {{Subset(1), Rational(3, 2)}, {Subset(2), Rational(-1, 2)}}), Error);
  MassFunction<Rational> merged(f, {{Subset(1), Rational(1, 4)}, {Subset(1), Rational(1, 4)},
                                   {Subset(7), Rational(1, 2)}, {Subset(2), Rational(0)}});
  EXPECT_EQ(merged.focal_count(), 2u);
  EXPECT_EQ(merged.mass(Subset(1)), Rational(1, 2));
  EXPECT_EQ(merged.mass(Subset(2)), Rational(0));
}

TEST(MassFunction, BakerStreetCombination) {
  // two rectangles on a 2x2 joint frame, written out as atom bits:
  // B|E1 = 1, B|E2 = 2, R|E1 = 4, R|E2 = 8
  auto f = make_frame({"B|E1", "B|E2", "R|E1", "R|E2"});
  MassFunction<Rational> e1(f, {{Subset(1), num<Rational>("0.8")}, {f->full(), num<Rational>("0.2")}});
  MassFunction<Rational> e2(f, {{Subset(12), num<Rational>("0.4")}, {f->full(), num<Rational>("0.6")}});
  auto m = combine(e1, e2);
  EXPECT_EQ(m.conflict(), Rational(8, 25));
  EXPECT_EQ(m.mass(Subset(1)), Rational(48, 100) / Rational(68, 100));
  EXPECT_EQ(m.mass(Subset(12)), Rational(8, 100) / Rational(68, 100));
  EXPECT_EQ(m.theta_mass(), Rational(12, 100) / Rational(68, 100));
}

TEST(MassFunction, TotalConflictThrows) {
  auto f = abc();
  auto a = MassFunction<Rational>(f, {{Subset(1), Rational(1)}});
  auto b = MassFunction<Rational>(f, {{Subset(2), Rational(1)}});
  try {
    combine(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::total_conflict);
  }
  std::vector<const MassFunction<Rational>*> both{&a, &b};
  EXPECT_EQ(joint_conflict<Rational>(both), Rational(1));
}

TEST(MassFunction, VacuousIsNeutral) {
  Rng rng(11);
  auto f = abc();
  for (int i = 0; i < 50; ++i) {
    auto m = oracle::random_bpa<Rational>(f, rng, 3);
    auto v = MassFunction<Rational>::vacuous(f);
    auto c = combine(m, v);
    EXPECT_EQ(c.conflict(), Rational(0));
    EXPECT_EQ(MassFunction<Rational>(f, {c.focal().begin(), c.focal().end()}), m);
  }
}

TEST(MassFunction, MatchesOracleRational) {
  Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    auto f = numbered_frame("x", 1 + rng.below(6));
    auto a = oracle::random_bpa<Rational>(f, rng, 1 + rng.below(4));
    auto b = oracle::random_bpa<Rational>(f, rng, 1 + rng.below(4));
    auto [expected, k] = oracle::dempster(oracle::focal_list(a), oracle::focal_list(b));
    if (k == Rational(1)) {
      EXPECT_THROW(combine(a, b), Error);
      continue;
    }
    auto m = combine(a, b);
    EXPECT_EQ(m.conflict(), k);
    for (const auto& [bits, v] : expected) EXPECT_EQ(m.mass(Subset(bits)), v);
    EXPECT_EQ(m.focal_count(), expected.size());
  }
}

TEST(MassFunction, CommutativeAndAssociative) {
  Rng rng(77);
  auto f = make_frame({"p", "q", "r", "s"});
  for (int i = 0; i < 100; ++i) {
    auto a = oracle::random_bpa<Rational>(f, rng, 3);
    auto b = oracle::random_bpa<Rational>(f, rng, 3);
    auto c = oracle::random_bpa<Rational>(f, rng, 3);
    std::vector<const MassFunction<Rational>*> all{&a, &b, &c};
    if (joint_conflict<Rational>(all) == Rational(1)) continue;
    auto ab = combine(a, b);
    auto ba = combine(b, a);
    EXPECT_EQ(ab, ba);
    auto left = combine(ab, c);
    auto right = combine(a, combine(b, c));
    for (const auto& [s, v] : left.focal()) EXPECT_EQ(right.mass(s), v);
    std::vector<MassFunction<Rational>> list{a, b, c};
    auto folded = combine_many<Rational>(list);
    EXPECT_EQ(folded.conflict(), joint_conflict<Rational>(all));
    EXPECT_EQ(folded.conflict(),
              oracle::tuple_conflict<Rational>({oracle::focal_list(a), oracle::focal_list(b), oracle::focal_list(c)}));
  }
}

TEST(MassFunction, BeliefPlausibility) {
  Rng rng(5);
  auto f = make_frame({"p", "q", "r", "s"});
  for (int i = 0; i < 100; ++i) {
    auto m = oracle::random_bpa<Rational>(f, rng, 4);
    for (std::uint64_t bits = 1; bits < 16; ++bits) {
      Subset s(bits);
      Rational bel = belief(m, s);
      Rational pls = plausibility(m, s);
      EXPECT_LE(bel, pls);
      EXPECT_EQ(pls, Rational(1) - belief(m, f->complement(s)));
    }
    EXPECT_EQ(belief(m, f->full()), Rational(1));
  }
}

TEST(MassFunction, Discounting) {
  auto f = abc();
  MassFunction<Rational> m(f, {{Subset(1), Rational(3, 5)}, {Subset(6), Rational(2, 5)}});
  auto d = discount(m, Rational(1, 2));
  EXPECT_EQ(d.mass(Subset(1)), Rational(3, 10));
  EXPECT_EQ(d.mass(Subset(6)), Rational(1, 5));
  EXPECT_EQ(d.theta_mass(), Rational(1, 2));
  EXPECT_TRUE(discount(m, Rational(0)).is_vacuous());
  EXPECT_EQ(discount(m, Rational(1)), m);
  EXPECT_THROW(discount(m, Rational(3, 2)), Error);
}

TEST(MassFunction, DoubleMatchesOracle) {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    auto f = numbered_frame("x", 1 + rng.below(6));
    auto a = oracle::random_bpa<double>(f, rng, 1 + rng.below(4));
    auto b = oracle::random_bpa<double>(f, rng, 1 + rng.below(4));
    auto [expected, k] = oracle::dempster(oracle::focal_list(a), oracle::focal_list(b));
    if (k >= 1.0 - 1e-12) continue;
    auto m = combine(a, b);
    EXPECT_NEAR(m.conflict(), k, 1e-12);
    for (const auto& [bits, v] : expected) EXPECT_NEAR(m.mass(Subset(bits)), v, 1e-12);
  }
}
