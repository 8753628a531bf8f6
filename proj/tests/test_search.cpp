#include "evclust/error.hpp"
#include "evclust/search.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace evclust;

namespace {

bool is_local_optimum(const EvidenceSet<Rational>& set, const Partition& p, const DomainDistribution<Rational>& prior) {
  Rational here = metaconflict(set, p, prior).mcf;
  for (std::size_t q = 0; q < p.size(); ++q) {
    if (p.cluster_size(p.cluster_of(q)) == 1) continue;
    for (std::size_t d = 0; d < p.clusters(); ++d) {
      if (d == p.cluster_of(q)) continue;
      if (metaconflict(set, p.moved(q, d), prior).mcf < here) return false;
    }
  }
  return true;
}

}  // namespace

TEST(RandomPartition, AllClustersNonEmpty) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng.below(9);
    std::size_t r = 1 + rng.below(n);
    Partition p = random_partition(n, r, rng);
    for (std::size_t c = 0; c < r; ++c) EXPECT_GE(p.cluster_size(c), 1u);
  }
  EXPECT_THROW(random_partition(2, 3, rng), Error);
}

TEST(LocalSearch, DescendsToLocalOptimum) {
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 3 + rng.below(4);
    auto set = oracle::random_evidence_set<Rational>(n, rng);
    auto prior = oracle::random_prior<Rational>(n, rng);
    std::size_t r = 1 + rng.below(n);
    ConflictCache<Rational> cache(set);
    std::vector<Rational> trace;
    Partition p = local_search(cache, random_partition(n, r, rng), prior, &trace);
    EXPECT_EQ(p.clusters(), r);
    for (std::size_t t = 1; t < trace.size(); ++t) EXPECT_LT(trace[t], trace[t - 1]);
    EXPECT_EQ(trace.back(), metaconflict(set, p, prior).mcf);
    EXPECT_TRUE(is_local_optimum(set, p, prior));
  }
}

TEST(Search, Deterministic) {
  Rng rng(5);
  auto set = oracle::random_evidence_set<double>(8, rng);
  auto prior = oracle::random_prior<double>(5, rng);
  SearchOptions opt{10, 99, true};
  auto a = search(set, prior, opt);
  auto b = search(set, prior, opt);
  EXPECT_EQ(a.partition, b.partition);
  EXPECT_EQ(a.report.mcf, b.report.mcf);
}

TEST(Search, ExplorationOrderAndPruning) {
  Rng rng(21);
  auto set = oracle::random_evidence_set<Rational>(5, rng);
  DomainDistribution<Rational> prior({{1, Rational(1, 10)}, {2, Rational(3, 5)}, {3, Rational(3, 10)}});
  auto res = search(set, prior, {5, 0, true});
  ASSERT_EQ(res.candidates.size(), 5u);
  EXPECT_EQ(res.candidates[0].clusters, 2u);
  EXPECT_EQ(res.candidates[1].clusters, 3u);
  EXPECT_EQ(res.candidates[2].clusters, 1u);
  // zero-mass counts have c0 = 1 and are always pruned once anything is found
  EXPECT_TRUE(res.candidates[3].pruned);
  EXPECT_TRUE(res.candidates[4].pruned);
  for (const auto& c : res.candidates) {
    if (!c.pruned) continue;
    EXPECT_LT(res.report.mcf, Rational(1) - c.prior_mass);
  }
}

TEST(Search, NoFeasibleCount) {
  Rng rng(2);
  auto set = oracle::random_evidence_set<Rational>(3, rng);
  DomainDistribution<Rational> prior({{5, Rational(1)}});
  try {
    search(set, prior, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::no_feasible_r);
  }
}

TEST(BruteForce, MatchesRecursiveEnumeration) {
  Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    std::size_t n = 1 + rng.below(6);
    auto set = oracle::random_evidence_set<Rational>(n, rng);
    auto prior = oracle::random_prior<Rational>(n, rng);
    auto bf = brute_force(set, prior, n);
    auto expected = oracle::min_by_r(set, prior);
    for (std::size_t r = 1; r <= n; ++r) EXPECT_EQ(bf.min_by_r[r], expected[r]);
    EXPECT_EQ(bf.report.mcf, metaconflict(set, bf.partition, prior).mcf);
  }
}

TEST(BruteForce, SizeGuard) {
  Rng rng(4);
  auto set = oracle::random_evidence_set<double>(13, rng);
  EXPECT_THROW(brute_force(set, DomainDistribution<double>::certain(2), 3), Error);
}
