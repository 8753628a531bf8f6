#include "evclust/search.hpp"

#include "evclust/error.hpp"

#include <algorithm>
#include <numeric>

namespace evclust {

Partition random_partition(std::size_t n, std::size_t r, Rng& rng) {
  if (r == 0 || r > n) fail(Errc::invalid_argument, "cannot form " + std::to_string(r) + " non-empty clusters");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[order[i]] = i < r ? i : rng.below(r);
  return Partition(std::move(labels), r);
}

template <class T>
Partition local_search(ConflictCache<T>& cache, const Partition& p0, const DomainDistribution<T>& prior,
                       std::vector<T>* trace) {
  const std::size_t n = p0.size();
  const std::size_t r = p0.clusters();
  if (n != cache.evidences().size()) fail(Errc::invalid_argument, "partition does not cover the evidence set");

  std::vector<std::size_t> labels(p0.assignment().begin(), p0.assignment().end());
  std::vector<ClusterKey> keys(r, ClusterKey(n));
  std::vector<std::size_t> sizes(r, 0);
  for (std::size_t q = 0; q < n; ++q) {
    keys[labels[q]].set(q);
    ++sizes[labels[q]];
  }
  std::vector<T> conflicts;
  conflicts.reserve(r);
  for (const auto& k : keys) conflicts.push_back(cache.conflict(k));

  const T survival = prior.mass(r);
  T current = metaconflict_from<T>(survival, conflicts);
  if (trace) trace->push_back(current);

  std::vector<T> trial(r);
  for (;;) {
    T best = current;
    std::size_t best_q = n;
    std::size_t best_d = r;
    T best_home(0);
    T best_dest(0);
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t home = labels[q];
      if (sizes[home] == 1) continue;
      ClusterKey without = keys[home];
      without.reset(q);
      const T home_conflict = cache.conflict(without);
      for (std::size_t d = 0; d < r; ++d) {
        if (d == home) continue;
        ClusterKey with = keys[d];
        with.set(q);
        const T dest_conflict = cache.conflict(with);
        std::copy(conflicts.begin(), conflicts.end(), trial.begin());
        trial[home] = home_conflict;
        trial[d] = dest_conflict;
        T value = metaconflict_from<T>(survival, trial);
        if (value < best) {
          best = value;
          best_q = q;
          best_d = d;
          best_home = home_conflict;
          best_dest = dest_conflict;
        }
      }
    }
    if (best_q == n) break;
    const std::size_t home = labels[best_q];
    keys[home].reset(best_q);
    keys[best_d].set(best_q);
    --sizes[home];
    ++sizes[best_d];
    labels[best_q] = best_d;
    conflicts[home] = best_home;
    conflicts[best_d] = best_dest;
    current = best;
    if (trace) trace->push_back(current);
  }
  return Partition(std::move(labels), r);
}

template <class T>
Partition local_search(const EvidenceSet<T>& set, const Partition& p0, const DomainDistribution<T>& prior) {
  ConflictCache<T> cache(set);
  return local_search(cache, p0, prior);
}

template <class T>
SearchResult<T> search(const EvidenceSet<T>& set, const DomainDistribution<T>& prior, const SearchOptions& options) {
  if (options.restarts == 0) fail(Errc::invalid_argument, "restarts must be at least 1");
  const std::size_t n = set.size();

  std::vector<CandidateOutcome<T>> candidates;
  bool feasible = false;
  for (std::size_t r = 1; r <= n; ++r) {
    T m = prior.mass(r);
    if (m > T(0)) feasible = true;
    candidates.push_back(CandidateOutcome<T>{r, m, false, std::nullopt});
  }
  if (!feasible) {
    fail(Errc::no_feasible_r, "domain prior gives no mass to any cluster count in 1.." + std::to_string(n));
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.prior_mass > b.prior_mass; });

  ConflictCache<T> cache(set);
  std::optional<Partition> best;
  std::optional<T> best_mcf;
  for (auto& cand : candidates) {
    if (options.prune && best_mcf && *best_mcf < T(1) - cand.prior_mass) {
      cand.pruned = true;
      continue;
    }
    // Independent stream per r: results do not depend on which r were pruned.
    Rng rng(options.seed, cand.clusters);
    for (std::size_t restart = 0; restart < options.restarts; ++restart) {
      Partition p = local_search(cache, random_partition(n, cand.clusters, rng), prior);
      T value = metaconflict(cache, p, prior).mcf;
      if (!cand.best_mcf || value < *cand.best_mcf) cand.best_mcf = value;
      if (!best_mcf || value < *best_mcf) {
        best_mcf = value;
        best = std::move(p);
      }
    }
  }
  // labels by first appearance, so reports do not depend on restart labelling
  Partition chosen = best->canonical();
  ConflictReport<T> report = metaconflict(cache, chosen, prior);
  return SearchResult<T>{chosen, std::move(report), std::move(candidates)};
}

template <class T>
BruteForceResult<T> brute_force(const EvidenceSet<T>& set, const DomainDistribution<T>& prior, std::size_t r_max) {
  const std::size_t n = set.size();
  if (n > brute_force_limit) {
    fail(Errc::too_large, "brute force is limited to " + std::to_string(brute_force_limit) + " evidences");
  }
  r_max = std::clamp<std::size_t>(r_max, 1, n);

  ConflictCache<T> cache(set);
  std::vector<std::optional<T>> min_by_r(r_max + 1);
  std::optional<T> best_mcf;
  std::vector<std::size_t> best_labels;
  std::size_t best_r = 0;

  // Restricted growth strings in lexicographic order.
  std::vector<std::size_t> labels(n, 0);
  std::vector<ClusterKey> keys(r_max, ClusterKey(n));
  std::vector<T> conflicts;
  auto visit = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == n) {
      conflicts.clear();
      for (std::size_t c = 0; c < used; ++c) conflicts.push_back(cache.conflict(keys[c]));
      T value = metaconflict_from<T>(prior.mass(used), conflicts);
      auto& slot = min_by_r[used];
      if (!slot || value < *slot) slot = value;
      if (!best_mcf || value < *best_mcf) {
        best_mcf = value;
        best_labels = labels;
        best_r = used;
      }
      return;
    }
    const std::size_t limit = std::min(used + 1, r_max);
    for (std::size_t c = 0; c < limit; ++c) {
      labels[i] = c;
      keys[c].set(i);
      self(self, i + 1, std::max(used, c + 1));
      keys[c].reset(i);
    }
  };
  labels[0] = 0;
  keys[0].set(0);
  visit(visit, 1, 1);

  Partition p(std::move(best_labels), best_r);
  ConflictReport<T> report = metaconflict(cache, p, prior);
  return BruteForceResult<T>{std::move(p), std::move(report), std::move(min_by_r)};
}

#define EVCLUST_INSTANTIATE(T)                                                                                    \
  template Partition local_search(ConflictCache<T>&, const Partition&, const DomainDistribution<T>&, std::vector<T>*); \
  template Partition local_search(const EvidenceSet<T>&, const Partition&, const DomainDistribution<T>&);          \
  template SearchResult<T> search(const EvidenceSet<T>&, const DomainDistribution<T>&, const SearchOptions&);      \
  template BruteForceResult<T> brute_force(const EvidenceSet<T>&, const DomainDistribution<T>&, std::size_t);

EVCLUST_INSTANTIATE(double)
EVCLUST_INSTANTIATE(Rational)

}  // namespace evclust
