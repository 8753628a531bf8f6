#pragma once

// Minimization of the metaconflict over partitions.
//
// For a fixed number of clusters r the minimum is approached by steepest
// descent over single-evidence transfers (a local optimum only). The outer
// loop visits candidate r in decreasing prior mass m(E_r) and skips every r
// whose domain conflict 1 - m(E_r) already exceeds the best Mcf found: such
// an r cannot produce a smaller metaconflict since Mcf >= c0.

#include "evclust/partition.hpp"
#include "evclust/random.hpp"

#include <optional>

namespace evclust {

/// Uniformly shuffled assignment with every one of the r clusters non-empty.
Partition random_partition(std::size_t n, std::size_t r, Rng& rng);

/// Steepest descent from p0. Each step applies the single move with the
/// lowest Mcf if it is strictly lower than the current value; ties go to
/// the lowest evidence index, then the lowest destination cluster. Moves
/// that would empty a cluster are not considered.
template <class T>
Partition local_search(ConflictCache<T>& cache, const Partition& p0, const DomainDistribution<T>& prior,
                       std::vector<T>* trace = nullptr);

template <class T>
Partition local_search(const EvidenceSet<T>& set, const Partition& p0, const DomainDistribution<T>& prior);

struct SearchOptions {
  std::size_t restarts = 20;
  std::uint64_t seed = 0;
  bool prune = true;
};

template <class T>
struct CandidateOutcome {
  std::size_t clusters;
  T prior_mass;
  bool pruned = false;
  std::optional<T> best_mcf;  // empty when pruned
};

template <class T>
struct SearchResult {
  Partition partition;
  ConflictReport<T> report;
  std::vector<CandidateOutcome<T>> candidates;  // in exploration order
};

/// Throws Errc::no_feasible_r when the prior puts no mass on 1..n clusters.
template <class T>
SearchResult<T> search(const EvidenceSet<T>& set, const DomainDistribution<T>& prior, const SearchOptions& options);

template <class T>
struct BruteForceResult {
  Partition partition;
  ConflictReport<T> report;
  /// min_by_r[r] = global minimum over partitions with exactly r clusters.
  std::vector<std::optional<T>> min_by_r;
};

inline constexpr std::size_t brute_force_limit = 12;

/// Exhaustive minimum over partitions with 1..r_max clusters. Ties go to the
/// lexicographically smallest canonical labelling. Errc::too_large for n > 12.
template <class T>
BruteForceResult<T> brute_force(const EvidenceSet<T>& set, const DomainDistribution<T>& prior, std::size_t r_max);

}  // namespace evclust
