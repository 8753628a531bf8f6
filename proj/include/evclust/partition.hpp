#pragma once

// Partitions of an evidence set into clusters and the metaconflict criterion
//
//   Mcf = 1 - (1 - c0) * prod_i (1 - c_i)
//
// where c_i is the same-event conflict inside cluster i and c0 = 1 - m(E_r)
// is the conflict between the number of clusters r and the domain prior.

#include "evclust/domain.hpp"
#include "evclust/evidence.hpp"

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace evclust {

/// Assignment of n evidences to r non-empty clusters, labelled 0..r-1.
class Partition {
 public:
  /// Throws Errc::invalid_argument if a label is >= clusters or a cluster is empty.
  Partition(std::vector<std::size_t> assignment, std::size_t clusters);
  /// Cluster count inferred as max label + 1.
  static Partition from_labels(std::vector<std::size_t> assignment);

  std::size_t size() const { return assignment_.size(); }
  std::size_t clusters() const { return clusters_; }
  std::size_t cluster_of(std::size_t evidence) const { return assignment_.at(evidence); }
  std::span<const std::size_t> assignment() const { return assignment_; }
  std::size_t cluster_size(std::size_t cluster) const;
  std::vector<std::size_t> members(std::size_t cluster) const;

  /// Moves one evidence; the source cluster must keep at least one member.
  Partition moved(std::size_t evidence, std::size_t destination) const;
  /// Labels renumbered in order of first appearance (restricted growth form).
  Partition canonical() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> assignment_;
  std::size_t clusters_;
};

template <class T>
struct ConflictReport {
  std::vector<T> per_cluster;  // c_1..c_r
  T domain;                    // c0
  T mcf;
};

/// Membership bitmask over evidence indices.
class ClusterKey {
 public:
  explicit ClusterKey(std::size_t n) : words_((n + 63) / 64, 0) {}
  ClusterKey(std::size_t n, std::span<const std::size_t> members);

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::vector<std::size_t> members() const;

  friend bool operator==(const ClusterKey&, const ClusterKey&) = default;
  std::size_t hash() const;

 private:
  std::vector<std::uint64_t> words_;
};

struct ClusterKeyHash {
  std::size_t operator()(const ClusterKey& k) const { return k.hash(); }
};

/// Memoized same-event conflicts keyed by cluster content. Not thread-safe;
/// use one cache per thread.
template <class T>
class ConflictCache {
 public:
  explicit ConflictCache(const EvidenceSet<T>& set) : set_(&set) {}

  const EvidenceSet<T>& evidences() const { return *set_; }
  const T& conflict(const ClusterKey& key);
  T conflict(std::span<const std::size_t> members);
  std::size_t entries() const { return memo_.size(); }

 private:
  const EvidenceSet<T>* set_;
  std::unordered_map<ClusterKey, T, ClusterKeyHash> memo_;
};

/// 1 - survival * prod(1 - c_i), multiplied in cluster order. Every Mcf value
/// in the library goes through this function, so comparisons between
/// partitions are consistent bit for bit.
template <class T>
T metaconflict_from(const T& domain_survival, std::span<const T> cluster_conflicts);

template <class T>
ConflictReport<T> metaconflict(ConflictCache<T>& cache, const Partition& p, const DomainDistribution<T>& prior);

template <class T>
ConflictReport<T> metaconflict(const EvidenceSet<T>& set, const Partition& p, const DomainDistribution<T>& prior);

}  // namespace evclust
