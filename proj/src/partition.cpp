#include "evclust/partition.hpp"

#include "evclust/error.hpp"
#include "evclust/random.hpp"

#include <algorithm>
#include <limits>

namespace evclust {

Partition::Partition(std::vector<std::size_t> assignment, std::size_t clusters)
    : assignment_(std::move(assignment)), clusters_(clusters) {
  if (assignment_.empty()) fail(Errc::invalid_argument, "partition of an empty set");
  if (clusters_ == 0 || clusters_ > assignment_.size()) {
    fail(Errc::invalid_argument, "cluster count must lie in 1..n");
  }
  std::vector<bool> used(clusters_, false);
  for (std::size_t label : assignment_) {
    if (label >= clusters_) fail(Errc::invalid_argument, "cluster label out of range");
    used[label] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    fail(Errc::invalid_argument, "partition has an empty cluster");
  }
}

Partition Partition::from_labels(std::vector<std::size_t> assignment) {
  std::size_t r = assignment.empty() ? 0 : *std::max_element(assignment.begin(), assignment.end()) + 1;
  return Partition(std::move(assignment), r);
}

std::size_t Partition::cluster_size(std::size_t cluster) const {
  return static_cast<std::size_t>(std::count(assignment_.begin(), assignment_.end(), cluster));
}

std::vector<std::size_t> Partition::members(std::size_t cluster) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] == cluster) out.push_back(i);
  }
  return out;
}

Partition Partition::moved(std::size_t evidence, std::size_t destination) const {
  std::vector<std::size_t> next = assignment_;
  next.at(evidence) = destination;
  return Partition(std::move(next), clusters_);
}

Partition Partition::canonical() const {
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> relabel(clusters_, unset);
  std::size_t next = 0;
  std::vector<std::size_t> out(assignment_.size());
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    std::size_t& l = relabel[assignment_[i]];
    if (l == unset) l = next++;
    out[i] = l;
  }
  return Partition(std::move(out), clusters_);
}

ClusterKey::ClusterKey(std::size_t n, std::span<const std::size_t> members) : ClusterKey(n) {
  for (std::size_t i : members) set(i);
}

std::vector<std::size_t> ClusterKey::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t ClusterKey::hash() const {
  std::uint64_t h = 0x243F6A8885A308D3ULL;
  for (std::uint64_t w : words_) h = splitmix64(h ^ w);
  return static_cast<std::size_t>(h);
}

template <class T>
const T& ConflictCache<T>::conflict(const ClusterKey& key) {
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  std::vector<std::size_t> members = key.members();
  return memo_.emplace(key, same_event_conflict(*set_, std::span<const std::size_t>(members))).first->second;
}

template <class T>
T ConflictCache<T>::conflict(std::span<const std::size_t> members) {
  return conflict(ClusterKey(set_->size(), members));
}

template <class T>
T metaconflict_from(const T& domain_survival, std::span<const T> cluster_conflicts) {
  T survival = domain_survival;
  for (const T& c : cluster_conflicts) survival *= T(1) - c;
  return T(1) - survival;
}

template <class T>
ConflictReport<T> metaconflict(ConflictCache<T>& cache, const Partition& p, const DomainDistribution<T>& prior) {
  if (p.size() != cache.evidences().size()) fail(Errc::invalid_argument, "partition does not cover the evidence set");
  ConflictReport<T> report;
  report.per_cluster.reserve(p.clusters());
  for (std::size_t c = 0; c < p.clusters(); ++c) {
    std::vector<std::size_t> members = p.members(c);
    report.per_cluster.push_back(cache.conflict(std::span<const std::size_t>(members)));
  }
  T survival = prior.mass(p.clusters());
  report.domain = T(1) - survival;
  report.mcf = metaconflict_from<T>(survival, report.per_cluster);
  return report;
}

template <class T>
ConflictReport<T> metaconflict(const EvidenceSet<T>& set, const Partition& p, const DomainDistribution<T>& prior) {
  ConflictCache<T> cache(set);
  return metaconflict(cache, p, prior);
}

#define EVCLUST_INSTANTIATE(T)                                                                               \
  template class ConflictCache<T>;                                                                           \
  template T metaconflict_from(const T&, std::span<const T>);                                                \
  template ConflictReport<T> metaconflict(ConflictCache<T>&, const Partition&, const DomainDistribution<T>&); \
  template ConflictReport<T> metaconflict(const EvidenceSet<T>&, const Partition&, const DomainDistribution<T>&);

EVCLUST_INSTANTIATE(double)
EVCLUST_INSTANTIATE(Rational)

}  // namespace evclust
