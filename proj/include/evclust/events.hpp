#pragma once

// Metalevel assignment of clusters to real-world events. Each cluster's
// combined evidence, marginalized to the event coordinate, says which events
// it may concern. The per-cluster bpas are combined on the frame of
// injective cluster -> event mappings: no event may be claimed by two
// clusters, so a product of focal sets that admits no injective choice of
// one event per cluster is conflict.

#include "evclust/evidence.hpp"

#include <optional>
#include <span>
#include <vector>

namespace evclust {

template <class T>
struct EventEvidence {
  std::size_t cluster = 0;
  MassFunction<T> events;  // over JointFrame::events()
};

/// Projection of a joint-frame bpa onto the event coordinate.
template <class T>
MassFunction<T> marginalize_events(const JointFrame& frame, const MassFunction<T>& joint);

/// Combines the members on the joint frame, then marginalizes.
template <class T>
EventEvidence<T> project_events(std::size_t cluster, const EvidenceSet<T>& set, std::span<const std::size_t> members);

template <class T>
struct Assignment {
  struct JointFocal {
    std::vector<Subset> choices;  // event set per cluster
    T mass;
  };
  std::vector<JointFocal> joint;             // normalized, consistent focal tuples
  T conflict{0};
  std::vector<std::vector<T>> bel;           // [cluster][event]
  std::vector<std::vector<T>> pls;           // [cluster][event]
  std::vector<std::optional<std::size_t>> preferred;  // event per cluster
};

inline constexpr std::size_t assign_cluster_limit = 6;

/// Errc::too_large beyond 6 clusters; Errc::total_conflict when every
/// product of focal sets violates exclusivity.
template <class T>
Assignment<T> assign(std::span<const EventEvidence<T>> evidences);

/// True when one distinct event can be chosen from every set.
bool has_distinct_representatives(std::span<const Subset> sets);

}  // namespace evclust
