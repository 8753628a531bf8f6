#pragma once

// Posterior distribution over the number of clusters. Every evidence in a
// cluster supports the existence of that cluster to the degree that it
// supports anything other than the whole frame; the per-cluster supports
// are turned into a bpa on "at least r clusters" and combined with the prior.

#include "evclust/domain.hpp"
#include "evclust/mass_function.hpp"

#include <map>
#include <span>
#include <vector>

namespace evclust {

template <class T>
struct ExistenceEvidence {
  std::size_t cluster = 0;
  T support{0};          // m(chi_i is a real, non-empty cluster)
  bool clamped = false;  // the raw value fell outside [0,1]
};

/// support = 1 - prod_q m_q(frame) / (1 - k), k the conflict of combining
/// the (already discounted) evidences. Errc::total_conflict when k = 1.
template <class T>
ExistenceEvidence<T> existence_support(std::size_t cluster, std::span<const MassFunction<T>> discounted);

/// Scales the support by 1 - prod_q against_q: the joint support that every
/// member of the cluster is in fact a non-member.
template <class T>
ExistenceEvidence<T> falsity_discount_existence(ExistenceEvidence<T> ev, std::span<const T> member_against);

template <class T>
struct CountsBpa {
  /// masses[r] = m(|chi| >= r); masses[0] is the mass on the whole count frame.
  std::vector<T> masses;
};

/// Aggregates the independent existence supports by conjunction length.
template <class T>
CountsBpa<T> counts_bpa(std::span<const ExistenceEvidence<T>> existences);

template <class T>
struct PosteriorDistribution {
  std::map<std::size_t, T> probabilities;
  T conflict{0};
};

/// Dempster combination of a Bayesian prior with the counts bpa, where
/// m(|chi| >= r) is the focal set {E_r, E_r+1, ...}. Errc::total_conflict
/// when no count in the prior's support is plausible.
template <class T>
PosteriorDistribution<T> posterior(const DomainDistribution<T>& prior, const CountsBpa<T>& counts);

}  // namespace evclust
