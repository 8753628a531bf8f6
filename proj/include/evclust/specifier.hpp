#pragma once

// Specification of nonspecific evidence: for an evidence e_q of a chosen
// partition, the change in cluster and domain conflict caused by moving e_q
// is read as simple support for or against e_q belonging to each cluster.
// The supports are combined on the membership frame {chi_1..chi_n[, chi_n+1]}.

#include "evclust/partition.hpp"

#include <optional>
#include <vector>

namespace evclust {

/// Reading of the support produced when moving a lone evidence out of its
/// cluster raises the domain conflict.
enum class SingletonSupport {
  as_printed,  // c0 / c0*
  complement,  // 1 - c0 / c0*
};

/// Removal of e_q lowers its home cluster's conflict from c to c*:
/// support (c - c*) / (1 - c*) that e_q is not in the home cluster.
/// Satisfies c = c* + result * (1 - c*). Errc::domain if c* > c or c* = 1.
template <class T>
T mass_out(const T& c, const T& c_star);

/// Insertion of e_q raises cluster k's conflict from c to c*:
/// support (c* - c) / (1 - c) that e_q is not in cluster k.
template <class T>
T mass_in(const T& c, const T& c_star);

/// Opening a fresh cluster raises the domain conflict from c0 to c0*:
/// support (c0* - c0) / (1 - c0) that e_q is not in the fresh cluster.
template <class T>
T mass_new_subset(const T& c0, const T& c0_star);

template <class T>
struct SingletonSourceMass {
  std::optional<T> against_home;
  std::optional<T> for_home;
};

/// e_q alone in its cluster and moved elsewhere: a domain-conflict decrease
/// gives (c0 - c0*) / (1 - c0*) against the home cluster; an increase gives
/// support for the home cluster (see SingletonSupport); no change gives none.
template <class T>
SingletonSourceMass<T> mass_singleton_source(const T& c0, const T& c0_star, SingletonSupport mode);

template <class T>
struct MembershipAssessment {
  std::size_t evidence = 0;
  std::size_t home = 0;
  std::size_t clusters = 0;        // n, existing clusters
  bool fresh_cluster = false;      // membership frame has chi_{n+1}
  std::vector<T> against;          // per membership-frame label; 0 = no support
  std::optional<T> for_home;
  std::vector<T> bel;              // Bel(e_q in chi_k)
  std::vector<T> pls;              // Pls(e_q in chi_k)
  T falsity{0};                    // conflict of the combination

  std::size_t frame_size() const { return clusters + (fresh_cluster ? 1 : 0); }
};

struct SpecifyOptions {
  SingletonSupport singleton_support = SingletonSupport::as_printed;
};

/// Labels chi1..chi<n> (plus chi<n+1> when `fresh`).
FramePtr membership_frame(std::size_t clusters, bool fresh);

template <class T>
MembershipAssessment<T> assess(ConflictCache<T>& cache, const Partition& p, const DomainDistribution<T>& prior,
                               std::size_t evidence, const SpecifyOptions& options = {});

template <class T>
MembershipAssessment<T> assess(const EvidenceSet<T>& set, const Partition& p, const DomainDistribution<T>& prior,
                               std::size_t evidence, const SpecifyOptions& options = {});

/// Relative plausibility Pls_k / sum_j Pls_j over the whole membership frame.
template <class T>
std::vector<T> credibility(const MembershipAssessment<T>& a);

/// alpha_k = (1 - falsity) * credibility_k for each existing cluster k.
template <class T>
std::vector<T> discount_factors(const MembershipAssessment<T>& a);

/// The assessed evidence discounted to its credibility in every existing
/// cluster, indexed by cluster.
template <class T>
std::vector<Evidence<T>> credibility_and_discount(const MembershipAssessment<T>& a, const EvidenceSet<T>& set,
                                                  const Partition& p);

}  // namespace evclust
