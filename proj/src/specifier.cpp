#include "evclust/specifier.hpp"

#include "evclust/error.hpp"

#include <algorithm>

namespace evclust {

namespace {

template <class T>
void require_unit(const T& x, const char* what) {
  if (x < T(0) || x > T(1)) fail(Errc::domain, std::string(what) + " must lie in [0,1]");
}

// Conflicts of nested clusters computed by separate folds can disagree in
// the last bit; within that noise the smaller value is taken as ordered.
template <class T>
T ordered_below(const T& low, const T& high, const char* what) {
  if (!Numeric<T>::leq(low, high)) fail(Errc::domain, what);
  return low < high ? low : high;
}

}  // namespace

template <class T>
T mass_out(const T& c, const T& c_star) {
  require_unit(c, "cluster conflict");
  require_unit(c_star, "reduced cluster conflict");
  T low = ordered_below(c_star, c, "removing an evidence cannot raise a cluster's conflict");
  if (low == c) return T(0);
  if (Numeric<T>::is_total_conflict(low)) fail(Errc::domain, "reduced cluster conflict is 1");
  return (c - low) / (T(1) - low);
}

template <class T>
T mass_in(const T& c, const T& c_star) {
  require_unit(c, "cluster conflict");
  require_unit(c_star, "enlarged cluster conflict");
  T low = ordered_below(c, c_star, "adding an evidence cannot lower a cluster's conflict");
  if (low == c_star) return T(0);
  if (Numeric<T>::is_total_conflict(low)) fail(Errc::domain, "cluster conflict is 1 before insertion");
  return (c_star - low) / (T(1) - low);
}

template <class T>
T mass_new_subset(const T& c0, const T& c0_star) {
  require_unit(c0, "domain conflict");
  require_unit(c0_star, "domain conflict");
  if (c0_star < c0) fail(Errc::domain, "domain conflict must not decrease when a cluster is added");
  if (c0_star == c0) return T(0);
  if (Numeric<T>::is_total_conflict(c0)) fail(Errc::domain, "domain conflict is 1 at the current cluster count");
  return (c0_star - c0) / (T(1) - c0);
}

template <class T>
SingletonSourceMass<T> mass_singleton_source(const T& c0, const T& c0_star, SingletonSupport mode) {
  require_unit(c0, "domain conflict");
  require_unit(c0_star, "domain conflict");
  SingletonSourceMass<T> out;
  if (c0_star < c0) {
    out.against_home = (c0 - c0_star) / (T(1) - c0_star);
  } else if (c0_star > c0) {
    T ratio = c0 / c0_star;
    out.for_home = mode == SingletonSupport::as_printed ? ratio : T(1) - ratio;
  }
  return out;
}

FramePtr membership_frame(std::size_t clusters, bool fresh) {
  return numbered_frame("chi", clusters + (fresh ? 1 : 0));
}

template <class T>
MembershipAssessment<T> assess(ConflictCache<T>& cache, const Partition& p, const DomainDistribution<T>& prior,
                               std::size_t evidence, const SpecifyOptions& options) {
  const std::size_t n_evidence = cache.evidences().size();
  if (p.size() != n_evidence) fail(Errc::invalid_argument, "partition does not cover the evidence set");
  if (evidence >= n_evidence) fail(Errc::invalid_argument, "evidence index out of range");

  MembershipAssessment<T> a;
  a.evidence = evidence;
  a.home = p.cluster_of(evidence);
  a.clusters = p.clusters();
  const std::size_t n = a.clusters;
  std::vector<std::size_t> home_members = p.members(a.home);
  a.fresh_cluster = home_members.size() > 1;
  a.against.assign(a.frame_size(), T(0));

  const T c0 = prior.domain_conflict(n);
  if (a.fresh_cluster) {
    ClusterKey home_key(n_evidence, home_members);
    T c = cache.conflict(home_key);
    home_key.reset(evidence);
    T c_star = cache.conflict(home_key);
    a.against[a.home] = mass_out(c, c_star);
    // A fresh cluster that lowers the domain conflict gives no support against it.
    const T c0_fresh = prior.domain_conflict(n + 1);
    if (c0 <= c0_fresh) a.against[n] = mass_new_subset(c0, c0_fresh);
  } else if (n >= 2) {
    auto s = mass_singleton_source(c0, prior.domain_conflict(n - 1), options.singleton_support);
    if (s.against_home) a.against[a.home] = *s.against_home;
    a.for_home = s.for_home;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (k == a.home) continue;
    std::vector<std::size_t> members = p.members(k);
    ClusterKey key(n_evidence, members);
    T c = cache.conflict(key);
    key.set(evidence);
    a.against[k] = mass_in(c, cache.conflict(key));
  }

  FramePtr frame = membership_frame(n, a.fresh_cluster);
  std::vector<MassFunction<T>> supports;
  for (std::size_t j = 0; j < a.against.size(); ++j) {
    if (a.against[j] > T(0)) {
      supports.push_back(MassFunction<T>::simple_support(frame, frame->complement(frame->atom(j)), a.against[j]));
    }
  }
  if (a.for_home && *a.for_home > T(0)) {
    supports.push_back(MassFunction<T>::simple_support(frame, frame->atom(a.home), *a.for_home));
  }
  MassFunction<T> combined = supports.empty() ? MassFunction<T>::vacuous(frame)
                                              : combine_many<T>(supports);
  a.falsity = combined.conflict();
  for (std::size_t j = 0; j < frame->size(); ++j) {
    a.bel.push_back(belief(combined, frame->atom(j)));
    a.pls.push_back(plausibility(combined, frame->atom(j)));
  }
  return a;
}

template <class T>
MembershipAssessment<T> assess(const EvidenceSet<T>& set, const Partition& p, const DomainDistribution<T>& prior,
                               std::size_t evidence, const SpecifyOptions& options) {
  ConflictCache<T> cache(set);
  return assess(cache, p, prior, evidence, options);
}

template <class T>
std::vector<T> credibility(const MembershipAssessment<T>& a) {
  T total(0);
  for (const T& v : a.pls) total += v;
  std::vector<T> out;
  out.reserve(a.pls.size());
  for (const T& v : a.pls) out.push_back(total > T(0) ? T(v / total) : T(0));
  return out;
}

template <class T>
std::vector<T> discount_factors(const MembershipAssessment<T>& a) {
  std::vector<T> cred = credibility(a);
  std::vector<T> out;
  out.reserve(a.clusters);
  for (std::size_t k = 0; k < a.clusters; ++k) {
    T alpha = (T(1) - a.falsity) * cred[k];
    if constexpr (!Numeric<T>::exact) alpha = std::clamp(alpha, 0.0, 1.0);
    out.push_back(alpha);
  }
  return out;
}

template <class T>
std::vector<Evidence<T>> credibility_and_discount(const MembershipAssessment<T>& a, const EvidenceSet<T>& set,
                                                  const Partition& p) {
  if (p.clusters() != a.clusters || a.evidence >= set.size()) {
    fail(Errc::invalid_argument, "assessment does not belong to this partition");
  }
  const Evidence<T>& ev = set[a.evidence];
  std::vector<Evidence<T>> out;
  for (const T& alpha : discount_factors(a)) out.push_back(Evidence<T>{ev.id, discount(ev.mass, alpha), ev.metadata});
  return out;
}

#define EVCLUST_INSTANTIATE(T)                                                                                   \
  template T mass_out(const T&, const T&);                                                                       \
  template T mass_in(const T&, const T&);                                                                        \
  template T mass_new_subset(const T&, const T&);                                                                \
  template SingletonSourceMass<T> mass_singleton_source(const T&, const T&, SingletonSupport);                   \
  template MembershipAssessment<T> assess(ConflictCache<T>&, const Partition&, const DomainDistribution<T>&,     \
                                          std::size_t, const SpecifyOptions&);                                   \
  template MembershipAssessment<T> assess(const EvidenceSet<T>&, const Partition&, const DomainDistribution<T>&, \
                                          std::size_t, const SpecifyOptions&);                                   \
  template std::vector<T> credibility(const MembershipAssessment<T>&);                                           \
  template std::vector<T> discount_factors(const MembershipAssessment<T>&);                                      \
  template std::vector<Evidence<T>> credibility_and_discount(const MembershipAssessment<T>&,                     \
                                                             const EvidenceSet<T>&, const Partition&);

EVCLUST_INSTANTIATE(double)
EVCLUST_INSTANTIATE(Rational)

}  // namespace evclust
