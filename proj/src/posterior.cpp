#include "evclust/posterior.hpp"

#include "evclust/error.hpp"

#include <algorithm>

namespace evclust {

template <class T>
ExistenceEvidence<T> existence_support(std::size_t cluster, std::span<const MassFunction<T>> discounted) {
  if (discounted.empty()) fail(Errc::invalid_argument, "existence support needs at least one evidence");
  MassFunction<T> joint = combine_many(discounted);
  T residual(1);
  for (const auto& m : discounted) residual *= m.theta_mass();
  T raw = T(1) - residual / (T(1) - joint.conflict());
  ExistenceEvidence<T> out{cluster, raw, false};
  if (raw < T(0) || raw > T(1)) {
    out.support = raw < T(0) ? T(0) : T(1);
    out.clamped = true;
  }
  return out;
}

template <class T>
ExistenceEvidence<T> falsity_discount_existence(ExistenceEvidence<T> ev, std::span<const T> member_against) {
  T all_false(1);
  for (const T& a : member_against) {
    if (a < T(0) || a > T(1)) fail(Errc::invalid_argument, "membership mass outside [0,1]");
    all_false *= a;
  }
  if (member_against.empty()) all_false = T(0);
  ev.support *= T(1) - all_false;
  return ev;
}

template <class T>
CountsBpa<T> counts_bpa(std::span<const ExistenceEvidence<T>> existences) {
  // exact[j] = mass of conjunctions of exactly j supported clusters.
  std::vector<T> exact{T(1)};
  for (const auto& ev : existences) {
    if (ev.support < T(0) || ev.support > T(1)) fail(Errc::invalid_argument, "existence support outside [0,1]");
    std::vector<T> next(exact.size() + 1, T(0));
    for (std::size_t j = 0; j < exact.size(); ++j) {
      next[j] += exact[j] * (T(1) - ev.support);
      next[j + 1] += exact[j] * ev.support;
    }
    exact = std::move(next);
  }
  return CountsBpa<T>{std::move(exact)};
}

template <class T>
PosteriorDistribution<T> posterior(const DomainDistribution<T>& prior, const CountsBpa<T>& counts) {
  // Pls({E_i}) under the counts bpa is the mass of every "|chi| >= r" with r <= i.
  auto plausible = [&](std::size_t i) {
    T sum(0);
    for (std::size_t r = 0; r < counts.masses.size() && r <= i; ++r) sum += counts.masses[r];
    return sum;
  };
  PosteriorDistribution<T> out;
  T lost(0);
  for (const auto& [count, m] : prior.masses()) {
    T pls = plausible(count);
    lost += m * (T(1) - pls);
    out.probabilities[count] = m * pls;
  }
  out.conflict = lost;
  if (Numeric<T>::is_total_conflict(out.conflict)) {
    fail(Errc::total_conflict, "prior and cluster-count evidence are totally conflicting");
  }
  std::erase_if(out.probabilities, [](const auto& kv) { return kv.second == T(0); });
  const T norm = T(1) - lost;
  for (auto& [count, p] : out.probabilities) p /= norm;
  return out;
}

#define EVCLUST_INSTANTIATE(T)                                                                         \
  template ExistenceEvidence<T> existence_support(std::size_t, std::span<const MassFunction<T>>);      \
  template ExistenceEvidence<T> falsity_discount_existence(ExistenceEvidence<T>, std::span<const T>);  \
  template CountsBpa<T> counts_bpa(std::span<const ExistenceEvidence<T>>);                             \
  template PosteriorDistribution<T> posterior(const DomainDistribution<T>&, const CountsBpa<T>&);

EVCLUST_INSTANTIATE(double)
EVCLUST_INSTANTIATE(Rational)

}  // namespace evclust
