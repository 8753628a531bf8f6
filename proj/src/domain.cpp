#include "evclust/domain.hpp"

#include "evclust/error.hpp"

namespace evclust {

template <class T>
DomainDistribution<T>::DomainDistribution(std::map<std::size_t, T> masses) {
  T total(0);
  for (auto& [count, m] : masses) {
    if (m < T(0)) fail(Errc::mass, "negative domain mass for count " + std::to_string(count));
    total += m;
    if (m != T(0)) masses_.emplace(count, m);
  }
  bool ok = Numeric<T>::exact ? total == T(1) : Numeric<T>::sums_to_one(total);
  if (!ok) fail(Errc::mass, "domain prior sums to " + Numeric<T>::format(total) + ", expected 1");
}

template <class T>
DomainDistribution<T> DomainDistribution<T>::uniform(std::size_t lo, std::size_t hi) {
  if (hi < lo) fail(Errc::invalid_argument, "empty count range");
  std::map<std::size_t, T> masses;
  T each = T(1) / T(static_cast<long>(hi - lo + 1));
  for (std::size_t i = lo; i <= hi; ++i) masses[i] = each;
  DomainDistribution d;
  d.masses_ = std::move(masses);
  return d;
}

template <class T>
DomainDistribution<T> DomainDistribution<T>::certain(std::size_t count) {
  return DomainDistribution(std::map<std::size_t, T>{{count, T(1)}});
}

template <class T>
T DomainDistribution<T>::mass(std::size_t count) const {
  auto it = masses_.find(count);
  return it == masses_.end() ? T(0) : it->second;
}

template class DomainDistribution<double>;
template class DomainDistribution<Rational>;

}  // namespace evclust
