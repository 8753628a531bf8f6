#pragma once

#include "evclust/scalar.hpp"

#include <cstddef>
#include <map>

namespace evclust {

/// Prior masses m(E_i) over propositions "there are i clusters".
template <class T>
class DomainDistribution {
 public:
  DomainDistribution() = default;
  /// Non-negative masses summing to one (exactly for rationals).
  explicit DomainDistribution(std::map<std::size_t, T> masses);

  /// Uniform over [lo, hi].
  static DomainDistribution uniform(std::size_t lo, std::size_t hi);
  static DomainDistribution certain(std::size_t count);

  T mass(std::size_t count) const;
  /// c0 = sum over i != r of m(E_i), i.e. 1 - m(E_r).
  T domain_conflict(std::size_t r) const { return T(1) - mass(r); }
  std::size_t max_count() const { return masses_.empty() ? 0 : masses_.rbegin()->first; }
  const std::map<std::size_t, T>& masses() const { return masses_; }

 private:
  std::map<std::size_t, T> masses_;
};

}  // namespace evclust
