#pragma once

// Test-only reference implementations. They share no code path with the
// library beyond the value types: focal lists are plain vectors, combination
// is an explicit loop over focal tuples, partitions are enumerated by
// recursive insertion rather than restricted growth strings.

#include "evclust/document.hpp"
#include "evclust/random.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using evclust::Rational;

template <class T>
using FocalList = std::vector<std::pair<std::uint64_t, T>>;

template <class T>
FocalList<T> focal_list(const evclust::MassFunction<T>& m) {
  FocalList<T> out;
  for (const auto& [s, v] : m.focal()) out.emplace_back(s.bits(), v);
  return out;
}

template <class T>
void add_mass(FocalList<T>& list, std::uint64_t bits, const T& m) {
  for (auto& [b, v] : list) {
    if (b == bits) {
      v += m;
      return;
    }
  }
  list.emplace_back(bits, m);
}

/// Unnormalized conjunctive product; the second member is the empty-set mass.
template <class T>
std::pair<FocalList<T>, T> conjunctive(const FocalList<T>& a, const FocalList<T>& b) {
  FocalList<T> out;
  T empty(0);
  for (const auto& [sa, ma] : a) {
    for (const auto& [sb, mb] : b) {
      std::uint64_t c = sa & sb;
      if (c == 0) {
        empty += ma * mb;
      } else {
        add_mass(out, c, ma * mb);
      }
    }
  }
  return {out, empty};
}

/// Dempster's rule by the textbook double loop.
template <class T>
std::pair<FocalList<T>, T> dempster(const FocalList<T>& a, const FocalList<T>& b) {
  auto [out, k] = conjunctive(a, b);
  for (auto& [s, v] : out) v /= (T(1) - k);
  return {out, k};
}

/// Conflict of combining several bpas, by enumerating every focal tuple.
template <class T>
T tuple_conflict(const std::vector<FocalList<T>>& ms) {
  T empty(0);
  std::function<void(std::size_t, std::uint64_t, T)> walk = [&](std::size_t i, std::uint64_t acc, T mass) {
    if (acc == 0) {
      empty += mass;
      return;
    }
    if (i == ms.size()) return;
    for (const auto& [s, m] : ms[i]) walk(i + 1, acc & s, mass * m);
  };
  walk(0, ~std::uint64_t{0}, T(1));
  return empty;
}

template <class T>
T lookup(const FocalList<T>& list, std::uint64_t bits) {
  for (const auto& [b, v] : list) {
    if (b == bits) return v;
  }
  return T(0);
}

/// Random bpa on a frame of `atoms` atoms with up to `focals` focal elements
/// (masses are multiples of 1/denominator).
template <class T>
evclust::MassFunction<T> random_bpa(const evclust::FramePtr& frame, evclust::Rng& rng, std::size_t focals,
                                    long denominator = 20) {
  const std::uint64_t full = frame->full().bits();
  std::vector<long> weights(focals);
  long total = 0;
  for (auto& w : weights) {
    w = 1 + static_cast<long>(rng.below(static_cast<std::size_t>(denominator)));
    total += w;
  }
  std::vector<typename evclust::MassFunction<T>::Focal> list;
  for (std::size_t i = 0; i < focals; ++i) {
    std::uint64_t bits = 0;
    while (bits == 0) bits = rng.next() & full;
    if constexpr (std::is_same_v<T, Rational>) {
      list.emplace_back(evclust::Subset(bits), Rational(weights[i], total));
    } else {
      list.emplace_back(evclust::Subset(bits), static_cast<double>(weights[i]) / static_cast<double>(total));
    }
  }
  return evclust::MassFunction<T>(frame, std::move(list));
}

/// Random evidence set on a small joint frame. Every evidence keeps a
/// strictly positive mass on the whole frame, so no cluster conflict is 1.
template <class T>
evclust::EvidenceSet<T> random_evidence_set(std::size_t n, evclust::Rng& rng, std::size_t actions = 3,
                                            std::size_t events = 3) {
  auto frame = std::make_shared<const evclust::JointFrame>(evclust::numbered_frame("a", actions),
                                                           evclust::numbered_frame("E", events));
  std::vector<evclust::Evidence<T>> out;
  for (std::size_t i = 0; i < n; ++i) {
    // Informative masses in tenths, leaving at least 0.1 on the whole frame.
    std::vector<long> tenths{1 + static_cast<long>(rng.below(8))};
    if (tenths[0] < 8 && rng.chance(0.5)) tenths.push_back(1 + static_cast<long>(rng.below(static_cast<std::size_t>(8 - tenths[0]))));
    std::vector<typename evclust::MassFunction<T>::Focal> list;
    for (long w : tenths) {
      std::uint64_t a = 0;
      std::uint64_t e = 0;
      while (a == 0) a = rng.next() & frame->actions().full().bits();
      while (e == 0) e = rng.next() & frame->events().full().bits();
      evclust::Subset s = frame->rectangle(evclust::Subset(a), evclust::Subset(e));
      if constexpr (std::is_same_v<T, Rational>) {
        list.emplace_back(s, Rational(w, 10));
      } else {
        list.emplace_back(s, static_cast<double>(w) / 10.0);
      }
    }
    T rest(1);
    for (const auto& [s, m] : list) rest -= m;
    list.emplace_back(frame->product()->full(), rest);
    out.push_back({"e" + std::to_string(i + 1), evclust::MassFunction<T>(frame->product(), std::move(list)), {}});
  }
  return evclust::EvidenceSet<T>(frame, std::move(out));
}

/// Random prior over 1..max_count with masses in tenths.
template <class T>
evclust::DomainDistribution<T> random_prior(std::size_t max_count, evclust::Rng& rng) {
  std::vector<long> w(max_count);
  long total = 0;
  for (auto& x : w) {
    x = static_cast<long>(rng.below(6));
    total += x;
  }
  if (total == 0) {
    w[rng.below(max_count)] = 1;
    total = 1;
  }
  std::map<std::size_t, T> masses;
  for (std::size_t i = 0; i < max_count; ++i) {
    if constexpr (std::is_same_v<T, Rational>) {
      masses[i + 1] = Rational(w[i], total);
    } else {
      masses[i + 1] = static_cast<double>(w[i]) / static_cast<double>(total);
    }
  }
  return evclust::DomainDistribution<T>(std::move(masses));
}

/// Every set partition of {0..n-1}, built by inserting element i into an
/// existing block or a new one.
inline void for_each_partition(std::size_t n, const std::function<void(const std::vector<std::vector<std::size_t>>&)>& f) {
  std::vector<std::vector<std::size_t>> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      f(blocks);
      return;
    }
    // by index: the recursion may grow `blocks`
    for (std::size_t b = 0, nb = blocks.size(); b < nb; ++b) {
      blocks[b].push_back(i);
      rec(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({i});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

/// Metaconflict of a block list computed from scratch by tuple enumeration.
template <class T>
T metaconflict(const evclust::EvidenceSet<T>& set, const std::vector<std::vector<std::size_t>>& blocks,
               const evclust::DomainDistribution<T>& prior) {
  T survival = prior.mass(blocks.size());
  for (const auto& b : blocks) {
    std::vector<FocalList<T>> ms;
    for (std::size_t i : b) ms.push_back(focal_list(set[i].mass));
    survival *= T(1) - tuple_conflict(ms);
  }
  return T(1) - survival;
}

/// Minimum metaconflict for each cluster count (index r), by recursive enumeration.
template <class T>
std::vector<std::optional<T>> min_by_r(const evclust::EvidenceSet<T>& set, const evclust::DomainDistribution<T>& prior) {
  std::vector<std::optional<T>> out(set.size() + 1);
  for_each_partition(set.size(), [&](const auto& blocks) {
    T v = metaconflict(set, blocks, prior);
    auto& slot = out[blocks.size()];
    if (!slot || v < *slot) slot = v;
  });
  return out;
}

}  // namespace oracle
