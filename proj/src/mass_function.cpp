#include "evclust/mass_function.hpp"

#include "evclust/error.hpp"

#include <algorithm>
#include <map>

namespace evclust {

namespace {

template <class T>
using Accumulator = std::map<std::uint64_t, T>;

template <class T>
std::vector<typename MassFunction<T>::Focal> to_focal(const Accumulator<T>& acc) {
  std::vector<typename MassFunction<T>::Focal> out;
  out.reserve(acc.size());
  for (const auto& [bits, m] : acc) out.emplace_back(Subset(bits), m);
  return out;
}

// Folds sub-threshold focal masses into the frame (floating point only).
template <class T>
void prune(Accumulator<T>& acc, Subset full) {
  if constexpr (!Numeric<T>::exact) {
    T folded(0);
    for (auto it = acc.begin(); it != acc.end();) {
      if (Subset(it->first) != full && Numeric<T>::negligible(it->second)) {
        folded += it->second;
        it = acc.erase(it);
      } else {
        ++it;
      }
    }
    if (folded != T(0)) acc[full.bits()] += folded;
  } else {
    std::erase_if(acc, [](const auto& kv) { return kv.second == T(0); });
  }
}

}  // namespace

template <class T>
MassFunction<T>::MassFunction(FramePtr frame, std::vector<Focal> focal, T conflict)
    : frame_(std::move(frame)), conflict_(std::move(conflict)) {
  if (!frame_) fail(Errc::invalid_argument, "mass function needs a frame");
  if (conflict_ < T(0) || Numeric<T>::is_total_conflict(conflict_)) {
    fail(Errc::invalid_argument, "conflict must lie in [0,1)");
  }
  Accumulator<T> acc;
  T total(0);
  for (auto& [s, m] : focal) {
    if (s.empty()) fail(Errc::mass, "focal element must be non-empty");
    if (!frame_->owns(s)) fail(Errc::invalid_argument, "focal element outside the frame");
    if (m < T(0)) fail(Errc::mass, "negative mass");
    total += m;
    if (m == T(0)) continue;
    acc[s.bits()] += m;
  }
  bool ok = Numeric<T>::exact ? total == T(1) : Numeric<T>::sums_to_one(total);
  if (!ok) fail(Errc::mass, "masses sum to " + Numeric<T>::format(total) + ", expected 1");
  focal_ = to_focal(acc);
}

template <class T>
MassFunction<T> MassFunction<T>::vacuous(FramePtr frame) {
  Subset full = frame->full();
  return MassFunction(Unchecked{}, std::move(frame), {{full, T(1)}}, T(0));
}

template <class T>
MassFunction<T> MassFunction<T>::simple_support(FramePtr frame, Subset target, const T& mass) {
  if (mass < T(0) || mass > T(1)) fail(Errc::invalid_argument, "simple support mass outside [0,1]");
  Subset full = frame->full();
  return MassFunction(std::move(frame), {{target, mass}, {full, T(1) - mass}});
}

template <class T>
T MassFunction<T>::mass(Subset s) const {
  auto it = std::lower_bound(focal_.begin(), focal_.end(), s,
                             [](const Focal& f, Subset key) { return f.first < key; });
  return it != focal_.end() && it->first == s ? it->second : T(0);
}

template <class T>
MassFunction<T> combine(const MassFunction<T>& a, const MassFunction<T>& b) {
  if (!same_frame(a.frame_ptr(), b.frame_ptr())) {
    fail(Errc::invalid_argument, "cannot combine mass functions on different frames");
  }
  Accumulator<T> acc;
  T k(0);
  for (const auto& [sa, ma] : a.focal()) {
    for (const auto& [sb, mb] : b.focal()) {
      Subset c = sa & sb;
      if (c.empty()) {
        k += ma * mb;
      } else {
        acc[c.bits()] += ma * mb;
      }
    }
  }
  if (Numeric<T>::is_total_conflict(k)) fail(Errc::total_conflict, "totally conflicting evidence (k = 1)");
  T norm = T(1) - k;
  for (auto& [bits, m] : acc) m /= norm;
  prune(acc, a.frame().full());
  return MassFunction<T>(typename MassFunction<T>::Unchecked{}, a.frame_ptr(), to_focal(acc), k);
}

template <class T>
MassFunction<T> combine_many(std::span<const MassFunction<T>> ms) {
  if (ms.empty()) fail(Errc::invalid_argument, "combine_many needs at least one mass function");
  MassFunction<T> acc = ms.front();
  T survival = T(1) - acc.conflict();
  for (std::size_t i = 1; i < ms.size(); ++i) {
    acc = combine(acc, ms[i]);
    survival *= T(1) - acc.conflict();
  }
  return MassFunction<T>(typename MassFunction<T>::Unchecked{}, acc.frame_ptr(),
                         std::vector<typename MassFunction<T>::Focal>(acc.focal().begin(), acc.focal().end()),
                         T(1) - survival);
}

template <class T>
T joint_conflict(std::span<const MassFunction<T>* const> ms) {
  if (ms.size() <= 1) return T(0);
  Accumulator<T> acc;
  for (const auto& [s, m] : ms.front()->focal()) acc[s.bits()] = m;
  for (std::size_t i = 1; i < ms.size() && !acc.empty(); ++i) {
    Accumulator<T> next;
    for (const auto& [bits, ma] : acc) {
      for (const auto& [sb, mb] : ms[i]->focal()) {
        std::uint64_t c = bits & sb.bits();
        if (c != 0) next[c] += ma * mb;
      }
    }
    acc = std::move(next);
  }
  T kept(0);
  for (const auto& [bits, m] : acc) kept += m;
  T k = T(1) - kept;
  if constexpr (!Numeric<T>::exact) k = std::clamp(k, 0.0, 1.0);
  return k;
}

template <class T>
T belief(const MassFunction<T>& m, Subset a) {
  T sum(0);
  for (const auto& [s, v] : m.focal()) {
    if (s.is_subset_of(a)) sum += v;
  }
  return sum;
}

template <class T>
T plausibility(const MassFunction<T>& m, Subset a) {
  T sum(0);
  for (const auto& [s, v] : m.focal()) {
    if (s.intersects(a)) sum += v;
  }
  return sum;
}

template <class T>
MassFunction<T> discount(const MassFunction<T>& m, const T& alpha) {
  if (alpha < T(0) || alpha > T(1)) fail(Errc::invalid_argument, "discount factor outside [0,1]");
  if (alpha == T(1)) return m;
  Subset full = m.frame().full();
  std::vector<typename MassFunction<T>::Focal> out;
  T informative(0);
  for (const auto& [s, v] : m.focal()) {
    if (s == full) continue;
    T scaled = alpha * v;
    informative += scaled;
    if (scaled != T(0)) out.emplace_back(s, scaled);
  }
  out.emplace_back(full, T(1) - informative);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return MassFunction<T>(typename MassFunction<T>::Unchecked{}, m.frame_ptr(), std::move(out), m.conflict());
}

#define EVCLUST_INSTANTIATE(T)                                                          \
  template class MassFunction<T>;                                                       \
  template MassFunction<T> combine(const MassFunction<T>&, const MassFunction<T>&);     \
  template MassFunction<T> combine_many(std::span<const MassFunction<T>>);              \
  template T joint_conflict(std::span<const MassFunction<T>* const>);                   \
  template T belief(const MassFunction<T>&, Subset);                                    \
  template T plausibility(const MassFunction<T>&, Subset);                              \
  template MassFunction<T> discount(const MassFunction<T>&, const T&);

EVCLUST_INSTANTIATE(double)
EVCLUST_INSTANTIATE(Rational)

}  // namespace evclust
