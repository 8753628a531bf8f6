#include "evclust/events.hpp"

#include "evclust/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace evclust {

namespace {

// Kuhn's augmenting paths; sets are tiny (<= 6 clusters).
bool augment(std::size_t i, std::span<const Subset> sets, std::vector<int>& owner, std::uint64_t& visited) {
  std::uint64_t bits = sets[i].bits() & ~visited;
  while (bits != 0) {
    int e = std::countr_zero(bits);
    bits &= bits - 1;
    visited |= std::uint64_t{1} << e;
    if (owner[e] < 0 || augment(static_cast<std::size_t>(owner[e]), sets, owner, visited)) {
      owner[e] = static_cast<int>(i);
      return true;
    }
  }
  return false;
}

// Events cluster i can take in some injective choice.
Subset feasible_events(std::span<const Subset> sets, std::size_t i) {
  std::vector<Subset> forced(sets.begin(), sets.end());
  std::uint64_t out = 0;
  std::uint64_t bits = sets[i].bits();
  while (bits != 0) {
    int e = std::countr_zero(bits);
    bits &= bits - 1;
    const Subset only(std::uint64_t{1} << e);
    for (std::size_t j = 0; j < sets.size(); ++j) {
      forced[j] = j == i ? only : Subset(sets[j].bits() & ~only.bits());
    }
    if (has_distinct_representatives(forced)) out |= only.bits();
  }
  return Subset(out);
}

}  // namespace

bool has_distinct_representatives(std::span<const Subset> sets) {
  std::vector<int> owner(64, -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::uint64_t visited = 0;
    if (!augment(i, sets, owner, visited)) return false;
  }
  return true;
}

template <class T>
MassFunction<T> marginalize_events(const JointFrame& frame, const MassFunction<T>& joint) {
  if (!same_frame(joint.frame_ptr(), frame.product())) fail(Errc::invalid_argument, "bpa is not on the joint frame");
  std::map<std::uint64_t, T> acc;
  for (const auto& [s, m] : joint.focal()) acc[frame.event_part(s).bits()] += m;
  std::vector<typename MassFunction<T>::Focal> focal;
  for (const auto& [bits, m] : acc) focal.emplace_back(Subset(bits), m);
  return MassFunction<T>(typename MassFunction<T>::Unchecked{}, frame.events_ptr(), std::move(focal), joint.conflict());
}

template <class T>
EventEvidence<T> project_events(std::size_t cluster, const EvidenceSet<T>& set, std::span<const std::size_t> members) {
  if (members.empty()) fail(Errc::invalid_argument, "cannot project an empty cluster");
  std::vector<MassFunction<T>> ms;
  for (std::size_t i : members) ms.push_back(set[i].mass);
  return EventEvidence<T>{cluster, marginalize_events(set.frame(), combine_many<T>(ms))};
}

template <class T>
Assignment<T> assign(std::span<const EventEvidence<T>> evidences) {
  const std::size_t c = evidences.size();
  if (c == 0) fail(Errc::invalid_argument, "no clusters to assign");
  if (c > assign_cluster_limit) {
    fail(Errc::too_large, "event assignment is limited to " + std::to_string(assign_cluster_limit) + " clusters");
  }
  const FramePtr& frame = evidences.front().events.frame_ptr();
  for (const auto& ev : evidences) {
    if (!same_frame(ev.events.frame_ptr(), frame)) fail(Errc::invalid_argument, "event bpas on different frames");
  }

  Assignment<T> out;
  std::vector<Subset> choice(c);
  auto visit = [&](auto&& self, std::size_t i, const T& mass) -> void {
    if (i == c) {
      out.joint.push_back({choice, mass});
      return;
    }
    for (const auto& [s, m] : evidences[i].events.focal()) {
      choice[i] = s;
      T next = mass * m;
      // An infeasible prefix stays infeasible; the rest of the product sums to one.
      if (!has_distinct_representatives(std::span<const Subset>(choice.data(), i + 1))) {
        out.conflict += next;
        continue;
      }
      self(self, i + 1, next);
    }
  };
  visit(visit, 0, T(1));

  if (out.joint.empty() || Numeric<T>::is_total_conflict(out.conflict)) {
    fail(Errc::total_conflict, "no exclusive assignment of clusters to events has positive mass");
  }
  const T norm = T(1) - out.conflict;
  for (auto& f : out.joint) f.mass /= norm;

  const std::size_t ne = frame->size();
  out.bel.assign(c, std::vector<T>(ne, T(0)));
  out.pls.assign(c, std::vector<T>(ne, T(0)));
  for (const auto& f : out.joint) {
    for (std::size_t i = 0; i < c; ++i) {
      Subset ok = feasible_events(f.choices, i);
      for (std::size_t e = 0; e < ne; ++e) {
        if (!ok.contains(e)) continue;
        out.pls[i][e] += f.mass;
        if (ok.count() == 1) out.bel[i][e] += f.mass;
      }
    }
  }

  // Greedy on marginal plausibility: strongest cluster first, ties by index.
  auto best_of = [&](std::size_t i) { return *std::max_element(out.pls[i].begin(), out.pls[i].end()); };
  std::vector<std::size_t> order(c);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return best_of(a) > best_of(b); });
  out.preferred.assign(c, std::nullopt);
  std::vector<bool> taken(ne, false);
  for (std::size_t i : order) {
    std::optional<std::size_t> pick;
    for (std::size_t e = 0; e < ne; ++e) {
      if (taken[e] || out.pls[i][e] <= T(0)) continue;
      if (!pick || out.pls[i][e] > out.pls[i][*pick]) pick = e;
    }
    if (pick) taken[*pick] = true;
    out.preferred[i] = pick;
  }
  return out;
}

#define EVCLUST_INSTANTIATE(T)                                                                                 \
  template MassFunction<T> marginalize_events(const JointFrame&, const MassFunction<T>&);                      \
  template EventEvidence<T> project_events(std::size_t, const EvidenceSet<T>&, std::span<const std::size_t>);  \
  template Assignment<T> assign(std::span<const EventEvidence<T>>);

EVCLUST_INSTANTIATE(double)
EVCLUST_INSTANTIATE(Rational)

}  // namespace evclust
