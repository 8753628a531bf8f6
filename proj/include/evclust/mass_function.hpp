#pragma once

// Mass functions over a finite frame and Dempster's rule with the conflict k
// carried alongside the normalized result.

#include "evclust/frame.hpp"
#include "evclust/scalar.hpp"

#include <span>
#include <utility>
#include <vector>

namespace evclust {

template <class T>
class MassFunction {
 public:
  using Focal = std::pair<Subset, T>;

  /// Validates: non-empty focal subsets inside the frame, non-negative masses
  /// summing to one (exactly for rationals), conflict in [0,1). Duplicate
  /// subsets are merged and zero masses dropped.
  MassFunction(FramePtr frame, std::vector<Focal> focal, T conflict = T(0));

  static MassFunction vacuous(FramePtr frame);
  /// {target: mass, frame: 1 - mass}.
  static MassFunction simple_support(FramePtr frame, Subset target, const T& mass);

  const Frame& frame() const { return *frame_; }
  const FramePtr& frame_ptr() const { return frame_; }
  /// Focal elements ordered by subset bits.
  std::span<const Focal> focal() const { return focal_; }
  std::size_t focal_count() const { return focal_.size(); }
  T mass(Subset s) const;
  T theta_mass() const { return mass(frame_->full()); }
  const T& conflict() const { return conflict_; }
  bool is_vacuous() const { return focal_.size() == 1 && focal_.front().first == frame_->full(); }

  friend bool operator==(const MassFunction& a, const MassFunction& b) {
    return same_frame(a.frame_, b.frame_) && a.focal_ == b.focal_ && a.conflict_ == b.conflict_;
  }

  struct Unchecked {};
  MassFunction(Unchecked, FramePtr frame, std::vector<Focal> focal, T conflict)
      : frame_(std::move(frame)), focal_(std::move(focal)), conflict_(std::move(conflict)) {}

 private:
  FramePtr frame_;
  std::vector<Focal> focal_;
  T conflict_;
};

/// Dempster's rule. Throws Errc::total_conflict when k = 1.
template <class T>
MassFunction<T> combine(const MassFunction<T>& a, const MassFunction<T>& b);

/// Left fold of combine; the reported conflict is 1 - prod(1 - k_step).
template <class T>
MassFunction<T> combine_many(std::span<const MassFunction<T>> ms);

/// Mass that the unnormalized conjunctive combination of `ms` puts on the
/// empty set. Unlike combine_many this never throws: k = 1 is a value here.
template <class T>
T joint_conflict(std::span<const MassFunction<T>* const> ms);

template <class T>
T belief(const MassFunction<T>& m, Subset a);

template <class T>
T plausibility(const MassFunction<T>& m, Subset a);

/// Shafer discounting with reliability alpha in [0,1].
template <class T>
MassFunction<T> discount(const MassFunction<T>& m, const T& alpha);

}  // namespace evclust
