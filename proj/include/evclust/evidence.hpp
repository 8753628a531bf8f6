#pragma once

// Evidence on the joint action x event frame. A joint proposition is a
// rectangle (action part) x (event part); the product frame's atoms are the
// pairs (action, event), so rectangle intersection is ordinary set
// intersection and a pair is conflicting when either coordinate is empty.

#include "evclust/mass_function.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace evclust {

class JointFrame {
 public:
  /// actions.size() * events.size() must not exceed Frame::max_atoms.
  JointFrame(FramePtr actions, FramePtr events);

  const Frame& actions() const { return *actions_; }
  const Frame& events() const { return *events_; }
  const FramePtr& actions_ptr() const { return actions_; }
  const FramePtr& events_ptr() const { return events_; }
  const FramePtr& product() const { return product_; }

  Subset rectangle(Subset action_part, Subset event_part) const;
  /// Projection onto the event coordinate.
  Subset event_part(Subset joint) const;
  Subset action_part(Subset joint) const;
  bool is_rectangle(Subset joint) const { return rectangle(action_part(joint), event_part(joint)) == joint; }

  friend bool operator==(const JointFrame& a, const JointFrame& b) {
    return *a.actions_ == *b.actions_ && *a.events_ == *b.events_;
  }

 private:
  FramePtr actions_;
  FramePtr events_;
  FramePtr product_;
};

using JointFramePtr = std::shared_ptr<const JointFrame>;

template <class T>
struct Evidence {
  std::string id;
  MassFunction<T> mass;  // over JointFrame::product()
  std::map<std::string, std::string> metadata;
};

template <class T>
class EvidenceSet {
 public:
  /// Requires a non-empty list, unique ids, and every mass on frame->product().
  EvidenceSet(JointFramePtr frame, std::vector<Evidence<T>> evidences);

  const JointFrame& frame() const { return *frame_; }
  const JointFramePtr& frame_ptr() const { return frame_; }
  std::size_t size() const { return evidences_.size(); }
  const Evidence<T>& operator[](std::size_t i) const { return evidences_.at(i); }
  std::span<const Evidence<T>> evidences() const { return evidences_; }
  std::optional<std::size_t> index_of(std::string_view id) const;

 private:
  JointFramePtr frame_;
  std::vector<Evidence<T>> evidences_;
};

/// Conflict k of combining the given evidences as if they concerned one
/// event. Returns a value in [0,1]; k = 1 is legal (a fully conflicting cluster).
template <class T>
T same_event_conflict(const EvidenceSet<T>& set, std::span<const std::size_t> members);

}  // namespace evclust
