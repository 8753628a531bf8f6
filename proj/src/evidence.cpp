#include "evclust/evidence.hpp"

#include "evclust/error.hpp"

#include <unordered_set>

namespace evclust {

JointFrame::JointFrame(FramePtr actions, FramePtr events)
    : actions_(std::move(actions)), events_(std::move(events)) {
  if (!actions_ || !events_) fail(Errc::invalid_argument, "joint frame needs both coordinates");
  std::size_t atoms = actions_->size() * events_->size();
  if (atoms > Frame::max_atoms) {
    fail(Errc::too_large, "joint frame has " + std::to_string(atoms) + " atoms; at most 64 supported");
  }
  std::vector<std::string> labels;
  labels.reserve(atoms);
  for (const auto& a : actions_->labels()) {
    for (const auto& e : events_->labels()) labels.push_back(a + "|" + e);
  }
  product_ = make_frame(std::move(labels));
}

// Atom (a, e) sits at index a * |events| + e.
Subset JointFrame::rectangle(Subset action_part, Subset event_part) const {
  std::uint64_t bits = 0;
  const std::size_t ne = events_->size();
  for (std::size_t a = 0; a < actions_->size(); ++a) {
    if (action_part.contains(a)) bits |= event_part.bits() << (a * ne);
  }
  return Subset(bits);
}

Subset JointFrame::event_part(Subset joint) const {
  std::uint64_t bits = 0;
  const std::size_t ne = events_->size();
  const std::uint64_t row = events_->full().bits();
  for (std::size_t a = 0; a < actions_->size(); ++a) bits |= (joint.bits() >> (a * ne)) & row;
  return Subset(bits);
}

Subset JointFrame::action_part(Subset joint) const {
  std::uint64_t bits = 0;
  const std::size_t ne = events_->size();
  const std::uint64_t row = events_->full().bits();
  for (std::size_t a = 0; a < actions_->size(); ++a) {
    if ((joint.bits() >> (a * ne)) & row) bits |= std::uint64_t{1} << a;
  }
  return Subset(bits);
}

template <class T>
EvidenceSet<T>::EvidenceSet(JointFramePtr frame, std::vector<Evidence<T>> evidences)
    : frame_(std::move(frame)), evidences_(std::move(evidences)) {
  if (!frame_) fail(Errc::invalid_argument, "evidence set needs a frame");
  if (evidences_.empty()) fail(Errc::schema, "evidence set must not be empty");
  std::unordered_set<std::string> ids;
  for (const auto& e : evidences_) {
    if (e.id.empty()) fail(Errc::schema, "evidence id must not be empty");
    if (!ids.insert(e.id).second) fail(Errc::schema, "duplicate evidence id '" + e.id + "'");
    if (!same_frame(e.mass.frame_ptr(), frame_->product())) {
      fail(Errc::invalid_argument, "evidence '" + e.id + "' is not on the set's joint frame");
    }
  }
}

template <class T>
std::optional<std::size_t> EvidenceSet<T>::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < evidences_.size(); ++i) {
    if (evidences_[i].id == id) return i;
  }
  return std::nullopt;
}

template <class T>
T same_event_conflict(const EvidenceSet<T>& set, std::span<const std::size_t> members) {
  std::vector<const MassFunction<T>*> ms;
  ms.reserve(members.size());
  for (std::size_t i : members) ms.push_back(&set[i].mass);
  return joint_conflict<T>(ms);
}

template class EvidenceSet<double>;
template class EvidenceSet<Rational>;
template double same_event_conflict(const EvidenceSet<double>&, std::span<const std::size_t>);
template Rational same_event_conflict(const EvidenceSet<Rational>&, std::span<const std::size_t>);

}  // namespace evclust
